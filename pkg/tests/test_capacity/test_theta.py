import math

import pytest

from contextual.capacity.graphs import SmallGraph, complete, cycle, kneser
from contextual.capacity.theta import (
    ThetaPreconditionError,
    automorphisms,
    is_edge_transitive,
    lovasz_theta_edge_transitive,
)

PRISM = SmallGraph(
    n=6, edges=[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
)


def test_automorphism_groups(pentagon: SmallGraph, petersen_graph: SmallGraph) -> None:
    assert len(automorphisms(pentagon)) == 10
    assert len(automorphisms(petersen_graph)) == 120
    assert automorphisms(pentagon)[0] == (0, 1, 2, 3, 4)


def test_edge_transitivity(petersen_graph: SmallGraph, pentagram: SmallGraph) -> None:
    assert is_edge_transitive(petersen_graph)
    assert is_edge_transitive(pentagram)
    assert not is_edge_transitive(PRISM)


@pytest.mark.parametrize(
    "graph, expected",
    [
        (cycle(5), math.sqrt(5)),
        (kneser(5, 2), 4.0),
        (kneser(5, 2).complement(), 2.5),
        (complete(6), 1.0),
        (cycle(6), 3.0),
        (SmallGraph(n=4, edges=[]), 4.0),
    ],
)
def test_theta(graph: SmallGraph, expected: float) -> None:
    assert lovasz_theta_edge_transitive(graph) == pytest.approx(expected)


def test_preconditions() -> None:
    with pytest.raises(ThetaPreconditionError):
        lovasz_theta_edge_transitive(SmallGraph(n=3, edges=[(0, 1), (1, 2)]))
    with pytest.raises(ThetaPreconditionError):
        lovasz_theta_edge_transitive(PRISM)
