import pydantic
import pytest

from contextual.capacity.graphs import (
    CapacityError,
    GraphSizeError,
    SmallGraph,
    commutation_graph_of,
    complete,
    cycle,
    is_bridgeless,
    is_cubic,
    is_isomorphic,
    is_pentagram_commutation_graph,
    is_planar,
    kneser,
    line_graph,
    strong_power,
    strong_product,
)
from contextual.geometry.configurations import PointLineGeometry


def test_petersen_properties(petersen_graph: SmallGraph) -> None:
    assert petersen_graph.n == 10
    assert len(petersen_graph.edges) == 15
    assert is_cubic(petersen_graph)
    assert is_bridgeless(petersen_graph)
    assert not is_planar(petersen_graph)
    assert petersen_graph.labels[0] == "12"


def test_pentagram_graph_is_the_complement(
    petersen_graph: SmallGraph, pentagram: SmallGraph
) -> None:
    assert len(pentagram.edges) == 30
    assert set(pentagram.degrees()) == {6}
    assert is_isomorphic(pentagram, line_graph(complete(5)))
    assert is_isomorphic(pentagram.complement(), petersen_graph)


def test_small_families(pentagon: SmallGraph) -> None:
    assert pentagon.edges == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))
    assert is_planar(pentagon)
    assert not is_cubic(pentagon)
    assert is_isomorphic(pentagon.complement(), pentagon)
    assert len(complete(6).edges) == 15
    assert kneser(5, 1).n == 5
    assert is_isomorphic(kneser(5, 1), complete(5))


def test_strong_product(pentagon: SmallGraph) -> None:
    square = strong_product(pentagon, pentagon)
    assert square.n == 25
    assert set(square.degrees()) == {8}
    assert square.name == "C5 x C5"
    assert strong_power(pentagon, 1) == pentagon
    assert is_isomorphic(strong_power(pentagon, 2), square)


def test_adjacency(pentagon: SmallGraph) -> None:
    matrix = pentagon.adjacency()
    assert (matrix == matrix.T).all()
    assert matrix.sum() == 10


def test_bridges() -> None:
    path = SmallGraph(n=3, edges=[(0, 1), (1, 2)])
    assert not is_bridgeless(path)
    assert not path.is_regular()


def test_edges_are_normalized() -> None:
    g = SmallGraph(n=3, edges=[(2, 0), (0, 2), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))
    assert g.to_dict() == {"n": 3, "edges": [[0, 1], [0, 2]]}


def test_invalid_graphs() -> None:
    with pytest.raises(pydantic.ValidationError):
        SmallGraph(n=3, edges=[(1, 1)])
    with pytest.raises(pydantic.ValidationError):
        SmallGraph(n=2, edges=[(0, 2)])
    with pytest.raises(pydantic.ValidationError):
        SmallGraph(n=129, edges=[])
    with pytest.raises(CapacityError):
        cycle(2)


def test_power_size_cap(pentagon: SmallGraph) -> None:
    with pytest.raises(GraphSizeError):
        strong_power(pentagon, 4)


def test_commutation_graphs(
    mermin_pentagram: PointLineGeometry, mermin_square: PointLineGeometry
) -> None:
    graph = commutation_graph_of(mermin_pentagram)
    assert graph.n == 10
    assert graph.labels == tuple(mermin_pentagram.labels())
    assert is_pentagram_commutation_graph(mermin_pentagram)
    assert not is_pentagram_commutation_graph(mermin_square)
