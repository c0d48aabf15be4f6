from itertools import islice, permutations

import numpy as np
import pytest

from contextual.capacity.graphs import commutation_graph_of, is_isomorphic, petersen
from contextual.geometry.configurations import (
    PointLineGeometry,
    is_pentagram_shaped,
    parity_predicts_contextual,
)
from contextual.geometry.kochen_specker import ks_colorable
from contextual.geometry.pentagrams import (
    PentagramCensus,
    good_lines,
    iter_pentagrams,
    line_sign,
    pentagram_census,
    pentagram_geometry,
)


def test_good_lines() -> None:
    assert len(good_lines(3)) == 945
    assert good_lines(2) == []


def _code_lines(g: PointLineGeometry) -> list[tuple[int, ...]]:
    return [tuple(sorted(g.points[i].code for i in line)) for line in g.lines]


def test_line_signs(mermin_pentagram: PointLineGeometry) -> None:
    lines = _code_lines(mermin_pentagram)
    assert [line_sign(3, line) for line in lines] == [-1, 1, 1, 1, 1]


def test_pentagram_geometry_round_trip(mermin_pentagram: PointLineGeometry) -> None:
    g = pentagram_geometry(3, tuple(sorted(_code_lines(mermin_pentagram))))
    assert is_pentagram_shaped(g)
    assert sorted(g.labels()) == sorted(mermin_pentagram.labels())
    assert len(g.negative_lines) == 1


def test_no_pentagrams_on_two_qubits() -> None:
    empty = pentagram_census(2, workers=1, progress=False)
    assert empty.count == 0
    assert empty.pentagrams == []


@pytest.fixture(scope="module")
def census() -> PentagramCensus:
    return pentagram_census(3, workers=2, progress=False)


@pytest.mark.slow
def test_pentagram_census(census: PentagramCensus) -> None:
    assert census.good_lines == 945
    assert census.count == 12096
    assert sum(v for k, v in census.sign_histogram.items() if k % 2) == 12096
    for g in islice(iter_pentagrams(census), 50):
        assert is_pentagram_shaped(g)
        assert parity_predicts_contextual(g)
        assert ks_colorable(g) is None


@pytest.mark.slow
def test_sampled_pentagrams_commute_like_the_petersen_complement(census: PentagramCensus) -> None:
    rng = np.random.default_rng(12096)
    complement = petersen().complement()
    for i in rng.choice(census.count, size=100, replace=False):
        g = pentagram_geometry(3, census.pentagrams[i])
        assert is_isomorphic(commutation_graph_of(g), complement)


def test_line_sign_ignores_point_order() -> None:
    lines = good_lines(3)
    rng = np.random.default_rng(945)
    for i in rng.choice(len(lines), size=100, replace=False):
        sign = line_sign(3, lines[i])
        assert all(line_sign(3, order) == sign for order in permutations(lines[i]))
