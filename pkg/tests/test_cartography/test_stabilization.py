from itertools import combinations

import pytest
from sympy.combinatorics.named_groups import SymmetricGroup

from contextual.cartography.groups import permutation_group
from contextual.cartography.stabilization import (
    DegreeMismatchError,
    dessin_search,
    max_stabilized_lines,
)
from contextual.dessins.hypermap import Hypermap, genus, monodromy_group, passport
from contextual.geometry.configurations import PointLineGeometry


def test_fig1_group_stabilizes_fano_plane(
    dessin_fig1: Hypermap, fano: PointLineGeometry
) -> None:
    report = max_stabilized_lines(monodromy_group(dessin_fig1), fano)
    assert report.stabilized == 7
    assert report.all_lines
    assert report.transitive_on_lines
    assert sorted(report.witness) == list(range(7))
    assert report.lines == list(range(7))


def test_fig3b_group_stabilizes_mermin_square(
    dessin_fig3b: Hypermap, mermin_square: PointLineGeometry
) -> None:
    report = max_stabilized_lines(monodromy_group(dessin_fig3b), mermin_square)
    assert report.stabilized == 6
    assert report.all_lines


def test_symmetric_group_stabilizes_nothing(fano: PointLineGeometry) -> None:
    report = max_stabilized_lines(SymmetricGroup(7), fano)
    assert report.stabilized == 0
    assert not report.all_lines


def test_witness_maps_stabilized_lines_onto_lines(fano: PointLineGeometry) -> None:
    # a 7-cycle permutes the points cyclically; some labeling makes it a Singer cycle
    report = max_stabilized_lines(permutation_group([(1, 2, 3, 4, 5, 6, 0)]), fano)
    assert report.stabilized == 7
    assert report.orbits == 1


def test_pair_action_of_s5_stabilizes_pentagram(mermin_pentagram: PointLineGeometry) -> None:
    pairs = list(combinations(range(5), 2))
    index = {pair: i for i, pair in enumerate(pairs)}

    def on_pairs(point_map: dict[int, int]) -> tuple[int, ...]:
        return tuple(index[tuple(sorted((point_map[i], point_map[j])))] for i, j in pairs)

    five_cycle = on_pairs({i: (i + 1) % 5 for i in range(5)})
    swap = on_pairs({0: 1, 1: 0, 2: 2, 3: 3, 4: 4})
    report = max_stabilized_lines(permutation_group([five_cycle, swap]), mermin_pentagram)
    assert report.stabilized == 5
    assert report.transitive_on_lines


def test_degree_mismatch(dessin_fig2: Hypermap, fano: PointLineGeometry) -> None:
    with pytest.raises(DegreeMismatchError):
        max_stabilized_lines(monodromy_group(dessin_fig2), fano)


def test_dessin_search_index_seven(fano: PointLineGeometry) -> None:
    report = dessin_search(7, "psl27", fano, workers=1, progress=False)
    assert report.classes == 131
    assert len(report.hits) == 10
    assert report.max_stabilized == 7
    assert any(hit.stabilization.transitive_on_lines for hit in report.hits)
    for hit in report.hits:
        assert hit.group_order == 168
        m = Hypermap.from_cycles(7, hit.cycles["alpha"], hit.cycles["beta"])
        assert passport(m) == hit.passport
        assert genus(m) == hit.genus


@pytest.mark.slow
def test_dessin_search_index_nine(mermin_square: PointLineGeometry) -> None:
    report = dessin_search(9, "square72", mermin_square, workers=2, progress=False)
    assert len(report.hits) == 2
    assert report.all_lines_hits == 2
    assert report.max_stabilized == 6
    assert all(hit.stabilization.stabilized == 6 for hit in report.hits)


@pytest.mark.slow
def test_dessin_search_index_ten(mermin_pentagram: PointLineGeometry) -> None:
    report = dessin_search(10, "s5", mermin_pentagram, workers=2, progress=False)
    assert len(report.hits) == 14
    assert report.max_stabilized == 5
    assert report.all_lines_hits >= 1
