import numpy as np
import pydantic
import pytest
from sympy.combinatorics.named_groups import DihedralGroup

from contextual.cartography.groups import group_order, is_isomorphic
from contextual.cartography.low_index import UNDEFINED, CosetTable
from contextual.dessins.hypermap import (
    DisconnectedHypermapError,
    Hypermap,
    IncompleteCosetTableError,
    Passport,
    figure,
    from_coset_action,
    genus,
    is_connected,
    map_euler_genus,
    monodromy_group,
    passport,
)
from contextual.dessins.permutations import HypermapError, PermutationError


def test_fig1(dessin_fig1: Hypermap) -> None:
    m = dessin_fig1
    assert (m.n, m.black, m.white, m.faces) == (7, 3, 5, 1)
    assert genus(m) == 0
    assert passport(m).as_lists() == [[4, 2, 1], [2, 2, 1, 1, 1], [7]]
    assert group_order(monodromy_group(m)) == 168


def test_fig2_is_dihedral(dessin_fig2: Hypermap) -> None:
    m = dessin_fig2
    assert (m.black, m.white, m.faces, genus(m)) == (4, 4, 2, 0)
    assert passport(m).as_lists() == [[2, 2, 2, 2], [2, 2, 2, 2], [4, 4]]
    group = monodromy_group(m)
    assert group_order(group) == 8
    assert is_isomorphic(group, DihedralGroup(4))


def test_fig3b(dessin_fig3b: Hypermap) -> None:
    m = dessin_fig3b
    assert [m.black, m.white, m.faces, genus(m)] == [2, 6, 3, 0]
    lambda0, lambda1, lambda_inf = passport(m).as_lists()
    assert lambda0 == [6, 3]
    assert lambda1 == [2, 2, 2, 1, 1, 1]
    assert sum(lambda_inf) == 9 and len(lambda_inf) == 3
    assert group_order(monodromy_group(m)) == 72


def test_gamma_closes_the_product(dessin_fig1: Hypermap) -> None:
    m = dessin_fig1
    for i in range(m.n):
        assert m.gamma[m.beta[m.alpha[i]]] == i


def test_maps_agree_with_euler_formula(dessin_fig1: Hypermap, dessin_fig2: Hypermap) -> None:
    assert dessin_fig1.is_map and dessin_fig2.is_map
    assert map_euler_genus(dessin_fig1) == genus(dessin_fig1)
    assert map_euler_genus(dessin_fig2) == genus(dessin_fig2)


def test_non_map_has_no_map_genus(dessin_fig3b: Hypermap) -> None:
    m = Hypermap.from_cycles(3, [[1, 2, 3]], [[1, 2, 3]])
    assert not m.is_map
    with pytest.raises(HypermapError):
        map_euler_genus(m)
    assert dessin_fig3b.is_map


def test_relabel_keeps_passport(dessin_fig1: Hypermap) -> None:
    relabeled = dessin_fig1.relabel((6, 5, 4, 3, 2, 1, 0))
    assert passport(relabeled) == passport(dessin_fig1)
    assert genus(relabeled) == 0


@pytest.mark.parametrize("name", ["fig1", "fig2", "fig3b"])
def test_random_relabelings_keep_invariants(name: str) -> None:
    m = figure(name)
    rng = np.random.default_rng(len(name) * m.n)
    for _ in range(100):
        relabeled = m.relabel(tuple(int(i) for i in rng.permutation(m.n)))
        assert passport(relabeled) == passport(m)
        assert genus(relabeled) == genus(m)
        assert is_connected(relabeled)


def test_disconnected() -> None:
    m = Hypermap.from_cycles(4, [[1, 2]], [[3, 4]])
    assert not is_connected(m)
    with pytest.raises(DisconnectedHypermapError):
        genus(m)


def test_invalid_hypermaps() -> None:
    with pytest.raises(pydantic.ValidationError):
        Hypermap(n=0, alpha=(), beta=())
    with pytest.raises(pydantic.ValidationError):
        Hypermap(n=2, alpha=(0, 0), beta=(0, 1))
    with pytest.raises(PermutationError):
        Hypermap.from_cycles(3, [[1, 2], [2, 3]], [])


def test_passport_sizes_must_agree() -> None:
    with pytest.raises(pydantic.ValidationError):
        Passport.from_lists([[2], [1], [1, 1]])


def test_from_coset_action(dessin_fig1: Hypermap) -> None:
    table = CosetTable.from_actions([dessin_fig1.alpha, dessin_fig1.beta])
    assert from_coset_action(table) == dessin_fig1


def test_unknown_figure() -> None:
    with pytest.raises(HypermapError):
        figure("fig9")


def test_incomplete_coset_table() -> None:
    table = CosetTable(n=2, n_generators=2, table=(1, 1, UNDEFINED, 0, 0, 0, 1, 1))
    with pytest.raises(IncompleteCosetTableError):
        from_coset_action(table)
