import pytest
from sympy.combinatorics.named_groups import SymmetricGroup

from contextual.cartography.groups import coset_group, group_order, is_simple
from contextual.cartography.presentation import CartographyError
from contextual.cartography.targets import (
    TARGETS,
    TargetGroup,
    UnknownTargetError,
    filter_by_target,
    get_target,
)
from contextual.dessins.hypermap import Hypermap, monodromy_group


def test_registry() -> None:
    assert set(TARGETS) == {"psl27", "square72", "s5"}
    assert get_target("square72").reference().order() == 72
    assert get_target("s5").matches(SymmetricGroup(5))
    with pytest.raises(UnknownTargetError):
        get_target("m11")


def test_predicate_target_has_no_reference() -> None:
    with pytest.raises(CartographyError):
        get_target("psl27").reference()


def test_figure_groups_match_targets(dessin_fig1: Hypermap, dessin_fig3b: Hypermap) -> None:
    assert get_target("psl27").matches(monodromy_group(dessin_fig1))
    assert get_target("square72").matches(monodromy_group(dessin_fig3b))
    assert not get_target("psl27").matches(monodromy_group(dessin_fig3b))


def test_custom_target() -> None:
    cyclic = TargetGroup("c2", 2, 2, "cyclic group of order 2", predicate=lambda g: True)
    assert cyclic.matches(SymmetricGroup(2))
    assert not cyclic.matches(SymmetricGroup(3))


def test_index_seven_psl27() -> None:
    hits = filter_by_target(7, "psl27", workers=1, progress=False)
    assert len(hits) == 10
    for t in hits:
        group = coset_group(t)
        assert group_order(group) == 168
        assert is_simple(group)


def test_filter_with_callable() -> None:
    hits = filter_by_target(3, lambda g: group_order(g) == 6, workers=1, progress=False)
    assert len(hits) == 2


@pytest.mark.slow
@pytest.mark.parametrize("index, target, expected", [(9, "square72", 2), (10, "s5", 14)])
def test_published_target_counts(index: int, target: str, expected: int) -> None:
    assert len(filter_by_target(index, target, workers=2, progress=False)) == expected
