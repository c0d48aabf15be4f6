import pytest

from contextual.cartography.presentation import (
    CARTOGRAPHIC_GROUP,
    CARTOGRAPHIC_GROUP_FULL,
    FinitelyPresentedGroup,
    PresentationError,
    cyclically_reduce,
    free_reduce,
    invert,
)


def test_word_helpers() -> None:
    assert invert((0, 2)) == (3, 1)
    assert free_reduce((0, 1, 2)) == (2,)
    assert free_reduce((2, 0, 1, 3)) == ()
    assert cyclically_reduce((1, 2, 0)) == (2,)


def test_parse() -> None:
    group = FinitelyPresentedGroup.parse(["a", "b"], ["a^3", "a*b^-1", "b*b^-1"])
    assert group.relators == ((0, 0, 0), (0, 3))
    assert group.word_to_text((0, 3)) == "a*b^-1"


@pytest.mark.parametrize("relator", ["c^2", "a^", "a**2", "2a"])
def test_parse_errors(relator: str) -> None:
    with pytest.raises(PresentationError):
        FinitelyPresentedGroup.parse(["a", "b"], [relator])


def test_cartographic_group() -> None:
    assert CARTOGRAPHIC_GROUP_FULL.generators == ("rho0", "rho1", "rho2")
    assert CARTOGRAPHIC_GROUP.generators == ("rho0", "rho1")
    assert CARTOGRAPHIC_GROUP.relators == ((2, 2),)


def test_eliminate_generator_errors() -> None:
    with pytest.raises(PresentationError):
        CARTOGRAPHIC_GROUP_FULL.eliminate_generator("rho3")
    with pytest.raises(PresentationError):
        CARTOGRAPHIC_GROUP.eliminate_generator("rho1")


def test_eliminate_substitutes() -> None:
    group = FinitelyPresentedGroup.parse(["a", "b", "c"], ["a*b*c", "c^2"])
    reduced = group.eliminate_generator("c")
    assert reduced.generators == ("a", "b")
    # c = b^-1 a^-1, so c^2 = b^-1 a^-1 b^-1 a^-1
    assert reduced.relators == ((3, 1, 3, 1),)
