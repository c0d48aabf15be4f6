import mpmath
import pytest

from contextual.belyi.roots import (
    BelyiError,
    cluster,
    multiplicities,
    polynomial_roots,
    strip_leading_zeros,
)


def _as_pairs(roots: list) -> list[tuple[complex, int]]:
    return [(complex(root), m) for root, m in roots]


def test_simple_roots() -> None:
    roots = _as_pairs(polynomial_roots([1, -3, 2]))
    assert [m for _, m in roots] == [1, 1]
    assert roots[0][0] == pytest.approx(1)
    assert roots[1][0] == pytest.approx(2)


def test_repeated_root() -> None:
    roots = _as_pairs(polynomial_roots([1, -3, 3, -1]))
    assert len(roots) == 1
    assert roots[0][0] == pytest.approx(1, abs=1e-6)
    assert roots[0][1] == 3


def test_trailing_zeros_are_a_root_at_zero() -> None:
    roots = _as_pairs(polynomial_roots([1, -2, 0, 0]))
    assert roots == [(0j, 2), (pytest.approx(2), 1)]


def test_complex_roots() -> None:
    roots = sorted(_as_pairs(polynomial_roots([1, 0, 1])), key=lambda r: r[0].imag)
    assert roots[0][0] == pytest.approx(-1j)
    assert roots[1][0] == pytest.approx(1j)


def test_constant_and_zero_polynomials() -> None:
    assert polynomial_roots([5]) == []
    with pytest.raises(BelyiError):
        polynomial_roots([0, 0])


def test_degree_cap() -> None:
    with pytest.raises(BelyiError):
        polynomial_roots([1] + [0] * 33)


def test_strip_leading_zeros() -> None:
    assert strip_leading_zeros([0, 0, 1, 2]) == [1, 2]
    assert strip_leading_zeros([1e-20, 1, 1], scale_digits=15) == [1, 1]
    assert strip_leading_zeros([1e-20, 1, 1]) == [mpmath.mpf(1e-20), 1, 1]


def test_cluster() -> None:
    merged = cluster([mpmath.mpc(1), mpmath.mpc(1.00001), mpmath.mpc(3)], 1e-4)
    assert [m for _, m in merged] == [2, 1]
    assert complex(merged[0][0]) == pytest.approx(1.000005)


def test_multiplicities() -> None:
    assert multiplicities([(0, 2), (1, 3), (2, 1)]) == [3, 2, 1]
