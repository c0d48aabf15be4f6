import pytest
import sympy

from contextual.belyi.expression import ExpressionError, parse_map, parse_rational, to_mpc


def test_polynomial() -> None:
    numerator, denominator = parse_rational("z^2 - 1")
    assert numerator.all_coeffs() == [1, 0, -1]
    assert denominator.as_expr() == 1


def test_quotient() -> None:
    numerator, denominator = parse_rational("(z^4-1)^2/(-4*z^4)")
    assert numerator.degree() == 8
    assert denominator.degree() == 4


def test_other_variable() -> None:
    numerator, _ = parse_rational("w^3 + w", variable="w")
    assert numerator.degree() == 3


def test_constants() -> None:
    numerator, denominator = parse_map("z^4*(z-1)^2*(z-a)", {"a": "(-1-I*sqrt(7))/4"})
    assert len(numerator) == 8
    assert len(denominator) == 1
    assert complex(numerator[0]) == pytest.approx(1)
    assert complex(numerator[-1]) == pytest.approx(0)
    # z^6 coefficient: -2 - a
    assert complex(numerator[1]) == pytest.approx(-2 - (-1 - 1j * 7**0.5) / 4)


def test_to_mpc() -> None:
    assert complex(to_mpc(sympy.sqrt(2) * sympy.I, 30)) == pytest.approx(1.4142135623730951j)


@pytest.mark.parametrize("expression", ["z*q", "z*(", "z +* 2"])
def test_malformed(expression: str) -> None:
    with pytest.raises(ExpressionError):
        parse_rational(expression)


def test_constant_must_be_a_number() -> None:
    with pytest.raises(ExpressionError):
        parse_rational("z - a", {"a": "b + 1"})
