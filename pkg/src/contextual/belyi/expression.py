"""Rational maps written as text, e.g. ``"z^4*(z-1)^2*(z-a)"`` with named constants."""
from __future__ import annotations

from tokenize import TokenError
from typing import Mapping

import mpmath
import sympy
from loguru import logger
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from contextual.belyi.roots import BelyiError
from contextual.parameters.parameters import ROOT_FINDING

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


class ExpressionError(BelyiError):
    """A map expression that cannot be read as a rational function of one variable"""


def _parse(text: str, names: Mapping[str, sympy.Expr]) -> sympy.Expr:
    try:
        return parse_expr(text, local_dict=dict(names), transformations=_TRANSFORMATIONS)
    except (SyntaxError, TokenError, TypeError, sympy.SympifyError) as err:
        logger.error(f"Cannot parse {text!r}: {err}")
        raise ExpressionError(f"Cannot parse {text!r}") from err


def to_mpc(value: sympy.Expr, digits: int) -> mpmath.mpc:
    """A numeric sympy expression as an mpmath complex with ``digits`` significant digits."""
    real, imag = (sympy.N(part, digits) for part in sympy.expand_complex(value).as_real_imag())
    with mpmath.workdps(digits):
        return mpmath.mpc(str(real), str(imag))


def parse_rational(
    expression: str,
    constants: Mapping[str, str] | None = None,
    variable: str = "z",
) -> tuple[sympy.Poly, sympy.Poly]:
    """Exact numerator and denominator polynomials of the expression.

    Raises:
        ExpressionError: If the text is malformed or uses an unknown name.
    """
    z = sympy.Symbol(variable)
    names: dict[str, sympy.Expr] = {variable: z}
    for name, text in (constants or {}).items():
        value = _parse(text, {})
        if value.free_symbols:
            raise ExpressionError(f"Constant {name}={text!r} is not a number")
        names[name] = value
    expr = _parse(expression, names)
    unknown = expr.free_symbols - {z}
    if unknown:
        logger.error(f"Unknown names {sorted(map(str, unknown))} in {expression!r}")
        raise ExpressionError(f"Unknown names {sorted(map(str, unknown))} in {expression!r}")
    numerator, denominator = sympy.fraction(sympy.together(expr))
    if denominator == 0:
        raise ExpressionError(f"{expression!r} has a zero denominator")
    return sympy.Poly(sympy.expand(numerator), z), sympy.Poly(sympy.expand(denominator), z)


def parse_map(
    expression: str,
    constants: Mapping[str, str] | None = None,
    variable: str = "z",
    digits: int | None = None,
) -> tuple[list[mpmath.mpc], list[mpmath.mpc]]:
    """Numerator and denominator coefficients, leading first, evaluated to ``digits``."""
    digits = ROOT_FINDING["literal_digits"] if digits is None else digits
    numerator, denominator = parse_rational(expression, constants, variable)
    logger.debug(f"Parsed {expression!r} as ({numerator.as_expr()}) / ({denominator.as_expr()})")
    return (
        [to_mpc(c, digits) for c in numerator.all_coeffs()],
        [to_mpc(c, digits) for c in denominator.all_coeffs()],
    )
