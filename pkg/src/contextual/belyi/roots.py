"""Roots of complex polynomials with multiplicities.

Coefficients are listed from the leading one down to the constant term, as in
``mpmath.polyval``.
"""
from __future__ import annotations

from typing import Any, Sequence

import mpmath
from loguru import logger

from contextual.parameters.parameters import CAPS, ROOT_FINDING, TOLERANCES

Number = complex | mpmath.mpc | mpmath.mpf | int | float
Root = tuple[mpmath.mpc, int]


class BelyiError(ArithmeticError):
    """An error related to rational maps and their ramification"""


class RootFindingError(BelyiError):
    """The simultaneous iteration did not reach the required accuracy"""


def strip_leading_zeros(coefficients: Sequence[Number], scale_digits: int | None = None) -> list:
    """Drops leading coefficients that are zero, or negligible against the largest one.

    With ``scale_digits`` set, a leading coefficient below ``10**-scale_digits`` times the
    largest absolute coefficient counts as zero.
    """
    values = [mpmath.mpmathify(c) for c in coefficients]
    if scale_digits is not None and values:
        threshold = max(abs(c) for c in values) * mpmath.mpf(10) ** (-scale_digits)
    else:
        threshold = 0
    while values and abs(values[0]) <= threshold:
        values.pop(0)
    return values


def _durand_kerner(coefficients: list) -> list[mpmath.mpc]:
    extra = ROOT_FINDING["extra_precision"]
    while True:
        try:
            return mpmath.polyroots(
                coefficients, maxsteps=ROOT_FINDING["max_steps"], extraprec=extra, cleanup=False
            )
        except mpmath.libmp.NoConvergence as err:
            if 2 * extra > ROOT_FINDING["max_extra_precision"]:
                logger.error(f"No convergence for degree {len(coefficients) - 1}: {err}")
                raise RootFindingError(
                    f"Roots of a degree-{len(coefficients) - 1} polynomial did not converge "
                    f"with {extra} extra bits"
                ) from err
            extra *= 2
            logger.debug(f"Retrying with {extra} extra bits of precision")


def _relative_residual(coefficients: list, root: mpmath.mpc) -> mpmath.mpf:
    scale = sum(abs(c) * abs(root) ** k for k, c in enumerate(reversed(coefficients)))
    return abs(mpmath.polyval(coefficients, root)) / scale


def cluster(roots: Sequence[mpmath.mpc], radius: float) -> list[Root]:
    """Merges roots closer than ``radius`` to a cluster center; centers are the means."""
    clusters: list[list[mpmath.mpc]] = []
    for root in roots:
        for members in clusters:
            if abs(root - members[0]) < radius:
                members.append(root)
                break
        else:
            clusters.append([root])
    return [(mpmath.fsum(members) / len(members), len(members)) for members in clusters]


def polynomial_roots(
    coefficients: Sequence[Number],
    tol: float | None = None,
    cluster_radius: float | None = None,
) -> list[Root]:
    """All complex roots with multiplicities, sorted by real then imaginary part.

    Exact trailing zeros are removed first and reported as a root at 0. The remaining roots
    come from ``mpmath.polyroots`` (Durand-Kerner) and each is checked against the relative
    residual ``tol``.

    Raises:
        BelyiError: For the zero polynomial or a degree above the cap.
        RootFindingError: If the iteration does not converge or a residual is too large.
    """
    tol = TOLERANCES["root_residual"] if tol is None else tol
    cluster_radius = TOLERANCES["cluster_radius"] if cluster_radius is None else cluster_radius
    with mpmath.workdps(ROOT_FINDING["working_digits"]):
        values = strip_leading_zeros(coefficients)
        if not values:
            raise BelyiError("The zero polynomial has no finite set of roots")
        degree = len(values) - 1
        if degree > CAPS["max_polynomial_degree"]:
            logger.error(f"Polynomial of degree {degree} requested")
            raise BelyiError(
                f"Degree {degree} exceeds the cap of {CAPS['max_polynomial_degree']}"
            )
        zeros = 0
        while len(values) > 1 and values[-1] == 0:
            values.pop()
            zeros += 1
        roots = _durand_kerner(values) if len(values) > 1 else []
        for root in roots:
            residual = _relative_residual(values, root)
            if residual > tol:
                logger.error(f"Root {root} has residual {mpmath.nstr(residual, 3)}")
                raise RootFindingError(f"Residual {mpmath.nstr(residual, 3)} above {tol}")
        result = cluster(roots, cluster_radius)
        if zeros:
            result.append((mpmath.mpc(0), zeros))
        return sorted(result, key=lambda r: (float(r[0].real), float(r[0].imag)))


def multiplicities(roots: Sequence[tuple[Any, int]]) -> list[int]:
    return sorted((m for _, m in roots), reverse=True)
