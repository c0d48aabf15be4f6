"""Numerical verification of Belyi maps and of their ramification passports.

The point at infinity is written ``complex("inf")`` wherever a point or a value of the
Riemann sphere is returned.
"""
from __future__ import annotations

from typing import Any, Mapping

import mpmath
import pydantic
from loguru import logger

from contextual.belyi.expression import parse_map
from contextual.belyi.roots import (
    BelyiError,
    Root,
    multiplicities,
    polynomial_roots,
    strip_leading_zeros,
)
from contextual.dessins.hypermap import Hypermap, Passport, figure, genus, passport
from contextual.parameters.parameters import CAPS, REFERENCE_DATA, ROOT_FINDING, TOLERANCES

INFINITY = complex("inf")


class CommonRootError(BelyiError):
    """Numerator and denominator vanish at the same point"""


class NotBelyiError(BelyiError):
    """The map is ramified outside 0, 1 and infinity"""


def _poly_mul(p: list, q: list) -> list:
    result = [mpmath.mpc(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            result[i + j] += a * b
    return result


def _poly_sub(p: list, q: list) -> list:
    width = max(len(p), len(q))
    p = [mpmath.mpc(0)] * (width - len(p)) + list(p)
    q = [mpmath.mpc(0)] * (width - len(q)) + list(q)
    return [a - b for a, b in zip(p, q)]


def _poly_derivative(p: list) -> list:
    degree = len(p) - 1
    return [c * (degree - k) for k, c in enumerate(p[:-1])] or [mpmath.mpc(0)]


def _point(value: mpmath.mpc) -> complex:
    return complex(value)


class ComplexRationalMap(pydantic.BaseModel):
    """f = P / Q with complex coefficients, leading coefficient first.

    Attributes:
        numerator: Coefficients of P.
        denominator: Coefficients of Q.
        name: Label used in reports.
    """

    model_config = pydantic.ConfigDict(frozen=True, arbitrary_types_allowed=True)

    numerator: tuple[Any, ...]
    denominator: tuple[Any, ...]
    name: str = ""

    @pydantic.field_validator("numerator", "denominator", mode="before")
    @classmethod
    def coefficients_validator(cls, value: Any) -> tuple[mpmath.mpc, ...]:
        with mpmath.workdps(ROOT_FINDING["literal_digits"]):
            stripped = strip_leading_zeros(value)
            if not stripped:
                raise BelyiError("Zero polynomial in a rational map")
            return tuple(mpmath.mpc(c) for c in stripped)

    @pydantic.model_validator(mode="after")
    def map_validator(self) -> ComplexRationalMap:
        if self.degree < 1:
            raise BelyiError(f"Rational map {self.name!r} is constant")
        if self.degree > CAPS["max_polynomial_degree"]:
            raise BelyiError(
                f"Degree {self.degree} exceeds the cap of {CAPS['max_polynomial_degree']}"
            )
        if len(self.numerator) > 1 and len(self.denominator) > 1:
            distance = min(
                abs(r - s)
                for r, _ in polynomial_roots(self.numerator)
                for s, _ in polynomial_roots(self.denominator)
            )
            if distance <= TOLERANCES["common_root_distance"]:
                logger.error(f"Common root in {self.name!r}, distance {mpmath.nstr(distance, 3)}")
                raise CommonRootError(
                    f"Numerator and denominator of {self.name!r} share a root"
                )
        return self

    @classmethod
    def parse(
        cls, expression: str, constants: Mapping[str, str] | None = None, name: str = ""
    ) -> ComplexRationalMap:
        numerator, denominator = parse_map(expression, constants)
        return cls(numerator=numerator, denominator=denominator, name=name or expression)

    @property
    def numerator_degree(self) -> int:
        return len(self.numerator) - 1

    @property
    def denominator_degree(self) -> int:
        return len(self.denominator) - 1

    @property
    def degree(self) -> int:
        return max(self.numerator_degree, self.denominator_degree)

    def __call__(self, z: complex | mpmath.mpc) -> complex:
        """f(z), infinite at poles and at infinity when the numerator has higher degree."""
        if z == INFINITY:
            return self.value_at_infinity()
        with mpmath.workdps(ROOT_FINDING["working_digits"]):
            q = mpmath.polyval(list(self.denominator), z)
            if q == 0:
                return INFINITY
            return _point(mpmath.polyval(list(self.numerator), z) / q)

    def value_at_infinity(self) -> complex:
        if self.numerator_degree > self.denominator_degree:
            return INFINITY
        if self.numerator_degree < self.denominator_degree:
            return 0j
        return _point(self.numerator[0] / self.denominator[0])

    def ramification_at_infinity(self) -> int:
        """Local degree of f at the point at infinity."""
        if self.numerator_degree != self.denominator_degree:
            return abs(self.numerator_degree - self.denominator_degree)
        c = self.numerator[0] / self.denominator[0]
        return self.degree - self._shifted_degree(c)

    def _shifted(self, c: complex | mpmath.mpc) -> list:
        """Coefficients of P - c Q with negligible leading terms dropped."""
        with mpmath.workdps(ROOT_FINDING["working_digits"]):
            scaled = [c * b for b in self.denominator]
            return strip_leading_zeros(
                _poly_sub(list(self.numerator), scaled), ROOT_FINDING["working_digits"] // 2
            )

    def _shifted_degree(self, c: complex | mpmath.mpc) -> int:
        return len(self._shifted(c)) - 1

    def fiber(self, value: complex) -> list[tuple[complex, int]]:
        """Preimages of ``value`` with their multiplicities; they add up to the degree."""
        if value == INFINITY:
            roots: list[Root] = (
                polynomial_roots(self.denominator) if self.denominator_degree > 0 else []
            )
            at_infinity = self.degree - self.denominator_degree
        else:
            shifted = self._shifted(value)
            roots = polynomial_roots(shifted)
            at_infinity = self.degree - (len(shifted) - 1)
        points = [(_point(root), m) for root, m in roots]
        if at_infinity > 0:
            points.append((INFINITY, at_infinity))
        return points

    def critical_points(self) -> list[tuple[complex, int]]:
        """Finite critical points as roots of P'Q - PQ', with infinity when ramified there."""
        wronskian = _poly_sub(
            _poly_mul(_poly_derivative(list(self.numerator)), list(self.denominator)),
            _poly_mul(list(self.numerator), _poly_derivative(list(self.denominator))),
        )
        wronskian = strip_leading_zeros(wronskian, ROOT_FINDING["working_digits"] // 2)
        points = [(_point(root), m) for root, m in polynomial_roots(wronskian)]
        if self.ramification_at_infinity() > 1:
            points.append((INFINITY, self.ramification_at_infinity() - 1))
        return points

    def mirror(self) -> ComplexRationalMap:
        """The complex-conjugate map, whose dessin is the mirror image."""
        return ComplexRationalMap(
            numerator=tuple(mpmath.conj(c) for c in self.numerator),
            denominator=tuple(mpmath.conj(c) for c in self.denominator),
            name=f"{self.name} (mirror)" if self.name else "",
        )

    def coefficients(self) -> dict[str, list[list[float]]]:
        return {
            "numerator": [[float(c.real), float(c.imag)] for c in self.numerator],
            "denominator": [[float(c.real), float(c.imag)] for c in self.denominator],
        }


def snap(value: complex, tolerance: float | None = None) -> complex:
    """Replaces values close to 0, 1 or infinity by those points."""
    tolerance = TOLERANCES["critical_value_snap"] if tolerance is None else tolerance
    if value == INFINITY or abs(value) > TOLERANCES["infinity_threshold"]:
        return INFINITY
    for special in (0j, 1 + 0j):
        if abs(value - special) < tolerance:
            return special
    return value


def critical_values(f: ComplexRationalMap) -> list[complex]:
    """Distinct images of the critical points, snapped to 0, 1 and infinity.

    Raises:
        RootFindingError: If the critical points cannot be computed.
    """
    tolerance = TOLERANCES["critical_value_snap"]
    values: list[complex] = []
    for point, _ in f.critical_points():
        value = snap(f(point), tolerance)
        if not any(_same_value(value, known, tolerance) for known in values):
            values.append(value)
    return sorted(values, key=lambda v: (v == INFINITY, v.real, v.imag))


def _same_value(a: complex, b: complex, tolerance: float) -> bool:
    if a == INFINITY or b == INFINITY:
        return a == b
    return abs(a - b) < tolerance


def is_belyi(f: ComplexRationalMap) -> bool:
    """Every critical value lies in {0, 1, infinity}."""
    return all(v in (0j, 1 + 0j, INFINITY) for v in critical_values(f))


class RamificationPassport(Passport):
    """Multiplicities over 0, 1 and infinity, each a partition of the degree."""

    @property
    def degree(self) -> int:
        return sum(self.lambda0)


def ramification_passport(f: ComplexRationalMap) -> RamificationPassport:
    """Partitions of the degree given by the fibers of 0, 1 and infinity.

    Raises:
        NotBelyiError: If some critical value lies outside {0, 1, infinity}.
    """
    values = critical_values(f)
    if any(v not in (0j, 1 + 0j, INFINITY) for v in values):
        logger.error(f"Map {f.name!r} has critical values {values}")
        raise NotBelyiError(f"{f.name!r} is ramified over {values}")
    fibers = [[m for _, m in f.fiber(value)] for value in (0j, 1 + 0j, INFINITY)]
    for value, parts in zip(("0", "1", "infinity"), fibers):
        if sum(parts) != f.degree:
            raise BelyiError(f"Fiber over {value} has {sum(parts)} points for degree {f.degree}")
    return RamificationPassport.from_lists(fibers)


def matches_dessin(f: ComplexRationalMap, m: Hypermap) -> bool:
    """Whether the passport of the map equals the cycle types of the dessin."""
    if f.degree != m.n:
        return False
    return ramification_passport(f).as_lists() == passport(m).as_lists()


def riemann_hurwitz_defect(f: ComplexRationalMap, g: int = 0) -> int:
    """Sum of (d - |fiber|) over 0, 1, infinity minus 2d - 2 + 2g; zero for a Belyi cover."""
    fibers = ramification_passport(f).as_lists()
    ramification = sum(f.degree - len(parts) for parts in fibers)
    return ramification - (2 * f.degree - 2 + 2 * g)


def fiber_multiplicities(f: ComplexRationalMap, value: complex) -> list[int]:
    return multiplicities(f.fiber(value))


def _label(value: complex) -> str:
    if value == INFINITY:
        return "inf"
    if value == 0:
        return "0"
    if value == 1:
        return "1"
    return f"{value.real:.10g}{value.imag:+.10g}j"


class BelyiReport(pydantic.BaseModel):
    """Verification of one map, serialized to JSON by the command line."""

    name: str
    expression: str
    constants: dict[str, str]
    mirror: bool
    degree: int
    critical_values: list[str]
    is_belyi: bool
    passport: list[list[int]] | None = None
    dessin: str | None = None
    matches_dessin: bool | None = None
    genus: int | None = None
    riemann_hurwitz_defect: int | None = None

    @property
    def ok(self) -> bool:
        return (
            self.is_belyi
            and self.matches_dessin is not False
            and not self.riemann_hurwitz_defect
        )


def named_map(name: str, mirror: bool = False) -> ComplexRationalMap:
    """One of the maps of the parameter file, optionally with the conjugate constants.

    Raises:
        BelyiError: If no map has that name.
    """
    if name not in REFERENCE_DATA["belyi_maps"]:
        logger.error(f"Unknown map {name!r}")
        available = ", ".join(REFERENCE_DATA["belyi_maps"])
        raise BelyiError(f"Unknown map {name!r}; available: {available}")
    data = REFERENCE_DATA["belyi_maps"][name]
    constants = data["mirror_constants"] if mirror else data["constants"]
    label = f"{name} (mirror)" if mirror else name
    return ComplexRationalMap.parse(data["expression"], constants, name=label)


def verify(name: str, dessin: str | None = None, mirror: bool = False) -> BelyiReport:
    """Critical values, passport, dessin match and Riemann-Hurwitz balance of a named map.

    The dessin defaults to the one paired with the map in the parameter file.
    """
    data = REFERENCE_DATA["belyi_maps"].get(name, {})
    f = named_map(name, mirror)
    dessin = dessin or data.get("dessin")
    values = critical_values(f)
    belyi = all(v in (0j, 1 + 0j, INFINITY) for v in values)
    report = BelyiReport(
        name=f.name,
        expression=data["expression"],
        constants=data["mirror_constants"] if mirror else data["constants"],
        mirror=mirror,
        degree=f.degree,
        critical_values=[_label(v) for v in values],
        is_belyi=belyi,
        dessin=dessin,
    )
    if belyi:
        report.passport = ramification_passport(f).as_lists()
        if dessin is not None:
            m = figure(dessin)
            report.matches_dessin = matches_dessin(f, m)
            if report.matches_dessin:
                report.genus = genus(m)
                report.riemann_hurwitz_defect = riemann_hurwitz_defect(f, report.genus)
    logger.info(
        f"{f.name}: degree {f.degree}, critical values {report.critical_values}, "
        f"passport {report.passport}, dessin {dessin} match {report.matches_dessin}"
    )
    return report
