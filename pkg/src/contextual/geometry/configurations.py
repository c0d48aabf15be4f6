"""Point-line configurations of Pauli observables: Mermin square, GQ(2,2), Fano heptads."""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Sequence

import networkx as nx
import pydantic
from loguru import logger

from contextual.parameters.parameters import REFERENCE_DATA
from contextual.pauli import observable
from contextual.pauli.observable import PauliError, PauliObservable


class GeometryError(ValueError):
    """An error related to point-line configurations"""


class LineError(GeometryError):
    """A line that is not a mutually commuting set with product plus or minus identity"""


class PointLineGeometry(pydantic.BaseModel):
    """Observables (projective points) together with signed lines.

    Attributes:
        points: Canonical Hermitian representatives of the points.
        lines: Point indices of every line.
        line_signs: s such that the product of the line's points equals s times the identity.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    points: tuple[PauliObservable, ...]
    lines: tuple[tuple[int, ...], ...]
    line_signs: tuple[int, ...]

    @pydantic.model_validator(mode="after")
    def lines_validator(self) -> PointLineGeometry:
        """Checks indices, commutation and the sign of every line.

        Raises:
            LineError: If a line is not mutually commuting or its product disagrees with its sign.
        """
        if len(self.line_signs) != len(self.lines):
            raise LineError(f"{len(self.lines)} lines but {len(self.line_signs)} signs")
        if len({point.code for point in self.points}) != len(self.points):
            raise GeometryError("Points must be distinct projective observables")
        for line, sign in zip(self.lines, self.line_signs):
            if sign not in (1, -1):
                raise LineError(f"Line sign must be +1 or -1, got {sign}")
            if len(set(line)) != len(line) or not all(0 <= i < len(self.points) for i in line):
                raise LineError(f"Invalid point indices on line {line}")
            operators = [self.points[i] for i in line]
            if not all(observable.commutes(a, b) for a, b in combinations(operators, 2)):
                raise LineError(f"Line {[str(o) for o in operators]} is not mutually commuting")
            try:
                computed = observable.product_sign(operators)
            except PauliError as err:
                raise LineError(f"Line {[str(o) for o in operators]}: {err}") from err
            if computed != sign:
                raise LineError(f"Line {[str(o) for o in operators]} has sign {computed}")
        return self

    @classmethod
    def from_lines(
        cls, points: Sequence[PauliObservable], lines: Sequence[Sequence[int]]
    ) -> PointLineGeometry:
        """Builds a geometry computing each line sign from the product of its points."""
        canonical = tuple(point.canonical() for point in points)
        signs = []
        for line in lines:
            try:
                signs.append(observable.product_sign(canonical[i] for i in line))
            except PauliError as err:
                raise LineError(f"Line {tuple(line)}: {err}") from err
        return cls(
            points=canonical, lines=tuple(tuple(line) for line in lines), line_signs=tuple(signs)
        )

    @property
    def n_qubits(self) -> int:
        return self.points[0].n

    @property
    def negative_lines(self) -> list[tuple[int, ...]]:
        return [line for line, sign in zip(self.lines, self.line_signs) if sign < 0]

    def lines_through(self, point: int) -> list[int]:
        return [i for i, line in enumerate(self.lines) if point in line]

    def point_degrees(self) -> list[int]:
        counts = Counter(i for line in self.lines for i in line)
        return [counts[i] for i in range(len(self.points))]

    def line_sets(self) -> list[frozenset[int]]:
        return [frozenset(line) for line in self.lines]

    def labels(self) -> list[str]:
        return [point.letters for point in self.points]


def _has_shape(
    g: PointLineGeometry, n_points: int, n_lines: int, line_size: int, point_degree: int
) -> bool:
    return (
        len(g.points) == n_points
        and len(g.lines) == n_lines
        and all(len(line) == line_size for line in g.lines)
        and all(degree == point_degree for degree in g.point_degrees())
    )


def is_pentagram_shaped(g: PointLineGeometry) -> bool:
    """10 points, 5 lines of 4, any two lines sharing exactly one point, 2 lines per point."""
    if not _has_shape(g, 10, 5, 4, 2):
        return False
    return all(len(a & b) == 1 for a, b in combinations(g.line_sets(), 2))


def is_grid_shaped(g: PointLineGeometry) -> bool:
    return _has_shape(g, 9, 6, 3, 2)


def is_fano_shaped(g: PointLineGeometry) -> bool:
    return _has_shape(g, 7, 7, 3, 3)


def projective_plane_axioms(g: PointLineGeometry) -> bool:
    """(i) two lines meet in one point, (ii) two points lie on one line, (iii) a quadrangle."""
    lines = g.line_sets()
    if not all(len(a & b) == 1 for a, b in combinations(lines, 2)):
        return False
    for p, q in combinations(range(len(g.points)), 2):
        if sum(1 for line in lines if p in line and q in line) != 1:
            return False

    def collinear(triple: tuple[int, ...]) -> bool:
        return any(set(triple) <= line for line in lines)

    return any(
        not any(collinear(triple) for triple in combinations(quad, 3))
        for quad in combinations(range(len(g.points)), 4)
    )


def parity_predicts_contextual(g: PointLineGeometry) -> bool:
    """Every point on an even number of lines and the line signs multiply to -1.

    Multiplying all line constraints of a +1/-1 assignment then gives +1 = -1, so no
    noncontextual assignment exists.
    """
    product = 1
    for sign in g.line_signs:
        product *= sign
    return all(degree % 2 == 0 for degree in g.point_degrees()) and product == -1


def commutation_graph(points: Sequence[PauliObservable]) -> nx.Graph:
    """Vertices are point indices, edges join distinct commuting observables."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(points)))
    graph.add_edges_from(
        (i, j)
        for i, j in combinations(range(len(points)), 2)
        if observable.commutes(points[i], points[j])
    )
    return graph


def canonical_mermin_square() -> PointLineGeometry:
    """Two-qubit 3x3 grid whose only negative line is the middle column {XX, YY, ZZ}.

    Lines are listed rows first, then columns.
    """
    grid = [
        [PauliObservable.parse(text) for text in row]
        for row in REFERENCE_DATA["mermin_square"]["grid"]
    ]
    return grid_geometry(grid)


def grid_geometry(grid: Sequence[Sequence[PauliObservable]]) -> PointLineGeometry:
    points = [point for row in grid for point in row]
    rows = [tuple(3 * r + c for c in range(3)) for r in range(3)]
    columns = [tuple(3 * r + c for r in range(3)) for c in range(3)]
    return PointLineGeometry.from_lines(points, rows + columns)


def _sum_free_triples(codes: Sequence[int]) -> list[tuple[int, int, int]]:
    """Triples a < b < c of classes adding up to zero over GF(2)."""
    present = set(codes)
    return [
        (a, b, a ^ b)
        for a, b in combinations(sorted(codes), 2)
        if (a ^ b) in present and (a ^ b) > b
    ]


def _codes_commute(n: int, a: int, b: int) -> bool:
    mask = (1 << n) - 1
    return observable.symplectic_form(a >> n, a & mask, b >> n, b & mask) == 0


class GQReport(pydantic.BaseModel):
    """Outcome of the generalized quadrangle check on the two-qubit observables."""

    points: int
    lines: int
    lines_per_point: list[int]
    points_per_line: list[int]
    axiom_violations: int

    @property
    def ok(self) -> bool:
        return (
            self.points == 15
            and self.lines == 15
            and set(self.lines_per_point) == {3}
            and set(self.points_per_line) == {3}
            and self.axiom_violations == 0
        )


def gq22_lines() -> list[tuple[int, int, int]]:
    """The 15 commuting triples of two-qubit classes whose product is +-II, as codes."""
    codes = range(1, 16)
    return [
        triple
        for triple in _sum_free_triples(codes)
        if all(_codes_commute(2, a, b) for a, b in combinations(triple, 2))
    ]


def gq22_geometry() -> PointLineGeometry:
    """The 15 two-qubit observables with the lines of the generalized quadrangle."""
    n = 2
    codes = list(range(1, 1 << (2 * n)))
    lines = gq22_lines()
    index = {code: i for i, code in enumerate(codes)}
    points = [PauliObservable.from_code(n, code) for code in codes]
    return PointLineGeometry.from_lines(points, [[index[c] for c in line] for line in lines])


def verify_gq22() -> GQReport:
    """Checks that the two-qubit observables form the generalized quadrangle of order (2, 2).

    For every point p off a line L exactly one point of L must be collinear with p.
    """
    g = gq22_geometry()
    lines = g.line_sets()
    collinear = {(p, q) for line in lines for p in line for q in line if p != q}
    violations = 0
    for p in range(len(g.points)):
        for line in lines:
            if p in line:
                continue
            if sum(1 for q in line if (p, q) in collinear) != 1:
                violations += 1
    report = GQReport(
        points=len(g.points),
        lines=len(lines),
        lines_per_point=g.point_degrees(),
        points_per_line=[len(line) for line in lines],
        axiom_violations=violations,
    )
    logger.info(f"GQ(2,2): {report.lines} lines, {report.axiom_violations} axiom violations")
    return report


def _three_qubit_isotropic_spaces() -> list[tuple[int, ...]]:
    """Non-identity elements of the 3-dimensional isotropic subspaces, as sorted code tuples."""
    n = 3
    size = 1 << (2 * n)
    found: set[tuple[int, ...]] = set()
    for a, b in combinations(range(1, size), 2):
        if not _codes_commute(n, a, b):
            continue
        for c in range(b + 1, size):
            if c != a ^ b and _codes_commute(n, a, c) and _codes_commute(n, b, c):
                found.add(tuple(sorted({a, b, c, a ^ b, a ^ c, b ^ c, a ^ b ^ c})))
    return sorted(found)


def fano_heptads(n: int = 3) -> list[PointLineGeometry]:
    """All maximal mutually commuting sets of three-qubit observables as Fano planes.

    Raises:
        GeometryError: If n is not 3 or a heptad fails the projective plane axioms.
    """
    if n != 3:
        raise GeometryError(f"Fano heptads live in the three-qubit Pauli group, {n=} given")
    heptads = []
    for codes in _three_qubit_isotropic_spaces():
        index = {code: i for i, code in enumerate(codes)}
        lines = [[index[c] for c in triple] for triple in _sum_free_triples(codes)]
        points = [PauliObservable.from_code(n, code) for code in codes]
        g = PointLineGeometry.from_lines(points, lines)
        if not (is_fano_shaped(g) and projective_plane_axioms(g)):
            raise GeometryError(f"Heptad {g.labels()} is not a Fano plane")
        heptads.append(g)
    logger.info(f"{len(heptads)} Fano heptads of three-qubit observables")
    return heptads
