"""How many lines of a geometry a coset group can stabilize, and the dessin search pipeline."""
from __future__ import annotations

from itertools import combinations
from typing import Any

import pydantic
from loguru import logger
from sympy.combinatorics import PermutationGroup

from contextual.cartography.groups import (
    coset_group,
    element_order_histogram,
    generator_tuples,
    group_order,
)
from contextual.cartography.low_index import low_index_subgroups
from contextual.cartography.presentation import CARTOGRAPHIC_GROUP, CartographyError
from contextual.cartography.targets import TargetGroup, filter_by_target, get_target
from contextual.dessins.hypermap import Passport, from_coset_action, genus, passport
from contextual.dessins.permutations import Permutation
from contextual.geometry.configurations import PointLineGeometry
from contextual.parameters.parameters import CAPS


class DegreeMismatchError(CartographyError):
    """The group does not act on as many points as the geometry has"""


class StabilizationReport(pydantic.BaseModel):
    """Best bijection between the permuted points and the geometry's points.

    Attributes:
        stabilized: Largest number k of lines permuted among themselves by every generator.
        total_lines: Number of lines of the geometry.
        witness: Geometry point index assigned to each permuted point 0..n-1.
        lines: Indices of the stabilized lines.
        orbits: Number of group orbits the stabilized lines split into.
    """

    stabilized: int
    total_lines: int
    witness: list[int]
    lines: list[int]
    orbits: int

    @property
    def all_lines(self) -> bool:
        return self.stabilized == self.total_lines

    @property
    def transitive_on_lines(self) -> bool:
        return self.all_lines and self.orbits == 1


Subset = frozenset[int]


def _subset_orbits(generators: list[Permutation], n: int, size: int) -> list[list[Subset]]:
    """Orbits of the group on the size-subsets of its points, sorted by size then content."""
    seen: set[Subset] = set()
    orbits = []
    for subset in combinations(range(n), size):
        start = frozenset(subset)
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        for current in orbit:
            for g in generators:
                image = frozenset(g[i] for i in current)
                if image not in seen:
                    seen.add(image)
                    orbit.append(image)
        orbits.append(sorted(orbit, key=sorted))
    return sorted(orbits, key=lambda o: (len(o), sorted(o[0])))


def _embed(subsets: list[Subset], n: int, g: PointLineGeometry) -> list[int] | None:
    """A bijection of points mapping every subset onto some line, if there is one."""
    line_set = {frozenset(line) for line in g.lines}
    points_order = sorted(range(n), key=lambda p: -sum(1 for s in subsets if p in s))
    position = {p: k for k, p in enumerate(points_order)}
    subsets_closing: list[list[Subset]] = [[] for _ in range(n)]
    subsets_with: list[list[Subset]] = [[] for _ in range(n)]
    for s in subsets:
        subsets_closing[max(position[p] for p in s)].append(s)
        for p in s:
            subsets_with[position[p]].append(s)
    images: dict[int, int] = {}
    used: set[int] = set()

    def consistent(k: int) -> bool:
        for s in subsets_with[k]:
            partial = {images[p] for p in s if p in images}
            if s in subsets_closing[k]:
                if frozenset(partial) not in line_set:
                    return False
            elif not any(partial <= line for line in line_set):
                return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return True
        point = points_order[k]
        for image in range(len(g.points)):
            if image in used:
                continue
            images[point] = image
            used.add(image)
            if consistent(k) and extend(k + 1):
                return True
            del images[point]
            used.discard(image)
        return False

    if not extend(0):
        return None
    return [images[p] for p in range(n)]


def max_stabilized_lines(group: PermutationGroup, g: PointLineGeometry) -> StabilizationReport:
    """Largest set of lines that the group maps onto itself under the best labeling.

    A line set pulled back to the permuted points is stabilized exactly when it is a union of
    group orbits on subsets, so unions of orbits are tried from the largest down and each
    one is embedded into the geometry by backtracking over point bijections.

    Raises:
        DegreeMismatchError: If the degree differs from the number of points or exceeds the cap.
    """
    n = len(g.points)
    if group.degree != n or n > CAPS["max_stabilization_degree"]:
        logger.error(f"Group of degree {group.degree} against {n} points")
        raise DegreeMismatchError(
            f"Degree {group.degree} must equal the {n} points (at most "
            f"{CAPS['max_stabilization_degree']})"
        )
    generators = generator_tuples(group)
    sizes = sorted({len(line) for line in g.lines})
    capacity = {size: sum(1 for line in g.lines if len(line) == size) for size in sizes}
    orbits = [
        orbit
        for size in sizes
        for orbit in _subset_orbits(generators, n, size)
        if len(orbit) <= capacity[size]
    ]

    candidates: list[tuple[int, int, tuple[int, ...]]] = []
    used = dict.fromkeys(sizes, 0)

    def collect(start: int, chosen: tuple[int, ...], total: int) -> None:
        if chosen:
            candidates.append((total, len(chosen), chosen))
        for i in range(start, len(orbits)):
            size = len(orbits[i][0])
            if used[size] + len(orbits[i]) <= capacity[size]:
                used[size] += len(orbits[i])
                collect(i + 1, chosen + (i,), total + len(orbits[i]))
                used[size] -= len(orbits[i])

    collect(0, (), 0)
    candidates.sort(key=lambda c: (-c[0], c[1], c[2]))

    for total, orbit_count, chosen in candidates:
        union = [s for i in chosen for s in orbits[i]]
        witness = _embed(union, n, g)
        if witness is not None:
            line_index = {frozenset(line): i for i, line in enumerate(g.lines)}
            lines = sorted(line_index[frozenset(witness[p] for p in s)] for s in union)
            return StabilizationReport(
                stabilized=total,
                total_lines=len(g.lines),
                witness=witness,
                lines=lines,
                orbits=orbit_count,
            )
    return StabilizationReport(
        stabilized=0, total_lines=len(g.lines), witness=list(range(n)), lines=[], orbits=0
    )


class DessinHit(pydantic.BaseModel):
    """A subgroup class whose coset group matches the target, with its dessin."""

    table: dict[str, Any]
    cycles: dict[str, list[list[int]]]
    passport: Passport
    genus: int
    group_order: int
    stabilization: StabilizationReport


class DessinSearchReport(pydantic.BaseModel):
    index: int
    target: str
    classes: int
    hits: list[DessinHit]
    element_orders: dict[int, int] | None = None

    @property
    def max_stabilized(self) -> int:
        return max((hit.stabilization.stabilized for hit in self.hits), default=0)

    @property
    def all_lines_hits(self) -> int:
        return sum(1 for hit in self.hits if hit.stabilization.all_lines)


def dessin_search(
    index: int,
    target: str | TargetGroup,
    geometry: PointLineGeometry,
    workers: int | None = None,
    progress: bool | None = None,
) -> DessinSearchReport:
    """Low-index enumeration, target filtering and a stabilization report per hit."""
    if isinstance(target, str):
        target = get_target(target)
    tables = low_index_subgroups(CARTOGRAPHIC_GROUP, index, workers=workers, progress=progress)
    hits = []
    element_orders = None
    for table in filter_by_target(index, target, tables, progress=progress):
        hypermap = from_coset_action(table)
        group = coset_group(table)
        if element_orders is None:
            element_orders = element_order_histogram(group)
        hits.append(
            DessinHit(
                table=table.to_dict(),
                cycles=hypermap.cycles(),
                passport=passport(hypermap),
                genus=genus(hypermap),
                group_order=group_order(group),
                stabilization=max_stabilized_lines(group, geometry),
            )
        )
    report = DessinSearchReport(
        index=index,
        target=target.name,
        classes=len(tables),
        hits=hits,
        element_orders=element_orders,
    )
    logger.info(
        f"Index {index}, target {target.name}: {len(hits)} hits, "
        f"at most {report.max_stabilized} of {len(geometry.lines)} lines stabilized"
    )
    return report

