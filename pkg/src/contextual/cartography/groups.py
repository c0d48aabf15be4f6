"""Permutation groups of coset actions: orders, simplicity and isomorphism."""
from __future__ import annotations

import math
from collections import Counter
from itertools import product
from typing import Sequence

from loguru import logger
from sympy import isprime
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from contextual.cartography.low_index import CosetTable
from contextual.cartography.presentation import CartographyError
from contextual.dessins import permutations as perm
from contextual.dessins.permutations import Permutation
from contextual.parameters.parameters import CAPS


class GroupOrderCapError(CartographyError):
    """Group too large for the requested exact computation"""


def permutation_group(generators: Sequence[Permutation]) -> PermutationGroup:
    return PermutationGroup([SympyPermutation(list(g)) for g in generators])


def coset_group(t: CosetTable) -> PermutationGroup:
    """The group generated by the generator actions on the cosets."""
    return permutation_group(t.actions())


def group_order(group: PermutationGroup) -> int:
    """Exact order from the stabilizer chain (Schreier-Sims).

    Raises:
        GroupOrderCapError: If the degree exceeds the configured cap.
    """
    if group.degree > CAPS["max_group_degree"]:
        raise GroupOrderCapError(
            f"Degree {group.degree} exceeds the cap of {CAPS['max_group_degree']}"
        )
    return int(group.order())


def generator_tuples(group: PermutationGroup) -> list[Permutation]:
    """Distinct non-identity generators as image tuples."""
    seen: dict[Permutation, None] = {}
    for g in group.generators:
        images = tuple(g.array_form) + tuple(range(len(g.array_form), group.degree))
        if images != perm.identity(group.degree):
            seen[images] = None
    return list(seen)


def elements(group: PermutationGroup) -> list[Permutation]:
    """All elements by closure under right multiplication with the generators."""
    identity = perm.identity(group.degree)
    generators = generator_tuples(group)
    reached = {identity: None}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = perm.compose(x, g)
            if y not in reached:
                reached[y] = None
                frontier.append(y)
    return list(reached)


def element_order(x: Permutation) -> int:
    return math.lcm(*perm.cycle_type(x)) if x else 1


def element_order_histogram(group: PermutationGroup) -> dict[int, int]:
    counts = Counter(element_order(x) for x in elements(group))
    return dict(sorted(counts.items()))


def _check_order_cap(group: PermutationGroup, cap: int) -> int:
    order = group_order(group)
    if order > cap:
        logger.error(f"Group of order {order} exceeds the cap of {cap}")
        raise GroupOrderCapError(f"Group order {order} exceeds the cap of {cap}")
    return order


def is_simple(group: PermutationGroup) -> bool:
    """No conjugacy class generates a proper nontrivial normal subgroup.

    Raises:
        GroupOrderCapError: If the order exceeds the configured cap.
    """
    order = _check_order_cap(group, CAPS["max_simplicity_order"])
    if order == 1:
        return False
    if isprime(order):
        return True
    for conjugacy_class in group.conjugacy_classes():
        representative = next(iter(conjugacy_class))
        if representative.is_Identity:
            continue
        closure = group.normal_closure(representative)
        if closure.order() < order:
            return False
    return True


def _invariants(group: PermutationGroup) -> tuple:
    return (
        group.order(),
        group.is_abelian,
        tuple(sorted(group.abelian_invariants())),
        tuple(element_order_histogram(group).items()),
        group.center().order(),
    )


def _extends_to_isomorphism(
    generators: list[Permutation], images: tuple[Permutation, ...], order: int
) -> bool:
    """Whether generators[i] -> images[i] extends to an injective homomorphism."""
    source_identity = perm.identity(len(generators[0]))
    target_identity = perm.identity(len(images[0]))
    mapping = {source_identity: target_identity}
    frontier = [source_identity]
    while frontier:
        x = frontier.pop()
        y = mapping[x]
        for g, h in zip(generators, images):
            xg, yh = perm.compose(x, g), perm.compose(y, h)
            known = mapping.get(xg)
            if known is None:
                mapping[xg] = yh
                frontier.append(xg)
            elif known != yh:
                return False
    return len(mapping) == order and len(set(mapping.values())) == order


def is_isomorphic(first: PermutationGroup, second: PermutationGroup) -> bool:
    """Exact isomorphism test by backtracking over images of a generating set.

    Candidate images must have the orders of the generators. Order, abelian invariants,
    element-order histograms and center sizes are compared first.

    Raises:
        GroupOrderCapError: If an order exceeds the configured cap.
    """
    cap = CAPS["max_isomorphism_order"]
    order = _check_order_cap(first, cap)
    if _check_order_cap(second, cap) != order:
        return False
    if order == 1:
        return True
    if _invariants(first) != _invariants(second):
        return False
    if len(generator_tuples(second)) < len(generator_tuples(first)):
        first, second = second, first
    generators = generator_tuples(first)
    by_order: dict[int, list[Permutation]] = {}
    for y in elements(second):
        by_order.setdefault(element_order(y), []).append(y)
    choices = [by_order.get(element_order(g), []) for g in generators]
    return any(
        _extends_to_isomorphism(generators, images, order) for images in product(*choices)
    )


def line_preserving_permutations(
    n_points: int, lines: Sequence[Sequence[int]]
) -> list[Permutation]:
    """All permutations of the points mapping the set of lines onto itself."""
    line_set = {frozenset(line) for line in lines}
    lines_with = [
        [frozenset(line) for line in lines if point in line] for point in range(n_points)
    ]
    found: list[Permutation] = []
    images: list[int] = []

    def consistent(point: int) -> bool:
        for line in lines_with[point]:
            if all(q <= point for q in line):
                if frozenset(images[q] for q in line) not in line_set:
                    return False
        return True

    def extend(point: int) -> None:
        if point == n_points:
            found.append(tuple(images))
            return
        for image in range(n_points):
            if image in images:
                continue
            images.append(image)
            if consistent(point):
                extend(point + 1)
            images.pop()

    extend(0)
    return found


def grid_symmetry_group() -> PermutationGroup:
    """Permutations of the nine 3x3 grid points preserving its six lines; order 72."""
    rows = [[3 * r + c for c in range(3)] for r in range(3)]
    columns = [[3 * r + c for r in range(3)] for c in range(3)]
    automorphisms = line_preserving_permutations(9, rows + columns)
    logger.debug(f"{len(automorphisms)} line-preserving permutations of the grid")
    return permutation_group(automorphisms)
