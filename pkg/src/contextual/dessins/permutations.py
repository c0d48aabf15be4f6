"""Permutations of {0..n-1} as image tuples.

Composition is left to right, ``compose(p, q)(i) == q[p[i]]``, which is the convention of
``sympy.combinatorics.Permutation.__mul__``. Cycle notation for input and output is 1-based.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from loguru import logger

Permutation = tuple[int, ...]


class HypermapError(ValueError):
    """An error related to hypermaps and their permutations"""


class PermutationError(HypermapError):
    """Data that does not describe a permutation"""


def identity(n: int) -> Permutation:
    return tuple(range(n))


def validate(perm: Sequence[int], n: int) -> Permutation:
    """Raises PermutationError unless perm is a bijection of {0..n-1}."""
    if len(perm) != n or sorted(perm) != list(range(n)):
        logger.error(f"Not a permutation of {n} points: {perm}")
        raise PermutationError(f"Not a permutation of {n} points: {list(perm)}")
    return tuple(perm)


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Reads 1-based disjoint cycles; unlisted points are fixed.

    Raises:
        PermutationError: If cycles overlap or mention points outside 1..n.
    """
    images = list(range(n))
    seen: set[int] = set()
    for cycle in cycles:
        for point in cycle:
            if not 1 <= point <= n or point in seen:
                logger.error(f"Invalid cycle {list(cycle)} on {n} points")
                raise PermutationError(f"Invalid cycle {list(cycle)} on {n} points")
            seen.add(point)
        for current, following in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
            images[current - 1] = following - 1
    return tuple(images)


def to_cycles(perm: Permutation, include_fixed: bool = True) -> list[list[int]]:
    """1-based disjoint cycles, each starting at its smallest point, ordered by that point."""
    cycles = []
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        point = start
        while not seen[point]:
            seen[point] = True
            cycle.append(point + 1)
            point = perm[point]
        if include_fixed or len(cycle) > 1:
            cycles.append(cycle)
    return cycles


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p then q."""
    return tuple(q[image] for image in p)


def inverse(p: Permutation) -> Permutation:
    result = [0] * len(p)
    for point, image in enumerate(p):
        result[image] = point
    return tuple(result)


def conjugate(p: Permutation, relabeling: Permutation) -> Permutation:
    """The permutation p after renaming every point i to relabeling[i]."""
    result = [0] * len(p)
    for point, image in enumerate(p):
        result[relabeling[point]] = relabeling[image]
    return tuple(result)


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths, fixed points included, in descending order."""
    return tuple(sorted((len(cycle) for cycle in to_cycles(p)), reverse=True))


def is_involution(p: Permutation) -> bool:
    return all(p[p[i]] == i for i in range(len(p)))


def orbit(start: int, generators: Iterable[Permutation]) -> set[int]:
    generators = list(generators)
    reached = {start}
    frontier = [start]
    while frontier:
        point = frontier.pop()
        for g in generators:
            if g[point] not in reached:
                reached.add(g[point])
                frontier.append(g[point])
    return reached
