"""Conjugacy classes of subgroups of small index via backtracking coset enumeration.

A coset table is stored row-major in a flat list: entry ``row * width + column`` is the coset
reached from ``row`` by the letter ``column`` (see ``presentation``), -1 when undefined.
Tables are built in standard form (new cosets appear in row-major order of first use) and a
branch is cut as soon as relabeling from another base coset gives a smaller table, so every
conjugacy class is found exactly once, by its lexicographically minimal table.
"""
from __future__ import annotations

import time
from functools import lru_cache
from multiprocessing import Pool
from typing import Any

import pydantic
from loguru import logger
from tqdm import tqdm

from contextual.cartography.presentation import (
    CARTOGRAPHIC_GROUP,
    CartographyError,
    FinitelyPresentedGroup,
    Word,
)
from contextual.dessins.permutations import Permutation
from contextual.parameters.parameters import CAPS, SEARCH_SETTINGS, default_workers, show_progress

UNDEFINED = -1


class IndexCapError(CartographyError):
    """Subgroup index outside the supported range"""


class CosetTable(pydantic.BaseModel):
    """Complete action of the generators on the cosets of a subgroup; coset 0 is the subgroup.

    Attributes:
        n: Index of the subgroup.
        n_generators: Number of generators of the presentation.
        table: Flat row-major table with one column per generator and per inverse.
        canonical: Whether the labeling is the minimal one of its conjugacy class.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    n: int
    n_generators: int
    table: tuple[int, ...]
    canonical: bool = False

    @pydantic.model_validator(mode="after")
    def shape_validator(self) -> CosetTable:
        if len(self.table) != self.n * self.width:
            raise CartographyError(f"Table of length {len(self.table)} for {self.n} cosets")
        if any(not UNDEFINED <= entry < self.n for entry in self.table):
            raise CartographyError("Coset table entries out of range")
        return self

    @classmethod
    def from_actions(cls, actions: list[Permutation], canonical: bool = False) -> CosetTable:
        """Table of permutations given as 0-based image tuples, one per generator."""
        n = len(actions[0])
        table = []
        for row in range(n):
            for action in actions:
                table.append(action[row])
                table.append(action.index(row))
        return cls(n=n, n_generators=len(actions), table=tuple(table), canonical=canonical)

    @property
    def width(self) -> int:
        return 2 * self.n_generators

    def image(self, coset: int, column: int) -> int:
        return self.table[coset * self.width + column]

    def is_complete(self) -> bool:
        return UNDEFINED not in self.table

    def generator_action(self, generator: int) -> Permutation:
        return tuple(self.image(row, 2 * generator) for row in range(self.n))

    def actions(self) -> list[Permutation]:
        return [self.generator_action(g) for g in range(self.n_generators)]

    def verify_relators(self, relators: tuple[Word, ...]) -> bool:
        """Every relator read from every coset returns to it."""
        for row in range(self.n):
            for relator in relators:
                coset = row
                for column in relator:
                    coset = self.image(coset, column)
                    if coset == UNDEFINED:
                        return False
                if coset != row:
                    return False
        return True

    def conjugate_tables(self) -> list[tuple[int, ...]]:
        """Standard-form tables of the conjugate subgroups, one per base coset."""
        return [_relabel_from(self.table, self.width, base) for base in range(self.n)]

    def canonical_key(self) -> tuple[int, ...]:
        return min(self.conjugate_tables())

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.n,
            "actions": [[image + 1 for image in action] for action in self.actions()],
        }


def _relabel_from(table: tuple[int, ...], width: int, base: int) -> tuple[int, ...]:
    """A complete table relabeled in first-appearance order starting from ``base``."""
    label = {base: 0}
    order = [base]
    result = []
    for old_row in order:
        for column in range(width):
            entry = table[old_row * width + column]
            if entry not in label:
                label[entry] = len(order)
                order.append(entry)
            result.append(label[entry])
    return tuple(result)


class _Search:
    """Mutable search state with an undo trail."""

    def __init__(self, group: FinitelyPresentedGroup, index: int) -> None:
        self.index = index
        self.width = 2 * len(group.generators)
        self.table = [UNDEFINED] * (index * self.width)
        self.used = 1
        self.trail: list[int] = []
        relators = list(group.relators)
        relators += [tuple(column ^ 1 for column in reversed(r)) for r in relators]
        self.rels_by_column: list[list[Word]] = [[] for _ in range(self.width)]
        for relator in relators:
            for shift in range(len(relator)):
                conjugate = relator[shift:] + relator[:shift]
                if conjugate not in self.rels_by_column[conjugate[0]]:
                    self.rels_by_column[conjugate[0]].append(conjugate)

    def first_undefined(self) -> int:
        limit = self.used * self.width
        for position in range(limit):
            if self.table[position] == UNDEFINED:
                return position
        return -1

    def _set(self, row: int, column: int, target: int) -> None:
        self.table[row * self.width + column] = target
        self.table[target * self.width + (column ^ 1)] = row
        self.trail.append(row * self.width + column)
        self.trail.append(target * self.width + (column ^ 1))

    def define(self, row: int, column: int, target: int) -> bool:
        """Sets row.column = target and closes under relator deductions; False on conflict."""
        if self.table[target * self.width + (column ^ 1)] != UNDEFINED:
            return False
        self._set(row, column, target)
        pending = [(row, column), (target, column ^ 1)]
        width = self.width
        table = self.table
        while pending:
            coset, letter = pending.pop()
            for relator in self.rels_by_column[letter]:
                last = len(relator) - 1
                forward, i = coset, 0
                while i <= last and table[forward * width + relator[i]] != UNDEFINED:
                    forward = table[forward * width + relator[i]]
                    i += 1
                if i > last:
                    if forward != coset:
                        return False
                    continue
                backward, j = coset, last
                while j >= i and table[backward * width + (relator[j] ^ 1)] != UNDEFINED:
                    backward = table[backward * width + (relator[j] ^ 1)]
                    j -= 1
                if j < i:
                    if forward != backward:
                        return False
                elif j == i:
                    self._set(forward, relator[i], backward)
                    pending.append((forward, relator[i]))
                    pending.append((backward, relator[i] ^ 1))
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            self.table[self.trail.pop()] = UNDEFINED

    def is_canonical(self) -> bool:
        """False if some other base coset gives a smaller table on the defined entries."""
        width = self.width
        table = self.table
        for base in range(1, self.used):
            label = {base: 0}
            order = [base]
            decided = False
            for new_row in range(self.used):
                if new_row >= len(order):
                    break
                old_row = order[new_row]
                for column in range(width):
                    entry = table[old_row * width + column]
                    original = table[new_row * width + column]
                    if entry == UNDEFINED or original == UNDEFINED:
                        decided = True
                        break
                    if entry not in label:
                        label[entry] = len(order)
                        order.append(entry)
                    relabeled = label[entry]
                    if relabeled < original:
                        return False
                    if relabeled > original:
                        decided = True
                        break
                if decided:
                    break
        return True

    def candidates(self, position: int) -> list[int]:
        column = position % self.width
        targets = [
            d for d in range(self.used) if self.table[d * self.width + (column ^ 1)] == UNDEFINED
        ]
        if self.used < self.index:
            targets.append(self.used)
        return targets

    def choose(self, position: int, target: int) -> tuple[bool, int, int]:
        """Applies a branch; returns (consistent, trail mark, previous coset count)."""
        mark, used = len(self.trail), self.used
        if target == self.used:
            self.used += 1
        row, column = divmod(position, self.width)
        ok = self.define(row, column, target) and self.is_canonical()
        return ok, mark, used

    def revert(self, mark: int, used: int) -> None:
        self.undo(mark)
        self.used = used

    def replay(self, path: tuple[int, ...]) -> bool:
        for target in path:
            position = self.first_undefined()
            ok, _, _ = self.choose(position, target)
            if not ok:
                return False
        return True

    def run(
        self,
        found: list[tuple[int, ...]],
        frontier_depth: int | None = None,
        frontier: list[tuple[int, ...]] | None = None,
        path: tuple[int, ...] = (),
    ) -> None:
        """Depth-first search below the current state.

        With ``frontier_depth`` set, nodes at that depth are collected in ``frontier`` instead
        of being expanded.
        """
        position = self.first_undefined()
        if position < 0:
            if self.used == self.index:
                found.append(tuple(self.table))
            return
        if frontier_depth is not None and frontier is not None and len(path) == frontier_depth:
            frontier.append(path)
            return
        for target in self.candidates(position):
            ok, mark, used = self.choose(position, target)
            if ok:
                self.run(found, frontier_depth, frontier, path + (target,))
            self.revert(mark, used)


_WORKER_ARGS: tuple[FinitelyPresentedGroup, int] | None = None


def _init_worker(group: FinitelyPresentedGroup, index: int) -> None:
    global _WORKER_ARGS  # pylint: disable=global-statement
    _WORKER_ARGS = (group, index)


def _expand(path: tuple[int, ...]) -> list[tuple[int, ...]]:
    assert _WORKER_ARGS is not None
    search = _Search(*_WORKER_ARGS)
    found: list[tuple[int, ...]] = []
    if search.replay(path):
        search.run(found)
    return found


def low_index_subgroups(
    group: FinitelyPresentedGroup = CARTOGRAPHIC_GROUP,
    index: int = 7,
    workers: int | None = None,
    progress: bool | None = None,
) -> list[CosetTable]:
    """One canonical coset table per conjugacy class of subgroups of index exactly ``index``.

    The search tree is cut at a fixed depth and the subtrees are shared among worker
    processes; tables come back sorted, so the result does not depend on scheduling.

    Raises:
        IndexCapError: If the index is below 1 or above the configured cap.
    """
    if not 1 <= index <= CAPS["max_index"]:
        logger.error(f"Low-index search requested for {index=}")
        raise IndexCapError(f"Index must be between 1 and {CAPS['max_index']}, got {index}")
    workers = default_workers() if workers is None else workers
    progress = show_progress() if progress is None else progress
    return list(_classes(group, index, workers, progress))


@lru_cache(maxsize=SEARCH_SETTINGS["search"]["low_index_cache_size"])
def _classes(
    group: FinitelyPresentedGroup, index: int, workers: int, progress: bool
) -> tuple[CosetTable, ...]:
    start = time.perf_counter()
    search = _Search(group, index)
    found: list[tuple[int, ...]] = []
    frontier: list[tuple[int, ...]] = []
    search.run(found, SEARCH_SETTINGS["search"]["low_index_split_depth"], frontier)
    if workers > 1 and len(frontier) > 1:
        with Pool(workers, initializer=_init_worker, initargs=(group, index)) as pool:
            for part in tqdm(
                pool.imap_unordered(_expand, frontier),
                total=len(frontier),
                disable=not progress,
                desc=f"Index {index}",
            ):
                found.extend(part)
    else:
        _init_worker(group, index)
        for path in tqdm(frontier, disable=not progress, desc=f"Index {index}"):
            found.extend(_expand(path))

    width = 2 * len(group.generators)
    tables = [
        CosetTable(n=index, n_generators=width // 2, table=table, canonical=True)
        for table in sorted(found)
    ]
    logger.info(
        f"{len(tables)} classes of index-{index} subgroups "
        f"({time.perf_counter() - start:.1f} s, {len(frontier)} subtrees)"
    )
    return tuple(tables)
