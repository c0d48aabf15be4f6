from __future__ import annotations

from typing import Callable

from loguru import logger
from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup
from tqdm import tqdm

from contextual.cartography.groups import (
    coset_group,
    grid_symmetry_group,
    group_order,
    is_isomorphic,
    is_simple,
)
from contextual.cartography.low_index import CosetTable, low_index_subgroups
from contextual.cartography.presentation import CARTOGRAPHIC_GROUP, CartographyError
from contextual.parameters.parameters import show_progress


class UnknownTargetError(CartographyError):
    """No target group with the requested name"""


class TargetGroup:
    """A named group that coset groups are matched against.

    Args:
        name: Registry name.
        index: Index of the subgroups whose coset groups are compared, i.e. the degree.
        order: Order of the target group.
        description: Human-readable label.
        reference: Builds a concrete permutation group, or None when the match is a predicate.
        predicate: Custom match used instead of an isomorphism test.
    """

    def __init__(
        self,
        name: str,
        index: int,
        order: int,
        description: str,
        reference: Callable[[], PermutationGroup] | None = None,
        predicate: Callable[[PermutationGroup], bool] | None = None,
    ) -> None:
        self.name = name
        self.index = index
        self.order = order
        self.description = description
        self._reference = reference
        self._predicate = predicate
        self._group: PermutationGroup | None = None

    def reference(self) -> PermutationGroup:
        """The concrete reference group, built once.

        Raises:
            CartographyError: If the target is matched by a predicate only.
        """
        if self._reference is None:
            raise CartographyError(f"Target {self.name!r} has no reference group")
        if self._group is None:
            self._group = self._reference()
        return self._group

    def matches(self, group: PermutationGroup) -> bool:
        if group_order(group) != self.order:
            return False
        if self._predicate is not None:
            return self._predicate(group)
        return is_isomorphic(group, self.reference())

    def __repr__(self) -> str:
        return f"TargetGroup({self.name!r}, order={self.order})"


def _order_168_simple(group: PermutationGroup) -> bool:
    # the only simple group of order 168 is PSL(2, 7)
    return is_simple(group)


TARGETS: dict[str, TargetGroup] = {
    "psl27": TargetGroup(
        "psl27", 7, 168, "PSL(2,7), the simple group of order 168", predicate=_order_168_simple
    ),
    "square72": TargetGroup(
        "square72",
        9,
        72,
        "line-preserving permutations of the 3x3 grid",
        reference=grid_symmetry_group,
    ),
    "s5": TargetGroup("s5", 10, 120, "symmetric group S5", reference=lambda: SymmetricGroup(5)),
}


def get_target(name: str) -> TargetGroup:
    try:
        return TARGETS[name]
    except KeyError as err:
        logger.error(f"Unknown target group {name!r}")
        raise UnknownTargetError(
            f"Unknown target {name!r}; available: {', '.join(TARGETS)}"
        ) from err


def filter_by_target(
    index: int,
    target: str | TargetGroup | Callable[[PermutationGroup], bool],
    tables: list[CosetTable] | None = None,
    workers: int | None = None,
    progress: bool | None = None,
) -> list[CosetTable]:
    """Classes of index-``index`` subgroups whose coset group matches the target.

    Raises:
        UnknownTargetError: If a target name is not registered.
    """
    if isinstance(target, str):
        target = get_target(target)
    matches = target.matches if isinstance(target, TargetGroup) else target
    if tables is None:
        tables = low_index_subgroups(CARTOGRAPHIC_GROUP, index, workers=workers, progress=progress)
    progress = show_progress() if progress is None else progress
    hits = [
        t
        for t in tqdm(tables, disable=not progress, desc=f"Targets at index {index}")
        if matches(coset_group(t))
    ]
    logger.info(f"{len(hits)} of {len(tables)} index-{index} classes match {target!r}")
    return hits
