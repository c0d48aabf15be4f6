"""Dessins d'enfants as pairs of permutations acting on half-edges."""
from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

import pydantic
from loguru import logger
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from contextual.dessins import permutations as perm
from contextual.dessins.permutations import HypermapError, Permutation
from contextual.parameters.parameters import REFERENCE_DATA

if TYPE_CHECKING:
    from contextual.cartography.low_index import CosetTable


class DisconnectedHypermapError(HypermapError):
    """The permutation group does not act transitively on the half-edges"""


class IncompleteCosetTableError(HypermapError):
    """A coset table with undefined entries cannot define an action"""


class Passport(pydantic.BaseModel):
    """Cycle types of alpha, beta and gamma, each sorted in descending order."""

    model_config = pydantic.ConfigDict(frozen=True)

    lambda0: tuple[int, ...]
    lambda1: tuple[int, ...]
    lambda_inf: tuple[int, ...]

    @pydantic.model_validator(mode="after")
    def partitions_validator(self) -> Passport:
        sizes = {sum(self.lambda0), sum(self.lambda1), sum(self.lambda_inf)}
        if len(sizes) != 1:
            raise HypermapError(f"Partitions of different integers: {self}")
        return self

    @classmethod
    def from_lists(cls, parts: Sequence[Sequence[int]]) -> Passport:
        lambda0, lambda1, lambda_inf = (tuple(sorted(p, reverse=True)) for p in parts)
        return cls(lambda0=lambda0, lambda1=lambda1, lambda_inf=lambda_inf)

    def as_lists(self) -> list[list[int]]:
        return [list(self.lambda0), list(self.lambda1), list(self.lambda_inf)]


class Hypermap(pydantic.BaseModel):
    """n half-edges with alpha (around black vertices) and beta (around white vertices).

    gamma = (alpha beta)^-1 goes around the faces, so that alpha beta gamma = 1. It is derived
    on demand and never stored.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    n: int
    alpha: Permutation
    beta: Permutation

    @pydantic.model_validator(mode="after")
    def permutations_validator(self) -> Hypermap:
        if self.n < 1:
            raise HypermapError(f"A hypermap needs at least one half-edge, {self.n=}")
        perm.validate(self.alpha, self.n)
        perm.validate(self.beta, self.n)
        return self

    @classmethod
    def from_cycles(
        cls, n: int, alpha: Sequence[Sequence[int]], beta: Sequence[Sequence[int]]
    ) -> Hypermap:
        """Builds the hypermap from 1-based cycle notation."""
        return cls(n=n, alpha=perm.from_cycles(n, alpha), beta=perm.from_cycles(n, beta))

    @property
    def gamma(self) -> Permutation:
        return perm.inverse(perm.compose(self.alpha, self.beta))

    @property
    def black(self) -> int:
        return len(perm.to_cycles(self.alpha))

    @property
    def white(self) -> int:
        return len(perm.to_cycles(self.beta))

    @property
    def faces(self) -> int:
        return len(perm.to_cycles(self.gamma))

    @property
    def is_map(self) -> bool:
        """Every white vertex has degree at most two."""
        return perm.is_involution(self.beta)

    def cycles(self) -> dict[str, list[list[int]]]:
        return {
            "alpha": perm.to_cycles(self.alpha),
            "beta": perm.to_cycles(self.beta),
            "gamma": perm.to_cycles(self.gamma),
        }

    def relabel(self, relabeling: Permutation) -> Hypermap:
        """Simultaneous conjugation of alpha and beta."""
        perm.validate(relabeling, self.n)
        return Hypermap(
            n=self.n,
            alpha=perm.conjugate(self.alpha, relabeling),
            beta=perm.conjugate(self.beta, relabeling),
        )


def is_connected(m: Hypermap) -> bool:
    return len(perm.orbit(0, (m.alpha, m.beta))) == m.n


def _require_connected(m: Hypermap) -> None:
    if not is_connected(m):
        logger.error(f"Disconnected hypermap {m.cycles()}")
        raise DisconnectedHypermapError("The hypermap is not connected")


def genus(m: Hypermap) -> int:
    """g from the Euler characteristic 2 - 2g = B + W + F - n.

    Raises:
        DisconnectedHypermapError: If the hypermap is not connected.
        HypermapError: If the Euler characteristic does not give a nonnegative integer.
    """
    _require_connected(m)
    twice_genus = 2 - m.black - m.white - m.faces + m.n
    if twice_genus % 2 or twice_genus < 0:
        raise HypermapError(f"Inconsistent Euler characteristic for {m.cycles()}")
    return twice_genus // 2


def passport(m: Hypermap) -> Passport:
    _require_connected(m)
    return Passport(
        lambda0=perm.cycle_type(m.alpha),
        lambda1=perm.cycle_type(m.beta),
        lambda_inf=perm.cycle_type(m.gamma),
    )


def map_euler_genus(m: Hypermap) -> int:
    """Genus from S - A + F = 2 - 2g, reading a map as an ordinary graph embedding.

    Vertices are the black vertices plus a terminal vertex for each free half-edge (fixed
    point of beta); edges are the cycles of beta.

    Raises:
        HypermapError: If beta is not an involution.
    """
    if not m.is_map:
        raise HypermapError("Only maps (beta an involution) have an ordinary-map genus")
    _require_connected(m)
    free_half_edges = sum(1 for i in range(m.n) if m.beta[i] == i)
    vertices = m.black + free_half_edges
    return (2 - vertices + m.white - m.faces) // 2


def monodromy_group(m: Hypermap) -> PermutationGroup:
    """The permutation group generated by alpha and beta."""
    return PermutationGroup([SympyPermutation(list(m.alpha)), SympyPermutation(list(m.beta))])


def from_coset_action(t: CosetTable) -> Hypermap:
    """alpha and beta are the actions of the two generators on the cosets.

    Raises:
        IncompleteCosetTableError: If some entry of the table is undefined.
    """
    if not t.is_complete():
        logger.error(f"Coset table with {t.n} cosets has undefined entries")
        raise IncompleteCosetTableError("Only complete coset tables define an action")
    return Hypermap(n=t.n, alpha=t.generator_action(0), beta=t.generator_action(1))


def figure(name: str) -> Hypermap:
    """A figure dessin by its name in the parameter file.

    Raises:
        HypermapError: If no dessin has that name.
    """
    if name not in REFERENCE_DATA["dessins"]:
        logger.error(f"Unknown dessin {name!r}")
        available = ", ".join(REFERENCE_DATA["dessins"])
        raise HypermapError(f"Unknown dessin {name!r}; available: {available}")
    data = REFERENCE_DATA["dessins"][name]
    return Hypermap.from_cycles(data["n"], data["alpha"], data["beta"])


def fig1() -> Hypermap:
    """The genus-0 index-7 dessin whose half-edges are labeled by the Fano plane points."""
    return figure("fig1")


def fig2() -> Hypermap:
    """The Bell dessin with monodromy group D4."""
    return figure("fig2")


def fig3b() -> Hypermap:
    """The index-9 dessin stabilizing the Mermin square lines."""
    return figure("fig3b")
