"""Shannon capacity sandwiches: alpha of strong powers below, theta above."""
from __future__ import annotations

import math
from itertools import product

import pydantic
from loguru import logger

from contextual.capacity.graphs import CapacityError, GraphSizeError, SmallGraph, strong_power
from contextual.capacity.invariants import (
    chromatic_number,
    clique_number,
    independence_number,
)
from contextual.capacity.theta import ThetaPreconditionError, lovasz_theta_edge_transitive
from contextual.parameters.parameters import CAPS, SEARCH_SETTINGS, TOLERANCES


class BoundsError(CapacityError):
    """Capacity bounds that contradict each other"""


class ProductBound(pydantic.BaseModel):
    """alpha of the k-th strong power, with an independent set attaining it."""

    k: int
    alpha: int
    witness: list[int]
    searched: bool

    @property
    def bound(self) -> float:
        return self.alpha ** (1 / self.k)


class SandwichCheck(pydantic.BaseModel):
    """omega(G) <= theta(complement of G) <= chi(G)."""

    omega: int
    theta_complement: float
    chi: int

    @property
    def holds(self) -> bool:
        eps = TOLERANCES["eigenvalue"]
        return self.omega - eps <= self.theta_complement <= self.chi + eps


class CapacityReport(pydantic.BaseModel):
    """Bounds on the Shannon capacity of one graph.

    Attributes:
        alpha: Independence number.
        omega: Clique number.
        chi: Chromatic number, None above the coloring cap.
        theta: Lovasz number, None when the closed form does not apply.
        shannon_lower: Best alpha(G^k)^(1/k) over the computed powers.
        shannon_upper: theta when known, otherwise the clique cover number.
        products: One bound per computed power.
        sandwich: omega <= theta(complement) <= chi, None without a closed-form theta of the
            complement or without chi.
    """

    name: str
    n: int
    alpha: int
    omega: int
    chi: int | None
    theta: float | None
    shannon_lower: float
    shannon_upper: float
    products: list[ProductBound]
    sandwich: SandwichCheck | None = None

    @pydantic.model_validator(mode="after")
    def sandwich_validator(self) -> CapacityReport:
        eps = TOLERANCES["eigenvalue"]
        if not self.alpha <= self.shannon_lower + eps <= self.shannon_upper + 2 * eps:
            logger.error(f"Capacity bounds of {self.name or 'graph'} contradict each other")
            raise BoundsError(
                f"Inconsistent bounds {self.alpha} <= {self.shannon_lower} <= {self.shannon_upper}"
            )
        if self.sandwich is not None and not self.sandwich.holds:
            logger.error(f"Lovasz sandwich fails for {self.name or 'graph'}")
            raise BoundsError(
                f"Expected {self.sandwich.omega} <= {self.sandwich.theta_complement} "
                f"<= {self.sandwich.chi}"
            )
        return self

    @property
    def closed(self) -> bool:
        """Whether the bounds meet, so the capacity is known exactly."""
        return abs(self.shannon_upper - self.shannon_lower) < TOLERANCES["eigenvalue"]


def _theta_or_none(g: SmallGraph) -> float | None:
    try:
        return lovasz_theta_edge_transitive(g)
    except (ThetaPreconditionError, GraphSizeError) as err:
        logger.info(f"No closed-form theta for {g.name or 'graph'}: {err}")
        return None


def _sandwich_or_none(g: SmallGraph, omega: int, chi: int | None) -> SandwichCheck | None:
    if chi is None:
        return None
    theta_complement = _theta_or_none(g.complement())
    if theta_complement is None:
        return None
    return SandwichCheck(omega=omega, theta_complement=theta_complement, chi=chi)


def product_bound(
    g: SmallGraph, k: int, alpha: tuple[int, list[int]], theta: float | None
) -> ProductBound:
    """alpha(G^k), exact.

    Powers of a maximum independent set give alpha(G)^k; when that already reaches
    floor(theta^k), no search is needed.
    """
    size, witness = alpha
    if k == 1:
        return ProductBound(k=1, alpha=size, witness=witness, searched=False)
    lower = size**k
    if theta is not None and lower == math.floor(theta**k + TOLERANCES["eigenvalue"]):
        indices = sorted(
            sum(v * g.n ** (k - 1 - position) for position, v in enumerate(vertices))
            for vertices in product(witness, repeat=k)
        )
        return ProductBound(k=k, alpha=lower, witness=indices, searched=False)
    power_alpha, power_witness = independence_number(strong_power(g, k))
    return ProductBound(k=k, alpha=power_alpha, witness=power_witness, searched=True)


def capacity_report(g: SmallGraph, max_k: int | None = None) -> CapacityReport:
    """alpha <= Theta <= theta with the product lower bound up to the k-th strong power.

    Raises:
        GraphSizeError: If a strong power exceeds the graph size cap.
    """
    max_k = SEARCH_SETTINGS["search"]["shannon_max_power"] if max_k is None else max_k
    alpha = independence_number(g)
    theta = _theta_or_none(g)
    products = [product_bound(g, k, alpha, theta) for k in range(1, max_k + 1)]
    chi = chromatic_number(g)[0] if g.n <= CAPS["max_coloring_vertices"] else None
    omega = clique_number(g)
    if theta is not None:
        upper = theta
    elif g.n <= CAPS["max_coloring_vertices"]:
        upper = float(chromatic_number(g.complement())[0])
    else:
        upper = float(g.n)
    report = CapacityReport(
        name=g.name,
        n=g.n,
        alpha=alpha[0],
        omega=omega,
        chi=chi,
        theta=theta,
        shannon_lower=max(p.bound for p in products),
        shannon_upper=upper,
        products=products,
        sandwich=_sandwich_or_none(g, omega, chi),
    )
    logger.info(
        f"{g.name or 'graph'}: alpha {report.alpha}, theta {theta}, "
        f"{report.shannon_lower:.6g} <= Theta <= {report.shannon_upper:.6g}"
    )
    return report


def lovasz_sandwich_check(g: SmallGraph) -> SandwichCheck:
    """Raises ThetaPreconditionError when the complement has no closed-form theta."""
    return SandwichCheck(
        omega=clique_number(g),
        theta_complement=lovasz_theta_edge_transitive(g.complement()),
        chi=chromatic_number(g)[0],
    )
