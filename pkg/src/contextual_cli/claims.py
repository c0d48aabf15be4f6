"""Claims with published targets, their computed values and the aggregated report."""
from __future__ import annotations

import math
import time
from typing import Any, Callable

import pandas as pd
import pydantic
from loguru import logger

from contextual.parameters.parameters import CLAIMS


class UnknownClaimError(ValueError):
    """No claim with the requested id"""


def _close(target: Any, computed: Any, tolerance: float, relation: str) -> bool:
    if isinstance(target, (list, tuple)):
        if not isinstance(computed, (list, tuple)) or len(target) != len(computed):
            return False
        return all(_close(t, c, tolerance, relation) for t, c in zip(target, computed))
    if isinstance(target, bool) or isinstance(computed, bool):
        return target is computed
    if relation == ">=":
        return computed >= target - tolerance
    if tolerance == 0:
        return bool(target == computed)
    return math.isclose(computed, target, rel_tol=0.0, abs_tol=tolerance)


class ClaimResult(pydantic.BaseModel):
    """One reproduced value next to its published target.

    ``asserted`` claims decide the exit status; the others are only reported.
    """

    claim: str
    target: Any
    computed: Any
    tolerance: float = 0.0
    relation: str = "=="
    asserted: bool = True
    match: bool = False
    seconds: float = 0.0
    note: str = ""

    @pydantic.model_validator(mode="after")
    def match_validator(self) -> ClaimResult:
        self.match = self.computed is not None and _close(
            self.target, self.computed, self.tolerance, self.relation
        )
        return self


def claim(claim_id: str, computed: Any, seconds: float = 0.0, note: str = "") -> ClaimResult:
    """Compares a computed value with the registered claim.

    Raises:
        UnknownClaimError: If no claim has that id.
    """
    if claim_id not in CLAIMS:
        logger.error(f"Unknown claim {claim_id!r}")
        raise UnknownClaimError(f"Unknown claim {claim_id!r}")
    data = CLAIMS[claim_id]
    return ClaimResult(
        claim=claim_id,
        target=data["target"],
        computed=computed,
        tolerance=data["tolerance"],
        relation=data.get("relation", "=="),
        asserted=data["asserted"],
        seconds=seconds,
        note=note,
    )


def reported(claim_id: str, computed: Any, seconds: float = 0.0, note: str = "") -> ClaimResult:
    """A computed value without a published target; never fails the run."""
    return ClaimResult(
        claim=claim_id,
        target=None,
        computed=computed,
        asserted=False,
        seconds=seconds,
        note=note,
    )


def failed(claim_id: str, err: Exception, seconds: float = 0.0) -> ClaimResult:
    target = CLAIMS.get(claim_id, {}).get("target")
    return ClaimResult(
        claim=claim_id,
        target=target,
        computed=None,
        asserted=True,
        seconds=seconds,
        note=f"{type(err).__name__}: {err}",
    )


def timed(function: Callable[[], Any]) -> tuple[Any, float]:
    start = time.perf_counter()
    value = function()
    return value, time.perf_counter() - start


class ReproductionReport(pydantic.BaseModel):
    """All claims of one run, in execution order."""

    results: list[ClaimResult] = []

    @property
    def ok(self) -> bool:
        return all(result.match for result in self.results if result.asserted)

    @property
    def mismatches(self) -> list[str]:
        return [r.claim for r in self.results if r.asserted and not r.match]

    def extend(self, results: list[ClaimResult]) -> None:
        self.results.extend(results)

    def table(self) -> pd.DataFrame:
        rows = [
            {
                "claim": r.claim,
                "target": r.target,
                "computed": r.computed,
                "match": "yes" if r.match else ("no" if r.asserted else "-"),
                "asserted": r.asserted,
                "seconds": round(r.seconds, 3),
                "note": r.note,
            }
            for r in self.results
        ]
        columns = ["claim", "target", "computed", "match", "asserted", "seconds", "note"]
        return pd.DataFrame(rows, columns=columns)

    def to_string(self) -> str:
        if not self.results:
            return "No claims were checked."
        return self.table().to_string(index=False)
