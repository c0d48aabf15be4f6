import pytest

from contextual_cli.claims import (
    ClaimResult,
    ReproductionReport,
    UnknownClaimError,
    claim,
    failed,
    reported,
    timed,
)


@pytest.mark.parametrize(
    "target, computed, tolerance, relation, expected",
    [
        (90, 90, 0.0, "==", True),
        (90, 91, 0.0, "==", False),
        (2.5, 2.5 + 1e-12, 1e-9, "==", True),
        ([0, 0, 8, 8], [0.0, 1e-13, 8.0, 8.0], 1e-9, "==", True),
        ([0, 0, 8, 8], [0, 8, 8], 1e-9, "==", False),
        (2.236, 2.3, 1e-9, ">=", True),
        (2.236, 2.2, 1e-9, ">=", False),
        (False, False, 0.0, "==", True),
        (False, 0, 0.0, "==", False),
    ],
)
def test_match(
    target: object, computed: object, tolerance: float, relation: str, expected: bool
) -> None:
    result = ClaimResult(
        claim="c", target=target, computed=computed, tolerance=tolerance, relation=relation
    )
    assert result.match is expected


def test_registered_claim() -> None:
    result = claim("bell-census-2", 90, seconds=0.5)
    assert result.match
    assert result.asserted
    assert result.target == 90
    assert not claim("theta-petersen", 3.9).match
    assert claim("shannon-pentagram", 2.3).match


def test_unregistered_claim() -> None:
    with pytest.raises(UnknownClaimError):
        claim("bell-census-9", 0)


def test_reported_and_failed() -> None:
    assert not reported("anything", 3).asserted
    result = failed("lowindex-9", ValueError("boom"))
    assert result.target == 1551
    assert result.computed is None
    assert not result.match
    assert result.note == "ValueError: boom"


def test_report() -> None:
    report = ReproductionReport()
    assert report.ok
    assert report.to_string() == "No claims were checked."
    report.extend([claim("gq22-lines", 15), reported("extra", 1)])
    assert report.ok
    report.extend([claim("fano-heptads", 134)])
    assert not report.ok
    assert report.mismatches == ["fano-heptads"]
    table = report.table()
    assert list(table["match"]) == ["yes", "-", "no"]
    assert "fano-heptads" in report.to_string()


def test_timed() -> None:
    value, seconds = timed(lambda: 7)
    assert value == 7
    assert seconds >= 0
