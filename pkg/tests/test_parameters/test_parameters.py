import pytest

from contextual.parameters import parameters
from contextual.parameters.parameters import CAPS, CLAIMS, REFERENCE_DATA, default_workers
from contextual_cli.claims import ReproductionReport


def test_workers_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(parameters.WORKERS_ENV_VARIABLE, raising=False)
    assert default_workers() == parameters.SEARCH_SETTINGS["search"]["workers"]
    monkeypatch.setenv(parameters.WORKERS_ENV_VARIABLE, "4")
    assert default_workers() == 4
    monkeypatch.setenv(parameters.WORKERS_ENV_VARIABLE, "0")
    assert default_workers() == 1
    monkeypatch.setenv(parameters.WORKERS_ENV_VARIABLE, "many")
    assert default_workers() == parameters.SEARCH_SETTINGS["search"]["workers"]


def test_claim_records() -> None:
    for record in CLAIMS.values():
        assert {"description", "target", "tolerance", "asserted"} <= set(record)
        assert record.get("relation", "==") in ("==", ">=")
    assert not CLAIMS["stabilized-pentagram"]["asserted"]


def test_reference_data() -> None:
    assert set(REFERENCE_DATA["dessins"]) == {"fig1", "fig2", "fig3b"}
    assert set(REFERENCE_DATA["belyi_maps"]) == {"fano", "klein"}
    assert CAPS["max_index"] == 12


def test_report_schema() -> None:
    schema = ReproductionReport.model_json_schema()
    assert "results" in schema["properties"]
