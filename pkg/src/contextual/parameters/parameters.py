import json
import os
from pathlib import Path

from loguru import logger


def load_parameters_from_json(filename: Path) -> dict:
    with open(filename, "r") as f:
        return json.load(f)


p = Path(__file__).resolve().parent

SEARCH_SETTINGS = load_parameters_from_json(p / "search_settings.json")
REFERENCE_DATA = load_parameters_from_json(p / "reference_data.json")
CLAIMS = load_parameters_from_json(p / "claims.json")

CAPS = SEARCH_SETTINGS["caps"]
TOLERANCES = SEARCH_SETTINGS["tolerances"]
ROOT_FINDING = SEARCH_SETTINGS["root_finding"]

WORKERS_ENV_VARIABLE = "CONTEXTUAL_WORKERS"


def default_workers() -> int:
    """Worker count for the partitioned searches.

    The environment variable wins over the JSON setting; invalid values fall back to it.
    """
    configured = int(SEARCH_SETTINGS["search"]["workers"])
    value = os.environ.get(WORKERS_ENV_VARIABLE)
    if value is None:
        return configured
    try:
        workers = int(value)
    except ValueError:
        logger.error(f"Ignoring {WORKERS_ENV_VARIABLE}={value!r}: not an integer")
        return configured
    return max(1, workers)


def show_progress() -> bool:
    return bool(SEARCH_SETTINGS["search"]["progress"])
