"""JSON and JSON-lines readers and writers for geometries, dessins, coset tables and graphs."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Iterator

import pydantic
from loguru import logger

from contextual.capacity.graphs import SmallGraph
from contextual.cartography.low_index import CosetTable
from contextual.dessins.hypermap import Hypermap
from contextual.geometry.configurations import PointLineGeometry
from contextual.geometry.pentagrams import PentagramCensus, pentagram_geometry
from contextual.pauli.observable import PauliObservable


class FormatError(ValueError):
    """A file that does not hold the expected record"""


def write_json(path: str | Path, data: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(data, pydantic.BaseModel):
        text = data.model_dump_json(indent=2)
    else:
        text = json.dumps(data, indent=2)
    path.write_text(text + "\n")
    logger.info(f"Wrote {path}")
    return path


def read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as err:
        logger.error(f"{path} is not valid JSON: {err}")
        raise FormatError(f"{path} is not valid JSON") from err


def _require(data: Any, keys: Iterable[str], what: str) -> None:
    if not isinstance(data, dict) or any(key not in data for key in keys):
        raise FormatError(f"{what} record needs the keys {list(keys)}")


def geometry_to_dict(g: PointLineGeometry) -> dict[str, Any]:
    return {
        "points": g.labels(),
        "lines": [list(line) for line in g.lines],
        "signs": list(g.line_signs),
    }


def geometry_from_dict(data: dict[str, Any]) -> PointLineGeometry:
    """Reads {points, lines, signs}; the signs are checked against the line products."""
    _require(data, ("points", "lines"), "Geometry")
    points = [PauliObservable.parse(text) for text in data["points"]]
    g = PointLineGeometry.from_lines(points, data["lines"])
    if "signs" in data and list(data["signs"]) != list(g.line_signs):
        raise FormatError(f"Stored signs {data['signs']} differ from computed {g.line_signs}")
    return g


def hypermap_to_dict(m: Hypermap) -> dict[str, Any]:
    cycles = m.cycles()
    return {"n": m.n, "alpha": cycles["alpha"], "beta": cycles["beta"]}


def hypermap_from_dict(data: dict[str, Any]) -> Hypermap:
    _require(data, ("n", "alpha", "beta"), "Hypermap")
    return Hypermap.from_cycles(data["n"], data["alpha"], data["beta"])


def coset_table_from_dict(data: dict[str, Any]) -> CosetTable:
    """Reads {index, actions} with 1-based generator images."""
    _require(data, ("index", "actions"), "Coset table")
    actions = [tuple(image - 1 for image in action) for action in data["actions"]]
    if any(len(action) != data["index"] for action in actions):
        raise FormatError(f"Actions must have {data['index']} images each")
    return CosetTable.from_actions(actions)


def graph_from_dict(data: dict[str, Any]) -> SmallGraph:
    _require(data, ("n", "edges"), "Graph")
    labels = tuple(data["labels"]) if data.get("labels") is not None else None
    return SmallGraph(n=data["n"], edges=data["edges"], labels=labels, name=data.get("name", ""))


def write_pentagram_stream(path: str | Path, census: PentagramCensus) -> Path:
    """One geometry record per line, in census order."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        for pentagram in census.pentagrams:
            record = geometry_to_dict(pentagram_geometry(census.n, pentagram))
            f.write(json.dumps(record) + "\n")
    logger.info(f"Wrote {census.count} pentagrams to {path}")
    return path


def read_pentagram_stream(path: str | Path) -> Iterator[PointLineGeometry]:
    with open(path, "r") as f:
        for number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as err:
                raise FormatError(f"{path}:{number} is not valid JSON") from err
            yield geometry_from_dict(record)
