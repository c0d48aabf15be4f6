"""Graphviz DOT text for the figures: incidence structures, dessins and graphs."""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

from loguru import logger

from contextual.capacity.graphs import SmallGraph
from contextual.dessins.hypermap import Hypermap
from contextual.geometry.configurations import PointLineGeometry


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _document(kind: str, name: str, body: Sequence[str]) -> str:
    return "\n".join([f"{kind} {_quote(name)} {{", *(f"  {line}" for line in body), "}", ""])


def geometry_dot(g: PointLineGeometry, name: str = "geometry") -> str:
    """Points and lines as a bipartite incidence graph; negative lines are drawn bold red."""
    labels = g.labels()
    body = ["node [fontname=monospace];"]
    body += [f"p{i} [label={_quote(label)}, shape=ellipse];" for i, label in enumerate(labels)]
    for j, (line, sign) in enumerate(zip(g.lines, g.line_signs)):
        style = ", color=red, style=bold" if sign < 0 else ""
        body.append(f"l{j} [label={_quote('-' if sign < 0 else '+')}, shape=box{style}];")
        body += [f"l{j} -- p{i}{' [color=red]' if sign < 0 else ''};" for i in line]
    return _document("graph", name, body)


def dessin_dot(m: Hypermap, name: str = "dessin") -> str:
    """Black vertices (cycles of alpha) joined to white ones (cycles of beta) by half-edges."""
    cycles = m.cycles()
    black = {i: b for b, cycle in enumerate(cycles["alpha"]) for i in cycle}
    white = {i: w for w, cycle in enumerate(cycles["beta"]) for i in cycle}
    body = [
        f'b{b} [shape=circle, style=filled, fillcolor=black, label=""];' for b in range(m.black)
    ]
    body += [f'w{w} [shape=circle, label=""];' for w in range(m.white)]
    body += [f"b{black[i]} -- w{white[i]} [label={i}];" for i in range(1, m.n + 1)]
    return _document("graph", name, body)


def graph_dot(g: SmallGraph, name: str | None = None) -> str:
    labels = g.labels or tuple(str(v) for v in range(g.n))
    body = [f"v{v} [label={_quote(label)}];" for v, label in enumerate(labels)]
    body += [f"v{u} -- v{v};" for u, v in g.edges]
    return _document("graph", name or g.name or "graph", body)


def write_dot(path: str | Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info(f"Wrote {path}")
    return path
