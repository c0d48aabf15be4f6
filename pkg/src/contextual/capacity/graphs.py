"""Small simple graphs: the Petersen family, cycles, complements and strong products."""
from __future__ import annotations

from itertools import combinations, product
from typing import Any, Iterable, Sequence

import networkx as nx
import numpy as np
import pydantic
from loguru import logger
from numpy.typing import NDArray

from contextual.geometry.configurations import PointLineGeometry, commutation_graph
from contextual.parameters.parameters import CAPS

Edge = tuple[int, int]


class CapacityError(ValueError):
    """An error related to graphs and their capacity bounds"""


class GraphSizeError(CapacityError):
    """Graph larger than the exact computations accept"""


def check_size(n: int, cap: int, what: str) -> None:
    if n > cap:
        logger.error(f"{what} with {n} vertices exceeds the cap of {cap}")
        raise GraphSizeError(f"{what} with {n} vertices exceeds the cap of {cap}")


class SmallGraph(pydantic.BaseModel):
    """Simple undirected graph on vertices 0..n-1.

    Attributes:
        n: Number of vertices.
        edges: Sorted pairs (u, v) with u < v.
        labels: Optional vertex names, e.g. the 2-subsets of the Kneser construction.
        name: Label used in reports.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    n: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None
    name: str = ""

    @pydantic.field_validator("edges", mode="before")
    @classmethod
    def edges_validator(cls, value: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
        edges = set()
        for u, v in value:
            if u == v:
                raise CapacityError(f"Loop at vertex {u}")
            edges.add((min(u, v), max(u, v)))
        return tuple(sorted(edges))

    @pydantic.model_validator(mode="after")
    def graph_validator(self) -> SmallGraph:
        check_size(self.n, CAPS["max_graph_vertices"], "Graph")
        if any(not 0 <= u < v < self.n for u, v in self.edges):
            raise CapacityError(f"Edge endpoints outside 0..{self.n - 1}")
        if self.labels is not None and len(self.labels) != self.n:
            raise CapacityError(f"{len(self.labels)} labels for {self.n} vertices")
        return self

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: str = "") -> SmallGraph:
        """Relabels the nodes 0..n-1 in sorted order, keeping their names as labels."""
        try:
            nodes = sorted(g.nodes())
        except TypeError:
            nodes = sorted(g.nodes(), key=str)
        index = {node: i for i, node in enumerate(nodes)}
        return cls(
            n=len(nodes),
            edges=[(index[u], index[v]) for u, v in g.edges()],
            labels=tuple(str(node) for node in nodes),
            name=name,
        )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def adjacency(self) -> NDArray[np.float64]:
        matrix = np.zeros((self.n, self.n))
        for u, v in self.edges:
            matrix[u, v] = matrix[v, u] = 1.0
        return matrix

    def degrees(self) -> list[int]:
        counts = [0] * self.n
        for u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return counts

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def complement(self, name: str = "") -> SmallGraph:
        present = set(self.edges)
        return SmallGraph(
            n=self.n,
            edges=[e for e in combinations(range(self.n), 2) if e not in present],
            labels=self.labels,
            name=name or (f"complement of {self.name}" if self.name else ""),
        )

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.name:
            data["name"] = self.name
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data


def cycle(n: int) -> SmallGraph:
    """The cycle C_n; C_5 is the pentagon."""
    if n < 3:
        raise CapacityError(f"A cycle needs at least 3 vertices, got {n}")
    return SmallGraph(n=n, edges=[(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete(n: int) -> SmallGraph:
    return SmallGraph(n=n, edges=list(combinations(range(n), 2)), name=f"K{n}")


def kneser(m: int, k: int) -> SmallGraph:
    """k-subsets of {1..m}, adjacent when disjoint."""
    subsets = list(combinations(range(1, m + 1), k))
    edges = [
        (i, j)
        for (i, a), (j, b) in combinations(enumerate(subsets), 2)
        if not set(a) & set(b)
    ]
    labels = tuple("".join(map(str, s)) for s in subsets)
    return SmallGraph(n=len(subsets), edges=edges, labels=labels, name=f"Kneser({m},{k})")


def petersen() -> SmallGraph:
    g = kneser(5, 2)
    return SmallGraph(n=g.n, edges=g.edges, labels=g.labels, name="Petersen")


def pentagram_graph() -> SmallGraph:
    """Complement of the Petersen graph: 2-subsets of {1..5} adjacent when they meet."""
    return petersen().complement(name="pentagram graph")


def strong_product(g: SmallGraph, h: SmallGraph) -> SmallGraph:
    """Pairs (u, v) adjacent when both coordinates are equal or adjacent and the pair differs.

    Raises:
        GraphSizeError: If the product has more vertices than the cap.
    """
    check_size(g.n * h.n, CAPS["max_graph_vertices"], "Strong product")
    product_graph = nx.strong_product(g.to_networkx(), h.to_networkx())
    index = {pair: pair[0] * h.n + pair[1] for pair in product(range(g.n), range(h.n))}
    name = f"{g.name} x {h.name}" if g.name and h.name else ""
    return SmallGraph(
        n=g.n * h.n,
        edges=[(index[a], index[b]) for a, b in product_graph.edges()],
        name=name,
    )


def strong_power(g: SmallGraph, k: int) -> SmallGraph:
    result = g
    for _ in range(k - 1):
        result = strong_product(result, g)
    return result


def line_graph(g: SmallGraph) -> SmallGraph:
    """Vertices are the edges of g, adjacent when they share an endpoint."""
    return SmallGraph.from_networkx(nx.line_graph(g.to_networkx()), name=f"L({g.name})")


def is_cubic(g: SmallGraph) -> bool:
    return g.n > 0 and set(g.degrees()) == {3}


def is_bridgeless(g: SmallGraph) -> bool:
    return not nx.has_bridges(g.to_networkx())


def is_planar(g: SmallGraph) -> bool:
    planar, _ = nx.check_planarity(g.to_networkx())
    return bool(planar)


def is_isomorphic(g: SmallGraph, h: SmallGraph) -> bool:
    return bool(nx.is_isomorphic(g.to_networkx(), h.to_networkx()))


def commutation_graph_of(g: PointLineGeometry) -> SmallGraph:
    """Commuting pairs among the points of a Pauli configuration."""
    graph = SmallGraph.from_networkx(commutation_graph(g.points), name="commutation graph")
    return SmallGraph(n=graph.n, edges=graph.edges, labels=tuple(g.labels()), name=graph.name)


def is_pentagram_commutation_graph(g: PointLineGeometry) -> bool:
    """Whether the points commute like the vertices of the pentagram graph are adjacent."""
    return is_isomorphic(commutation_graph_of(g), pentagram_graph())
