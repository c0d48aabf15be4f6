"""Exact independence, clique and chromatic numbers of small graphs."""
from __future__ import annotations

import networkx as nx
from loguru import logger

from contextual.capacity.graphs import SmallGraph, check_size, line_graph
from contextual.parameters.parameters import CAPS


def maximum_clique(g: SmallGraph) -> list[int]:
    """A maximum clique, by networkx's branch and bound with coloring bounds."""
    if g.n == 0:
        return []
    clique, _ = nx.max_weight_clique(g.to_networkx(), weight=None)
    return sorted(clique)


def maximum_independent_set(g: SmallGraph) -> list[int]:
    return maximum_clique(g.complement())


def independence_number(g: SmallGraph) -> tuple[int, list[int]]:
    """alpha(g) with a witness independent set."""
    witness = maximum_independent_set(g)
    return len(witness), witness


def clique_number(g: SmallGraph) -> int:
    return len(maximum_clique(g))


def greedy_coloring(g: SmallGraph) -> dict[int, int]:
    return nx.greedy_color(g.to_networkx(), strategy="largest_first")


def is_colorable(g: SmallGraph, k: int, seed: list[int] | None = None) -> dict[int, int] | None:
    """A proper k-coloring, if one exists.

    The vertices of ``seed`` (a clique) are given distinct colors first, the others are
    colored by backtracking in order of decreasing degree.
    """
    seed = seed or []
    if len(seed) > k:
        return None
    neighbors = [set() for _ in range(g.n)]
    for u, v in g.edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    colors = {vertex: color for color, vertex in enumerate(seed)}
    rest = sorted(
        (v for v in range(g.n) if v not in colors), key=lambda v: (-len(neighbors[v]), v)
    )

    def extend(position: int) -> bool:
        if position == len(rest):
            return True
        vertex = rest[position]
        taken = {colors[u] for u in neighbors[vertex] if u in colors}
        # new colors beyond the highest one used are interchangeable
        limit = min(k, max(colors.values(), default=-1) + 2)
        for color in range(limit):
            if color in taken:
                continue
            colors[vertex] = color
            if extend(position + 1):
                return True
            del colors[vertex]
        return False

    return dict(sorted(colors.items())) if extend(0) else None


def chromatic_number(g: SmallGraph) -> tuple[int, dict[int, int]]:
    """chi(g) with an optimal coloring, by iterative deepening from the clique number.

    Raises:
        GraphSizeError: If the graph has more vertices than the coloring cap.
    """
    check_size(g.n, CAPS["max_coloring_vertices"], "Coloring")
    if g.n == 0:
        return 0, {}
    clique = maximum_clique(g)
    best = greedy_coloring(g)
    upper = max(best.values()) + 1
    for k in range(len(clique), upper):
        coloring = is_colorable(g, k, clique)
        if coloring is not None:
            logger.debug(f"{g.name or 'graph'}: chromatic number {k}")
            return k, coloring
    return upper, dict(sorted(best.items()))


def clique_and_chromatic(g: SmallGraph) -> tuple[int, int]:
    return clique_number(g), chromatic_number(g)[0]


def edge_chromatic_number(g: SmallGraph) -> int:
    """Chromatic index, as the chromatic number of the line graph."""
    if not g.edges:
        return 0
    return chromatic_number(line_graph(g))[0]
