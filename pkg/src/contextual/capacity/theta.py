"""Lovasz theta of regular edge-transitive graphs from the adjacency spectrum."""
from __future__ import annotations

import networkx as nx
from loguru import logger

from contextual.capacity.graphs import CapacityError, SmallGraph, check_size
from contextual.parameters.parameters import CAPS
from contextual.pauli.dense import hermitian_eigenvalues


class ThetaPreconditionError(CapacityError):
    """The closed-form theta needs a regular edge-transitive graph"""


def automorphisms(g: SmallGraph) -> list[tuple[int, ...]]:
    """All automorphisms as image tuples, found by networkx's VF2 matcher.

    Raises:
        GraphSizeError: If the graph has more vertices than the automorphism cap.
    """
    check_size(g.n, CAPS["max_automorphism_vertices"], "Automorphism search")
    graph = g.to_networkx()
    matcher = nx.algorithms.isomorphism.GraphMatcher(graph, graph)
    return sorted(tuple(m[v] for v in range(g.n)) for m in matcher.isomorphisms_iter())


def is_edge_transitive(g: SmallGraph) -> bool:
    """The automorphism group has a single orbit on the edges."""
    if not g.edges:
        return True
    first = g.edges[0]
    orbit = {frozenset((a[first[0]], a[first[1]])) for a in automorphisms(g)}
    return len(orbit) == len(g.edges)


def lovasz_theta_edge_transitive(g: SmallGraph) -> float:
    """theta(g) = -n lambda_min / (lambda_max - lambda_min).

    Raises:
        ThetaPreconditionError: If the graph is not regular or not edge-transitive.
        GraphSizeError: If the graph is too large to check edge-transitivity.
    """
    if not g.edges:
        return float(g.n)
    if not g.is_regular():
        logger.error(f"{g.name or 'graph'} has degrees {sorted(set(g.degrees()))}")
        raise ThetaPreconditionError(f"{g.name or 'graph'} is not regular")
    if not is_edge_transitive(g):
        logger.error(f"{g.name or 'graph'} is not edge-transitive")
        raise ThetaPreconditionError(f"{g.name or 'graph'} is not edge-transitive")
    spectrum = hermitian_eigenvalues(g.adjacency())
    smallest, largest = spectrum[0], spectrum[-1]
    theta = -g.n * smallest / (largest - smallest)
    logger.debug(f"theta({g.name or 'graph'}) = {theta:.12g}")
    return theta
