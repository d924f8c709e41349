"""
Connectivity and planarity decisions, and Kuratowski witnesses.
"""
import logging

import networkx as nx

from .structure import Graph

logger = logging.getLogger(__name__)

WITNESS_K5 = "K5"
WITNESS_K33 = "K33"


def is_two_connected(graph: Graph) -> bool:
    """
    2-connectivity with K2 counted as 2-connected.
    """
    if graph.n == 2:
        return graph.edge_count == 1
    if graph.n < 3:
        return False
    return nx.is_biconnected(graph.to_networkx())


def is_planar(graph: Graph) -> bool:
    if graph.n <= 4 or graph.edge_count < 9:
        return True
    planar, _ = nx.check_planarity(graph.to_networkx(), counterexample=False)
    return planar


def witness_kind(witness: nx.Graph) -> str:
    """Classify a Kuratowski subgraph by its branch vertices."""
    branch = [v for v, d in witness.degree if d > 2]
    return WITNESS_K5 if len(branch) == 5 else WITNESS_K33


def kuratowski_witness(g: nx.Graph):
    """
    A Kuratowski subgraph of a networkx graph as (kind, subgraph), or None
    when the graph is planar.
    """
    planar, witness = nx.check_planarity(g, counterexample=True)
    if planar:
        return None
    return witness_kind(witness), witness
