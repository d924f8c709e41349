"""
K3,3 minor detection.

For the cubic pattern K3,3 a minor exists iff a subdivision exists, so both
routes below answer the same question.
"""
from __future__ import annotations

import logging
from itertools import combinations

import networkx as nx

from core.config import get_limit
from core.exceptions import PreconditionError, SizeLimitError

from .kuratowski import find_shortcut, find_three_corner_vertex, k5_from_witness, route_disjoint_paths
from .planarity import WITNESS_K33, kuratowski_witness
from .structure import Graph

logger = logging.getLogger(__name__)

METHOD_STRUCTURAL = "structural"
METHOD_SEARCH = "search"


def suppress_series(g: nx.Graph) -> nx.Graph:
    """
    Repeatedly replace a degree-2 vertex by an edge between its neighbours.
    Parallel edges collapse, as nx.Graph is simple.
    """
    g = g.copy()
    changed = True
    while changed and g.number_of_nodes() > 3:
        changed = False
        for v in list(g.nodes):
            if v in g and g.degree(v) == 2 and g.number_of_nodes() > 3:
                u, w = list(g.neighbors(v))
                g.remove_node(v)
                g.add_edge(u, w)
                changed = True
    return g


def tk5_witnesses(g: nx.Graph, witness: nx.Graph):
    """
    (tk5, shortcut, three_corner) for a TK5 Kuratowski witness of g, in the
    labels of ``Graph.from_networkx(g)``. Either witness forces a K3,3.
    """
    order = {v: i for i, v in enumerate(sorted(g.nodes))}
    block = Graph.from_networkx(g)
    tk5 = k5_from_witness(nx.relabel_nodes(witness, order))
    shortcut = find_shortcut(block, tk5)
    three_corner = find_three_corner_vertex(block, tk5) if shortcut is None else None
    return tk5, shortcut, three_corner


def _block_has_k33(g: nx.Graph) -> bool:
    g = suppress_series(g)
    if g.number_of_nodes() < 6:
        return False
    found = kuratowski_witness(g)
    if found is None:
        return False
    kind, witness = found
    if kind == WITNESS_K33:
        return True

    tk5, shortcut, three_corner = tk5_witnesses(g, witness)
    if shortcut is not None or three_corner is not None:
        logger.debug(f"TK5 on {tk5.corners}: shortcut {shortcut}, 3-corner vertex {three_corner}")
        return True

    corners = {v for v, d in witness.degree if d == 4}
    groups: dict[tuple, set] = {}
    for comp in nx.connected_components(g.subgraph(set(g.nodes) - corners)):
        attached = sorted(c for c in corners if any(g.has_edge(c, v) for v in comp))
        if len(attached) >= 3:
            logger.warning(f"Component attached to corners {attached} but no shortcut or 3-corner vertex found")
            return True
        groups.setdefault(tuple(attached), set()).update(comp)

    # what remains is a 2-sum of K5 with the augmented sides; a K3,3 minor
    # lies in one augmented side
    for key, comp in groups.items():
        if len(key) != 2:
            continue
        a, b = key
        side = g.subgraph(comp | {a, b}).copy()
        side.add_edge(a, b)
        if _block_has_k33(side):
            return True
    return False


def find_K33_subdivision(graph: Graph):
    """
    Exhaustive search for a K3,3 subdivision.

    Returns ((left, right), paths) with the nine branch paths, or None.
    Refuses graphs above K33LAB_MINOR_SEARCH_MAX_VERTICES.
    """
    limit = get_limit('MINOR_SEARCH_MAX_VERTICES')
    if graph.n > limit:
        raise SizeLimitError(f"K3,3 branch search refuses graphs with more than {limit} vertices (got {graph.n})")
    candidates = [v for v in range(graph.n) if graph.degree(v) >= 3]
    g = graph.to_networkx()
    for six in combinations(candidates, 6):
        first, rest = six[0], six[1:]
        # fixing the first vertex on the left side counts each split once
        for others in combinations(rest, 2):
            left = (first,) + others
            right = tuple(v for v in rest if v not in others)
            pairs = [(a, b) for a in left for b in right]
            paths = route_disjoint_paths(g, pairs, six)
            if paths is not None:
                return (left, right), paths
    return None


def has_K33_minor(graph: Graph, method: str = METHOD_STRUCTURAL) -> bool:
    """
    Whether the graph has a K3,3 minor.

    The structural method works block by block: series reduction, the
    Kuratowski witness of the planarity test, then recursion into the
    augmented sides of a TK5. ``method="search"`` runs the exhaustive
    branch search instead.
    """
    if graph.n < 6 or graph.edge_count < 9:
        return False
    if method == METHOD_SEARCH:
        return find_K33_subdivision(graph) is not None
    if method != METHOD_STRUCTURAL:
        raise PreconditionError(f"unknown minor method {method!r}")
    g = graph.to_networkx()
    for block in nx.biconnected_components(g):
        if len(block) >= 6 and _block_has_k33(g.subgraph(block)):
            return True
    return False
