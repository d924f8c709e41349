"""
Side-component decomposition of K3,3-free projective-planar graphs.

A 2-connected non-planar K3,3-free graph is projective-planar iff it is a
K5 whose ten edges are replaced by strongly planar networks; the corner set
of that K5 is then unique.
"""
from __future__ import annotations

import logging
import random
from itertools import combinations
from typing import Mapping

import networkx as nx

from core.config import get_limit
from core.constants import (
    REJECT_K33,
    REJECT_NOT_2_CONNECTED,
    REJECT_NOT_PROJECTIVE_PLANAR,
    REJECT_PLANAR,
)
from core.exceptions import LabelCollisionError, PreconditionError

from .kuratowski import find_K5_subdivision
from .minors import has_K33_minor
from .planarity import is_planar, is_two_connected
from .structure import DecompositionResult, Graph, Network, SideDecomposition, pair

logger = logging.getLogger(__name__)


def side_decomposition(graph: Graph, corners, require_planar: bool = True) -> SideDecomposition | None:
    """
    The side networks induced by a corner 5-set, or None if the set does not
    induce one: every component of G minus the corners must attach to exactly
    two corners, every corner pair needs an edge or a component, and (unless
    ``require_planar`` is off) every augmented side must be planar.
    """
    corners = tuple(sorted(corners))
    corner_set = set(corners)
    g = graph.to_networkx()
    members: dict[tuple[int, int], set] = {pair(a, b): set() for a, b in combinations(corners, 2)}
    for comp in nx.connected_components(g.subgraph(set(range(graph.n)) - corner_set)):
        attached = {c for c in corners if any(graph.has_edge(c, v) for v in comp)}
        if len(attached) != 2:
            return None
        members[pair(*attached)].update(comp)

    components = {}
    for (a, b), inner in members.items():
        labels = inner | {a, b}
        edges = [e for e in graph.edges if e[0] in labels and e[1] in labels]
        if not edges:
            return None
        net = Network.from_edges((a, b), inner, edges)
        if require_planar and not is_planar(net.augmented()):
            return None
        components[(a, b)] = net
    return SideDecomposition(corners, components)


def decompose(graph: Graph) -> DecompositionResult:
    """
    Membership test for the class F with its side-component decomposition.
    """
    if not is_two_connected(graph):
        return DecompositionResult(graph, reason=REJECT_NOT_2_CONNECTED)
    if is_planar(graph):
        return DecompositionResult(graph, reason=REJECT_PLANAR)
    if has_K33_minor(graph):
        return DecompositionResult(graph, reason=REJECT_K33)

    tk5 = find_K5_subdivision(graph)
    found = side_decomposition(graph, tk5.corners)
    if found is not None:
        return DecompositionResult(graph, decomposition=found)

    if graph.n <= get_limit('CORNER_SEARCH_MAX_VERTICES'):
        for corners in combinations(range(graph.n), 5):
            found = side_decomposition(graph, corners)
            if found is not None:
                logger.warning(f"Corner set {corners} accepted after the first TK5 {tk5.corners} failed")
                return DecompositionResult(graph, decomposition=found)
    else:
        logger.info(f"Rejecting {graph.n}-vertex graph on the first TK5 found; corner search skipped")
    return DecompositionResult(graph, reason=REJECT_NOT_PROJECTIVE_PLANAR)


def corner_sets(graph: Graph) -> list[tuple[int, ...]]:
    """Every corner 5-set inducing a strongly planar side decomposition."""
    return [
        corners for corners in combinations(range(graph.n), 5)
        if side_decomposition(graph, corners) is not None
    ]


def compose_graph(corners, nets: Mapping[tuple[int, int], Network]) -> Graph:
    """
    Substitute a network for each edge of the K5 on the given corners.

    ``nets`` is keyed by corner pairs; a network's poles must be that pair in
    either order. Internal labels must be disjoint, and all labels together
    must be exactly 0..n-1.
    """
    corners = tuple(corners)
    if len(set(corners)) != 5:
        raise PreconditionError("compose_graph needs five distinct corners")
    expected = {pair(a, b) for a, b in combinations(corners, 2)}
    keyed = {pair(*key): net for key, net in nets.items()}
    if set(keyed) != expected:
        raise PreconditionError("compose_graph needs exactly one network per corner pair")

    used = set(corners)
    edges = set()
    for key, net in keyed.items():
        if set(net.poles) != set(key):
            raise PreconditionError(f"network poles {net.poles} do not match corner pair {key}")
        clash = used & net.internal
        if clash:
            raise LabelCollisionError(f"labels {sorted(clash)} are used twice")
        used |= net.internal
        edges |= net.edges
    n = len(used)
    if used != set(range(n)):
        raise PreconditionError(f"labels must be exactly 0..{n - 1}, got {sorted(used)}")
    return Graph(n, frozenset(edges))


def edge_bound_check(graph: Graph) -> bool:
    """m = 10 when n = 5, m <= 3n - 6 when n >= 6."""
    if graph.n == 5:
        return graph.edge_count == 10
    if graph.n >= 6:
        return graph.edge_count <= 3 * graph.n - 6
    return False


def _canonical(internal: int, edges) -> Network:
    return Network.from_edges((0, 1), range(2, 2 + internal), edges)


# Strongly planar networks in canonical labelling: poles 0 and 1, internal
# vertices 2, 3, ...
STRONGLY_PLANAR_NETWORKS = {
    'edge': _canonical(0, [(0, 1)]),
    'path': _canonical(1, [(0, 2), (2, 1)]),
    'triangle': _canonical(1, [(0, 2), (2, 1), (0, 1)]),
    'path3': _canonical(2, [(0, 2), (2, 3), (3, 1)]),
    'square': _canonical(2, [(0, 2), (2, 1), (0, 3), (3, 1)]),
    'k4-minus-edge': _canonical(2, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    'k4': _canonical(2, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    'k23': _canonical(3, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    'wheel': _canonical(3, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]),
}

# Networks whose augmented side is not planar, for negative tests.
K5_NETWORK = _canonical(3, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
K33_NETWORK = _canonical(4, [(0, 4), (0, 5), (2, 1), (2, 4), (2, 5), (3, 1), (3, 4), (3, 5)])


def random_member(rng: random.Random, max_vertices: int = 14):
    """
    A random graph of F built by substitution into K5.

    Returns (graph, corners, nets) with nets keyed by corner pair and poles
    in a random orientation.
    """
    if max_vertices < 5:
        raise PreconditionError("a member of F has at least five vertices")
    names = sorted(STRONGLY_PLANAR_NETWORKS)
    budget = max_vertices - 5
    chosen = []
    for _ in range(10):
        options = [name for name in names if len(STRONGLY_PLANAR_NETWORKS[name].internal) <= budget]
        name = rng.choice(options)
        budget -= len(STRONGLY_PLANAR_NETWORKS[name].internal)
        chosen.append(STRONGLY_PLANAR_NETWORKS[name])
    n = 5 + sum(len(net.internal) for net in chosen)
    labels = list(range(n))
    rng.shuffle(labels)
    corners = tuple(sorted(labels[:5]))
    free = iter(labels[5:])
    nets = {}
    for (a, b), net in zip(combinations(corners, 2), chosen):
        if rng.random() < 0.5:
            a, b = b, a
        nets[pair(a, b)] = net.placed(a, b, [next(free) for _ in net.internal])
    return compose_graph(corners, nets), corners, nets
