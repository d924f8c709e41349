"""
K5 subdivisions and the two witnesses that force a K3,3 subdivision.

A shortcut of a TK5 is a path from an inner vertex of one side to a vertex
of the subdivision not on that side, with every other vertex and edge outside
the subdivision. A 3-corner vertex is a vertex outside the subdivision with
internally disjoint paths, avoiding the subdivision, to three corners.
"""
from __future__ import annotations

import logging
from collections import deque
from itertools import combinations

import networkx as nx

from core.config import get_limit
from core.exceptions import SizeLimitError

from .planarity import WITNESS_K5, kuratowski_witness
from .structure import Graph, K5Subdivision, pair

logger = logging.getLogger(__name__)


def _trace_sides(witness: nx.Graph, corners) -> dict:
    """Follow the degree-2 chains of a TK5 witness from corner to corner."""
    corner_set = set(corners)
    sides = {}
    for a in corners:
        for start in witness.neighbors(a):
            path = [a, start]
            while path[-1] not in corner_set:
                prev, cur = path[-2], path[-1]
                path.append(next(v for v in witness.neighbors(cur) if v != prev))
            b = path[-1]
            if a < b:
                sides[(a, b)] = tuple(path)
    return sides


def k5_from_witness(witness: nx.Graph) -> K5Subdivision:
    corners = sorted(v for v, d in witness.degree if d == 4)
    return K5Subdivision(tuple(corners), _trace_sides(witness, corners))


def route_disjoint_paths(g: nx.Graph, pairs, branch) -> list | None:
    """
    Internally disjoint paths joining each of the given vertex pairs, avoiding
    every branch vertex except the path's own ends. Exhaustive backtracking.
    """
    branch = set(branch)

    def extend(index, used, found):
        if index == len(pairs):
            return found
        s, t = pairs[index]
        blocked = (branch | used) - {s, t}
        view = nx.restricted_view(g, blocked, [])
        for path in nx.all_simple_paths(view, s, t):
            result = extend(index + 1, used | set(path[1:-1]), found + [tuple(path)])
            if result is not None:
                return result
        return None

    return extend(0, frozenset(), [])


def _search_k5(graph: Graph) -> K5Subdivision | None:
    limit = get_limit('K5_SEARCH_MAX_VERTICES')
    if graph.n > limit:
        raise SizeLimitError(f"TK5 search refuses graphs with more than {limit} vertices (got {graph.n})")
    candidates = [v for v in range(graph.n) if graph.degree(v) >= 4]
    subsets = sorted(
        combinations(candidates, 5),
        key=lambda s: (-min(graph.degree(v) for v in s), s),
    )
    g = graph.to_networkx()
    for corners in subsets:
        pairs = [pair(a, b) for a, b in combinations(corners, 2)]
        paths = route_disjoint_paths(g, pairs, corners)
        if paths is not None:
            return K5Subdivision(corners, dict(zip(pairs, paths)))
    return None


def find_K5_subdivision(graph: Graph) -> K5Subdivision | None:
    """
    Some TK5 of the graph, or None.

    The Kuratowski witness of the planarity test is used when it is a TK5;
    otherwise corner 5-subsets are searched by descending minimum degree.
    """
    found = kuratowski_witness(graph.to_networkx())
    if found is None:
        return None
    kind, witness = found
    if kind == WITNESS_K5:
        return k5_from_witness(witness)
    logger.debug(f"Kuratowski witness is a TK3,3; searching corner subsets of a {graph.n}-vertex graph")
    return _search_k5(graph)


def find_shortcut(graph: Graph, tk5: K5Subdivision) -> tuple[int, ...] | None:
    """A shortcut of tk5 as a vertex path, or None."""
    on_tk5 = tk5.vertices
    for side in sorted(tk5.sides):
        for start in tk5.inner_vertices(side):
            parents = {start: None}
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in sorted(graph.neighbors(u)):
                    if w in parents:
                        continue
                    if w in on_tk5:
                        # the side's own vertices, corners included, never end a shortcut
                        if tk5.on_side(w, side):
                            continue
                        path = [w, u]
                        while parents[path[-1]] is not None:
                            path.append(parents[path[-1]])
                        return tuple(reversed(path))
                    parents[w] = u
                    queue.append(w)
    return None


def find_three_corner_vertex(graph: Graph, tk5: K5Subdivision) -> int | None:
    """A 3-corner vertex of tk5, or None."""
    on_tk5 = tk5.vertices
    outside = [v for v in range(graph.n) if v not in on_tk5]
    if not outside:
        return None
    corners = set(tk5.corners)
    g = nx.Graph()
    g.add_nodes_from(outside)
    g.add_nodes_from(corners)
    for u, v in graph.edges:
        if (u in corners and v in corners) or (u in on_tk5 and u not in corners) or (v in on_tk5 and v not in corners):
            continue
        g.add_edge(u, v)
    sink = ('sink',)
    g.add_edges_from((c, sink) for c in corners)
    for u in outside:
        if nx.algorithms.connectivity.local_node_connectivity(g, u, sink) >= 3:
            return u
    return None
