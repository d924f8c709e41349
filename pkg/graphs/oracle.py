"""
Exhaustive classification of labelled graphs.

Three strategies count the labelled members of a class on n vertices by
edge count:

- ``subsets`` walks every edge subset, split into work units by
  (edge count, lowest edge) that run on a multiprocessing pool;
- ``atlas`` walks the unlabelled graphs of the networkx atlas (n <= 7) and
  weights each member by n!/|Aut(G)|;
- ``extension`` adds an n-th vertex to every atlas graph on n - 1 vertices
  in each possible way (n <= 8), one pool work unit per atlas graph.

The default is atlas up to 7 vertices, extension at 8, subsets beyond.
"""
from __future__ import annotations

import logging
import os
import time
from itertools import combinations
from math import factorial
from multiprocessing import Pool

import networkx as nx
from networkx.algorithms import isomorphism

from core.config import get_limit
from core.constants import (
    CLASS_F,
    CLASS_GSP,
    CLASS_HF,
    CLASS_HP,
    CLASS_PLANAR,
    ORACLE_CLASSES,
    ORACLE_STRATEGIES,
    STRATEGY_ATLAS,
    STRATEGY_EXTENSION,
    STRATEGY_SUBSETS,
)
from core.exceptions import PreconditionError, SizeLimitError

from .decomposition import decompose
from .planarity import is_planar, is_two_connected
from .reduction import hi_core
from .structure import Graph

logger = logging.getLogger(__name__)

FILTER_CONNECTIVITY_FIRST = "connectivity-first"
FILTER_PLANARITY_FIRST = "planarity-first"
FILTER_ORDERS = [FILTER_CONNECTIVITY_FIRST, FILTER_PLANARITY_FIRST]


# -- class predicates, applied to graphs already known to be 2-connected ---

def _planar_member(graph: Graph) -> bool:
    return is_planar(graph)


def _series_parallel_member(graph: Graph) -> bool:
    return hi_core(graph).series_parallel


def _irreducible_planar_member(graph: Graph) -> bool:
    return graph.min_degree() >= 3 and is_planar(graph)


def _projective_member(graph: Graph) -> bool:
    return decompose(graph).accepted


def _irreducible_projective_member(graph: Graph) -> bool:
    return graph.min_degree() >= 3 and decompose(graph).accepted


CLASS_PREDICATES = {
    CLASS_PLANAR: _planar_member,
    CLASS_GSP: _series_parallel_member,
    CLASS_HP: _irreducible_planar_member,
    CLASS_F: _projective_member,
    CLASS_HF: _irreducible_projective_member,
}


def edge_range(class_name: str, n: int) -> range:
    """Edge counts a member of the class on n vertices can have."""
    if n < 2:
        return range(0)
    if n == 2:
        return range(1, 2)
    low = n
    if class_name in (CLASS_HP, CLASS_HF):
        low = (3 * n + 1) // 2
    if class_name == CLASS_GSP:
        high = 2 * n - 3
    elif class_name in (CLASS_F, CLASS_HF):
        if n < 5:
            return range(0)
        high = 10 if n == 5 else 3 * n - 6
    else:
        high = 3 * n - 6
    return range(low, high + 1)


# -- bitmask connectivity ----------------------------------------------------

def _connected(adj: list[int], vertices: int) -> bool:
    seen = vertices & -vertices
    frontier = seen
    while frontier:
        bit = frontier & -frontier
        frontier ^= bit
        new = adj[bit.bit_length() - 1] & vertices & ~seen
        seen |= new
        frontier |= new
    return seen == vertices


def two_connected_masks(n: int, adj: list[int]) -> bool:
    """2-connectivity of a graph on n >= 3 vertices given as adjacency bitmasks."""
    full = (1 << n) - 1
    if not _connected(adj, full):
        return False
    return all(_connected(adj, full & ~(1 << v)) for v in range(n))


def planar_by_degrees(adj: list[int], m: int) -> bool:
    """
    True when the edge and degree counts alone prove planarity: a TK5 needs
    ten edges and five vertices of degree >= 4, a TK3,3 nine edges and six
    vertices of degree >= 3. False means undecided.
    """
    if m < 9:
        return True
    degrees = [mask.bit_count() for mask in adj]
    return sum(d >= 4 for d in degrees) < 5 and sum(d >= 3 for d in degrees) < 6


def _planar_masks(n, adj, edges, scratch: nx.Graph) -> bool:
    if n <= 4 or planar_by_degrees(adj, len(edges)):
        return True
    scratch.clear()
    scratch.add_nodes_from(range(n))
    scratch.add_edges_from(edges)
    planar, _ = nx.check_planarity(scratch, counterexample=False)
    return planar


def _member(class_name, n, adj, edges, scratch) -> bool:
    """Class membership of a 2-connected graph that passed the degree filter."""
    if class_name in (CLASS_PLANAR, CLASS_HP):
        return _planar_masks(n, adj, edges, scratch)
    if class_name in (CLASS_F, CLASS_HF) and _planar_masks(n, adj, edges, scratch):
        return False
    return CLASS_PREDICATES[class_name](Graph(n, frozenset(edges)))


def _min_degree(class_name: str) -> int:
    return 3 if class_name in (CLASS_HP, CLASS_HF) else 2


def _count_unit(item) -> tuple[int, int]:
    class_name, n, m, first, filter_order = item
    all_edges = list(combinations(range(n), 2))
    min_degree = _min_degree(class_name)
    scratch = nx.Graph()
    count = 0
    for rest in combinations(range(first + 1, len(all_edges)), m - 1):
        chosen = [all_edges[i] for i in (first,) + rest]
        adj = [0] * n
        for u, v in chosen:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if n > 2 and any(mask.bit_count() < min_degree for mask in adj):
            continue
        if filter_order == FILTER_PLANARITY_FIRST:
            if not _planar_masks(n, adj, chosen, scratch):
                continue
            if n > 2 and not two_connected_masks(n, adj):
                continue
        elif n > 2 and not two_connected_masks(n, adj):
            continue
        if _member(class_name, n, adj, chosen, scratch):
            count += 1
    return m, count


def _run_units(function, work_items, workers):
    if workers > 1 and len(work_items) > 1:
        with Pool(processes=min(workers, len(work_items))) as pool:
            return pool.map(function, work_items)
    return [function(item) for item in work_items]


def _subset_counts(class_name, n, workers, filter_order) -> dict[int, int]:
    edge_total = n * (n - 1) // 2
    work_items = [
        (class_name, n, m, first, filter_order)
        for m in edge_range(class_name, n)
        for first in range(edge_total - m + 1)
    ]
    counts: dict[int, int] = {}
    for m, count in _run_units(_count_unit, work_items, workers):
        if count:
            counts[m] = counts.get(m, 0) + count
    return counts


def _automorphism_count(g: nx.Graph) -> int:
    return sum(1 for _ in isomorphism.GraphMatcher(g, g).isomorphisms_iter())


def _atlas_indices(n: int) -> list[int]:
    return [index for index, g in enumerate(nx.graph_atlas_g()) if g.number_of_nodes() == n]


def _atlas_counts(class_name, n) -> dict[int, int]:
    predicate = CLASS_PREDICATES[class_name]
    allowed = edge_range(class_name, n)
    counts: dict[int, int] = {}
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() != n or g.number_of_edges() not in allowed:
            continue
        graph = Graph.from_networkx(g)
        if not is_two_connected(graph) or not predicate(graph):
            continue
        m = graph.edge_count
        counts[m] = counts.get(m, 0) + factorial(n) // _automorphism_count(g)
    return counts


def _extension_unit(item) -> dict[int, int]:
    """
    Members on n = k + 1 vertices whose first k vertices induce one atlas
    graph: every neighbourhood of vertex k is tried once and the hits are
    weighted by the k!/|Aut| labellings of the atlas graph.
    """
    class_name, index = item
    g = nx.graph_atlas(index)
    k = g.number_of_nodes()
    n = k + 1
    allowed = edge_range(class_name, n)
    min_degree = _min_degree(class_name) if n > 2 else 1
    base_edges = [(u, v) if u < v else (v, u) for u, v in g.edges()]
    base_adj = [0] * k
    for u, v in base_edges:
        base_adj[u] |= 1 << v
        base_adj[v] |= 1 << u
    short = [v for v in range(k) if base_adj[v].bit_count() < min_degree]
    if any(base_adj[v].bit_count() < min_degree - 1 for v in short):
        return {}

    scratch = nx.Graph()
    hits: dict[int, int] = {}
    for size in range(max(min_degree, len(short)), k + 1):
        m = len(base_edges) + size
        if m not in allowed:
            continue
        for neighbours in combinations(range(k), size):
            chosen = set(neighbours)
            if any(v not in chosen for v in short):
                continue
            adj = list(base_adj)
            for v in neighbours:
                adj[v] |= 1 << k
            adj.append(sum(1 << v for v in neighbours))
            if not two_connected_masks(n, adj):
                continue
            edges = base_edges + [(v, k) for v in neighbours]
            if _member(class_name, n, adj, edges, scratch):
                hits[m] = hits.get(m, 0) + 1
    if not hits:
        return {}
    weight = factorial(k) // _automorphism_count(g)
    return {m: count * weight for m, count in hits.items()}


def _extension_counts(class_name, n, workers) -> dict[int, int]:
    work_items = [(class_name, index) for index in _atlas_indices(n - 1)]
    counts: dict[int, int] = {}
    for hits in _run_units(_extension_unit, work_items, workers):
        for m, count in hits.items():
            counts[m] = counts.get(m, 0) + count
    return counts


def default_workers(n: int) -> int:
    """One process up to the atlas order, every CPU beyond it."""
    configured = get_limit('WORKERS')
    if configured is not None:
        return configured
    return (os.cpu_count() or 1) if n > get_limit('ATLAS_MAX_N') else 1


def default_strategy(n: int, filter_order: str = FILTER_CONNECTIVITY_FIRST) -> str:
    if filter_order != FILTER_CONNECTIVITY_FIRST:
        return STRATEGY_SUBSETS
    atlas_max = get_limit('ATLAS_MAX_N')
    if n <= atlas_max:
        return STRATEGY_ATLAS
    if n == atlas_max + 1:
        return STRATEGY_EXTENSION
    return STRATEGY_SUBSETS


def oracle_count(
    class_name: str,
    n: int,
    strategy: str | None = None,
    workers: int | None = None,
    filter_order: str = FILTER_CONNECTIVITY_FIRST,
) -> dict[int, int]:
    """
    Labelled members of a class on n vertices, as a map m -> count.

    ``workers=None`` takes ``K33LAB_WORKERS``, or when that is unset one
    process up to the atlas order and every CPU beyond it.
    """
    if class_name not in ORACLE_CLASSES:
        raise PreconditionError(f"no oracle for class {class_name!r}; choose from {ORACLE_CLASSES}")
    if filter_order not in FILTER_ORDERS:
        raise PreconditionError(f"unknown filter order {filter_order!r}")
    if filter_order == FILTER_PLANARITY_FIRST and class_name != CLASS_PLANAR:
        raise PreconditionError("the planarity-first order only applies to the P2planar class")
    if n < 0:
        raise PreconditionError(f"vertex count must be >= 0, got {n}")
    if workers is not None and workers < 1:
        raise PreconditionError(f"worker count must be >= 1, got {workers}")
    max_n = get_limit('ORACLE_MAX_N')
    if n > max_n:
        raise SizeLimitError(f"oracle refuses n={n}; the limit is {max_n}")
    atlas_max = get_limit('ATLAS_MAX_N')
    if strategy is None:
        strategy = default_strategy(n, filter_order)
    if strategy not in ORACLE_STRATEGIES:
        raise PreconditionError(f"unknown oracle strategy {strategy!r}")
    if strategy != STRATEGY_SUBSETS and filter_order != FILTER_CONNECTIVITY_FIRST:
        raise PreconditionError(f"the {strategy} strategy has no filter order")
    if strategy == STRATEGY_ATLAS and n > atlas_max:
        raise SizeLimitError(f"the graph atlas stops at n={atlas_max}")
    if strategy == STRATEGY_EXTENSION and not 1 <= n <= atlas_max + 1:
        raise SizeLimitError(f"atlas extension covers 1 <= n <= {atlas_max + 1}, got n={n}")
    if workers is None:
        workers = default_workers(n)

    started = time.time()
    if strategy == STRATEGY_ATLAS:
        counts = _atlas_counts(class_name, n)
    elif strategy == STRATEGY_EXTENSION:
        counts = _extension_counts(class_name, n, workers)
    else:
        counts = _subset_counts(class_name, n, workers, filter_order)
    logger.info(
        f"Oracle {class_name} n={n} ({strategy}, {workers} worker(s)): "
        f"{sum(counts.values())} graphs in {time.time() - started:.1f}s"
    )
    return dict(sorted(counts.items()))


def oracle_series(class_name: str, nmax: int, **options):
    """The oracle counts for n = 0..nmax as a series."""
    from series.bivariate import BivarSeries

    records = [
        (n, m, count)
        for n in range(nmax + 1)
        for m, count in oracle_count(class_name, n, **options).items()
    ]
    return BivarSeries.from_counts(nmax, records)
