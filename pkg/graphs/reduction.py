"""
Homeomorphically irreducible cores of 2-connected graphs.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx

from core.exceptions import PreconditionError

from .planarity import is_two_connected
from .structure import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HICore:
    """
    Result of reducing a 2-connected graph.

    ``core`` is None when the graph reduces to K2, i.e. it is series-parallel.
    ``vertices[i]`` is the original label of core vertex i.
    """
    core: Graph | None
    vertices: tuple[int, ...] = ()

    @property
    def series_parallel(self) -> bool:
        return self.core is None


def hi_core(graph: Graph) -> HICore:
    """
    Suppress degree-2 vertices and merge the parallel edges this creates
    until no degree-2 vertex is left.

    A graph that reduces completely to K2 has no K4 subdivision.
    """
    if not is_two_connected(graph):
        raise PreconditionError("hi_core needs a 2-connected graph")
    g = graph.to_networkx()
    while g.number_of_nodes() > 2:
        v = next((v for v, d in g.degree if d == 2), None)
        if v is None:
            break
        u, w = g.neighbors(v)
        g.remove_node(v)
        g.add_edge(u, w)
    if g.number_of_nodes() == 2:
        return HICore(None)
    return HICore(Graph.from_networkx(g), tuple(sorted(g.nodes)))
