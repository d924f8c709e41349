"""
Immutable labelled graphs, two-pole networks and K5-subdivision records.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

import networkx as nx

from core.exceptions import PreconditionError


def _edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise PreconditionError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def pair(a: int, b: int) -> tuple[int, int]:
    """The corner pair {a, b} as a sorted tuple."""
    return _edge(a, b)


@dataclass(frozen=True)
class Graph:
    """
    A simple graph on the vertex labels 0..n-1.
    """
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError(f"vertex count must be >= 0, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise PreconditionError(f"edge ({u}, {v}) is not a sorted pair of labels in 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(n, frozenset(_edge(u, v) for u, v in edges))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        """Relabel the nodes of g to 0..n-1 in sorted order."""
        order = {v: i for i, v in enumerate(sorted(g.nodes))}
        return cls.from_edges(len(order), ((order[u], order[v]) for u, v in g.edges))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @cached_property
    def adjacency(self) -> Mapping[int, frozenset]:
        adj: dict[int, set] = {v: set() for v in range(self.n)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adjacency.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def relabel(self, mapping: Mapping[int, int]) -> Graph:
        """Apply a bijection of 0..n-1 onto itself."""
        if sorted(mapping.values()) != list(range(self.n)) or sorted(mapping) != list(range(self.n)):
            raise PreconditionError("relabel needs a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((mapping[u], mapping[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """
        The induced subgraph relabelled to 0..k-1; also returns the original
        label of each new vertex.
        """
        kept = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(kept)}
        edges = ((index[u], index[v]) for u, v in self.edges if u in index and v in index)
        return Graph.from_edges(len(kept), edges), kept

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        return Graph(self.n, self.edges | {_edge(u, v) for u, v in extra})

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> Graph:
        return Graph(self.n, self.edges - {_edge(u, v) for u, v in removed})


@dataclass(frozen=True)
class Network:
    """
    A two-pole network: poles plus internal vertices, with arbitrary labels.

    Together with the pole edge it must be 2-connected; ``validate`` checks
    that on demand.
    """
    poles: tuple[int, int]
    internal: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        a, b = self.poles
        if a == b:
            raise PreconditionError("the two poles must be distinct")
        if a in self.internal or b in self.internal:
            raise PreconditionError("a pole cannot also be internal")
        labels = self.labels
        for u, v in self.edges:
            if u not in labels or v not in labels or u >= v:
                raise PreconditionError(f"edge ({u}, {v}) is not a sorted pair of network labels")

    @classmethod
    def from_edges(cls, poles, internal, edges) -> Network:
        return cls(tuple(poles), frozenset(internal), frozenset(_edge(u, v) for u, v in edges))

    @classmethod
    def bare_edge(cls, a: int, b: int) -> Network:
        return cls((a, b), frozenset(), frozenset({_edge(a, b)}))

    @property
    def labels(self) -> frozenset:
        return self.internal | set(self.poles)

    @property
    def has_pole_edge(self) -> bool:
        return _edge(*self.poles) in self.edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def swapped(self) -> Network:
        """The pole swap tau."""
        return Network((self.poles[1], self.poles[0]), self.internal, self.edges)

    def same_up_to_swap(self, other: Network) -> bool:
        return self == other or self == other.swapped()

    def placed(self, a: int, b: int, internal_labels: Iterable[int]) -> Network:
        """
        Relabel a network whose poles are 0, 1 and internal vertices 2..k+1:
        pole 0 goes to a, pole 1 to b, internal i to internal_labels[i - 2].
        """
        if self.poles != (0, 1) or self.internal != frozenset(range(2, 2 + len(self.internal))):
            raise PreconditionError("placed() needs a network in canonical labelling")
        labels = list(internal_labels)
        if len(labels) != len(self.internal):
            raise PreconditionError(f"expected {len(self.internal)} internal labels, got {len(labels)}")
        mapping = {0: a, 1: b, **{i + 2: label for i, label in enumerate(labels)}}
        return Network.from_edges((a, b), labels, ((mapping[u], mapping[v]) for u, v in self.edges))

    def augmented(self) -> Graph:
        """N plus the pole edge, relabelled so the poles become 0 and 1."""
        order = list(self.poles) + sorted(self.internal)
        index = {v: i for i, v in enumerate(order)}
        edges = {(index[u], index[v]) for u, v in self.edges} | {(0, 1)}
        return Graph.from_edges(len(order), edges)

    def validate(self) -> Network:
        from .planarity import is_two_connected

        if not is_two_connected(self.augmented()):
            raise PreconditionError("network plus its pole edge is not 2-connected")
        return self

    def to_dict(self) -> dict:
        return {
            'poles': list(self.poles),
            'internal': sorted(self.internal),
            'edges': [list(e) for e in sorted(self.edges)],
            'pole_map': {'0': self.poles[0], '1': self.poles[1]},
        }


@dataclass(frozen=True)
class K5Subdivision:
    """
    Corners and the ten corner-to-corner sides of a K5 subdivision.

    ``sides`` maps each sorted corner pair to the vertex path from the
    smaller corner to the larger one.
    """
    corners: tuple[int, ...]
    sides: Mapping[tuple[int, int], tuple[int, ...]]

    def __post_init__(self):
        corners = tuple(sorted(self.corners))
        if len(set(corners)) != 5:
            raise PreconditionError("a K5 subdivision has exactly five corners")
        object.__setattr__(self, 'corners', corners)
        expected = {pair(a, b) for a, b in combinations(corners, 2)}
        if set(self.sides) != expected:
            raise PreconditionError("a K5 subdivision needs one side per corner pair")
        seen: set[int] = set()
        for (a, b), path in self.sides.items():
            if path[0] != a or path[-1] != b:
                raise PreconditionError(f"side {(a, b)} does not run from {a} to {b}")
            inner = set(path[1:-1])
            if inner & seen or inner & set(corners):
                raise PreconditionError("sides of a K5 subdivision must be internally disjoint")
            seen |= inner

    @property
    def vertices(self) -> frozenset:
        out = set(self.corners)
        for path in self.sides.values():
            out.update(path)
        return frozenset(out)

    @property
    def edges(self) -> frozenset:
        return frozenset(
            _edge(path[i], path[i + 1]) for path in self.sides.values() for i in range(len(path) - 1)
        )

    def inner_vertices(self, side: tuple[int, int]) -> tuple[int, ...]:
        return self.sides[side][1:-1]

    def side_of(self, v: int) -> tuple[int, int] | None:
        """The side an inner vertex lies on, None for corners and outside vertices."""
        for side, path in self.sides.items():
            if v in path[1:-1]:
                return side
        return None

    def on_side(self, v: int, side: tuple[int, int]) -> bool:
        return v in self.sides[side]


@dataclass(frozen=True)
class SideDecomposition:
    """
    Five corners and the side network of each of the ten corner pairs.
    """
    corners: tuple[int, ...]
    components: Mapping[tuple[int, int], Network]

    def to_dict(self) -> dict:
        return {
            'corners': list(self.corners),
            'components': [
                {'pair': list(key), **self.components[key].to_dict()} for key in sorted(self.components)
            ],
        }


@dataclass(frozen=True)
class DecompositionResult:
    """Outcome of the membership test: a decomposition or a rejection reason."""
    graph: Graph
    decomposition: SideDecomposition | None = None
    reason: str | None = None

    @property
    def accepted(self) -> bool:
        return self.decomposition is not None

    def to_dict(self) -> dict:
        from .decomposition import edge_bound_check

        out = {
            'accepted': self.accepted,
            'reason': self.reason,
            'n': self.graph.n,
            'm': self.graph.edge_count,
        }
        if self.accepted:
            out.update(self.decomposition.to_dict())
            out['edge_bound'] = edge_bound_check(self.graph)
        return out
