"""
Graph text format: '#' comments, a first line "n <count>", then one
"u v" edge per line with 0 <= u < v < n.
"""
from pathlib import Path

from core.exceptions import GraphFormatError

from .structure import Graph


def parse_graph(text: str) -> Graph:
    n = None
    edges = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != 'n':
                raise GraphFormatError(f"expected 'n <count>', got {line!r}", number)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"vertex count is not an integer: {parts[1]!r}", number)
            if n < 0:
                raise GraphFormatError(f"negative vertex count {n}", number)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected an edge 'u v', got {line!r}", number)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}", number)
        if not (0 <= u < v < n):
            raise GraphFormatError(f"edge ({u}, {v}) needs 0 <= u < v < {n}", number)
        if (u, v) in edges:
            raise GraphFormatError(f"duplicate edge ({u}, {v}), first on line {edges[(u, v)]}", number)
        edges[(u, v)] = number
    if n is None:
        raise GraphFormatError("missing 'n <count>' line")
    return Graph(n, frozenset(edges))


def render_graph(graph: Graph) -> str:
    lines = [f"n {graph.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.edges))
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}")
    return parse_graph(text)
