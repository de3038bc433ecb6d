"""Simple undirected graphs with canonical (min, max) edge keys, plus text I/O."""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdgeError,
    ExtraLabelError,
    MalformedLineError,
    MissingLabelError,
    SelfLoopError,
    UnknownEdgeError,
    UnknownVertexError,
)

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class EdgeLabel(Enum):
    F1 = "F1"
    F2 = "F2"
    H = "H"


#: Total labeling of the edge set; keys are canonical (min, max) pairs.
EdgePartition = dict[Edge, EdgeLabel]


class Graph:
    """Undirected simple graph over nonnegative integer vertex ids.

    Self-loops and parallel edges are rejected at insertion time.  The edge
    set is derived from the adjacency sets, always in canonical (min, max)
    orientation.  Vertices left isolated by edge deletion stay in the vertex
    set until explicitly removed.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self) -> None:
        self._adj: dict[int, set[int]] = {}
        self._m = 0

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()
    ) -> "Graph":
        g = cls()
        for v in vertices:
            g.add_vertex(v)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self):
        return self._adj.keys()

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def num_vertices(self) -> int:
        return len(self._adj)

    def num_edges(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: int) -> set[int]:
        if v not in self._adj:
            raise UnknownVertexError(f"unknown vertex {v}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        if v not in self._adj:
            raise UnknownVertexError(f"unknown vertex {v}")
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    def edges(self) -> Iterator[Edge]:
        for u, nb in self._adj.items():
            for v in nb:
                if u < v:
                    yield (u, v)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges())

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {v: set(nb) for v, nb in self._adj.items()}
        g._m = self._m
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(|V|={self.num_vertices()}, |E|={self._m})"

    # -- mutation --------------------------------------------------------

    def add_vertex(self, v: int) -> None:
        if v < 0:
            raise MalformedLineError(f"vertex ids must be nonnegative, got {v}")
        self._adj.setdefault(v, set())

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if self.has_edge(u, v):
            raise DuplicateEdgeError(f"duplicate edge {canonical_edge(u, v)}")
        self.add_vertex(u)
        self.add_vertex(v)
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise UnknownEdgeError(f"unknown edge {canonical_edge(u, v)}")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._m -= 1

    def remove_vertex(self, v: int) -> None:
        if v not in self._adj:
            raise UnknownVertexError(f"unknown vertex {v}")
        for w in self._adj[v]:
            self._adj[w].discard(v)
            self._m -= 1
        del self._adj[v]


def remove_elements(
    g: Graph, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()
) -> Graph:
    """Return a copy of ``g`` with the given vertices and edges deleted.

    Vertex deletion removes all incident edges; edge deletion keeps both
    endpoints even if they become isolated.
    """
    out = g.copy()
    for u, v in edges:
        out.remove_edge(u, v)
    for v in vertices:
        out.remove_vertex(v)
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Blank lines and '#' comments are skipped.  Each remaining line is either
    two nonnegative integers ("u v") or an isolated-vertex declaration
    ("v <id>").
    """
    g = Graph()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "v":
            if len(tokens) != 2:
                raise MalformedLineError(f"line {lineno}: bad vertex declaration {line!r}")
            g.add_vertex(_parse_id(tokens[1], lineno))
            continue
        if len(tokens) != 2:
            raise MalformedLineError(f"line {lineno}: expected two tokens, got {line!r}")
        u = _parse_id(tokens[0], lineno)
        v = _parse_id(tokens[1], lineno)
        if u == v:
            raise SelfLoopError(f"line {lineno}: self-loop at vertex {u}")
        if g.has_edge(u, v):
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {canonical_edge(u, v)}")
        g.add_edge(u, v)
    return g


def _parse_id(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise MalformedLineError(f"line {lineno}: {token!r} is not an integer") from None
    if value < 0:
        raise MalformedLineError(f"line {lineno}: negative vertex id {value}")
    return value


def format_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list: sorted edge lines, then isolated-vertex lines."""
    lines = [f"{u} {v}" for u, v in g.sorted_edges()]
    in_edge = {x for e in g.edges() for x in e}
    lines.extend(f"v {v}" for v in sorted(g.vertices) if v not in in_edge)
    return "\n".join(lines)


def serialize_partition(g: Graph, p: EdgePartition) -> str:
    """One line per edge, sorted by canonical pair: "<u> <v> <F1|F2|H>"."""
    edge_set = set(g.edges())
    for e in edge_set:
        if e not in p:
            raise MissingLabelError(f"edge {e} has no label")
    for e in p:
        if e not in edge_set:
            raise ExtraLabelError(f"label for non-edge {e}")
    return "\n".join(f"{u} {v} {p[(u, v)].value}" for u, v in sorted(edge_set))


def parse_partition(text: str) -> EdgePartition:
    """Parse the partition format written by serialize_partition."""
    labels = {lab.value: lab for lab in EdgeLabel}
    p: EdgePartition = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 3 or tokens[2] not in labels:
            raise MalformedLineError(f"line {lineno}: bad partition line {line!r}")
        u = _parse_id(tokens[0], lineno)
        v = _parse_id(tokens[1], lineno)
        if u == v:
            raise SelfLoopError(f"line {lineno}: self-loop at vertex {u}")
        e = canonical_edge(u, v)
        if e in p:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {e}")
        p[e] = labels[tokens[2]]
    return p
