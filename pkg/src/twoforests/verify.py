"""Independent contract checking plus brute-force oracles for small graphs."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import TooLargeError, UnknownEdgeError
from .graph import Edge, EdgeLabel, EdgePartition, Graph
from .params import ClassParams, forest_cap


@dataclass(frozen=True)
class NotAPartition:
    edge: Edge


@dataclass(frozen=True)
class CycleInForest:
    forest: EdgeLabel
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class ForestCapExceeded:
    vertex: int
    forest: EdgeLabel
    actual: int
    cap: int


@dataclass(frozen=True)
class HDegreeExceeded:
    vertex: int
    actual: int
    cap: int


Violation = Union[NotAPartition, CycleInForest, ForestCapExceeded, HDegreeExceeded]


@dataclass
class VerificationReport:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations


class UnionFind:
    def __init__(self) -> None:
        self._parent: dict[int, int] = {}
        self._size: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self._parent
        if x not in parent:
            parent[x] = x
            self._size[x] = 1
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        return True


def is_forest(g: Graph, subset: Iterable[Edge]) -> bool:
    """True iff the edge subset of g is acyclic (disjoint-set union check)."""
    uf = UnionFind()
    acyclic = True
    for u, v in subset:
        if not g.has_edge(u, v):
            raise UnknownEdgeError(f"unknown edge ({u}, {v})")
        if not uf.union(u, v):
            acyclic = False
    return acyclic


def _extract_cycle(edges: list[Edge]) -> tuple[int, ...]:
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent: dict[int, Optional[int]] = {}

    def dfs(x: int, par: Optional[int]) -> Optional[list[int]]:
        for y in sorted(adj[x]):
            if y == par:
                continue
            if y in parent:
                cyc = [x]
                while cyc[-1] != y:
                    cyc.append(parent[cyc[-1]])  # type: ignore[arg-type]
                return cyc
            parent[y] = x
            found = dfs(y, x)
            if found:
                return found
        return None

    for root in sorted(adj):
        if root in parent:
            continue
        parent[root] = None
        found = dfs(root, None)
        if found:
            return tuple(found)
    raise AssertionError("no cycle in an edge set that failed the forest check")


def verify_partition(
    g: Graph, p: EdgePartition, params: ClassParams
) -> VerificationReport:
    """Check every condition of the decomposition contract and return all
    violations: exact cover of E(g), acyclic F1/F2, forest degree caps,
    and the H degree cap."""
    violations: list[Violation] = []
    edge_set = set(g.edges())
    for e in sorted(e for e in edge_set if e not in p):
        violations.append(NotAPartition(e))
    for e in sorted(e for e in p if e not in edge_set):
        violations.append(NotAPartition(e))

    f_deg = {EdgeLabel.F1: defaultdict(int), EdgeLabel.F2: defaultdict(int)}
    h_deg: dict[int, int] = defaultdict(int)
    for label in (EdgeLabel.F1, EdgeLabel.F2):
        sub = sorted(e for e in edge_set if p.get(e) is label)
        uf = UnionFind()
        acyclic = all(uf.union(u, v) for u, v in sub)
        if not acyclic:
            violations.append(CycleInForest(label, _extract_cycle(sub)))
        for u, v in sub:
            f_deg[label][u] += 1
            f_deg[label][v] += 1
    for u, v in edge_set:
        if p.get((u, v)) is EdgeLabel.H:
            h_deg[u] += 1
            h_deg[v] += 1

    for v in sorted(g.vertices):
        cap = forest_cap(g.degree(v), params)
        for label in (EdgeLabel.F1, EdgeLabel.F2):
            if f_deg[label][v] > cap:
                violations.append(ForestCapExceeded(v, label, f_deg[label][v], cap))
        if h_deg[v] > params.h_degree_cap:
            violations.append(HDegreeExceeded(v, h_deg[v], params.h_degree_cap))
    return VerificationReport(violations)


class _RollbackUnionFind:
    """Union by size without path compression so unions can be undone."""

    def __init__(self) -> None:
        self._parent: dict[int, int] = {}
        self._size: dict[int, int] = {}
        self._trail: list[tuple[int, int]] = []

    def find(self, x: int) -> int:
        parent = self._parent
        if x not in parent:
            parent[x] = x
            self._size[x] = 1
            return x
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        self._trail.append((rb, ra))
        return True

    def rollback(self) -> None:
        rb, ra = self._trail.pop()
        self._parent[rb] = rb
        self._size[ra] -= self._size[rb]


def brute_force_partition(
    g: Graph, params: ClassParams, edge_limit: int = 14
) -> Optional[EdgePartition]:
    """Exhaustive existence oracle over all 3^|E| labelings.

    Prunes on running degree counters and incremental forest checks; returns
    the lexicographically first valid partition (edges sorted, label order
    F1 < F2 < H), or None.
    """
    edges = g.sorted_edges()
    if len(edges) > edge_limit:
        raise TooLargeError(f"{len(edges)} edges exceeds limit {edge_limit}")
    caps = {v: forest_cap(g.degree(v), params) for v in g.vertices}
    h_cap = params.h_degree_cap
    f_deg = (defaultdict(int), defaultdict(int))
    h_deg: dict[int, int] = defaultdict(int)
    forests = (_RollbackUnionFind(), _RollbackUnionFind())
    labels: list[EdgeLabel] = []

    def search(i: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        for j, label in ((0, EdgeLabel.F1), (1, EdgeLabel.F2)):
            fd = f_deg[j]
            if fd[u] < caps[u] and fd[v] < caps[v] and forests[j].union(u, v):
                fd[u] += 1
                fd[v] += 1
                labels.append(label)
                if search(i + 1):
                    return True
                labels.pop()
                fd[u] -= 1
                fd[v] -= 1
                forests[j].rollback()
        if h_deg[u] < h_cap and h_deg[v] < h_cap:
            h_deg[u] += 1
            h_deg[v] += 1
            labels.append(EdgeLabel.H)
            if search(i + 1):
                return True
            labels.pop()
            h_deg[u] -= 1
            h_deg[v] -= 1
        return False

    if search(0):
        return dict(zip(edges, labels))
    return None


def enumerate_simple_cycles(g: Graph, max_len: int) -> list[tuple[int, ...]]:
    """All simple cycles of length 3..max_len, once each, canonically rotated
    (smallest vertex first, smaller of its two neighbors second)."""
    result: list[tuple[int, ...]] = []
    adj = {v: sorted(g.neighbors(v)) for v in g.vertices}

    def dfs(start: int, path: list[int], on_path: set[int]) -> None:
        x = path[-1]
        for y in adj[x]:
            if y == start:
                if len(path) >= 3 and path[1] < path[-1]:
                    result.append(tuple(path))
            elif y > start and y not in on_path and len(path) < max_len:
                path.append(y)
                on_path.add(y)
                dfs(start, path, on_path)
                path.pop()
                on_path.discard(y)

    for s in sorted(g.vertices):
        dfs(s, [s], {s})
    return result


def has_two_alternating_cycle_brute_force(g: Graph) -> bool:
    """Existence oracle: enumerate all simple cycles and test the
    every-other-vertex degree-2 condition on both parity classes (which
    covers all rotations and both directions)."""
    for cyc in enumerate_simple_cycles(g, max_len=g.num_vertices()):
        k = len(cyc)
        if k < 4 or k % 2 != 0:
            continue
        for parity in (0, 1):
            if all(g.degree(cyc[i]) == 2 for i in range(parity, k, 2)):
                return True
    return False


def is_k4_minor_free(g: Graph) -> bool:
    """Series-parallel reduction: repeatedly delete degree-<=1 vertices and
    suppress degree-2 vertices (dropping any parallel edge created).  The
    graph has no K4 minor iff the reduction empties it."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    changed = True
    while adj and changed:
        changed = False
        for v in sorted(adj):
            if v not in adj:
                continue
            d = len(adj[v])
            if d <= 1:
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v]
                changed = True
            elif d == 2:
                x, y = adj[v]
                adj[x].discard(v)
                adj[y].discard(v)
                del adj[v]
                if y not in adj[x]:
                    adj[x].add(y)
                    adj[y].add(x)
                changed = True
    return not adj
