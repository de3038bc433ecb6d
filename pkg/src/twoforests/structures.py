"""Finders for the reducible configurations: small-degree vertices, light
edges, and 2-alternating cycles.

The precedence small vertex -> light edge -> alternating cycle is not
cosmetic: the cycle extension arithmetic relies on the absence of light
edges, so find_configuration hard-codes that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .graph import Edge, Graph, canonical_edge
from .params import ClassParams


@dataclass(frozen=True)
class SmallVertex:
    vertex: int


@dataclass(frozen=True)
class LightEdge:
    u: int
    v: int


@dataclass(frozen=True)
class AltCycle:
    """Even cycle v0 v1 ... v_{2n-1} whose even-position vertices have degree 2."""

    vertices: tuple[int, ...]

    def edges(self) -> list[Edge]:
        vs = self.vertices
        k = len(vs)
        return [canonical_edge(vs[i], vs[(i + 1) % k]) for i in range(k)]


@dataclass(frozen=True)
class NotInClassWitness:
    """A deletion-derived subgraph with no reducible configuration.

    By heredity this certifies that the original input lies outside the
    class for the given alpha.
    """

    graph: Graph


Configuration = Union[SmallVertex, LightEdge, AltCycle]


@dataclass
class AuxMultigraph:
    """Each degree-2 vertex ``mid`` becomes a triple (x, y, mid) joining its
    two neighbors; parallel triples are kept distinct so that a cycle of n
    triples corresponds to a candidate 2-alternating cycle of length 2n."""

    vertices: set[int]
    triples: list[tuple[int, int, int]]


def find_small_vertex(g: Graph) -> Optional[int]:
    return min((v for v in g.vertices if g.degree(v) <= 1), default=None)


def find_light_edge(g: Graph, params: ClassParams) -> Optional[Edge]:
    best: Optional[Edge] = None
    for e in g.edges():
        if g.degree(e[0]) + g.degree(e[1]) <= params.alpha:
            if best is None or e < best:
                best = e
    return best


def build_auxiliary_multigraph(g: Graph) -> AuxMultigraph:
    triples = []
    for mid in sorted(g.vertices):
        if g.degree(mid) == 2:
            x, y = sorted(g.neighbors(mid))
            triples.append((x, y, mid))
    return AuxMultigraph(set(g.vertices), triples)


def is_valid_alt_cycle(g: Graph, vertices: tuple[int, ...]) -> bool:
    """Independent validator for the AltCycle invariants on ``g``."""
    k = len(vertices)
    if k < 4 or k % 2 != 0:
        return False
    if len(set(vertices)) != k:
        return False
    if any(v not in g for v in vertices):
        return False
    if any(not g.has_edge(vertices[i], vertices[(i + 1) % k]) for i in range(k)):
        return False
    return all(g.degree(vertices[i]) == 2 for i in range(0, k, 2))


def find_two_alternating_cycle(g: Graph) -> Optional[AltCycle]:
    """Search the auxiliary multigraph for a cycle of triples, reconstruct the
    host cycle by interleaving midpoints, and post-validate distinctness.

    A midpoint can coincide with an aux-cycle vertex in pathological graphs,
    so candidates failing the distinctness check are rejected and the search
    backtracks.  Existence-complete: some valid cycle is returned whenever
    one exists.
    """
    aux = build_auxiliary_multigraph(g)
    adj: dict[int, list[tuple[int, int]]] = {}
    for idx, (x, y, _mid) in enumerate(aux.triples):
        adj.setdefault(x, []).append((y, idx))
        adj.setdefault(y, []).append((x, idx))
    for lst in adj.values():
        lst.sort()
    for host in _candidate_host_cycles(adj, aux.triples):
        if len(set(host)) == len(host):
            return AltCycle(_canonicalize(host, g))
    return None


def _candidate_host_cycles(
    adj: dict[int, list[tuple[int, int]]], triples: list[tuple[int, int, int]]
) -> Iterator[list[int]]:
    """Yield host-cycle candidates with midpoints at even positions, in a
    deterministic order.  Each aux cycle is rooted at its smallest vertex."""

    def expand(start: int, path: list[int], used: set[int], ts: list[int]) -> Iterator[list[int]]:
        x = path[-1]
        for y, t in adj[x]:
            if t in used:
                continue
            if y == start:
                if len(path) >= 2:
                    seq = ts + [t]
                    host: list[int] = []
                    for i, ti in enumerate(seq):
                        host.append(path[i])
                        host.append(triples[ti][2])
                    # rotate midpoints onto even positions
                    yield host[1:] + host[:1]
            elif y > start and y not in path:
                used.add(t)
                ts.append(t)
                path.append(y)
                yield from expand(start, path, used, ts)
                path.pop()
                ts.pop()
                used.discard(t)

    for start in sorted(adj):
        yield from expand(start, [start], set(), [])


def _canonicalize(host: list[int], g: Graph) -> tuple[int, ...]:
    """Rotate/reverse so v0 is the smallest vertex that may sit at an even
    position, and v1 is the smaller of its two cycle neighbors."""
    k = len(host)
    starts = list(range(0, k, 2))
    if all(g.degree(host[i]) == 2 for i in range(1, k, 2)):
        # both parity classes qualify, so any vertex may be v0
        starts = list(range(k))
    i0 = min(starts, key=host.__getitem__)
    rot = host[i0:] + host[:i0]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def find_configuration(
    g: Graph, params: ClassParams
) -> Union[Configuration, NotInClassWitness]:
    v = find_small_vertex(g)
    if v is not None:
        return SmallVertex(v)
    e = find_light_edge(g, params)
    if e is not None:
        return LightEdge(*e)
    c = find_two_alternating_cycle(g)
    if c is not None:
        return c
    return NotInClassWitness(g.copy())
