"""Deterministic, seeded graph corpus generators.

Randomness comes from a hand-rolled splitmix64 stream (fixed published
constants) rather than the stdlib Mersenne twister, so corpora are
bit-reproducible regardless of implementation language or platform.  Every
generator documents the order in which it draws values.
"""

from __future__ import annotations

from .errors import BadParameterError, UnknownNameError
from .graph import Graph

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64: state advances by the 64-bit golden ratio; output is the
    standard two-round xor-multiply mix of the new state."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n) as next_u64() mod n."""
        if n <= 0:
            raise BadParameterError(f"below() needs a positive bound, got {n}")
        return self.next_u64() % n

    def chance(self, p: float) -> bool:
        """True with probability p: next_u64() < p * 2**64."""
        return self.next_u64() < int(p * (1 << 64))


def derive_seed(master: int, index: int) -> int:
    """Per-instance seed: first splitmix64 output of master ^ (index+1)*golden."""
    return SplitMix64(master ^ (((index + 1) * _GOLDEN) & _MASK)).next_u64()


def gen_named(name: str, k: int) -> Graph:
    """Fixture families: cycle(k), path(k), star(k) = K_{1,k}, complete(k),
    banana(k) = two hubs joined by k internally disjoint length-2 paths."""
    if name == "cycle":
        if k < 3:
            raise BadParameterError(f"cycle needs k >= 3, got {k}")
        return Graph.from_edges((i, (i + 1) % k) for i in range(k))
    if name == "path":
        if k < 1:
            raise BadParameterError(f"path needs k >= 1, got {k}")
        return Graph.from_edges(((i, i + 1) for i in range(k - 1)), vertices=range(k))
    if name == "star":
        if k < 1:
            raise BadParameterError(f"star needs k >= 1, got {k}")
        return Graph.from_edges((0, i) for i in range(1, k + 1))
    if name == "complete":
        if k < 1:
            raise BadParameterError(f"complete needs k >= 1, got {k}")
        return Graph.from_edges(
            ((u, v) for u in range(k) for v in range(u + 1, k)), vertices=range(k)
        )
    if name == "banana":
        if k < 2:
            raise BadParameterError(f"banana needs k >= 2, got {k}")
        g = Graph()
        for mid in range(2, k + 2):
            g.add_edge(0, mid)
            g.add_edge(1, mid)
        return g
    raise UnknownNameError(f"unknown graph name {name!r}")


def gen_random_apollonian(n: int, seed: int) -> Graph:
    """Maximal planar graph grown from a triangle by inserting each new
    vertex into a uniformly random face.

    Draw order: one below(len(faces)) per inserted vertex.  Face idx (a,b,c)
    is replaced in place by (a,b,new) and (a,c,new), (b,c,new) are appended.
    """
    if n < 3:
        raise BadParameterError(f"apollonian needs n >= 3, got {n}")
    rng = SplitMix64(seed)
    g = Graph.from_edges([(0, 1), (0, 2), (1, 2)])
    faces = [(0, 1, 2)]
    for w in range(3, n):
        idx = rng.below(len(faces))
        a, b, c = faces[idx]
        g.add_edge(a, w)
        g.add_edge(b, w)
        g.add_edge(c, w)
        faces[idx] = (a, b, w)
        faces.append((a, c, w))
        faces.append((b, c, w))
    return g


def gen_edge_subgraph(g: Graph, p: float, seed: int) -> Graph:
    """Keep each edge independently with probability p; vertices unchanged.

    Draw order: one chance(p) per edge, edges in sorted canonical order.
    """
    if not 0.0 <= p <= 1.0:
        raise BadParameterError(f"probability must be in [0, 1], got {p}")
    rng = SplitMix64(seed)
    out = Graph()
    for v in g.vertices:
        out.add_vertex(v)
    for u, v in g.sorted_edges():
        if rng.chance(p):
            out.add_edge(u, v)
    return out


def gen_series_parallel(m: int, seed: int) -> Graph:
    """Two-terminal series-parallel graph built by m compositions with single
    edges.  The first composition is the base edge (0, 1); each further step
    draws below(2): 0 extends the source-sink path by a fresh vertex
    (series), 1 adds the edge between the current terminals (parallel).
    A parallel step that would duplicate an existing edge is re-rolled.
    """
    if m < 1:
        raise BadParameterError(f"series-parallel needs m >= 1, got {m}")
    rng = SplitMix64(seed)
    g = Graph.from_edges([(0, 1)])
    source, sink = 0, 1
    fresh = 2
    done = 1
    while done < m:
        if rng.below(2) == 0:
            g.add_edge(sink, fresh)
            sink = fresh
            fresh += 1
            done += 1
        elif not g.has_edge(source, sink):
            g.add_edge(source, sink)
            done += 1
    return g
