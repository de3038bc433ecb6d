"""Constructive decomposition into two forests F1, F2 and a leftover H.

Phase 1 reduces the graph one configuration at a time (vertex of degree
<= 1, light edge, or 2-alternating cycle) until the maximum degree drops to
alpha - 5; phase 2 replays the steps in reverse, labeling the removed edges
so that F1 and F2 stay acyclic within their per-vertex caps and H stays
within degree alpha - 5.

The engine is iterative with an explicit step list (recursion depth would be
Theta(|E|)), and tracks the currently light edges and small vertices in
lazy heaps so each reduction step costs roughly O(log) amortized.  Degrees
only ever decrease during reduction, which is what makes the lazy heaps
sound: once light, always light.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Optional, Union

from .errors import InternalInvariantViolation
from .graph import Edge, EdgeLabel, EdgePartition, Graph, canonical_edge
from .params import ClassParams
from .structures import (
    AltCycle,
    NotInClassWitness,
    find_two_alternating_cycle,
    is_valid_alt_cycle,
)


@dataclass(frozen=True)
class ReductionStep:
    """One deletion performed in phase 1; replayed backwards in phase 2."""

    kind: str  # "case1" | "case2" | "case3" | "base"
    u: Optional[int] = None
    v: Optional[int] = None
    host_degree_u: int = 0
    host_degree_v: int = 0
    cycle: tuple[int, ...] = ()
    base_edges: tuple[Edge, ...] = ()


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InternalInvariantViolation(message)


class _UnionFind:
    __slots__ = ("_parent", "_size")

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


class _PartitionBuilder:
    """Incremental labeling state for the extension replay.

    Forest identity goes through a flip flag so the proof's wholesale
    F1 <-> F2 swaps cost O(1) instead of relabeling every edge.  Labels are
    stored against physical forests 1/2 and mapped to logical F1/F2 at the
    end.
    """

    def __init__(self, params: ClassParams) -> None:
        self._params = params
        self._labels: dict[Edge, int] = {}  # 0 = H, 1/2 = physical forest
        self._h_deg: dict[int, int] = defaultdict(int)
        self._f_deg = (defaultdict(int), defaultdict(int))
        self._forests = (_UnionFind(), _UnionFind())
        self._flip = False

    def h_degree(self, v: int) -> int:
        return self._h_deg[v]

    def forest_degree(self, j: int, v: int) -> int:
        return self._f_deg[self._phys(j) - 1][v]

    def _phys(self, j: int) -> int:
        return (3 - j) if self._flip else j

    def swap_forests(self) -> None:
        self._flip = not self._flip

    def add_h(self, e: Edge) -> None:
        self._set(e, 0)
        self._h_deg[e[0]] += 1
        self._h_deg[e[1]] += 1

    def add_forest(self, j: int, e: Edge) -> None:
        pj = self._phys(j)
        if not self._forests[pj - 1].union(e[0], e[1]):
            raise InternalInvariantViolation(f"edge {e} closes a cycle in a forest")
        self._set(e, pj)
        self._f_deg[pj - 1][e[0]] += 1
        self._f_deg[pj - 1][e[1]] += 1

    def _set(self, e: Edge, code: int) -> None:
        if e in self._labels:
            raise InternalInvariantViolation(f"edge {e} labeled twice")
        self._labels[e] = code

    def finish(self) -> EdgePartition:
        one = EdgeLabel.F2 if self._flip else EdgeLabel.F1
        two = EdgeLabel.F1 if self._flip else EdgeLabel.F2
        mapping = {0: EdgeLabel.H, 1: one, 2: two}
        return {e: mapping[c] for e, c in self._labels.items()}


def _builder_from(partial: EdgePartition, params: ClassParams) -> _PartitionBuilder:
    b = _PartitionBuilder(params)
    for e in sorted(partial):
        label = partial[e]
        if label is EdgeLabel.H:
            b.add_h(e)
        else:
            b.add_forest(1 if label is EdgeLabel.F1 else 2, e)
    return b


# -- extension rules -------------------------------------------------------


def _apply_case1(b: _PartitionBuilder, params: ClassParams, u: int, v: int, dg_v: int) -> None:
    """Re-attach pendant edge uv, where u had degree 1 with neighbor v."""
    alpha = params.alpha
    e = canonical_edge(u, v)
    if b.h_degree(v) <= alpha - 6:
        b.add_h(e)
        return
    _require(b.h_degree(v) == alpha - 5, f"H-degree above cap at vertex {v}")
    j = 1 if b.forest_degree(1, v) <= b.forest_degree(2, v) else 2
    _require(
        b.forest_degree(j, v) <= (dg_v - alpha + 4) // 2,
        f"forest degree bound failed at vertex {v}",
    )
    b.add_forest(j, e)


def _apply_case2(
    b: _PartitionBuilder, params: ClassParams, u: int, v: int, dg_u: int, dg_v: int
) -> None:
    """Re-insert light edge uv (degree sum <= alpha, both endpoints >= 2)."""
    alpha = params.alpha
    if b.h_degree(u) > b.h_degree(v):
        u, v = v, u
        dg_u, dg_v = dg_v, dg_u
    e = canonical_edge(u, v)
    if b.h_degree(v) <= alpha - 6:
        b.add_h(e)
        return
    _require(b.h_degree(v) == alpha - 5, f"H-degree above cap at vertex {v}")
    _require(dg_u + dg_v <= alpha, f"edge {e} is not light")
    _require(dg_u >= 2, f"degree-<=1 endpoint {u} reached the light-edge rule")
    _require(dg_v >= alpha - 4, f"saturated endpoint {v} has degree below alpha-4")
    _require(dg_u <= 4, f"light endpoint {u} has degree above 4 in saturated branch")

    if dg_u == 2:
        if b.forest_degree(1, u) != 0:
            b.swap_forests()
        _require(
            b.forest_degree(1, u) == 0 and b.forest_degree(2, u) <= 1,
            f"degree-2 endpoint {u} touches both forests",
        )
        _require(
            b.forest_degree(1, v) + b.forest_degree(2, v) <= 2,
            f"forest degrees at {v} exceed 2",
        )
        if b.forest_degree(1, v) <= 1:
            b.add_forest(1, e)
        else:
            _require(b.forest_degree(2, v) == 0, f"forest degrees at {v} inconsistent")
            b.add_forest(2, e)
    elif dg_u == 3:
        _require(
            b.forest_degree(1, v) + b.forest_degree(2, v) <= 1,
            f"forest degrees at {v} exceed 1",
        )
        if b.forest_degree(1, v) != 0:
            b.swap_forests()
        _require(b.forest_degree(1, v) == 0, f"orientation failed at {v}")
        _require(
            b.forest_degree(1, u) + b.forest_degree(2, u) <= 2,
            f"forest degrees at {u} exceed 2",
        )
        if b.forest_degree(1, u) <= 1:
            b.add_forest(1, e)
        else:
            _require(b.forest_degree(2, u) == 0, f"forest degrees at {u} inconsistent")
            b.add_forest(2, e)
    else:  # dg_u == 4
        _require(
            b.forest_degree(1, v) == 0 and b.forest_degree(2, v) == 0,
            f"saturated endpoint {v} touches a forest",
        )
        _require(
            b.forest_degree(1, u) + b.forest_degree(2, u) <= 3,
            f"forest degrees at {u} exceed 3",
        )
        if b.forest_degree(1, u) <= 1:
            b.add_forest(1, e)
        else:
            _require(b.forest_degree(2, u) <= 1, f"no forest has room at {u}")
            b.add_forest(2, e)


def _apply_case3(b: _PartitionBuilder, cycle: tuple[int, ...]) -> None:
    """Alternate the cycle's edges: odd-start edges into F1, even into F2.

    Each added edge is pendant at its even-position endpoint, whose only two
    host edges were on the cycle, so acyclicity is preserved; the builder's
    union-find re-checks it anyway.
    """
    k = len(cycle)
    for i in range(k):
        e = canonical_edge(cycle[i], cycle[(i + 1) % k])
        b.add_forest(1 if i % 2 == 1 else 2, e)


# -- public single-step extensions ------------------------------------------


def extend_case1(
    u: int, v: int, partial: EdgePartition, params: ClassParams, host: Graph
) -> EdgePartition:
    """Extend a valid partition of host - u by the pendant edge uv."""
    b = _builder_from(partial, params)
    _apply_case1(b, params, u, v, host.degree(v))
    return b.finish()


def extend_case2(
    u: int, v: int, partial: EdgePartition, params: ClassParams, host: Graph
) -> EdgePartition:
    """Extend a valid partition of host - uv by the light edge uv."""
    b = _builder_from(partial, params)
    _apply_case2(b, params, u, v, host.degree(u), host.degree(v))
    return b.finish()


def extend_case3(
    cycle: AltCycle,
    partial: EdgePartition,
    params: ClassParams,
    host: Optional[Graph] = None,
) -> EdgePartition:
    """Extend a valid partition of host - E(C) by the alternating cycle C."""
    if host is not None and not is_valid_alt_cycle(host, cycle.vertices):
        raise InternalInvariantViolation(f"{cycle} is not a 2-alternating cycle of host")
    b = _builder_from(partial, params)
    _apply_case3(b, cycle.vertices)
    return b.finish()


# -- the full algorithm ------------------------------------------------------


def decompose(
    g: Graph, params: ClassParams
) -> Union[EdgePartition, NotInClassWitness]:
    """Edge-partition ``g`` into two degree-capped forests and a leftover H
    with max degree alpha - 5, or return a witness that ``g`` is outside the
    class.

    Failure means "no reducible configuration remained", not "no partition
    exists"; see brute_force_partition for the existence oracle.
    """
    alpha = params.alpha
    h_cap = params.h_degree_cap
    work = g.copy()

    small_heap = [v for v in work.vertices if work.degree(v) <= 1]
    heapify(small_heap)
    light_heap = [
        e for e in work.edges() if work.degree(e[0]) + work.degree(e[1]) <= alpha
    ]
    heapify(light_heap)
    over_cap = sum(1 for v in work.vertices if work.degree(v) > h_cap)

    def note_decrement(v: int) -> None:
        # degree of v just dropped by one
        nonlocal over_cap
        d = work.degree(v)
        if d == 1:
            heappush(small_heap, v)
        if d == h_cap:
            over_cap -= 1
        for w in work.neighbors(v):
            if d + work.degree(w) == alpha:
                heappush(light_heap, canonical_edge(v, w))

    def drop_edge(u: int, v: int) -> None:
        work.remove_edge(u, v)
        note_decrement(u)
        note_decrement(v)

    steps: list[ReductionStep] = []
    while True:
        if over_cap == 0:
            steps.append(ReductionStep("base", base_edges=tuple(work.sorted_edges())))
            break

        small: Optional[int] = None
        while small_heap:
            if small_heap[0] in work:
                small = heappop(small_heap)
                break
            heappop(small_heap)
        if small is not None:
            if work.degree(small) == 1:
                (nb,) = work.neighbors(small)
                dg_nb = work.degree(nb)
                drop_edge(small, nb)
                work.remove_vertex(small)
                steps.append(ReductionStep("case1", u=small, v=nb, host_degree_v=dg_nb))
            else:
                work.remove_vertex(small)
                steps.append(ReductionStep("case1", u=small))
            continue

        light: Optional[Edge] = None
        while light_heap:
            if work.has_edge(*light_heap[0]):
                light = heappop(light_heap)
                break
            heappop(light_heap)
        if light is not None:
            u, v = light
            steps.append(
                ReductionStep(
                    "case2",
                    u=u,
                    v=v,
                    host_degree_u=work.degree(u),
                    host_degree_v=work.degree(v),
                )
            )
            drop_edge(u, v)
            continue

        cyc = find_two_alternating_cycle(work)
        if cyc is None:
            return NotInClassWitness(work)
        vs = cyc.vertices
        for i in range(1, len(vs), 2):
            # no light edge exists, so d(v_i) + 2 >= alpha + 1
            _require(
                work.degree(vs[i]) >= alpha - 1,
                f"cycle vertex {vs[i]} too light for the no-light-edge branch",
            )
        steps.append(ReductionStep("case3", cycle=vs))
        for a, b in AltCycle(vs).edges():
            drop_edge(a, b)

    builder = _PartitionBuilder(params)
    for e in steps[-1].base_edges:
        builder.add_h(e)
    for step in reversed(steps[:-1]):
        if step.kind == "case1":
            if step.v is not None:
                _apply_case1(builder, params, step.u, step.v, step.host_degree_v)
        elif step.kind == "case2":
            _apply_case2(
                builder, params, step.u, step.v, step.host_degree_u, step.host_degree_v
            )
        else:
            _apply_case3(builder, step.cycle)
    return builder.finish()
