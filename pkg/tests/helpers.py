"""Shared strategies and fixture builders for the test suite."""

import hypothesis.strategies as st

from twoforests import Graph, SplitMix64


@st.composite
def graphs(draw, max_vertices=8, min_vertices=1):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph.from_edges(edges, vertices=range(n))


def random_graph(rng: SplitMix64, max_vertices: int, p: float = 0.5) -> Graph:
    n = 1 + rng.below(max_vertices)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(
        (e for e in pairs if rng.chance(p)), vertices=range(n)
    )
