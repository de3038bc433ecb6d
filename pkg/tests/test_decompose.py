import pytest
from hypothesis import given, settings

from helpers import graphs
from twoforests import (
    AltCycle,
    ClassParams,
    EdgeLabel,
    Graph,
    InternalInvariantViolation,
    NotInClassWitness,
    decompose,
    extend_case1,
    extend_case2,
    extend_case3,
    find_light_edge,
    forest_cap,
    gen_named,
    has_two_alternating_cycle_brute_force,
    parse_edge_list,
    serialize_partition,
    verify_partition,
)

F1, F2, H = EdgeLabel.F1, EdgeLabel.F2, EdgeLabel.H


def test_forest_cap_values():
    assert forest_cap(2, ClassParams(15)) == 2
    assert forest_cap(21, ClassParams(15)) == 6  # ceil((21 - 9) / 2)
    assert forest_cap(1, ClassParams(5)) == 2


def test_forest_cap_monotonicity():
    for alpha in range(5, 12):
        params = ClassParams(alpha)
        caps = [forest_cap(d, params) for d in range(40)]
        assert all(c >= 2 for c in caps)
        assert caps == sorted(caps)
    for d in range(40):
        by_alpha = [forest_cap(d, ClassParams(a)) for a in range(5, 12)]
        assert by_alpha == sorted(by_alpha, reverse=True)


def test_decompose_c4_base_case():
    c4 = gen_named("cycle", 4)
    part = decompose(c4, ClassParams(7))
    assert part == {e: H for e in c4.edges()}


def test_decompose_k2_alpha5():
    part = decompose(gen_named("path", 2), ClassParams(5))
    assert part == {(0, 1): F1}


def test_decompose_c6_alpha6():
    c6 = gen_named("cycle", 6)
    part = decompose(c6, ClassParams(6))
    report = verify_partition(c6, part, ClassParams(6))
    assert report.ok
    h_edges = [e for e, lab in part.items() if lab is H]
    degs = {}
    for u, v in h_edges:
        degs[u] = degs.get(u, 0) + 1
        degs[v] = degs.get(v, 0) + 1
    assert all(d <= 1 for d in degs.values())


def test_decompose_k4_alpha5_witness():
    res = decompose(gen_named("complete", 4), ClassParams(5))
    assert isinstance(res, NotInClassWitness)
    assert res.graph == gen_named("complete", 4)


def test_decompose_base_case_exactness():
    g = gen_named("star", 3)
    part = decompose(g, ClassParams(9))  # max degree 3 <= alpha - 5
    assert set(part.values()) == {H}


def test_decompose_disconnected():
    g = parse_edge_list("0 1\n1 2\n2 0\n10 11\n11 12\n12 10\nv 20")
    params = ClassParams(6)
    part = decompose(g, params)
    assert verify_partition(g, part, params).ok


def test_decompose_determinism():
    g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n0 2\n3 4\n4 5\n5 3")
    params = ClassParams(6)
    a = decompose(g, params)
    b = decompose(g.copy(), params)
    assert serialize_partition(g, a) == serialize_partition(g, b)


# -- single-step extensions --------------------------------------------------


def test_extend_case1_into_h():
    k2 = gen_named("path", 2)
    assert extend_case1(0, 1, {}, ClassParams(7), k2) == {(0, 1): H}


def test_extend_case1_into_forest():
    k2 = gen_named("path", 2)
    assert extend_case1(0, 1, {}, ClassParams(5), k2) == {(0, 1): F1}


def test_extend_case1_saturated_center():
    g = parse_edge_list("0 1\n1 2")  # leaf 0 re-attached to center 1
    part = extend_case1(0, 1, {(1, 2): H}, ClassParams(7), g)
    assert part == {(1, 2): H, (0, 1): H}


def test_extend_case2_both_unsaturated():
    # alpha=6 and both H'-degrees zero: the edge lands in H
    g = parse_edge_list("0 1\n0 2\n1 3")
    part = extend_case2(0, 1, {(0, 2): F1, (1, 3): F1}, ClassParams(6), g)
    assert part[(0, 1)] is H


def test_extend_case2_degree2_second_bullet():
    # alpha=8: d_H'(v)=3 saturates, d_G(u)=2, F1-degree 2 at v forces F2
    g = parse_edge_list("0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n1 7")
    partial = {
        (0, 2): H,
        (0, 3): H,
        (0, 4): H,
        (0, 5): F1,
        (0, 6): F1,
        (1, 7): H,
    }
    part = extend_case2(0, 1, partial, ClassParams(8), g)
    assert part[(0, 1)] is F2


def test_extend_case2_degree4_branch():
    # alpha=8: d_H'(v)=3, d_G(u)=4, both forests empty at v, F1 has room at u
    g = parse_edge_list("0 1\n0 2\n0 3\n0 4\n1 5\n1 6\n1 7")
    partial = {
        (0, 2): H,
        (0, 3): H,
        (0, 4): H,
        (1, 5): F1,
        (1, 6): F2,
        (1, 7): F2,
    }
    part = extend_case2(0, 1, partial, ClassParams(8), g)
    assert part[(0, 1)] is F1


def test_extend_case3_whole_c4():
    c4 = gen_named("cycle", 4)
    part = extend_case3(AltCycle((0, 1, 2, 3)), {}, ClassParams(7), c4)
    assert part == {(1, 2): F1, (0, 3): F1, (0, 1): F2, (2, 3): F2}


def test_extend_case3_c6_direct():
    c6 = gen_named("cycle", 6)
    part = extend_case3(AltCycle((0, 1, 2, 3, 4, 5)), {}, ClassParams(6), c6)
    assert sorted(part.values(), key=lambda l: l.value) == [F1] * 3 + [F2] * 3
    assert verify_partition(c6, part, ClassParams(6)).ok


def test_extend_case3_banana_hubs():
    b = gen_named("banana", 4)
    cycle = AltCycle((2, 0, 3, 1))
    partial = {(0, 4): F1, (1, 4): F2, (0, 5): F2, (1, 5): F1}
    part = extend_case3(cycle, partial, ClassParams(5), b)
    for hub in (0, 1):
        for lab in (F1, F2):
            before = sum(1 for e, l in partial.items() if hub in e and l is lab)
            after = sum(1 for e, l in part.items() if hub in e and l is lab)
            assert after == before + 1


def test_extend_case3_rejects_bad_cycle():
    with pytest.raises(InternalInvariantViolation):
        extend_case3(AltCycle((0, 1, 2)), {}, ClassParams(5), gen_named("complete", 4))


# -- properties ---------------------------------------------------------------


@given(graphs(max_vertices=8))
@settings(max_examples=200)
def test_round_trip_alpha_sweep(g):
    for alpha in (5, 6, 7):
        params = ClassParams(alpha)
        res = decompose(g, params)
        if isinstance(res, NotInClassWitness):
            w = res.graph
            assert all(w.degree(v) >= 2 for v in w.vertices)
            assert find_light_edge(w, params) is None
            assert not has_two_alternating_cycle_brute_force(w)
        else:
            assert verify_partition(g, res, params).ok


@given(graphs(max_vertices=8))
def test_base_case_all_h(g):
    alpha = g.max_degree() + 5
    part = decompose(g, ClassParams(alpha))
    assert set(part.values()) <= {H}
