from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minorfeas.graph import Graph, complete_graph, cycle_graph, path_graph
from minorfeas.screening import Condition, degree_capacity, s_min, zero_phase_screen

from oracles import brute_chains, brute_embed


def test_s_min_examples():
    assert s_min(4, 6, 3) == 1
    assert s_min(10, 4, 3) is None
    assert s_min(10, 4, 4) == 4
    assert s_min(3, 2, 3) is None
    assert s_min(2, 2, 1) == 1
    assert s_min(0, 0, 1) == 1


def test_degree_three_needs_branching_hardware():
    # no connected subset of a path or cycle has three outside neighbors
    for H in (path_graph(7), cycle_graph(7)):
        for chain in brute_chains(H, 3):
            outside = {w for v in chain for w in H.adj[v]} - chain
            assert len(outside) <= 2


@pytest.mark.parametrize("delta,L", [(3, 1), (3, 3), (4, 2), (6, 3), (2, 3)])
def test_capacity_consistent_with_s_min(delta, L):
    cap = degree_capacity(delta, L)
    assert s_min(cap, delta, L) is not None
    assert s_min(cap + 1, delta, L) is None


def test_k5_into_path_is_degree_bound():
    res = zero_phase_screen(complete_graph(5), path_graph(10), 3)
    assert res.infeasible and res.violated == Condition.DEGREE_BOUND
    assert res.detail["degree"] == 4 and res.detail["capacity"] == 2
    assert not brute_embed(complete_graph(5), path_graph(10), 3)[0]


def test_single_vertex_passes():
    res = zero_phase_screen(Graph.from_edges(1, []), Graph.from_edges(1, []), 1)
    assert not res.infeasible and res.s_min == (1,)


def test_k4_into_path5_hits_degree_bound_first():
    # degree 3 exceeds what a max-degree-2 host can offer, checked before budgets
    res = zero_phase_screen(complete_graph(4), path_graph(5), 3)
    assert res.violated == Condition.DEGREE_BOUND


def test_edge_budget_isolated():
    # C4 into P4: degrees and vertex count fit, 4 problem edges > 3 hardware edges
    res = zero_phase_screen(cycle_graph(4), path_graph(4), 3)
    assert res.violated == Condition.EDGE_BUDGET
    assert res.detail == {"lhs": 4, "rhs": 3}
    assert not brute_embed(cycle_graph(4), path_graph(4), 3)[0]


def test_vertex_budget():
    res = zero_phase_screen(Graph.from_edges(4, []), path_graph(3), 2)
    assert res.violated == Condition.VERTEX_BUDGET
    assert res.detail == {"lhs": 4, "rhs": 3}


def test_budget_counts_chain_sizes():
    # star K1,5 into a degree-3 tree-like host: the center needs a 3-vertex chain
    star = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    res = zero_phase_screen(star, complete_graph(4), 3)
    assert res.violated == Condition.VERTEX_BUDGET
    assert res.detail["lhs"] == 3 + 5


def test_invalid_L():
    with pytest.raises(ValueError):
        zero_phase_screen(path_graph(2), path_graph(2), 0)


def _graphs(max_n):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
        return Graph.from_edges(n, edges)
    return build()


@settings(max_examples=150, deadline=None)
@given(_graphs(5), _graphs(7), st.integers(1, 3))
def test_rejections_are_sound(P, H, L):
    res = zero_phase_screen(P, H, L)
    if res.infeasible:
        assert not brute_embed(P, H, L)[0]
