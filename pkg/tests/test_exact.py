from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minorfeas.exact import FEASIBLE, INFEASIBLE, UNKNOWN, Budget, clique_lower_bound, exact_color, exact_embed, \
    greedy_coloring, min_color, placement_order
from minorfeas.graph import Graph, GraphSpec, chimera, complete_graph, cycle_graph, generate, path_graph
from minorfeas.verify import verify_coloring, verify_embedding

from oracles import brute_chromatic, brute_coloring, brute_embed


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner, strict=False)


def test_k2_into_k2():
    cert = exact_embed(complete_graph(2), complete_graph(2), 1, optimize=True)
    assert cert.outcome == FEASIBLE and cert.objective == 2 and cert.optimal


def test_k3_into_p3():
    assert exact_embed(complete_graph(3), path_graph(3), 1).outcome == INFEASIBLE
    assert exact_embed(complete_graph(3), path_graph(3), 1, use_bounds=False).outcome == INFEASIBLE


def test_k4_into_chimera_cell():
    cert = exact_embed(complete_graph(4), chimera(1, 1, 4), 2, optimize=True)
    assert cert.outcome == FEASIBLE and cert.optimal
    assert cert.objective == 6 == brute_embed(complete_graph(4), chimera(1, 1, 4), 2, optimize=True)[1]
    assert not verify_embedding(complete_graph(4), chimera(1, 1, 4), 2, cert.solution)


def test_budget_exhaustion_reports_unknown():
    P = generate(GraphSpec("erdos_renyi", {"n": 12, "p": 0.6}, 1))
    H = chimera(2, 2, 4)
    cert = exact_embed(P, H, 3, Budget(node_limit=5))
    assert cert.outcome in (UNKNOWN, FEASIBLE)
    assert cert.nodes <= 6 and not cert.optimal


def test_placement_order_is_a_permutation():
    P = generate(GraphSpec("barabasi_albert", {"n": 12, "m": 2}, 3))
    order = placement_order(P)
    assert sorted(order) == list(range(12))
    assert P.degree(order[0]) == max(P.degrees())


@st.composite
def tiny_graph(draw, max_n):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph.from_edges(n, edges)


@settings(max_examples=120, deadline=None)
@given(tiny_graph(5), tiny_graph(7), st.integers(1, 3), st.booleans())
def test_embed_agrees_with_brute_force(P, H, L, bounds):
    ok, best, _ = brute_embed(P, H, L, optimize=True)
    cert = exact_embed(P, H, L, optimize=True, use_bounds=bounds)
    assert cert.outcome == (FEASIBLE if ok else INFEASIBLE)
    if ok:
        assert cert.optimal and cert.objective == best
        assert not verify_embedding(P, H, L, cert.solution)


# -- coloring ----------------------------------------------------------------------

def test_coloring_examples():
    assert exact_color(complete_graph(3), 3).outcome == FEASIBLE
    assert exact_color(complete_graph(4), 3).outcome == INFEASIBLE
    assert exact_color(cycle_graph(5), 2).outcome == INFEASIBLE
    with pytest.raises(ValueError):
        exact_color(cycle_graph(5), 0)


@pytest.mark.parametrize("G,chi", [(Graph.from_edges(5, []), 1), (cycle_graph(5), 3), (petersen(), 3),
                                   (complete_graph(6), 6), (Graph.from_edges(0, []), 0)])
def test_min_color_examples(G, chi):
    cert = min_color(G)
    assert cert.objective == chi and cert.optimal
    assert G.n == 0 or brute_chromatic(G) == chi
    assert not verify_coloring(G, None, cert.solution)


def test_bounds_bracket_chromatic_number():
    for s in range(20):
        G = generate(GraphSpec("erdos_renyi", {"n": 9, "p": 0.5}, s))
        chi = brute_chromatic(G)
        assert clique_lower_bound(G) <= chi <= max(greedy_coloring(G)) + 1
        assert not verify_coloring(G, None, greedy_coloring(G))


@settings(max_examples=120, deadline=None)
@given(tiny_graph(8), st.integers(1, 4))
def test_color_agrees_with_brute_force(G, k):
    cert = exact_color(G, k)
    oracle = brute_coloring(G, k)
    assert cert.outcome == (FEASIBLE if oracle is not None else INFEASIBLE)
    if cert.feasible:
        assert not verify_coloring(G, k, cert.solution)


def test_color_budget_unknown():
    G = generate(GraphSpec("erdos_renyi", {"n": 60, "d": 5.0}, 2))
    assert exact_color(G, 3, Budget(node_limit=3)).outcome in (UNKNOWN, INFEASIBLE, FEASIBLE)
    assert exact_color(G, 3, Budget(node_limit=3)).nodes <= 4
