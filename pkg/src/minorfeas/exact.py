"""Exact backtracking oracles for bounded-chain minor embedding and coloring.

These are desk-scale searches: complete when they finish, bounded by a node
count and an optional wall-clock limit otherwise.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any

from .chains import ChainFamily, candidate_chains, enumerate_chains
from .graph import Graph
from .screening import s_min

FEASIBLE = "Feasible"
INFEASIBLE = "Infeasible"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Budget:
    node_limit: int | None = 1_000_000
    time_limit: float | None = None


@dataclass
class Certificate:
    """Search outcome.

    ``solution`` is an embedding (``{problem vertex: [hardware vertices]}``) or
    a color list.  ``optimal`` is set when an optimizing search proved its
    incumbent optimal; a budget-limited optimizing search that found a
    solution reports ``Feasible`` with ``optimal=False``.
    """

    outcome: str
    solution: Any = None
    nodes: int = 0
    objective: int | None = None
    optimal: bool = False

    @property
    def feasible(self) -> bool:
        return self.outcome == FEASIBLE

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"outcome": self.outcome, "nodes": self.nodes}
        if self.solution is not None:
            if isinstance(self.solution, dict):
                out["solution"] = {str(k): list(v) for k, v in sorted(self.solution.items())}
            else:
                out["solution"] = list(self.solution)
        if self.objective is not None:
            out["objective"] = self.objective
            out["optimal"] = self.optimal
        return out


class _OutOfBudget(Exception):
    pass


class _Meter:
    def __init__(self, budget: Budget):
        self.nodes = 0
        self.limit = budget.node_limit
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget


def placement_order(P: Graph) -> list[int]:
    """Highest degree first, then always the vertex with most already-placed
    neighbors (ties: higher degree, smaller id)."""
    n = P.n
    placed = [False] * n
    links = [0] * n
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not placed[u]), key=lambda u: (links[u], P.degree(u), -u))
        placed[v] = True
        order.append(v)
        for u in P.adj[v]:
            links[u] += 1
    return order


def exact_embed(P: Graph, H: Graph, L: int, budget: Budget | None = None, optimize: bool = False,
                family: ChainFamily | None = None, use_bounds: bool = True) -> Certificate:
    """Depth-first chain assignment with disjointness, adjacency and budget pruning.

    With ``use_bounds=False`` the chain-size lower bounds derived from the
    hardware degree are not used (every vertex may take a singleton), which
    keeps the search independent of the zero-phase screen.
    """
    budget = budget or Budget()
    nP = P.n
    if nP == 0:
        return Certificate(FEASIBLE, {}, 0, 0, True)
    if family is None:
        family = enumerate_chains(H, L)
    delta_h = H.max_degree()
    if use_bounds:
        bounds = [s_min(P.degree(i), delta_h, L) for i in range(nP)]
        if any(b is None for b in bounds):
            return Certificate(INFEASIBLE)
        smin: list[int] = bounds  # type: ignore[assignment]
    else:
        smin = [1] * nP
    cands = [candidate_chains(i, P, family, smin[i]) for i in range(nP)]
    if any(not c for c in cands):
        return Certificate(INFEASIBLE)
    cand_sets = [set(c) for c in cands]

    chains = family.chains
    order = placement_order(P)
    chain_of: list[int | None] = [None] * nP
    remaining = [P.degree(i) for i in range(nP)]  # unplaced neighbors
    used: set[int] = set()
    meter = _Meter(budget)
    best: dict[str, Any] = {"cost": None, "assign": None}
    state = {"cost": 0, "internal": 0, "smin_rest": sum(smin), "slack_rest": sum(s - 1 for s in smin)}
    bsets = [frozenset(ch.boundary) for ch in chains]
    # free_b[k]: boundary vertices of k's chain not yet used; watch[w]: placed
    # vertices whose chain boundary contains hardware vertex w
    free_b = [0] * nP
    watch: list[list[int]] = [[] for _ in range(H.n)]

    def pool_for(i: int, placed_nbrs: list[int]) -> list[int]:
        if not placed_nbrs:
            return cands[i]
        k0 = min(placed_nbrs, key=lambda k: len(chains[chain_of[k]].boundary))
        pool: set[int] = set()
        for w in chains[chain_of[k0]].boundary:
            if w not in used:
                pool.update(family.by_vertex[w])
        return sorted(pool & cand_sets[i])

    def place(i: int, idx: int, vs: frozenset[int], fb: int) -> bool:
        ok = True
        # neighbors first: the new chain is allowed to use one of their boundary vertices
        for k in P.adj[i]:
            remaining[k] -= 1
        used.update(vs)
        for w in vs:
            for k in watch[w]:
                free_b[k] -= 1
                if free_b[k] < remaining[k]:
                    ok = False
        chain_of[i] = idx
        free_b[i] = fb
        for w in chains[idx].boundary:
            watch[w].append(i)
        return ok

    def unplace(i: int, idx: int, vs: frozenset[int]) -> None:
        for w in chains[idx].boundary:
            watch[w].pop()
        for k in P.adj[i]:
            remaining[k] += 1
        chain_of[i] = None
        for w in vs:
            for k in watch[w]:
                free_b[k] += 1
        used.difference_update(vs)

    def search(depth: int) -> bool:
        if depth == nP:
            cost = state["cost"]
            if best["cost"] is None or cost < best["cost"]:
                best["cost"] = cost
                best["assign"] = list(chain_of)
            return not optimize
        i = order[depth]
        placed_nbrs = [k for k in P.adj[i] if chain_of[k] is not None]
        smin_rest = state["smin_rest"] - smin[i]
        slack_rest = state["slack_rest"] - (smin[i] - 1)
        for idx in pool_for(i, placed_nbrs):
            ch = chains[idx]
            if optimize and best["cost"] is not None and state["cost"] + ch.size + smin_rest >= best["cost"]:
                # candidates are size-ordered, so no later one can do better
                break
            vs = family.vertex_set(idx)
            if not vs.isdisjoint(used):
                continue
            if len(used) + ch.size + smin_rest > H.n:
                continue
            if state["internal"] + ch.internal_edges + slack_rest + P.m > H.m:
                continue
            fb = len(bsets[idx] - used)
            if fb < remaining[i]:
                continue
            if any(family.reach(chain_of[k]).isdisjoint(vs) for k in placed_nbrs):
                continue
            meter.tick()
            if place(i, idx, vs, fb):
                saved = dict(state)
                state["cost"] += ch.size
                state["internal"] += ch.internal_edges
                state["smin_rest"] = smin_rest
                state["slack_rest"] = slack_rest
                done = search(depth + 1)
                state.update(saved)
            else:
                done = False
            unplace(i, idx, vs)
            if done:
                return True
        return False

    try:
        search(0)
        exhausted = True
    except _OutOfBudget:
        exhausted = False
    if best["assign"] is None:
        return Certificate(INFEASIBLE if exhausted else UNKNOWN, None, meter.nodes)
    emb = {i: list(chains[c].vertices) for i, c in enumerate(best["assign"])}
    return Certificate(FEASIBLE, emb, meter.nodes, best["cost"], optimal=optimize and exhausted)


# -- coloring -----------------------------------------------------------------

def greedy_coloring(G: Graph) -> list[int]:
    """DSATUR greedy coloring (no backtracking)."""
    n = G.n
    colors = [-1] * n
    nbr_colors: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0),
                key=lambda u: (len(nbr_colors[u]), G.degree(u), -u))
        c = 0
        while c in nbr_colors[v]:
            c += 1
        colors[v] = c
        for u in G.adj[v]:
            nbr_colors[u].add(c)
    return colors


def clique_lower_bound(G: Graph) -> int:
    """Size of a greedily grown clique (a valid chromatic lower bound)."""
    if G.n == 0:
        return 0
    best = 1
    deg = G.degrees()
    for v in range(G.n):
        clique = [v]
        cand = sorted(G.adj[v], key=lambda u: (-deg[u], u))
        for u in cand:
            if all(G.has_edge(u, w) for w in clique):
                clique.append(u)
        best = max(best, len(clique))
    return best


def exact_color(G: Graph, k: int, budget: Budget | None = None) -> Certificate:
    """Backtracking k-coloring with saturation-degree vertex selection.

    A vertex may only open the next unused color, which fixes the first
    vertex's color and removes color-permutation symmetry.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    budget = budget or Budget()
    n = G.n
    if n == 0:
        return Certificate(FEASIBLE, [], 0)
    adj = G.adj
    deg = G.degrees()
    colors = [-1] * n
    count = [[0] * k for _ in range(n)]
    sat = [0] * n
    meter = _Meter(budget)

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for u in adj[v]:
            row = count[u]
            if row[c] == 0:
                sat[u] += 1
            row[c] += 1

    def unassign(v: int, c: int) -> None:
        colors[v] = -1
        for u in adj[v]:
            row = count[u]
            row[c] -= 1
            if row[c] == 0:
                sat[u] -= 1

    def search(colored: int, top: int) -> bool:
        if colored == n:
            return True
        v = -1
        key = None
        for u in range(n):
            if colors[u] < 0:
                ku = (sat[u], deg[u], -u)
                if key is None or ku > key:
                    key, v = ku, u
        if sat[v] >= k:
            return False
        for c in range(min(k, top + 2)):
            if count[v][c]:
                continue
            meter.tick()
            assign(v, c)
            if all(sat[u] < k for u in adj[v] if colors[u] < 0):
                if search(colored + 1, max(top, c)):
                    return True
            unassign(v, c)
        return False

    try:
        found = search(0, -1)
    except _OutOfBudget:
        return Certificate(UNKNOWN, None, meter.nodes)
    if found:
        return Certificate(FEASIBLE, list(colors), meter.nodes)
    return Certificate(INFEASIBLE, None, meter.nodes)


def min_color(G: Graph, budget: Budget | None = None) -> Certificate:
    """Chromatic number by iterative deepening from a clique bound up to DSATUR's count."""
    budget = budget or Budget()
    if G.n == 0:
        return Certificate(FEASIBLE, [], 0, 0, True)
    greedy = greedy_coloring(G)
    upper = max(greedy) + 1
    lower = clique_lower_bound(G)
    nodes = 0
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    for k in range(lower, upper):
        left_nodes = None if budget.node_limit is None else max(budget.node_limit - nodes, 0)
        left_time = None if deadline is None else max(deadline - time.monotonic(), 0.0)
        cert = exact_color(G, k, Budget(left_nodes, left_time))
        nodes += cert.nodes
        if cert.outcome == FEASIBLE:
            return Certificate(FEASIBLE, cert.solution, nodes, k, True)
        if cert.outcome == UNKNOWN:
            return Certificate(FEASIBLE, greedy, nodes, upper, False)
    return Certificate(FEASIBLE, greedy, nodes, upper, True)
