"""Independent reference implementations used as test oracles.

Everything here is deliberately naive: subset filtering, plain backtracking
over explicit chain lists, exhaustive colorings, and a generic 0/1 model
search that knows nothing about what the model encodes.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from minorfeas.graph import Graph
from minorfeas.milp import EQ, Model


def connected(H: Graph, vs: Sequence[int]) -> bool:
    vs = set(vs)
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in H.adj[u]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def brute_chains(H: Graph, L: int) -> set[frozenset[int]]:
    out = set()
    for size in range(1, L + 1):
        for combo in itertools.combinations(range(H.n), size):
            if connected(H, combo):
                out.add(frozenset(combo))
    return out


def touches(H: Graph, a: frozenset[int], b: frozenset[int]) -> bool:
    return any(H.has_edge(u, v) for u in a for v in b)


def brute_embed(P: Graph, H: Graph, L: int, optimize: bool = False):
    """(feasible, best total size or None, embedding or None) by plain backtracking."""
    chains = sorted(brute_chains(H, L), key=lambda c: (len(c), sorted(c)))
    best: list = [None, None]
    assign: list[frozenset[int] | None] = [None] * P.n

    def rec(i: int, used: frozenset[int], cost: int) -> bool:
        if best[0] is not None and cost >= best[0]:
            return False
        if i == P.n:
            best[0] = cost
            best[1] = {v: sorted(c) for v, c in enumerate(assign)}
            return not optimize
        for c in chains:
            if c & used:
                continue
            if any(assign[k] is not None and not touches(H, c, assign[k]) for k in P.adj[i] if k < i):
                continue
            assign[i] = c
            if rec(i + 1, used | c, cost + len(c)):
                return True
            assign[i] = None
        return False

    rec(0, frozenset(), 0)
    return best[0] is not None, best[0], best[1]


def brute_coloring(G: Graph, k: int) -> list[int] | None:
    for colors in itertools.product(range(k), repeat=G.n):
        if all(colors[u] != colors[v] for u, v in G.edges):
            return list(colors)
    return None


def brute_chromatic(G: Graph) -> int:
    k = 1 if G.n else 0
    while G.n and brute_coloring(G, k) is None:
        k += 1
    return k


def model_feasible(model: Model, x: Sequence[int]) -> bool:
    """Full re-evaluation written independently of ``milp.is_feasible``."""
    if len(x) != model.num_vars:
        return False
    for j, v in enumerate(x):
        if not model.lower[j] <= v <= model.upper[j]:
            return False
    for con in model.constraints:
        lhs = 0
        for var, coef in con.terms:
            lhs += coef * x[var]
        if con.sense == EQ and lhs != con.rhs:
            return False
        if con.sense != EQ and lhs > con.rhs:
            return False
    return True


def model_brute(model: Model, limit: int = 1 << 20) -> list[int] | None:
    """First feasible point by full enumeration of the box (small models only)."""
    size = 1
    for lo, hi in zip(model.lower, model.upper):
        size *= hi - lo + 1
    if size > limit:
        raise ValueError(f"box has {size} points")
    ranges = [range(lo, hi + 1) for lo, hi in zip(model.lower, model.upper)]
    for x in itertools.product(*ranges):
        if model_feasible(model, x):
            return list(x)
    return None


def model_search(model: Model) -> list[int] | None:
    """Exhaustive depth-first search over the variable box with activity-bound pruning.

    Variables are fixed in index order; a partial assignment is abandoned when
    some row can no longer reach its right-hand side whatever the free
    variables do.  Complete for any bounded integer model.
    """
    n = model.num_vars
    cols: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, con in enumerate(model.constraints):
        for v, a in con.terms:
            cols[v].append((i, a))
    # running min / max activity with free variables at their extremes
    lo_act = [sum(min(a * model.lower[v], a * model.upper[v]) for v, a in c.terms) for c in model.constraints]
    hi_act = [sum(max(a * model.lower[v], a * model.upper[v]) for v, a in c.terms) for c in model.constraints]
    x = [0] * n

    def ok(i: int) -> bool:
        con = model.constraints[i]
        if lo_act[i] > con.rhs:
            return False
        return not (con.sense == EQ and hi_act[i] < con.rhs)

    def rec(j: int) -> bool:
        if j == n:
            return True
        for v in range(model.lower[j], model.upper[j] + 1):
            x[j] = v
            changed = []
            good = True
            for i, a in cols[j]:
                dlo = a * v - min(a * model.lower[j], a * model.upper[j])
                dhi = a * v - max(a * model.lower[j], a * model.upper[j])
                lo_act[i] += dlo
                hi_act[i] += dhi
                changed.append((i, dlo, dhi))
                if not ok(i):
                    good = False
            if good and rec(j + 1):
                return True
            for i, dlo, dhi in changed:
                lo_act[i] -= dlo
                hi_act[i] -= dhi
        return False

    if not all(ok(i) for i in range(model.num_constraints)):
        return None
    return list(x) if rec(0) else None
