"""Feasibility Jump local search and the embedding shrink phase.

The search minimizes the weighted violation ``F_w(x) = sum_i w_i f_i(x)``
with single-variable "jumps".  Scores of two-valued variables (all binaries)
are maintained incrementally through the variable-to-constraint index: when
a constraint's activity or weight changes, only the score contributions of
that constraint's variables are adjusted.  Variables with wider domains are
recomputed from scratch whenever one of their constraints changes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InfeasibleInput
from .graph import Graph
from .milp import EQ, Model, is_feasible
from .rng import Rng
from .verify import verify_embedding

FEASIBLE = "Feasible"
LIMIT_REACHED = "LimitReached"


@dataclass(frozen=True)
class FjConfig:
    max_iterations: int = 100_000
    promising_sample_cap: int = 25
    weight_increment: int = 1
    seed: int = 0
    wall_clock_limit: float | None = None

    def __post_init__(self) -> None:
        if self.max_iterations < 0 or self.promising_sample_cap < 1 or self.weight_increment <= 0:
            raise ValueError("FjConfig caps must be positive")


@dataclass
class FjResult:
    status: str
    assignment: list[int]
    iterations: int
    weights: list[int] = field(repr=False)
    weighted_violation: float = 0

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


def _viol(d: int, eq: bool) -> int:
    if eq:
        return d if d >= 0 else -d
    return d if d > 0 else 0


def jump(model: Model, x: Sequence[int], weights: Sequence[float], j: int) -> tuple[int, float]:
    """Best alternative value for variable ``j`` and the weighted-violation drop.

    Computed from scratch; ties prefer the value closest to ``x[j]``, then the
    smaller one.
    """
    col = model.var_to_constraints[j]
    rows = []
    for ci, a in col:
        con = model.constraints[ci]
        act = sum(b * x[v] for v, b in con.terms)
        rows.append((a, act - con.rhs, con.sense == EQ, weights[ci]))
    return _best_jump(rows, x[j], model.lower[j], model.upper[j])


def _best_jump(rows, xj: int, lo: int, hi: int) -> tuple[int, float]:
    """``rows`` holds ``(coef, activity - rhs, is_eq, weight)`` per incident constraint."""

    def cost(t: int) -> float:
        dt = t - xj
        return sum(w * _viol(r + a * dt, eq) for a, r, eq, w in rows)

    cands = {lo, hi, xj - 1, xj + 1}
    for a, r, eq, w in rows:
        # value of x_j at which this row's residual crosses zero
        num = -r
        cands.add(xj + num // a)
        cands.add(xj - ((-num) // a))
    here = cost(xj)
    best_t = None
    best_key = None
    for t in cands:
        if t == xj or t < lo or t > hi:
            continue
        key = (cost(t), abs(t - xj), t)
        if best_key is None or key < best_key:
            best_key, best_t = key, t
    if best_t is None:
        return xj, 0
    return best_t, here - best_key[0]


class _Search:
    """Mutable search state for one run over one model."""

    def __init__(self, model: Model, x0: Sequence[int], cfg: FjConfig):
        self.model = model
        self.cfg = cfg
        n = model.num_vars
        m = model.num_constraints
        self.x = list(x0)
        self.rows = [tuple(con.terms) for con in model.constraints]
        self.rhs = [con.rhs for con in model.constraints]
        self.eq = [con.sense == EQ for con in model.constraints]
        self.cols = model.var_to_constraints
        self.lo = model.lower
        self.hi = model.upper
        self.w = [1] * m
        self.act = [sum(a * self.x[v] for v, a in row) for row in self.rows]
        self.movable = [self.hi[j] > self.lo[j] for j in range(n)]
        self.two = [self.hi[j] - self.lo[j] == 1 for j in range(n)]
        self.val = [0] * n
        self.score: list[float] = [0] * n
        self.plist: list[int] = []
        self.ppos = [-1] * n
        self.ulist: list[int] = []
        self.upos = [-1] * m
        self.F = 0
        for i in range(m):
            f = _viol(self.act[i] - self.rhs[i], self.eq[i])
            if f:
                self.F += f
                self._violated(i, True)
        for j in range(n):
            self._recompute(j)

    # -- bookkeeping ----------------------------------------------------------

    def _violated(self, i: int, on: bool) -> None:
        pos = self.upos[i]
        if on and pos < 0:
            self.upos[i] = len(self.ulist)
            self.ulist.append(i)
        elif not on and pos >= 0:
            last = self.ulist.pop()
            if last != i:
                self.ulist[pos] = last
                self.upos[last] = pos
            self.upos[i] = -1

    def _promising(self, j: int) -> None:
        pos = self.ppos[j]
        if self.score[j] > 0:
            if pos < 0:
                self.ppos[j] = len(self.plist)
                self.plist.append(j)
        elif pos >= 0:
            last = self.plist.pop()
            if last != j:
                self.plist[pos] = last
                self.ppos[last] = pos
            self.ppos[j] = -1

    def _recompute(self, j: int) -> None:
        if not self.movable[j]:
            self.val[j] = self.x[j]
            self.score[j] = 0
            self._promising(j)
            return
        xj = self.x[j]
        if self.two[j]:
            v = self.hi[j] if xj == self.lo[j] else self.lo[j]
            d = v - xj
            s = 0
            for i, a in self.cols[j]:
                r = self.act[i] - self.rhs[i]
                eq = self.eq[i]
                s += self.w[i] * (_viol(r, eq) - _viol(r + a * d, eq))
            self.val[j] = v
            self.score[j] = s
        else:
            rows = [(a, self.act[i] - self.rhs[i], self.eq[i], self.w[i]) for i, a in self.cols[j]]
            self.val[j], self.score[j] = _best_jump(rows, xj, self.lo[j], self.hi[j])
        self._promising(j)

    # -- moves ----------------------------------------------------------------

    def move(self, j: int) -> None:
        old = self.x[j]
        new = self.val[j]
        if new == old:
            return
        delta = new - old
        stale: set[int] = set()
        act, rhs, eqs, w, x, val, score, two = self.act, self.rhs, self.eq, self.w, self.x, self.val, self.score, self.two
        for i, a in self.cols[j]:
            eq = eqs[i]
            r_old = act[i] - rhs[i]
            r_new = r_old + a * delta
            act[i] += a * delta
            f_old = _viol(r_old, eq)
            f_new = _viol(r_new, eq)
            if f_old != f_new:
                self.F += w[i] * (f_new - f_old)
                if (f_old == 0) != (f_new == 0):
                    self._violated(i, f_new > 0)
            wi = w[i]
            for k, b in self.rows[i]:
                if k == j:
                    continue
                if two[k]:
                    bd = b * (val[k] - x[k])
                    change = (f_new - _viol(r_new + bd, eq)) - (f_old - _viol(r_old + bd, eq))
                    if change:
                        score[k] += wi * change
                        self._promising(k)
                elif self.movable[k]:
                    stale.add(k)
        x[j] = new
        self._recompute(j)
        for k in stale:
            self._recompute(k)

    def bump_weights(self, violated: Sequence[int]) -> None:
        inc = self.cfg.weight_increment
        stale: set[int] = set()
        for i in violated:
            r = self.act[i] - self.rhs[i]
            eq = self.eq[i]
            f = _viol(r, eq)
            self.w[i] += inc
            self.F += inc * f
            for k, b in self.rows[i]:
                if self.two[k]:
                    change = f - _viol(r + b * (self.val[k] - self.x[k]), eq)
                    if change:
                        self.score[k] += inc * change
                        self._promising(k)
                elif self.movable[k]:
                    stale.add(k)
        for k in stale:
            self._recompute(k)


def fj_search(model: Model, x0: Sequence[int], config: FjConfig | None = None) -> FjResult:
    """Weighted single-variable repair search starting from ``x0``.

    ``x0`` must lie within the variable bounds (see :func:`milp.clamp`).
    Returns ``Feasible`` with a verified assignment, or ``LimitReached`` with
    the lowest-``F_w`` assignment seen.
    """
    cfg = config or FjConfig()
    if len(x0) != model.num_vars:
        raise ValueError("initial assignment length does not match the model")
    if any(not lo <= v <= hi for v, lo, hi in zip(x0, model.lower, model.upper)):
        raise ValueError("initial assignment violates variable bounds")
    rng = Rng(cfg.seed)
    st = _Search(model, x0, cfg)
    cap = cfg.promising_sample_cap
    deadline = None if cfg.wall_clock_limit is None else time.monotonic() + cfg.wall_clock_limit

    best_x = list(st.x)
    best_viol = {i: _viol(st.act[i] - st.rhs[i], st.eq[i]) for i in st.ulist}
    best_F = st.F
    moves = 0

    for t in range(cfg.max_iterations):
        if st.F == 0:
            break
        if deadline is not None and t % 512 == 0 and time.monotonic() > deadline:
            break
        plist = st.plist
        if plist:
            if len(plist) <= cap:
                pool = plist
            else:
                pool = [plist[p] for p in rng.sample_indices(len(plist), cap)]
            score = st.score
            j_star = pool[0]
            for j in pool:
                if score[j] > score[j_star] or (score[j] == score[j_star] and j < j_star):
                    j_star = j
        else:
            violated = list(st.ulist)
            st.bump_weights(violated)
            inc = cfg.weight_increment
            best_F += inc * sum(best_viol.get(i, 0) for i in violated)
            i_star = violated[rng.below(len(violated))]
            j_star = -1
            for k, _ in st.rows[i_star]:
                if st.movable[k] and (j_star < 0 or st.score[k] > st.score[j_star]
                                      or (st.score[k] == st.score[j_star] and k < j_star)):
                    j_star = k
            if j_star < 0:
                continue
        st.move(j_star)
        moves += 1
        if st.F < best_F:
            best_F = st.F
            best_x = list(st.x)
            best_viol = {i: _viol(st.act[i] - st.rhs[i], st.eq[i]) for i in st.ulist}

    final = list(st.x) if st.F == 0 else best_x
    if is_feasible(model, final):
        return FjResult(FEASIBLE, final, moves, list(st.w), 0)
    return FjResult(LIMIT_REACHED, best_x, moves, list(st.w), best_F)


# -- phase 2: chain shrinking ---------------------------------------------------

@dataclass(frozen=True)
class Phase2Config:
    patience: int = 40
    candidate_cap: int = 60
    probe_cap: int = 20
    per_chain_sample: int = 4
    seed: int = 0
    wall_clock_limit: float | None = None


@dataclass
class Phase2Result:
    embedding: dict[int, list[int]]
    initial_vertices: int
    final_vertices: int
    rounds: int
    accepted: list[tuple[int, int]] = field(default_factory=list)


def total_vertices(emb: dict[int, Sequence[int]]) -> int:
    return sum(len(c) for c in emb.values())


def fj_phase2(P: Graph, H: Graph, L: int, embedding: dict[int, Sequence[int]],
              config: Phase2Config | None = None) -> Phase2Result:
    """Shrink a valid embedding by deleting single chain vertices.

    Each round samples up to ``per_chain_sample`` vertices from every chain of
    size >= 2 (vertices visited in random order, at most ``candidate_cap``
    moves), probes up to ``probe_cap`` of them and keeps the first deletion
    that leaves a valid embedding.  Stops after ``patience`` fruitless rounds.
    """
    cfg = config or Phase2Config()
    emb = {int(i): sorted(c) for i, c in embedding.items()}
    if verify_embedding(P, H, L, emb):
        raise InfeasibleInput("phase 2 needs a valid embedding")
    rng = Rng(cfg.seed)
    deadline = None if cfg.wall_clock_limit is None else time.monotonic() + cfg.wall_clock_limit
    phi0 = total_vertices(emb)
    best = {i: list(c) for i, c in emb.items()}
    phi_best = phi0
    stall = 0
    rounds = 0
    accepted: list[tuple[int, int]] = []
    while stall < cfg.patience:
        if deadline is not None and time.monotonic() > deadline:
            break
        rounds += 1
        moves: list[tuple[int, int]] = []
        order = sorted(emb)
        rng.shuffle(order)
        for i in order:
            chain = emb[i]
            if len(chain) < 2:
                continue
            for v in rng.sample(chain, cfg.per_chain_sample):
                moves.append((i, v))
                if len(moves) == cfg.candidate_cap:
                    break
            if len(moves) == cfg.candidate_cap:
                break
        if not moves:
            break
        improved = False
        for i, v in rng.sample(moves, cfg.probe_cap):
            trial = dict(emb)
            trial[i] = [u for u in emb[i] if u != v]
            if not verify_embedding(P, H, L, trial) and total_vertices(trial) < total_vertices(emb):
                emb = trial
                accepted.append((i, v))
                phi = total_vertices(emb)
                if phi < phi_best:
                    best = {k: list(c) for k, c in emb.items()}
                    phi_best = phi
                stall = 0
                improved = True
                break
        if not improved:
            stall += 1
    return Phase2Result(best, phi0, phi_best, rounds, accepted)
