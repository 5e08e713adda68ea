"""Encode minor embedding and graph coloring as binary feasibility models.

Embedding layout: one binary ``x[i,C]`` per problem vertex ``i`` and candidate
chain ``C`` (variables grouped by ``i``, chains in family order), with

* ``assign``:   sum_C x[i,C] == 1 for every problem vertex,
* ``disjoint``: sum over chains containing hardware vertex j <= 1,
* ``adjacent``: x[i,C] - sum_{D adjacent to C, D candidate for k} x[k,D] <= 0
  for every arc (i,k) of the problem graph and every candidate C of i,
* ``edge_budget``: sum e(C) x[i,C] <= |E_H| - |E_P|.

Coloring layout: ``x[i,c]`` at index ``i*K + c``; min-coloring appends the
color-use indicators ``y[c]`` after all ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .chains import ChainFamily, candidate_chains
from .errors import EmptyCandidateSet, InfeasibleInput, ModelTooLarge
from .exact import greedy_coloring
from .graph import Graph
from .milp import EQ, LE, Model, is_feasible

DEFAULT_MAX_CONSTRAINTS = 2_000_000
DEFAULT_MAX_NONZEROS = 20_000_000


@dataclass
class EmbeddingEncoding:
    model: Model
    P: Graph
    H: Graph
    family: ChainFamily
    candidates: list[list[int]]
    var_map: dict[tuple[int, int], int]
    var_info: list[tuple[int, int]] = field(repr=False)


@dataclass
class ColoringEncoding:
    model: Model
    G: Graph
    k: int
    y_offset: int | None = None

    def x_index(self, i: int, c: int) -> int:
        return i * self.k + c


def encode_embedding(P: Graph, H: Graph, family: ChainFamily, s_min: Sequence[int],
                     max_constraints: int = DEFAULT_MAX_CONSTRAINTS,
                     max_nonzeros: int = DEFAULT_MAX_NONZEROS) -> EmbeddingEncoding:
    """Build the sparse chain-assignment model.

    Adjacency rows are emitted eagerly for every arc and candidate chain.
    Raises :class:`EmptyCandidateSet` if a vertex has no candidate chain and
    :class:`ModelTooLarge` when the caps are exceeded.
    """
    model = Model()
    candidates = []
    var_map: dict[tuple[int, int], int] = {}
    var_info: list[tuple[int, int]] = []
    for i in range(P.n):
        ci = candidate_chains(i, P, family, s_min[i])
        if not ci:
            raise EmptyCandidateSet(i)
        candidates.append(ci)
        for c in ci:
            var_map[(i, c)] = model.add_var(0, 1, f"x_{i}_{c}")
            var_info.append((i, c))
    model.objective = [family.chains[c].size for _, c in var_info]

    # adjacency rows dominate; reject before building them
    rows = P.n + H.n + 1 + sum(len(candidates[i]) for i, _ in arcs(P))
    if rows > max_constraints:
        raise ModelTooLarge(f"model needs about {rows} constraints, cap is {max_constraints}")
    budget = _Budget(max_constraints, max_nonzeros)
    for i in range(P.n):
        terms = [(var_map[(i, c)], 1) for c in candidates[i]]
        budget.charge(len(terms))
        model.add_constraint(terms, EQ, 1, "assign")

    holders: list[list[int]] = [[] for _ in range(H.n)]
    for var, (i, c) in enumerate(var_info):
        for v in family.chains[c].vertices:
            holders[v].append(var)
    for v in range(H.n):
        if len(holders[v]) > 1:
            budget.charge(len(holders[v]))
            model.add_constraint([(var, 1) for var in holders[v]], LE, 1, "disjoint")

    cand_sets = [set(ci) for ci in candidates]
    for i, k in arcs(P):
        for c in candidates[i]:
            rhs_vars = [var_map[(k, d)] for d in _adjacent_candidates(family, c, cand_sets[k])]
            budget.charge(1 + len(rhs_vars))
            terms = [(var_map[(i, c)], 1)] + [(var, -1) for var in rhs_vars]
            model.add_constraint(terms, LE, 0, "adjacent")

    budget_terms = [(var, family.chains[c].internal_edges) for var, (i, c) in enumerate(var_info)
                    if family.chains[c].internal_edges > 0]
    rhs = H.m - P.m
    if budget_terms or rhs < 0:
        budget.charge(len(budget_terms))
        model.add_constraint(budget_terms, LE, rhs, "edge_budget")
    return EmbeddingEncoding(model, P, H, family, candidates, var_map, var_info)


def arcs(P: Graph) -> list[tuple[int, int]]:
    out = []
    for u, v in P.edges:
        out.append((u, v))
        out.append((v, u))
    return sorted(out)


def _adjacent_candidates(family: ChainFamily, c: int, allowed: set[int]) -> list[int]:
    found: set[int] = set()
    by_vertex = family.by_vertex
    for w in family.reach(c):
        for d in by_vertex[w]:
            if d in allowed:
                found.add(d)
    found.discard(c)
    return sorted(found)


class _Budget:
    def __init__(self, max_constraints: int, max_nonzeros: int):
        self.rows = 0
        self.nnz = 0
        self.max_rows = max_constraints
        self.max_nnz = max_nonzeros

    def charge(self, nnz: int) -> None:
        self.rows += 1
        self.nnz += nnz
        if self.rows > self.max_rows or self.nnz > self.max_nnz:
            raise ModelTooLarge(f"model exceeds {self.max_rows} constraints / {self.max_nnz} nonzeros")


def decode_embedding(enc: EmbeddingEncoding, x: Sequence[int]) -> dict[int, list[int]]:
    if not is_feasible(enc.model, x):
        raise InfeasibleInput("assignment is not feasible for the embedding model")
    emb: dict[int, list[int]] = {}
    for var, (i, c) in enumerate(enc.var_info):
        if x[var]:
            emb[i] = list(enc.family.chains[c].vertices)
    return emb


def embedding_to_assignment(enc: EmbeddingEncoding, emb: dict[int, Sequence[int]]) -> list[int]:
    """Warm-start assignment from a (possibly invalid) embedding.

    Chains that are not candidates for their vertex are dropped, leaving that
    vertex unassigned.
    """
    x = [0] * enc.model.num_vars
    for i, chain in emb.items():
        c = enc.family.index_of(chain)
        var = enc.var_map.get((int(i), c)) if c is not None else None
        if var is not None:
            x[var] = 1
    return x


def encode_kcoloring(G: Graph, k: int) -> ColoringEncoding:
    if k < 1:
        raise ValueError("k must be >= 1")
    model = Model()
    for i in range(G.n):
        for c in range(k):
            model.add_var(0, 1, f"x_{i}_{c}")
    enc = ColoringEncoding(model, G, k)
    _coloring_rows(enc)
    return enc


def encode_mincoloring(G: Graph, palette: int | None = None) -> ColoringEncoding:
    """Min-coloring model over a palette sized by a greedy coloring."""
    if palette is None:
        palette = max(greedy_coloring(G), default=-1) + 1
    palette = max(palette, 1)
    model = Model()
    for i in range(G.n):
        for c in range(palette):
            model.add_var(0, 1, f"x_{i}_{c}")
    enc = ColoringEncoding(model, G, palette, y_offset=model.num_vars)
    for c in range(palette):
        model.add_var(0, 1, f"y_{c}")
    _coloring_rows(enc)
    y = enc.y_offset
    for i in range(G.n):
        for c in range(palette):
            model.add_constraint([(enc.x_index(i, c), 1), (y + c, -1)], LE, 0, "link")
    for c in range(palette - 1):
        model.add_constraint([(y + c + 1, 1), (y + c, -1)], LE, 0, "symmetry")
    model.objective = [0] * y + [1] * palette
    return enc


def _coloring_rows(enc: ColoringEncoding) -> None:
    G, k, model = enc.G, enc.k, enc.model
    for i in range(G.n):
        model.add_constraint([(enc.x_index(i, c), 1) for c in range(k)], EQ, 1, "assign")
    for u, v in G.edges:
        for c in range(k):
            model.add_constraint([(enc.x_index(u, c), 1), (enc.x_index(v, c), 1)], LE, 1, "edge")


def decode_coloring(enc: ColoringEncoding, x: Sequence[int]) -> list[int]:
    if not is_feasible(enc.model, x):
        raise InfeasibleInput("assignment is not feasible for the coloring model")
    return [next(c for c in range(enc.k) if x[enc.x_index(i, c)]) for i in range(enc.G.n)]


def coloring_to_assignment(enc: ColoringEncoding, colors: Sequence[int]) -> list[int]:
    """Warm-start assignment from a color list; out-of-palette entries are left unassigned."""
    x = [0] * enc.model.num_vars
    for i, c in enumerate(colors[:enc.G.n]):
        if 0 <= c < enc.k:
            x[enc.x_index(i, c)] = 1
            if enc.y_offset is not None:
                x[enc.y_offset + c] = 1
    if enc.y_offset is not None:
        # keep the used-color indicators a prefix, as the symmetry rows demand
        top = max((c for c in colors[:enc.G.n] if 0 <= c < enc.k), default=-1)
        for c in range(top + 1):
            x[enc.y_offset + c] = 1
    return x
