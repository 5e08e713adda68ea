"""Enumeration of bounded-size connected hardware subsets ("chains")."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import ChainBudgetExceeded
from .graph import Graph

DEFAULT_CHAIN_CAP = 2_000_000


@dataclass(frozen=True)
class Chain:
    vertices: tuple[int, ...]
    internal_edges: int
    boundary: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


class ChainFamily:
    """All connected vertex subsets of ``graph`` with at most ``L`` vertices.

    Chains are indexed in canonical order (size, then lexicographic on the
    sorted vertex tuple), so model variable layouts built on top are
    reproducible.  Adjacent-chain lists are computed on first request and
    cached; on dense hardware the full adjacency relation is quadratic in the
    chain count.
    """

    def __init__(self, graph: Graph, L: int, chains: list[Chain]):
        self.graph = graph
        self.L = L
        self.chains = chains
        self.by_vertex: list[list[int]] = [[] for _ in range(graph.n)]
        for idx, ch in enumerate(chains):
            for v in ch.vertices:
                self.by_vertex[v].append(idx)
        self._vsets = [frozenset(ch.vertices) for ch in chains]
        self._reach: list[frozenset[int] | None] = [None] * len(chains)
        self._gamma: dict[int, tuple[int, ...]] = {}
        self._index = {ch.vertices: i for i, ch in enumerate(chains)}

    def __len__(self) -> int:
        return len(self.chains)

    def __getitem__(self, idx: int) -> Chain:
        return self.chains[idx]

    def index_of(self, vertices) -> int | None:
        return self._index.get(tuple(sorted(vertices)))

    def vertex_set(self, idx: int) -> frozenset[int]:
        return self._vsets[idx]

    def reach(self, idx: int) -> frozenset[int]:
        """Every vertex adjacent to some vertex of chain ``idx`` (members included
        when they have a neighbor inside the chain)."""
        r = self._reach[idx]
        if r is None:
            adj = self.graph.adj
            r = frozenset(w for u in self.chains[idx].vertices for w in adj[u])
            self._reach[idx] = r
        return r

    def gamma(self, idx: int) -> tuple[int, ...]:
        """Sorted indices of chains joined to chain ``idx`` by a hardware edge.

        Overlapping chains are included; the chain itself is not.
        """
        g = self._gamma.get(idx)
        if g is None:
            found: set[int] = set()
            for w in self.reach(idx):
                found.update(self.by_vertex[w])
            found.discard(idx)
            g = tuple(sorted(found))
            self._gamma[idx] = g
        return g

    def stats(self) -> dict[str, Any]:
        by_size: dict[str, int] = {}
        for ch in self.chains:
            by_size[str(ch.size)] = by_size.get(str(ch.size), 0) + 1
        return {
            "hardware_vertices": self.graph.n,
            "hardware_edges": self.graph.m,
            "L": self.L,
            "count": len(self.chains),
            "count_by_size": by_size,
            "max_boundary": max((len(c.boundary) for c in self.chains), default=0),
        }


def enumerate_chains(H: Graph, L: int, cap: int = DEFAULT_CHAIN_CAP) -> ChainFamily:
    """Enumerate every connected subset of ``H`` with at most ``L`` vertices.

    Each subset is grown from its smallest vertex ("anchor") using an exclusive
    extension set, so every subset is produced exactly once without hashing.
    """
    if L < 1:
        raise ValueError("chain size bound L must be >= 1")
    adj = H.adj
    found: list[tuple[int, ...]] = []

    def extend(sub: list[int], sub_set: set[int], ext: list[int], closed: set[int], anchor: int) -> None:
        found.append(tuple(sorted(sub)))
        if len(found) > cap:
            raise ChainBudgetExceeded(f"more than {cap} chains with L={L}")
        if len(sub) == L:
            return
        ext = list(ext)
        while ext:
            w = ext.pop()
            new_ext = list(ext)
            added = []
            for u in adj[w]:
                if u > anchor and u not in closed:
                    new_ext.append(u)
                    added.append(u)
            closed.update(added)
            sub.append(w)
            sub_set.add(w)
            extend(sub, sub_set, new_ext, closed, anchor)
            sub.pop()
            sub_set.discard(w)
            closed.difference_update(added)

    for v in range(H.n):
        start_ext = [u for u in adj[v] if u > v]
        closed = {v, *start_ext}
        extend([v], {v}, start_ext, closed, v)

    found.sort(key=lambda vs: (len(vs), vs))
    chains = []
    for vs in found:
        members = set(vs)
        internal = 0
        boundary: set[int] = set()
        for u in vs:
            for w in adj[u]:
                if w in members:
                    internal += 1
                else:
                    boundary.add(w)
        chains.append(Chain(vs, internal // 2, tuple(sorted(boundary))))
    return ChainFamily(H, L, chains)


def candidate_chains(i: int, P: Graph, family: ChainFamily, s_min_i: int) -> list[int]:
    """Chains large enough and with enough external neighbors for problem vertex ``i``."""
    deg = P.degree(i)
    return [idx for idx, ch in enumerate(family.chains)
            if ch.size >= s_min_i and len(ch.boundary) >= deg]


def chains_adjacent(family: ChainFamily, c_idx: int, d_idx: int) -> bool:
    """True iff some hardware edge joins chain ``c_idx`` to chain ``d_idx``."""
    return not family.reach(c_idx).isdisjoint(family.vertex_set(d_idx))
