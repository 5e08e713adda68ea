"""Undirected simple graphs, seeded generators and the edge-list file format."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .errors import EdgeListError, GraphConstructionError, InvalidParameters
from .rng import Rng

FAMILIES = ("erdos_renyi", "barabasi_albert", "watts_strogatz", "random_regular", "sbm", "chimera")


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``, sorted
    lexicographically; ``adj`` holds sorted neighbor tuples.  Equality compares
    ``n`` and ``edges`` only.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], strict: bool = True) -> "Graph":
        """Build a graph, rejecting self-loops and (if ``strict``) duplicate edges."""
        if n < 0:
            raise InvalidParameters(f"vertex count must be >= 0, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameters(f"edge ({u},{v}) has an endpoint outside [0,{n})")
            if u == v:
                raise InvalidParameters(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                if strict:
                    raise InvalidParameters(f"duplicate edge {e}")
                continue
            seen.add(e)
        ordered = tuple(sorted(seen))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in ordered:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(n, ordered, tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        # adjacency tuples are sorted but short; linear scan beats bisect here
        return v in a

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(component(self, 0)) == self.n

    def without_isolated(self) -> "Graph":
        """Drop degree-0 vertices, relabeling survivors densely in id order."""
        keep = [v for v in range(self.n) if self.adj[v]]
        if len(keep) == self.n:
            return self
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(len(keep), [(index[u], index[v]) for u, v in self.edges])


def component(g: Graph, start: int, allowed: set[int] | frozenset[int] | None = None) -> set[int]:
    """Vertices reachable from ``start``, optionally restricted to ``allowed``."""
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in seen and (allowed is None or w in allowed):
                seen.add(w)
                queue.append(w)
    return seen


def induces_connected(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    return len(component(g, next(iter(vs)), vs)) == len(vs)


# -- simple deterministic shapes (handy for tests and the CLI) ---------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameters("a simple cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


# -- generators ---------------------------------------------------------------

@dataclass(frozen=True)
class GraphSpec:
    """A reproducible graph recipe: family, family parameters and seed."""

    family: str
    params: Mapping[str, Any]
    seed: int = 0
    remove_isolated: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "params": dict(self.params),
            "seed": self.seed,
            "remove_isolated": self.remove_isolated,
        }

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "GraphSpec":
        return cls(d["family"], dict(d.get("params", {})), int(d.get("seed", 0)),
                   bool(d.get("remove_isolated", False)))


def _int_param(params: Mapping[str, Any], name: str, lo: int | None = None) -> int:
    if name not in params:
        raise InvalidParameters(f"missing parameter {name!r}")
    value = params[name]
    if isinstance(value, bool) or int(value) != value:
        raise InvalidParameters(f"parameter {name!r} must be an integer, got {value!r}")
    value = int(value)
    if lo is not None and value < lo:
        raise InvalidParameters(f"parameter {name!r} must be >= {lo}, got {value}")
    return value


def _prob_param(params: Mapping[str, Any], name: str) -> float:
    if name not in params:
        raise InvalidParameters(f"missing parameter {name!r}")
    p = float(params[name])
    if not 0.0 <= p <= 1.0:
        raise InvalidParameters(f"parameter {name!r} must lie in [0,1], got {p}")
    return p


def generate(spec: GraphSpec) -> Graph:
    """Materialize ``spec``; identical specs always give identical graphs."""
    params = spec.params
    rng = Rng(spec.seed)
    fam = spec.family
    if fam == "erdos_renyi":
        n = _int_param(params, "n", 0)
        if "p" in params:
            p = _prob_param(params, "p")
        elif "d" in params:
            if n < 2:
                raise InvalidParameters("average-degree form needs n >= 2")
            p = float(params["d"]) / (n - 1)
            if not 0.0 <= p <= 1.0:
                raise InvalidParameters(f"d={params['d']} gives p={p} outside [0,1]")
        else:
            raise InvalidParameters("erdos_renyi needs 'p' or 'd'")
        g = erdos_renyi(n, p, rng)
    elif fam == "barabasi_albert":
        g = barabasi_albert(_int_param(params, "n", 1), _int_param(params, "m", 1), rng)
    elif fam == "watts_strogatz":
        g = watts_strogatz(_int_param(params, "n", 0), _int_param(params, "k", 0),
                           _prob_param(params, "beta"), rng)
    elif fam == "random_regular":
        g = random_regular(_int_param(params, "n", 0), _int_param(params, "d", 0), rng,
                           max_tries=int(params.get("max_tries", 100)))
    elif fam == "sbm":
        sizes = params.get("sizes")
        if not sizes or any(int(s) != s or s < 1 for s in sizes):
            raise InvalidParameters("sbm needs a non-empty list of positive block 'sizes'")
        g = stochastic_block(list(map(int, sizes)), _prob_param(params, "p_in"),
                             _prob_param(params, "p_out"), rng)
    elif fam == "chimera":
        g = chimera(_int_param(params, "m", 1), _int_param(params, "n", 1), _int_param(params, "t", 1))
    else:
        raise InvalidParameters(f"unknown graph family {fam!r}; expected one of {FAMILIES}")
    return g.without_isolated() if spec.remove_isolated else g


def erdos_renyi(n: int, p: float, rng: Rng) -> Graph:
    # one draw per vertex pair in lexicographic order
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def barabasi_albert(n: int, m: int, rng: Rng) -> Graph:
    """Preferential attachment: ``m`` initial isolated vertices, then each new
    vertex links to ``m`` distinct targets drawn from the repeated-node pool."""
    if not 1 <= m < n:
        raise InvalidParameters(f"barabasi_albert needs 1 <= m < n, got m={m}, n={n}")
    edges = []
    repeated: list[int] = []
    targets = list(range(m))
    for source in range(m, n):
        edges.extend((t, source) for t in targets)
        repeated.extend(targets)
        repeated.extend([source] * m)
        chosen: list[int] = []
        picked: set[int] = set()
        while len(chosen) < m:
            t = rng.choice(repeated)
            if t not in picked:
                picked.add(t)
                chosen.append(t)
        targets = chosen
    return Graph.from_edges(n, edges)


def watts_strogatz(n: int, k: int, beta: float, rng: Rng) -> Graph:
    """Ring lattice with ``k/2`` neighbors per side, then independent rewiring."""
    if k % 2 or k < 0 or (n > 0 and k >= n):
        raise InvalidParameters(f"watts_strogatz needs even k with 0 <= k < n, got k={k}, n={n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for j in range(1, k // 2 + 1):
            v = (u + j) % n
            nbrs[u].add(v)
            nbrs[v].add(u)
    for j in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + j) % n
            if not rng.bernoulli(beta):
                continue
            if len(nbrs[u]) >= n - 1:
                continue
            w = rng.below(n)
            while w == u or w in nbrs[u]:
                w = rng.below(n)
            nbrs[u].discard(v)
            nbrs[v].discard(u)
            nbrs[u].add(w)
            nbrs[w].add(u)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in nbrs[u] if u < v])


def random_regular(n: int, d: int, rng: Rng, max_tries: int = 100) -> Graph:
    """Uniform-ish d-regular graph via incremental stub pairing with restarts."""
    if d < 0 or (n > 0 and d >= n) or (n * d) % 2:
        raise InvalidParameters(f"random_regular needs 0 <= d < n and n*d even, got n={n}, d={d}")
    if d == 0:
        return Graph.from_edges(n, [])
    for _ in range(max_tries):
        edges = _try_regular(n, d, rng)
        if edges is not None:
            return Graph.from_edges(n, edges)
    raise GraphConstructionError(f"no {d}-regular graph on {n} vertices after {max_tries} tries")


def _try_regular(n: int, d: int, rng: Rng) -> set[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(4 * n * d):
        if not stubs:
            return edges
        leftover: dict[int, int] = {}
        rng.shuffle(stubs)
        for i in range(0, len(stubs) - 1, 2):
            a, b = stubs[i], stubs[i + 1]
            e = (a, b) if a < b else (b, a)
            if a != b and e not in edges:
                edges.add(e)
            else:
                leftover[a] = leftover.get(a, 0) + 1
                leftover[b] = leftover.get(b, 0) + 1
        if not _pairable(leftover, edges):
            return None
        stubs = [v for v, c in sorted(leftover.items()) for _ in range(c)]
    return edges if not stubs else None


def _pairable(leftover: dict[int, int], edges: set[tuple[int, int]]) -> bool:
    if not leftover:
        return True
    vs = sorted(leftover)
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if (a, b) not in edges:
                return True
    return False


def stochastic_block(sizes: list[int], p_in: float, p_out: float, rng: Rng) -> Graph:
    block = [b for b, s in enumerate(sizes) for _ in range(s)]
    n = len(block)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < (p_in if block[u] == block[v] else p_out):
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def chimera_index(m: int, n: int, t: int, row: int, col: int, shore: int, k: int) -> int:
    """Linear label of qubit ``k`` on ``shore`` (0 left, 1 right) of cell (row, col)."""
    return ((row * n + col) * 2 + shore) * t + k


def chimera(m: int, n: int, t: int) -> Graph:
    """Chimera lattice of ``m x n`` unit cells, each a complete bipartite K_{t,t}.

    Cells are numbered row-major; inside a cell the ``t`` left-shore qubits come
    before the ``t`` right-shore ones.  Left-shore qubits couple to the same
    position in the cell below, right-shore qubits to the cell on the right.
    """
    if m < 1 or n < 1 or t < 1:
        raise InvalidParameters(f"chimera needs m, n, t >= 1, got {(m, n, t)}")
    q = lambda r, c, s, k: chimera_index(m, n, t, r, c, s, k)  # noqa: E731
    edges = []
    for r in range(m):
        for c in range(n):
            for a in range(t):
                for b in range(t):
                    edges.append((q(r, c, 0, a), q(r, c, 1, b)))
                if r + 1 < m:
                    edges.append((q(r, c, 0, a), q(r + 1, c, 0, a)))
                if c + 1 < n:
                    edges.append((q(r, c, 1, a), q(r, c + 1, 1, a)))
    return Graph.from_edges(2 * m * n * t, edges)


# -- file format --------------------------------------------------------------

def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_dict(doc: Any) -> Graph:
    if not isinstance(doc, dict):
        raise EdgeListError("edge-list document must be a JSON object")
    n = doc.get("n")
    edges = doc.get("edges")
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise EdgeListError(f"'n' must be a non-negative integer, got {n!r}")
    if not isinstance(edges, list):
        raise EdgeListError("'edges' must be a list of [u, v] pairs")
    pairs = []
    for idx, e in enumerate(edges):
        if (not isinstance(e, list) or len(e) != 2
                or any(isinstance(x, bool) or not isinstance(x, int) for x in e)):
            raise EdgeListError(f"edge #{idx} is not a pair of integers: {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Graph.from_edges(n, pairs, strict=True)
    except InvalidParameters as exc:
        raise EdgeListError(str(exc)) from None


def load_edge_list(text: str) -> Graph:
    """Parse ``{"n": N, "edges": [[u, v], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EdgeListError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    return graph_from_dict(doc)


def dump_edge_list(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), separators=(",", ":"))


# -- annotations --------------------------------------------------------------

def top2_info(g: Graph) -> str:
    """Per-vertex ``Ni:[a,b,#c,#d]`` strings naming the two highest-degree
    neighbors (ties to the smaller id) and their degrees."""
    deg = g.degrees()
    parts = []
    for v in range(g.n):
        best = sorted(g.adj[v], key=lambda u: (-deg[u], u))[:2]
        if not best:
            parts.append(f"N{v}:[]")
        else:
            ids = ",".join(str(u) for u in best)
            degs = ",".join(f"#{deg[u]}" for u in best)
            parts.append(f"N{v}:[{ids},{degs}]")
    return "; ".join(parts)
