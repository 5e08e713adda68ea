"""Solution verifiers, the candidate answer grammar and Best-of-N selection.

Answer grammar (one line, case-insensitive keywords):

* embedding:    ``yes, embedding: {"0": [6,14], "1": [4], ...}, total nodes used: 19`` or ``no``
  (the closing brace may also come after the total, as in older samples)
* k-coloring:   ``Yes, coloring: [0, 1, 2, ...]`` or ``No``
* min-coloring: ``min_colors: K, coloring: [c0, c1, ...]``
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Protocol, Sequence

from .graph import Graph, induces_connected

EMBEDDING = "embedding"
KCOLORING = "kcoloring"
MINCOLORING = "mincoloring"
KINDS = (EMBEDDING, KCOLORING, MINCOLORING)


@dataclass(frozen=True)
class Violation:
    tag: str
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"tag": self.tag, **self.detail}


def verify_embedding(P: Graph, H: Graph, L: int, emb: Mapping[int, Sequence[int]]) -> list[Violation]:
    """All ways ``emb`` fails to be a minor embedding of ``P`` into ``H`` with
    chains of at most ``L`` vertices; an empty list means valid."""
    out: list[Violation] = []
    chains: dict[int, list[int]] = {}
    for key, chain in emb.items():
        i = int(key)
        if not 0 <= i < P.n:
            out.append(Violation("UnknownVertex", {"problem_vertex": i}))
            continue
        chains[i] = list(chain)
    owner: dict[int, int] = {}
    for i in range(P.n):
        chain = chains.get(i)
        if not chain:
            out.append(Violation("Missing", {"problem_vertex": i}))
            continue
        bad = sorted({v for v in chain if not (isinstance(v, int) and 0 <= v < H.n)})
        if bad:
            out.append(Violation("UnknownVertex", {"problem_vertex": i, "hardware_vertices": bad}))
        good = [v for v in chain if isinstance(v, int) and 0 <= v < H.n]
        members = set(good)
        if len(members) != len(good):
            out.append(Violation("Overlap", {"problem_vertices": [i, i], "hardware_vertex":
                                             next(v for v in good if good.count(v) > 1)}))
        for v in sorted(members):
            if v in owner:
                out.append(Violation("Overlap", {"problem_vertices": [owner[v], i], "hardware_vertex": v}))
            else:
                owner[v] = i
        if members and not induces_connected(H, members):
            out.append(Violation("Disconnected", {"problem_vertex": i}))
        if len(members) > L:
            out.append(Violation("Oversize", {"problem_vertex": i, "size": len(members), "L": L}))
    for u, v in P.edges:
        cu, cv = chains.get(u), chains.get(v)
        if not cu or not cv:
            continue
        target = {w for w in cv if isinstance(w, int) and 0 <= w < H.n}
        if not any(w in target for a in cu if isinstance(a, int) and 0 <= a < H.n for w in H.adj[a]):
            out.append(Violation("UnrealizedEdge", {"edge": [u, v]}))
    return out


def verify_coloring(G: Graph, k: int | None, colors: Sequence[int]) -> list[Violation]:
    """Violations of a proper coloring; ``k=None`` allows any non-negative color."""
    out: list[Violation] = []
    if len(colors) != G.n:
        out.append(Violation("Length", {"expected": G.n, "got": len(colors)}))
    for i, c in enumerate(colors[:G.n]):
        if not isinstance(c, int) or c < 0 or (k is not None and c >= k):
            out.append(Violation("OutOfRange", {"vertex": i, "color": c}))
    for u, v in G.edges:
        if u < len(colors) and v < len(colors) and colors[u] == colors[v]:
            out.append(Violation("Conflict", {"edge": [u, v]}))
    return out


def error_ratio(G: Graph, colors: Sequence[int]) -> float:
    """Fraction of edges whose endpoints share a color."""
    if G.m == 0:
        return 0.0
    bad = sum(1 for u, v in G.edges if u < len(colors) and v < len(colors) and colors[u] == colors[v])
    return bad / G.m


# -- candidate grammar ----------------------------------------------------------

YES, NO, MALFORMED = "yes", "no", "malformed"


@dataclass(frozen=True)
class Candidate:
    claim: str
    solution: Any = None
    objective_claim: int | None = None
    error: str | None = None


_NO_RE = re.compile(r"^\s*no\s*\.?\s*$", re.IGNORECASE)
_EMB_RE = re.compile(
    r"^\s*yes\s*,\s*embedding\s*:\s*(?P<body>\{.*?)\s*,?\s*total\s+nodes\s+used\s*:\s*(?P<n>\d+)\s*(?P<close>\})?\s*$",
    re.IGNORECASE | re.DOTALL)
_COL_RE = re.compile(r"^\s*yes\s*,\s*coloring\s*:\s*(?P<list>\[.*\])\s*$", re.IGNORECASE | re.DOTALL)
_MIN_RE = re.compile(r"^\s*min_colors\s*:\s*(?P<k>\d+)\s*,\s*coloring\s*:\s*(?P<list>\[.*\])\s*$",
                     re.IGNORECASE | re.DOTALL)


def _int_list(text: str) -> list[int] | None:
    try:
        value = json.loads(text)
    except json.JSONDecodeError:
        return None
    if not isinstance(value, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in value):
        return None
    return value


def parse_candidate(text: str, kind: str) -> Candidate:
    if kind not in KINDS:
        raise ValueError(f"unknown answer kind {kind!r}")
    if _NO_RE.match(text):
        return Candidate(NO)
    if kind == EMBEDDING:
        m = _EMB_RE.match(text)
        if not m:
            return Candidate(MALFORMED, error="does not match the embedding grammar")
        body = m.group("body")
        balanced = body.endswith("}")
        if balanced == bool(m.group("close")):
            return Candidate(MALFORMED, error="unbalanced braces around the embedding")
        try:
            raw = json.loads(body if balanced else body + "}")
        except json.JSONDecodeError as exc:
            return Candidate(MALFORMED, error=f"embedding is not valid JSON: {exc.msg}")
        if not isinstance(raw, dict):
            return Candidate(MALFORMED, error="embedding is not a mapping")
        emb: dict[int, list[int]] = {}
        for key, chain in raw.items():
            if not re.fullmatch(r"\d+", str(key)) or not isinstance(chain, list) or any(
                    isinstance(v, bool) or not isinstance(v, int) for v in chain):
                return Candidate(MALFORMED, error=f"bad embedding entry {key!r}")
            emb[int(key)] = chain
        return Candidate(YES, emb, int(m.group("n")))
    if kind == KCOLORING:
        m = _COL_RE.match(text)
        colors = _int_list(m.group("list")) if m else None
        if colors is None:
            return Candidate(MALFORMED, error="does not match the coloring grammar")
        return Candidate(YES, colors)
    m = _MIN_RE.match(text)
    colors = _int_list(m.group("list")) if m else None
    if colors is None:
        return Candidate(MALFORMED, error="does not match the min-coloring grammar")
    return Candidate(YES, colors, int(m.group("k")))


def render_embedding_answer(emb: Mapping[int, Sequence[int]] | None) -> str:
    if emb is None:
        return "no"
    body = ", ".join(f'"{i}": [{",".join(str(v) for v in emb[i])}]' for i in sorted(emb))
    total = sum(len(c) for c in emb.values())
    return f"yes, embedding: {{{body}}}, total nodes used: {total}"


def render_coloring_answer(colors: Sequence[int] | None) -> str:
    if colors is None:
        return "No"
    return f"Yes, coloring: [{', '.join(str(c) for c in colors)}]"


def render_mincoloring_answer(colors: Sequence[int]) -> str:
    k = len(set(colors))
    return f"min_colors: {k}, coloring: [{', '.join(str(c) for c in colors)}]"


def render_answer(kind: str, solution: Any) -> str:
    if kind == EMBEDDING:
        return render_embedding_answer(solution)
    if kind == KCOLORING:
        return render_coloring_answer(solution)
    if kind == MINCOLORING:
        return render_mincoloring_answer(solution)
    raise ValueError(f"unknown answer kind {kind!r}")


# -- Best-of-N ------------------------------------------------------------------

class Checkable(Protocol):
    kind: str

    def check(self, solution: Any) -> list[Violation]: ...

    def objective(self, solution: Any) -> int: ...


@dataclass(frozen=True)
class Verdict:
    decision: str
    basis: str
    chosen: Any = None
    chosen_index: int | None = None
    objective: int | None = None
    valid_count: int = 0
    no_votes: int = 0
    n: int = 0

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"decision": self.decision, "basis": self.basis, "n": self.n,
                               "valid": self.valid_count, "no_votes": self.no_votes}
        if self.chosen is not None:
            out["chosen_index"] = self.chosen_index
            out["objective"] = self.objective
            out["solution"] = ({str(k): list(v) for k, v in sorted(self.chosen.items())}
                               if isinstance(self.chosen, dict) else list(self.chosen))
        return out


def best_of_n(candidates: Sequence[Candidate], instance: Checkable,
              objective: Callable[[Any], int] | None = None) -> Verdict:
    """Pick the best verified candidate, else fall back to a strict-majority
    "no" vote (ties and malformed-heavy pools resolve to "yes")."""
    if not candidates:
        raise ValueError("best_of_n needs at least one candidate")
    score = objective or instance.objective
    n = len(candidates)
    best: tuple[int, int] | None = None
    valid = 0
    for idx, cand in enumerate(candidates):
        if cand.claim != YES or cand.solution is None:
            continue
        if instance.check(cand.solution):
            continue
        valid += 1
        value = score(cand.solution)
        if best is None or value < best[0]:
            best = (value, idx)
    no_votes = sum(1 for c in candidates if c.claim == NO)
    if best is not None:
        value, idx = best
        return Verdict(YES, "Certificate", candidates[idx].solution, idx, value, valid, no_votes, n)
    decision = NO if 2 * no_votes > n else YES
    return Verdict(decision, "MajorityVote", None, None, None, 0, no_votes, n)
