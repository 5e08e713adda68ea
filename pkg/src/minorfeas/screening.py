"""Zero-phase infeasibility screening for bounded-chain minor embedding.

Three necessary conditions are checked before any enumeration or search,
cheapest first:

* degree bound: every problem vertex needs a chain of at most ``L`` vertices
  with enough outgoing hardware edges,
* vertex budget: the minimum chain sizes must fit in the hardware,
* edge budget: chain spanning edges plus one witness edge per problem edge
  must fit in the hardware edge set.

A chain of ``s`` vertices in a graph of maximum degree ``D`` is left by at
most ``s*D - 2*(s-1) = s*(D-2) + 2`` hardware edges, which gives the chain-size
lower bound computed by :func:`s_min`.  The trivial rejections
``|V_H| < |V_P|`` and ``|E_H| < |E_P|`` are special cases of the two budget
checks because every chain has at least one vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .graph import Graph

PASS = "Pass"
INFEASIBLE = "CertifiedInfeasible"


class Condition(str, Enum):
    DEGREE_BOUND = "DegreeBound"
    VERTEX_BUDGET = "VertexBudget"
    EDGE_BUDGET = "EdgeBudget"


@dataclass(frozen=True)
class ScreenResult:
    verdict: str
    violated: Condition | None = None
    detail: dict[str, Any] = field(default_factory=dict)
    s_min: tuple[int, ...] | None = None

    @property
    def infeasible(self) -> bool:
        return self.verdict == INFEASIBLE

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"verdict": self.verdict}
        if self.violated is not None:
            out["violated"] = self.violated.value
            out["detail"] = self.detail
        else:
            out["s_min"] = list(self.s_min or ())
        return out


def s_min(deg_p: int, delta_h: int, L: int) -> int | None:
    """Smallest chain size able to realize ``deg_p`` problem edges, or ``None``
    if no chain of at most ``L`` vertices can."""
    if delta_h <= 2:
        # at most two hardware edges leave any connected chain here
        return 1 if deg_p <= 2 else None
    need = max(1, -(-(deg_p - 2) // (delta_h - 2)))
    return need if need <= L else None


def degree_capacity(delta_h: int, L: int) -> int:
    """Largest problem degree supportable by a chain of at most ``L`` vertices."""
    if delta_h <= 2:
        return 2
    return L * (delta_h - 2) + 2


def zero_phase_screen(P: Graph, H: Graph, L: int) -> ScreenResult:
    if L < 1:
        raise ValueError("chain size bound L must be >= 1")
    delta_h = H.max_degree()
    sizes = []
    for i in range(P.n):
        d = P.degree(i)
        s = s_min(d, delta_h, L)
        if s is None:
            return ScreenResult(INFEASIBLE, Condition.DEGREE_BOUND, {
                "vertex": i, "degree": d, "capacity": degree_capacity(delta_h, L),
                "max_hardware_degree": delta_h, "L": L,
            })
        sizes.append(s)
    need_v = sum(sizes)
    if need_v > H.n:
        return ScreenResult(INFEASIBLE, Condition.VERTEX_BUDGET, {"lhs": need_v, "rhs": H.n})
    need_e = P.m + sum(s - 1 for s in sizes)
    if need_e > H.m:
        return ScreenResult(INFEASIBLE, Condition.EDGE_BUDGET, {"lhs": need_e, "rhs": H.m})
    return ScreenResult(PASS, s_min=tuple(sizes))
