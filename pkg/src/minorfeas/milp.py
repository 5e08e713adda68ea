"""Linear feasibility models over bounded integer variables.

Coefficients, bounds, right-hand sides and activities are Python ints, so
feasibility is decided exactly.  Constraints are either ``a.x <= b`` or
``a.x == b``; an equality's violation is ``|a.x - b|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

LE = "<="
EQ = "=="


@dataclass(frozen=True)
class Constraint:
    terms: tuple[tuple[int, int], ...]
    sense: str
    rhs: int
    tag: str = ""


class Model:
    """Variables with integer bounds plus a list of sparse linear constraints.

    Build it with :meth:`add_var` / :meth:`add_constraint`; treat it as
    read-only afterwards.  ``objective`` is only used to rank solutions.
    """

    def __init__(self) -> None:
        self.lower: list[int] = []
        self.upper: list[int] = []
        self.names: list[str] = []
        self.constraints: list[Constraint] = []
        self.objective: list[int] | None = None
        self._cols: list[list[tuple[int, int]]] | None = None

    @property
    def num_vars(self) -> int:
        return len(self.lower)

    @property
    def num_constraints(self) -> int:
        return len(self.constraints)

    def add_var(self, lower: int = 0, upper: int = 1, name: str | None = None) -> int:
        if lower > upper:
            raise ValueError(f"empty domain [{lower}, {upper}]")
        self.lower.append(int(lower))
        self.upper.append(int(upper))
        self.names.append(name if name is not None else f"v{len(self.lower) - 1}")
        self._cols = None
        return len(self.lower) - 1

    def add_constraint(self, terms: Iterable[tuple[int, int]], sense: str, rhs: int, tag: str = "") -> int:
        if sense not in (LE, EQ):
            raise ValueError(f"unknown sense {sense!r}")
        merged: dict[int, int] = {}
        for var, coef in terms:
            if not 0 <= var < self.num_vars:
                raise IndexError(f"variable {var} out of range")
            merged[var] = merged.get(var, 0) + int(coef)
        row = tuple(sorted((v, a) for v, a in merged.items() if a != 0))
        self.constraints.append(Constraint(row, sense, int(rhs), tag))
        self._cols = None
        return len(self.constraints) - 1

    @property
    def var_to_constraints(self) -> list[list[tuple[int, int]]]:
        """For each variable, the ``(constraint index, coefficient)`` pairs mentioning it."""
        if self._cols is None:
            cols: list[list[tuple[int, int]]] = [[] for _ in range(self.num_vars)]
            for ci, con in enumerate(self.constraints):
                for v, a in con.terms:
                    cols[v].append((ci, a))
            self._cols = cols
        return self._cols

    def stats(self) -> dict:
        by_tag: dict[str, int] = {}
        for con in self.constraints:
            by_tag[con.tag or "untagged"] = by_tag.get(con.tag or "untagged", 0) + 1
        return {
            "variables": self.num_vars,
            "constraints": self.num_constraints,
            "nonzeros": sum(len(c.terms) for c in self.constraints),
            "constraints_by_class": dict(sorted(by_tag.items())),
        }


def activity(model: Model, x: Sequence[int], i: int) -> int:
    return sum(a * x[v] for v, a in model.constraints[i].terms)


def violation(model: Model, x: Sequence[int], i: int) -> int:
    con = model.constraints[i]
    d = sum(a * x[v] for v, a in con.terms) - con.rhs
    if con.sense == EQ:
        return abs(d)
    return d if d > 0 else 0


def weighted_infeasibility(model: Model, x: Sequence[int], w: Sequence[float]) -> float:
    if len(w) != model.num_constraints:
        raise ValueError("need one weight per constraint")
    return sum(wi * violation(model, x, i) for i, wi in enumerate(w))


def is_feasible(model: Model, x: Sequence[int]) -> bool:
    if len(x) != model.num_vars:
        return False
    if any(not lo <= xv <= hi for xv, lo, hi in zip(x, model.lower, model.upper)):
        return False
    return all(violation(model, x, i) == 0 for i in range(model.num_constraints))


def objective_value(model: Model, x: Sequence[int]) -> int | None:
    if model.objective is None:
        return None
    return sum(c * xv for c, xv in zip(model.objective, x))


def clamp(model: Model, x: Sequence[int]) -> list[int]:
    """Project a length-matched assignment onto the variable bounds."""
    if len(x) != model.num_vars:
        raise ValueError(f"assignment has {len(x)} values, model has {model.num_vars} variables")
    return [min(max(int(v), lo), hi) for v, lo, hi in zip(x, model.lower, model.upper)]


def zero_assignment(model: Model) -> list[int]:
    return clamp(model, [0] * model.num_vars)


def dump_model(model: Model) -> str:
    """Plain-text dump: a header, one bounds line per variable, one line per constraint."""
    lines = [f"vars {model.num_vars} constraints {model.num_constraints}"]
    for j in range(model.num_vars):
        lines.append(f"var {j} {model.names[j]} [{model.lower[j]},{model.upper[j]}]")
    for i, con in enumerate(model.constraints):
        lhs = " ".join(f"{a:+d}*x{v}" for v, a in con.terms) or "0"
        tag = f" #{con.tag}" if con.tag else ""
        lines.append(f"c{i}: {lhs} {con.sense} {con.rhs}{tag}")
    return "\n".join(lines) + "\n"
