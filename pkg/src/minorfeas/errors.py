"""Exception types shared across the package."""

from __future__ import annotations


class MinorFeasError(Exception):
    """Base class for all package errors."""


class InvalidParameters(MinorFeasError, ValueError):
    pass


class GraphConstructionError(MinorFeasError):
    """A randomized construction gave up after its retry budget."""


class EdgeListError(MinorFeasError, ValueError):
    """Malformed or invalid edge-list document.

    ``lineno`` and ``colno`` are 1-based and point into the offending text when
    the failure is syntactic; they are ``None`` for structural errors.
    """

    def __init__(self, msg: str, lineno: int | None = None, colno: int | None = None):
        self.lineno = lineno
        self.colno = colno
        where = f" (line {lineno}, column {colno})" if lineno is not None else ""
        super().__init__(msg + where)


class ChainBudgetExceeded(MinorFeasError):
    pass


class ModelTooLarge(MinorFeasError):
    pass


class EmptyCandidateSet(MinorFeasError):
    """Some problem vertex has no admissible chain; the instance is infeasible."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"problem vertex {vertex} has no candidate chain")


class InfeasibleInput(MinorFeasError, ValueError):
    """An operation that requires a feasible solution received an infeasible one."""


class ResampleLimitExceeded(MinorFeasError):
    pass
