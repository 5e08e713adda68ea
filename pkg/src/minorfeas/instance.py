"""Problem instances and their JSON file format.

An instance file is a small manifest holding the paired edge lists::

    {"task": "embedding", "L": 3, "P": {"n": .., "edges": [..]}, "H": {"n": .., "edges": [..]}}
    {"task": "kcoloring", "k": 3, "G": {"n": .., "edges": [..]}}
    {"task": "mincoloring", "G": {"n": .., "edges": [..]}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping, Sequence, Union

from .errors import InvalidParameters
from .graph import Graph, graph_from_dict, graph_to_dict
from .verify import EMBEDDING, KCOLORING, MINCOLORING, Violation, verify_coloring, verify_embedding


@dataclass(frozen=True)
class EmbeddingInstance:
    P: Graph
    H: Graph
    L: int = 3
    kind: str = EMBEDDING

    def check(self, solution: Mapping[int, Sequence[int]]) -> list[Violation]:
        return verify_embedding(self.P, self.H, self.L, solution)

    def objective(self, solution: Mapping[int, Sequence[int]]) -> int:
        return sum(len(c) for c in solution.values())

    def to_dict(self) -> dict[str, Any]:
        return {"task": EMBEDDING, "L": self.L, "P": graph_to_dict(self.P), "H": graph_to_dict(self.H)}


@dataclass(frozen=True)
class ColoringInstance:
    """k-coloring when ``k`` is set, min-coloring when it is ``None``."""

    G: Graph
    k: int | None = 3

    @property
    def kind(self) -> str:
        return KCOLORING if self.k is not None else MINCOLORING

    def check(self, solution: Sequence[int]) -> list[Violation]:
        return verify_coloring(self.G, self.k, solution)

    def objective(self, solution: Sequence[int]) -> int:
        # feasibility-only task: any valid certificate is equally good
        if self.k is not None:
            return 0
        return len(set(solution))

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"task": self.kind, "G": graph_to_dict(self.G)}
        if self.k is not None:
            out["k"] = self.k
        return out


Instance = Union[EmbeddingInstance, ColoringInstance]


def instance_from_dict(doc: Mapping[str, Any]) -> Instance:
    task = doc.get("task")
    if task == EMBEDDING:
        return EmbeddingInstance(graph_from_dict(doc["P"]), graph_from_dict(doc["H"]), int(doc.get("L", 3)))
    if task == KCOLORING:
        return ColoringInstance(graph_from_dict(doc["G"]), int(doc.get("k", 3)))
    if task == MINCOLORING:
        return ColoringInstance(graph_from_dict(doc["G"]), None)
    raise InvalidParameters(f"unknown task {task!r}")


def load_instance(text: str) -> Instance:
    return instance_from_dict(json.loads(text))


def dump_instance(inst: Instance) -> str:
    return json.dumps(inst.to_dict(), separators=(",", ":"))


def solution_to_json(solution: Any) -> Any:
    if isinstance(solution, Mapping):
        return {str(k): list(v) for k, v in sorted(solution.items(), key=lambda kv: int(kv[0]))}
    return list(solution) if solution is not None else None


def solution_from_json(doc: Any) -> Any:
    if isinstance(doc, Mapping):
        return {int(k): [int(v) for v in chain] for k, chain in doc.items()}
    return [int(c) for c in doc]
