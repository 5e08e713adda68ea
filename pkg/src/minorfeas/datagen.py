"""Instance sampling, labeling and instruction/input/output record rendering.

Labeling pipeline per instance:

1. embedding only: zero-phase screen; a rejection is an UNSAT label,
2. exact backtracking search under a node budget (optimizing for embeddings),
3. if the exact search ran out of budget, Feasibility Jump restarts from the
   zero assignment; a feasible point becomes a SAT label,
4. otherwise the instance is dropped.  Heuristic failure never yields UNSAT.

Embedding solutions that are not proven optimal are shrunk with phase 2.
"""

from __future__ import annotations

import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .chains import enumerate_chains
from .encoders import decode_coloring, decode_embedding, encode_embedding, encode_kcoloring
from .errors import ChainBudgetExceeded, EmptyCandidateSet, ModelTooLarge, ResampleLimitExceeded
from .exact import FEASIBLE, INFEASIBLE, Budget, exact_color, exact_embed, min_color
from .fjump import FjConfig, Phase2Config, fj_phase2, fj_search
from .graph import Graph, GraphSpec, generate, top2_info
from .instance import ColoringInstance, EmbeddingInstance, Instance, solution_from_json, solution_to_json
from .milp import zero_assignment
from .rng import Rng, derive_seed
from .screening import zero_phase_screen
from .verify import EMBEDDING, KCOLORING, KINDS, MINCOLORING, parse_candidate, render_answer

SAT, UNSAT, DROPPED = "SAT", "UNSAT", "DROPPED"
ZERO_PHASE, EXACT, FJ, DROPPED_UNKNOWN = "zero_phase", "exact", "fj", "dropped-unknown"


@dataclass(frozen=True)
class Ranges:
    """Sampling ranges; :meth:`desk` shrinks the full-scale ones so exact labeling stays cheap."""

    coloring_n: tuple[int, int] = (10, 300)
    coloring_d: tuple[float, float] = (3.0, 5.2)
    chimera_shapes: tuple[tuple[int, int], ...] = tuple((m, n) for m in range(1, 5) for n in range(1, 5))
    chimera_t: int = 4
    hardware_n: tuple[int, int] = (20, 100)

    @classmethod
    def full(cls) -> "Ranges":
        return cls()

    @classmethod
    def desk(cls) -> "Ranges":
        shapes = tuple((m, n) for m in range(1, 5) for n in range(1, 5) if 8 * m * n <= 40)
        return cls(coloring_n=(10, 60), chimera_shapes=shapes, hardware_n=(20, 40))


@dataclass(frozen=True)
class InstanceSpec:
    task: str
    problem: GraphSpec
    hardware: GraphSpec | None = None
    L: int = 3
    k: int | None = 3
    seed: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {"task": self.task, "problem": self.problem.to_dict(),
                "hardware": self.hardware.to_dict() if self.hardware else None,
                "L": self.L, "k": self.k, "seed": self.seed}

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "InstanceSpec":
        hw = d.get("hardware")
        return cls(d["task"], GraphSpec.from_dict(d["problem"]), GraphSpec.from_dict(hw) if hw else None,
                   int(d.get("L", 3)), d.get("k"), int(d.get("seed", 0)))


def materialize(spec: InstanceSpec) -> Instance:
    if spec.task == EMBEDDING:
        assert spec.hardware is not None
        return EmbeddingInstance(generate(spec.problem), generate(spec.hardware), spec.L)
    return ColoringInstance(generate(spec.problem), spec.k if spec.task == KCOLORING else None)


def sample_instance(task: str, seed: int, paper_scale: bool = False, L: int = 3, k: int = 3,
                    max_resamples: int = 200) -> tuple[InstanceSpec, Instance]:
    """Draw one instance; the same ``(task, seed, paper_scale)`` always gives the same result."""
    if task not in KINDS:
        raise ValueError(f"unknown task {task!r}")
    if task in (KCOLORING, MINCOLORING):
        spec = coloring_spec(task, seed, paper_scale, k)
        return spec, materialize(spec)
    ranges = Ranges.full() if paper_scale else Ranges.desk()
    rng = Rng(seed)
    hw_spec, H = _sample_hardware(rng, seed, ranges, max_resamples)
    for attempt in range(max_resamples):
        lo = max(6, H.n // 5)
        n_p = rng.integers(lo, H.n)
        prob = _problem_spec(rng, n_p, derive_seed(seed, "problem", attempt))
        P = generate(prob)
        if P.n <= H.n and P.m <= H.m:
            spec = InstanceSpec(EMBEDDING, prob, hw_spec, L, None, seed)
            return spec, EmbeddingInstance(P, H, L)
    raise ResampleLimitExceeded(f"no problem graph fits the hardware after {max_resamples} draws")


def coloring_spec(task: str, seed: int, paper_scale: bool = False, k: int = 3) -> InstanceSpec:
    """Parameters of a coloring instance, without building the graph."""
    ranges = Ranges.full() if paper_scale else Ranges.desk()
    rng = Rng(seed)
    n = rng.integers(*ranges.coloring_n)
    d = rng.uniform(*ranges.coloring_d)
    prob = GraphSpec("erdos_renyi", {"n": n, "d": d}, derive_seed(seed, "problem"), remove_isolated=True)
    return InstanceSpec(task, prob, None, 3, k if task == KCOLORING else None, seed)


def _sample_hardware(rng: Rng, seed: int, ranges: Ranges, max_resamples: int) -> tuple[GraphSpec, Graph]:
    if rng.random() < 0.5:
        m, n = rng.choice(ranges.chimera_shapes)
        spec = GraphSpec("chimera", {"m": m, "n": n, "t": ranges.chimera_t}, 0)
        return spec, generate(spec)
    family = rng.choice(("erdos_renyi", "random_regular", "watts_strogatz"))
    n = rng.integers(*ranges.hardware_n)
    if family == "erdos_renyi":
        p = rng.uniform(0.4, 0.7)
        for attempt in range(max_resamples):
            spec = GraphSpec(family, {"n": n, "p": p}, derive_seed(seed, "hardware", attempt))
            g = generate(spec)
            if g.is_connected():
                return spec, g
        raise ResampleLimitExceeded("no connected hardware graph")
    if family == "random_regular":
        d = _parity_fix(n, min(rng.choice((6, 8, 10, 12)), n - 1))
        spec = GraphSpec(family, {"n": n, "d": d}, derive_seed(seed, "hardware"))
        return spec, generate(spec)
    k = _even_below(n, rng.choice((6, 8, 10, 12)))
    spec = GraphSpec(family, {"n": n, "k": k, "beta": rng.uniform(0.05, 0.2)}, derive_seed(seed, "hardware"))
    return spec, generate(spec)


def _problem_spec(rng: Rng, n: int, seed: int) -> GraphSpec:
    family = rng.choice(("erdos_renyi", "barabasi_albert", "watts_strogatz", "random_regular"))
    if family == "erdos_renyi":
        return GraphSpec(family, {"n": n, "p": rng.uniform(0.1, 0.6)}, seed)
    if family == "barabasi_albert":
        return GraphSpec(family, {"n": n, "m": rng.integers(3, min(8, n - 1))}, seed)
    if family == "watts_strogatz":
        k = _even_below(n, rng.choice((2, 4, 6, 8, 10)))
        return GraphSpec(family, {"n": n, "k": k, "beta": rng.uniform(0.05, 0.3)}, seed)
    d = _parity_fix(n, min(rng.choice((4, 6, 8, 10)), n - 1))
    return GraphSpec(family, {"n": n, "d": d}, seed)


def _parity_fix(n: int, d: int) -> int:
    return d - 1 if (n * d) % 2 else d


def _even_below(n: int, k: int) -> int:
    k = min(k, n - 1)
    return k - 1 if k % 2 else k


# -- labeling -----------------------------------------------------------------------

@dataclass(frozen=True)
class LabelBudget:
    exact_nodes: int = 20_000
    exact_time: float | None = None
    fj_restarts: int = 2
    fj_iterations: int = 10_000
    fj_time: float | None = None
    chain_cap: int = 200_000
    max_model_constraints: int = 50_000
    max_model_nonzeros: int = 100_000
    phase2_patience: int = 40


@dataclass
class Label:
    status: str
    provenance: str
    solution: Any = None
    objective: int | None = None
    optimal: bool = False
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"status": self.status, "provenance": self.provenance,
                "solution": solution_to_json(self.solution), "objective": self.objective,
                "optimal": self.optimal, "detail": self.detail}

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "Label":
        sol = d.get("solution")
        return cls(d["status"], d["provenance"], solution_from_json(sol) if sol is not None else None,
                   d.get("objective"), bool(d.get("optimal", False)), dict(d.get("detail", {})))


def label_instance(inst: Instance, budget: LabelBudget | None = None, seed: int = 0) -> Label:
    budget = budget or LabelBudget()
    if isinstance(inst, EmbeddingInstance):
        return _label_embedding(inst, budget, seed)
    if inst.k is None:
        cert = min_color(inst.G, Budget(budget.exact_nodes, budget.exact_time))
        return Label(SAT, EXACT, cert.solution, cert.objective, cert.optimal, {"nodes": cert.nodes})
    cert = exact_color(inst.G, inst.k, Budget(budget.exact_nodes, budget.exact_time))
    if cert.outcome == FEASIBLE:
        return Label(SAT, EXACT, cert.solution, 0, True, {"nodes": cert.nodes})
    if cert.outcome == INFEASIBLE:
        return Label(UNSAT, EXACT, detail={"nodes": cert.nodes})
    enc = encode_kcoloring(inst.G, inst.k)
    for r in range(budget.fj_restarts):
        cfg = FjConfig(budget.fj_iterations, seed=derive_seed(seed, "fj", r), wall_clock_limit=budget.fj_time)
        res = fj_search(enc.model, zero_assignment(enc.model), cfg)
        if res.feasible:
            return Label(SAT, FJ, decode_coloring(enc, res.assignment), 0, False,
                         {"restart": r, "iterations": res.iterations})
    return Label(DROPPED, DROPPED_UNKNOWN, detail={"reason": "budget"})


def _label_embedding(inst: EmbeddingInstance, budget: LabelBudget, seed: int) -> Label:
    P, H, L = inst.P, inst.H, inst.L
    screen = zero_phase_screen(P, H, L)
    if screen.infeasible:
        return Label(UNSAT, ZERO_PHASE, detail={"condition": screen.violated.value, **screen.detail})
    try:
        family = enumerate_chains(H, L, budget.chain_cap)
    except ChainBudgetExceeded:
        return Label(DROPPED, DROPPED_UNKNOWN, detail={"reason": "chain-cap"})
    cert = exact_embed(P, H, L, Budget(budget.exact_nodes, budget.exact_time), optimize=True, family=family)
    if cert.outcome == INFEASIBLE:
        return Label(UNSAT, EXACT, detail={"nodes": cert.nodes})
    p2 = Phase2Config(patience=budget.phase2_patience, seed=derive_seed(seed, "phase2"))
    if cert.outcome == FEASIBLE:
        emb = cert.solution
        if not cert.optimal:
            emb = fj_phase2(P, H, L, emb, p2).embedding
        return Label(SAT, EXACT, emb, sum(len(c) for c in emb.values()), cert.optimal, {"nodes": cert.nodes})
    try:
        enc = encode_embedding(P, H, family, screen.s_min, max_constraints=budget.max_model_constraints,
                               max_nonzeros=budget.max_model_nonzeros)
    except EmptyCandidateSet:
        return Label(UNSAT, EXACT, detail={"nodes": cert.nodes})
    except ModelTooLarge:
        return Label(DROPPED, DROPPED_UNKNOWN, detail={"reason": "model-size"})
    for r in range(budget.fj_restarts):
        cfg = FjConfig(budget.fj_iterations, seed=derive_seed(seed, "fj", r), wall_clock_limit=budget.fj_time)
        res = fj_search(enc.model, zero_assignment(enc.model), cfg)
        if res.feasible:
            emb = fj_phase2(P, H, L, decode_embedding(enc, res.assignment), p2).embedding
            return Label(SAT, FJ, emb, sum(len(c) for c in emb.values()), False,
                         {"restart": r, "iterations": res.iterations})
    return Label(DROPPED, DROPPED_UNKNOWN, detail={"reason": "budget"})


# -- record rendering -------------------------------------------------------------------

EMBEDDING_PROMPT = (
    "Given a problem graph P with {np} nodes labeled 0..{np_last} and a hardware graph G with {nh} nodes, "
    "both undirected and given by edge lists, determine whether P can be minor-embedded into G. "
    "A valid embedding maps each problem node to a connected chain of hardware nodes, chains for different "
    "problem nodes are disjoint, and every problem edge (u,v) must be realized by at least one hardware edge "
    "between the two corresponding chains. Limit the chain size up to {L} nodes. Among feasible embeddings, "
    "minimize the total number of hardware nodes used. {top2} Output exactly one of the following formats: "
    "yes, embedding: {{problem_node: [hardware_nodes], ...}}, total nodes used: {{n_nodes_used}} or no."
)
KCOLORING_PROMPT = (
    "Given an undirected graph with {n} nodes labeled 0..{n_last} and an edge list, decide whether the graph "
    "is {k}-colorable. A valid {k}-coloring assigns each node i a color c_i ∈ {{{palette}}} such that for "
    "every edge (u,v), c_u ≠ c_v. {top2} Output exactly one of: No OR Yes, coloring: [c0,c1,...,c(n-1)]."
)
MINCOLORING_PROMPT = (
    "Given an undirected graph with {n} nodes labeled 0..{n_last} and an edge list, find a coloring that uses "
    "the minimum possible number of colors. A valid coloring assigns each node i a color c_i (a nonnegative "
    "integer) such that for every edge (u,v), c_u ≠ c_v. {top2} Output exactly: min_colors: K, "
    "coloring: [c0,c1,...,c(n-1)]."
)
TOP2_NOTE = ("The input also provides, for each node, up to 2 neighbors with highest degree in the form "
             "Ni:[a,b,#c,#d], where a,b are neighbors and #c,#d are their degrees.")


@dataclass(frozen=True)
class DatasetRecord:
    instruction: str
    input: str
    output: str
    meta: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({"instruction": self.instruction, "input": self.input,
                           "output": self.output, "meta": self.meta}, ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "DatasetRecord":
        d = json.loads(line)
        return cls(d["instruction"], d["input"], d["output"], d.get("meta", {}))


def _bracket_edges(g: Graph) -> str:
    return "[" + ",".join(f"[{u},{v}]" for u, v in g.edges) + "]"


def _paren_edges(g: Graph) -> str:
    return "[" + ",".join(f"({u},{v})" for u, v in g.edges) + "]"


def render_instruction(inst: Instance) -> str:
    if isinstance(inst, EmbeddingInstance):
        return EMBEDDING_PROMPT.format(np=inst.P.n, np_last=inst.P.n - 1, nh=inst.H.n, L=inst.L, top2=TOP2_NOTE)
    G = inst.G
    if inst.k is None:
        return MINCOLORING_PROMPT.format(n=G.n, n_last=G.n - 1, top2=TOP2_NOTE)
    palette = ",".join(str(c) for c in range(inst.k))
    return KCOLORING_PROMPT.format(n=G.n, n_last=G.n - 1, k=inst.k, palette=palette, top2=TOP2_NOTE)


def render_input(inst: Instance) -> str:
    if isinstance(inst, EmbeddingInstance):
        return (f"P edges: {_bracket_edges(inst.P)}\n"
                f"P top2 neighbor-degree info: {top2_info(inst.P)}\n\n"
                f"G edges: {_bracket_edges(inst.H)}\n"
                f"G top2 neighbor-degree info: {top2_info(inst.H)}")
    return f"Edges: {_paren_edges(inst.G)}\n\n{top2_info(inst.G)}"


def render_record(inst: Instance, label: Label, spec: InstanceSpec | None = None) -> DatasetRecord:
    kind = inst.kind
    output = render_answer(kind, label.solution if label.status == SAT else None)
    meta: dict[str, Any] = {"task": kind, "status": label.status, "provenance": label.provenance,
                            "objective": label.objective, "optimal": label.optimal}
    if isinstance(inst, EmbeddingInstance):
        meta.update({"n_problem": inst.P.n, "n_hardware": inst.H.n, "L": inst.L})
    else:
        meta.update({"n": inst.G.n, "k": inst.k})
    if spec is not None:
        meta["spec"] = spec.to_dict()
    return DatasetRecord(render_instruction(inst), render_input(inst), output, meta)


_NODES_RE = re.compile(r"with (\d+) nodes")
_EDGE_RE = re.compile(r"[\[(](\d+),(\d+)[\])]")


def _edges_after(prefix: str, text: str) -> list[tuple[int, int]]:
    line = next(ln for ln in text.splitlines() if ln.startswith(prefix))
    return [(int(a), int(b)) for a, b in _EDGE_RE.findall(line[len(prefix):])]


def parse_record_instance(record: DatasetRecord) -> Instance:
    """Rebuild the instance a record was rendered from (labels stay exact)."""
    task = record.meta.get("task")
    sizes = [int(s) for s in _NODES_RE.findall(record.instruction)]
    if task == EMBEDDING:
        L = int(re.search(r"up to (\d+) nodes", record.instruction).group(1))
        P = Graph.from_edges(sizes[0], _edges_after("P edges: ", record.input))
        H = Graph.from_edges(sizes[1], _edges_after("G edges: ", record.input))
        return EmbeddingInstance(P, H, L)
    G = Graph.from_edges(sizes[0], _edges_after("Edges: ", record.input))
    if task == KCOLORING:
        return ColoringInstance(G, int(re.search(r"is (\d+)-colorable", record.instruction).group(1)))
    return ColoringInstance(G, None)


# -- dataset assembly ----------------------------------------------------------------

def _make_one(args: tuple[str, int, bool, LabelBudget, int, int]) -> tuple[InstanceSpec, Instance, Label]:
    task, seed, paper_scale, budget, L, k = args
    spec, inst = sample_instance(task, seed, paper_scale, L=L, k=k)
    return spec, inst, label_instance(inst, budget, derive_seed(seed, "label"))


def instance_seed(master_seed: int, index: int) -> int:
    """Seed of instance ``index`` in a run seeded with ``master_seed``."""
    return derive_seed(master_seed, "instance", index)


def iter_labeled(task: str, master_seed: int, paper_scale: bool = False, budget: LabelBudget | None = None,
                 jobs: int = 1, L: int = 3, k: int = 3, start: int = 0,
                 stop: int | None = None) -> Iterator[tuple[int, InstanceSpec, Instance, Label]]:
    """Labeled instances in index order; with ``jobs > 1`` labeling runs in worker processes."""
    budget = budget or LabelBudget()
    index = start
    batch = max(1, jobs) * 4
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        while stop is None or index < stop:
            hi = index + batch if stop is None else min(index + batch, stop)
            args = [(task, instance_seed(master_seed, i), paper_scale, budget, L, k) for i in range(index, hi)]
            results = pool.map(_make_one, args) if pool else map(_make_one, args)
            for i, (spec, inst, label) in zip(range(index, hi), results):
                yield i, spec, inst, label
            index = hi
    finally:
        if pool:
            pool.shutdown(cancel_futures=True)


def generate_dataset(task: str, count: int, master_seed: int, paper_scale: bool = False,
                     budget: LabelBudget | None = None, balance: float | None = None, jobs: int = 1,
                     L: int = 3, k: int = 3, max_attempts: int | None = None) -> list[DatasetRecord]:
    """Sample, label and render ``count`` records, skipping dropped instances.

    With ``balance`` set, SAT records are capped at ``round(count*balance)``
    and UNSAT at the remainder; surplus-class instances are rejected.
    """
    sat_quota = None if balance is None else round(count * balance)
    records: list[DatasetRecord] = []
    n_sat = n_unsat = 0
    limit = max_attempts if max_attempts is not None else 100 * max(count, 1)
    if count <= 0:
        return records
    for i, spec, inst, label in iter_labeled(task, master_seed, paper_scale, budget, jobs, L, k, stop=limit):
        if label.status == DROPPED:
            continue
        if sat_quota is not None:
            if label.status == SAT and n_sat >= sat_quota:
                continue
            if label.status == UNSAT and n_unsat >= count - sat_quota:
                continue
        rec = render_record(inst, label, spec)
        rec.meta["index"] = i
        records.append(rec)
        if label.status == SAT:
            n_sat += 1
        else:
            n_unsat += 1
        if len(records) == count:
            break
    return records


def dataset_stats(records: Iterable[DatasetRecord]) -> dict[str, Any]:
    count = sat = unsat = 0
    provenance: dict[str, int] = {}
    sizes: dict[str, int] = {}
    tasks: dict[str, int] = {}
    for rec in records:
        count += 1
        status = rec.meta.get("status")
        sat += status == SAT
        unsat += status == UNSAT
        prov = rec.meta.get("provenance", "unknown")
        provenance[prov] = provenance.get(prov, 0) + 1
        task = rec.meta.get("task", "unknown")
        tasks[task] = tasks.get(task, 0) + 1
        n = rec.meta.get("n_problem", rec.meta.get("n"))
        if n is not None:
            bucket = f"{(n // 10) * 10}-{(n // 10) * 10 + 9}"
            sizes[bucket] = sizes.get(bucket, 0) + 1
    return {
        "count": count,
        "sat": sat,
        "unsat": unsat,
        "sat_fraction": sat / count if count else 0.0,
        "provenance": dict(sorted(provenance.items())),
        "tasks": dict(sorted(tasks.items())),
        "size_histogram": dict(sorted(sizes.items(), key=lambda kv: int(kv[0].split("-")[0]))),
    }


def record_claim(record: DatasetRecord):
    """Parse a record's output back into a :class:`~minorfeas.verify.Candidate`."""
    return parse_candidate(record.output, record.meta["task"])


def load_records(lines: Sequence[str]) -> list[DatasetRecord]:
    return [DatasetRecord.from_json(ln) for ln in lines if ln.strip()]
