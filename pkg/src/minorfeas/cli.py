"""Command-line entry point.

Every result goes to stdout (or ``--out``) as one JSON document; diagnostics
go to stderr.  Exit status: 0 success, 1 domain negative (infeasible, no
solution found, invalid certificate), 2 usage or input error.

Global flags may also come from ``MINORFEAS_<FLAG>`` environment variables
(``MINORFEAS_SEED=7``, ``MINORFEAS_TIME_LIMIT=5``); explicit flags win.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import re
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__
from .bench import BenchConfig, rows_to_csv, run_bench
from .chains import enumerate_chains
from .datagen import (DROPPED, SAT, Label, LabelBudget, dataset_stats, generate_dataset, instance_seed,
                      label_instance, load_records, render_record, sample_instance)
from .encoders import (coloring_to_assignment, decode_coloring, decode_embedding, embedding_to_assignment,
                       encode_embedding, encode_kcoloring, encode_mincoloring)
from .errors import ChainBudgetExceeded, EmptyCandidateSet, MinorFeasError, ModelTooLarge
from .exact import FEASIBLE, Budget, exact_color, exact_embed, min_color
from .fjump import FjConfig, Phase2Config, fj_phase2, fj_search
from .graph import FAMILIES, GraphSpec, dump_edge_list, generate, graph_from_dict
from .instance import ColoringInstance, EmbeddingInstance, Instance, load_instance, solution_from_json
from .milp import dump_model, is_feasible, violation, zero_assignment
from .rng import derive_seed
from .screening import zero_phase_screen
from .verify import EMBEDDING, KINDS, MALFORMED, NO, best_of_n, parse_candidate

log = logging.getLogger("minorfeas")

ENV_PREFIX = "MINORFEAS_"
EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _env(name: str, default: Any, cast: Callable[[str], Any]) -> Any:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw == "":
        return default
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"bad value {raw!r} for {ENV_PREFIX + name}") from None


def _flag(raw: str) -> bool:
    if raw.lower() in ("1", "true", "yes", "on"):
        return True
    if raw.lower() in ("0", "false", "no", "off"):
        return False
    raise ValueError(raw)


def _global_parser() -> argparse.ArgumentParser:
    g = argparse.ArgumentParser(add_help=False)
    opt = g.add_argument_group("global options")
    opt.add_argument("--seed", type=int, default=_env("SEED", 0, int), help="master seed (default 0)")
    opt.add_argument("--jobs", type=int, default=_env("JOBS", 1, int), help="worker processes for dataset/bench")
    opt.add_argument("--time-limit", type=float, default=_env("TIME_LIMIT", None, float),
                     help="wall-clock limit in seconds (makes results timing dependent)")
    opt.add_argument("--iters", type=int, default=_env("ITERS", None, int), help="FJ iteration budget")
    opt.add_argument("--node-limit", type=int, default=_env("NODE_LIMIT", None, int),
                     help="exact search node budget")
    opt.add_argument("--chain-limit", "-L", dest="chain_limit", type=int, default=_env("CHAIN_LIMIT", None, int),
                     help="maximum chain size L (default: the instance's own, else 3)")
    opt.add_argument("--k", type=int, default=_env("K", None, int), help="number of colors for k-coloring")
    opt.add_argument("--paper-scale", action="store_true", default=_env("PAPER_SCALE", False, _flag),
                     help="use full-scale size ranges instead of desk-scale ones")
    opt.add_argument("--warm-start", default=_env("WARM_START", None, str), metavar="FILE",
                     help="warm start: variable-name map, domain solution or candidate text")
    opt.add_argument("--n-candidates", type=int, default=_env("N_CANDIDATES", None, int),
                     help="expected number of candidates for select")
    opt.add_argument("--out", "-o", default=None, metavar="FILE", help="write the primary output here")
    opt.add_argument("--manifest", default=None, metavar="FILE",
                     help="run manifest path (default: <out>.manifest.json when --out is given)")
    opt.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    return g


GLOBALS = ("seed", "jobs", "time_limit", "iters", "node_limit", "chain_limit", "k", "paper_scale",
           "warm_start", "n_candidates")


def build_parser() -> argparse.ArgumentParser:
    common = _global_parser()
    parser = argparse.ArgumentParser(prog="minorfeas", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, func: Callable, help: str, parent=sub) -> argparse.ArgumentParser:
        p = parent.add_parser(name, parents=[common], help=help, description=help)
        p.set_defaults(func=func)
        return p

    p = add("gen-graph", cmd_gen_graph, "generate a graph as a JSON edge list")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--param", "-p", action="append", default=[], metavar="NAME=VALUE",
                   help="generator parameter, repeatable (e.g. -p n=20 -p p=0.3)")
    p.add_argument("--remove-isolated", action="store_true")

    p = add("screen", cmd_screen, "zero-phase screen of embedding instances (one JSON line each)")
    p.add_argument("instances", nargs="+")

    p = add("enumerate-chains", cmd_enumerate_chains, "chain family statistics for a hardware graph")
    p.add_argument("graph", help="edge list file or embedding instance (its hardware graph is used)")

    p = add("encode", cmd_encode, "build the feasibility model and report its statistics")
    p.add_argument("instance")
    p.add_argument("--dump-model", metavar="FILE", help="also write a plain-text model dump")

    p = add("solve", cmd_solve, "solve an instance with the exact search or Feasibility Jump")
    p.add_argument("instance")
    p.add_argument("--method", choices=("fj", "exact"), default="fj")
    p.add_argument("--optimize", action="store_true", help="exact: minimize total chain vertices")
    p.add_argument("--no-phase2", action="store_true", help="fj: skip chain shrinking")

    p = add("repair", cmd_repair, "run Feasibility Jump from a warm start (--warm-start FILE)")
    p.add_argument("instance")
    p.add_argument("--no-phase2", action="store_true")

    p = add("verify", cmd_verify, "check a solution (JSON or answer text) against an instance")
    p.add_argument("instance")
    p.add_argument("solution")

    p = add("select", cmd_select, "Best-of-N selection over candidate answer files")
    p.add_argument("instance")
    p.add_argument("candidates", nargs="+")

    ds = sub.add_parser("dataset", help="instance sampling, labeling and record rendering")
    dsub = ds.add_subparsers(dest="dataset_command", required=True, metavar="ACTION")
    p = add("sample", cmd_dataset_sample, "sample one instance file", dsub)
    p.add_argument("--task", choices=KINDS, required=True)
    p.add_argument("--index", type=int, default=0, help="instance index under the master seed")
    p = add("generate", cmd_dataset_generate, "sample, label and render a JSONL dataset", dsub)
    p.add_argument("--task", choices=KINDS, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--balance", type=float, default=None, help="target SAT fraction (rejection sampling)")
    p.add_argument("--output", required=True, help="JSONL record file")
    p.add_argument("--plot", metavar="PNG", help="also write a stats figure")
    p = add("label", cmd_dataset_label, "label an instance (screen, exact, FJ)", dsub)
    p.add_argument("instance")
    p = add("render", cmd_dataset_render, "render an instance and its label as a record", dsub)
    p.add_argument("instance")
    p.add_argument("--label", help="label JSON from `dataset label` (computed when omitted)")
    p = add("stats", cmd_dataset_stats, "summary statistics of a JSONL dataset", dsub)
    p.add_argument("records")
    p.add_argument("--plot", metavar="PNG", help="also write a stats figure")

    p = add("bench-warmstart", cmd_bench, "zero-init versus warm-start FJ on SAT 3-coloring instances")
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--perturbation", type=float, default=0.1)
    p.add_argument("--csv", metavar="FILE", help="per-instance rows as CSV")
    p.add_argument("--plot", metavar="PNG", help="solved-fraction curves")

    p = add("replay", cmd_replay, "re-run the command recorded in a run manifest")
    p.add_argument("manifest_file")
    return parser


# -- helpers ------------------------------------------------------------------------

class Run:
    """Per-invocation state: parsed args, collected outputs and the manifest."""

    def __init__(self, args: argparse.Namespace, argv: Sequence[str]):
        self.args = args
        self.argv = list(argv)
        self.docs: list[str] = []
        self.inputs: list[str] = []
        self.outputs: list[str] = []

    def emit(self, doc: Any) -> None:
        self.docs.append(json.dumps(doc, separators=(",", ":"), ensure_ascii=False))

    def read(self, path: str) -> str:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        self.inputs.append(path)
        return text

    def write(self, path: str, text: str | None = None) -> None:
        if text is not None:
            Path(path).write_text(text)
        self.outputs.append(path)


def _load_instance(run: Run, path: str) -> Instance:
    inst = load_instance(run.read(path))
    args = run.args
    if isinstance(inst, EmbeddingInstance) and args.chain_limit is not None:
        inst = EmbeddingInstance(inst.P, inst.H, args.chain_limit)
    if isinstance(inst, ColoringInstance) and inst.k is not None and args.k is not None:
        inst = ColoringInstance(inst.G, args.k)
    return inst


def _parse_param(text: str) -> tuple[str, Any]:
    name, sep, raw = text.partition("=")
    if not sep or not name:
        raise UsageError(f"parameter {text!r} is not NAME=VALUE")
    try:
        return name, json.loads(raw)
    except json.JSONDecodeError:
        return name, raw


def _solution_doc(solution: Any) -> Any:
    if isinstance(solution, dict):
        return {str(k): list(v) for k, v in sorted(solution.items())}
    return list(solution) if solution is not None else None


def _encode(run: Run, inst: Instance):
    if isinstance(inst, EmbeddingInstance):
        screen = zero_phase_screen(inst.P, inst.H, inst.L)
        if screen.infeasible:
            return None, screen
        family = enumerate_chains(inst.H, inst.L)
        return encode_embedding(inst.P, inst.H, family, screen.s_min), screen
    if inst.k is None:
        return encode_mincoloring(inst.G), None
    return encode_kcoloring(inst.G, inst.k), None


def _read_solution(run: Run, path: str, inst: Instance) -> tuple[Any, str | None]:
    """Domain solution from a JSON file or answer text; returns (solution, claim)."""
    return _parse_solution(run.read(path), path, inst)


def _parse_solution(text: str, path: str, inst: Instance) -> tuple[Any, str | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        cand = parse_candidate(text, inst.kind)
        if cand.claim == MALFORMED:
            raise UsageError(f"{path}: {cand.error}")
        return cand.solution, cand.claim
    if isinstance(doc, dict) and "solution" in doc:
        doc = doc["solution"]
    if isinstance(doc, (dict, list)):
        return solution_from_json(doc), None
    raise UsageError(f"{path}: expected an embedding object or a color list")


_VAR_NAME = re.compile(r"^[xy]_\d+(_\d+)?$")


def _warm_assignment(run: Run, path: str, inst: Instance, enc) -> list[int]:
    text = run.read(path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = None
    if isinstance(doc, dict) and doc and all(_VAR_NAME.match(str(k)) for k in doc):
        index = {name: j for j, name in enumerate(enc.model.names)}
        x = zero_assignment(enc.model)
        for name, value in doc.items():
            if name not in index:
                raise UsageError(f"{path}: unknown variable {name!r}")
            x[index[name]] = int(value)
        return x
    solution, claim = _parse_solution(text, path, inst)
    if claim == NO or solution is None:
        return zero_assignment(enc.model)
    if isinstance(inst, EmbeddingInstance):
        return embedding_to_assignment(enc, solution)
    return coloring_to_assignment(enc, solution)


# -- subcommands -----------------------------------------------------------------

def cmd_gen_graph(run: Run) -> int:
    args = run.args
    params = dict(_parse_param(p) for p in args.param)
    g = generate(GraphSpec(args.family, params, args.seed, args.remove_isolated))
    run.docs.append(dump_edge_list(g))
    return EXIT_OK


def cmd_screen(run: Run) -> int:
    status = EXIT_OK
    for path in run.args.instances:
        inst = _load_instance(run, path)
        if not isinstance(inst, EmbeddingInstance):
            raise UsageError(f"{path}: screening applies to embedding instances")
        res = zero_phase_screen(inst.P, inst.H, inst.L)
        run.emit({"instance": path, **res.to_dict()})
        if res.infeasible:
            status = EXIT_NEGATIVE
    return status


def cmd_enumerate_chains(run: Run) -> int:
    args = run.args
    doc = json.loads(run.read(args.graph))
    if isinstance(doc, dict) and doc.get("task") == EMBEDDING:
        H = graph_from_dict(doc["H"])
        L = args.chain_limit if args.chain_limit is not None else int(doc.get("L", 3))
    else:
        H = graph_from_dict(doc)
        L = args.chain_limit if args.chain_limit is not None else 3
    run.emit(enumerate_chains(H, L).stats())
    return EXIT_OK


def cmd_encode(run: Run) -> int:
    inst = _load_instance(run, run.args.instance)
    enc, screen = _encode(run, inst)
    if enc is None:
        run.emit({"task": inst.kind, "status": "CertifiedInfeasible", "screen": screen.to_dict()})
        return EXIT_NEGATIVE
    if run.args.dump_model:
        run.write(run.args.dump_model, dump_model(enc.model))
    run.emit({"task": inst.kind, **enc.model.stats()})
    return EXIT_OK


def cmd_solve(run: Run) -> int:
    args = run.args
    inst = _load_instance(run, args.instance)
    if args.method == "exact":
        return _solve_exact(run, inst)
    return _solve_fj(run, inst, args.warm_start)


def cmd_repair(run: Run) -> int:
    if not run.args.warm_start:
        raise UsageError("repair needs --warm-start FILE")
    inst = _load_instance(run, run.args.instance)
    return _solve_fj(run, inst, run.args.warm_start)


def _solve_exact(run: Run, inst: Instance) -> int:
    args = run.args
    budget = Budget(args.node_limit if args.node_limit is not None else 1_000_000, args.time_limit)
    if isinstance(inst, EmbeddingInstance):
        cert = exact_embed(inst.P, inst.H, inst.L, budget, optimize=args.optimize)
    elif inst.k is None:
        cert = min_color(inst.G, budget)
    else:
        cert = exact_color(inst.G, inst.k, budget)
    doc = {"task": inst.kind, "method": "exact", **cert.to_dict()}
    run.emit(doc)
    return EXIT_OK if cert.outcome == FEASIBLE else EXIT_NEGATIVE


def _solve_fj(run: Run, inst: Instance, warm: str | None) -> int:
    args = run.args
    try:
        enc, screen = _encode(run, inst)
    except (ModelTooLarge, ChainBudgetExceeded) as exc:
        run.emit({"task": inst.kind, "method": "fj", "status": type(exc).__name__, "detail": str(exc)})
        return EXIT_NEGATIVE
    except EmptyCandidateSet as exc:
        run.emit({"task": inst.kind, "method": "fj", "status": "CertifiedInfeasible",
                  "detail": f"no candidate chain for problem vertex {exc.vertex}"})
        return EXIT_NEGATIVE
    if enc is None:
        run.emit({"task": inst.kind, "method": "fj", "status": "CertifiedInfeasible", "screen": screen.to_dict()})
        return EXIT_NEGATIVE
    model = enc.model
    x0 = _warm_assignment(run, warm, inst, enc) if warm else zero_assignment(model)
    cfg = FjConfig(args.iters if args.iters is not None else 100_000, seed=derive_seed(args.seed, "fj"),
                   wall_clock_limit=args.time_limit)
    start_violated = sum(1 for i in range(model.num_constraints) if violation(model, x0, i) > 0)
    res = fj_search(model, x0, cfg)
    doc: dict[str, Any] = {"task": inst.kind, "method": "fj", "status": res.status,
                           "iterations": res.iterations, "start_violated": start_violated}
    if not res.feasible:
        doc["weighted_violation"] = res.weighted_violation
        run.emit(doc)
        return EXIT_NEGATIVE
    assert is_feasible(model, res.assignment)
    if isinstance(inst, EmbeddingInstance):
        emb = decode_embedding(enc, res.assignment)
        if not args.no_phase2:
            p2 = fj_phase2(inst.P, inst.H, inst.L, emb, Phase2Config(seed=derive_seed(args.seed, "phase2")))
            doc["phase2"] = {"initial": p2.initial_vertices, "final": p2.final_vertices, "rounds": p2.rounds}
            emb = p2.embedding
        solution = emb
    else:
        solution = decode_coloring(enc, res.assignment)
    doc["objective"] = inst.objective(solution)
    doc["solution"] = _solution_doc(solution)
    run.emit(doc)
    return EXIT_OK


def cmd_verify(run: Run) -> int:
    inst = _load_instance(run, run.args.instance)
    solution, claim = _read_solution(run, run.args.solution, inst)
    if claim == NO:
        run.emit({"valid": False, "claim": "no"})
        return EXIT_NEGATIVE
    violations = inst.check(solution)
    doc: dict[str, Any] = {"valid": not violations}
    if isinstance(inst, EmbeddingInstance):
        doc["total_nodes"] = sum(len(c) for c in solution.values())
    else:
        doc["colors_used"] = len(set(solution))
    if violations:
        doc["violations"] = [v.to_dict() for v in violations]
    run.emit(doc)
    return EXIT_OK if not violations else EXIT_NEGATIVE


def cmd_select(run: Run) -> int:
    args = run.args
    inst = _load_instance(run, args.instance)
    if args.n_candidates is not None and args.n_candidates != len(args.candidates):
        raise UsageError(f"--n-candidates {args.n_candidates} but {len(args.candidates)} files given")
    cands = [parse_candidate(run.read(p), inst.kind) for p in args.candidates]
    verdict = best_of_n(cands, inst)
    run.emit(verdict.to_dict())
    return EXIT_OK


def _label_budget(args: argparse.Namespace) -> LabelBudget:
    base = LabelBudget()
    return LabelBudget(
        exact_nodes=args.node_limit if args.node_limit is not None else base.exact_nodes,
        exact_time=args.time_limit,
        fj_iterations=args.iters if args.iters is not None else base.fj_iterations,
        fj_time=args.time_limit,
    )


def cmd_dataset_sample(run: Run) -> int:
    args = run.args
    seed = instance_seed(args.seed, args.index)
    spec, inst = sample_instance(args.task, seed, args.paper_scale,
                                 L=args.chain_limit or 3, k=args.k or 3)
    run.emit({**inst.to_dict(), "spec": spec.to_dict()})
    return EXIT_OK


def cmd_dataset_generate(run: Run) -> int:
    args = run.args
    if args.count < 0:
        raise UsageError("--count must be >= 0")
    if args.balance is not None and not 0.0 <= args.balance <= 1.0:
        raise UsageError("--balance must be in [0, 1]")
    budget = _label_budget(args)
    records = generate_dataset(args.task, args.count, args.seed, args.paper_scale, budget, args.balance,
                               args.jobs, L=args.chain_limit or 3, k=args.k or 3)
    for rec in records:
        rec.meta["budget"] = {"exact_nodes": budget.exact_nodes, "fj_iterations": budget.fj_iterations,
                              "fj_restarts": budget.fj_restarts}
    run.write(args.output, "".join(rec.to_json() + "\n" for rec in records))
    stats = dataset_stats(records)
    if args.plot:
        from .plotting import plot_dataset_stats
        run.write(str(plot_dataset_stats(stats, args.plot)))
    run.emit({"output": args.output, **stats})
    return EXIT_OK if len(records) == args.count else EXIT_NEGATIVE


def cmd_dataset_label(run: Run) -> int:
    args = run.args
    inst = _load_instance(run, args.instance)
    label = label_instance(inst, _label_budget(args), derive_seed(args.seed, "label"))
    run.emit(label.to_dict())
    return EXIT_OK if label.status != DROPPED else EXIT_NEGATIVE


def cmd_dataset_render(run: Run) -> int:
    args = run.args
    inst = _load_instance(run, args.instance)
    if args.label:
        label = Label.from_dict(json.loads(run.read(args.label)))
    else:
        label = label_instance(inst, _label_budget(args), derive_seed(args.seed, "label"))
    if label.status == DROPPED:
        run.emit(label.to_dict())
        return EXIT_NEGATIVE
    if label.status == SAT and inst.check(label.solution):
        raise UsageError("label solution does not verify against the instance")
    run.docs.append(render_record(inst, label).to_json())
    return EXIT_OK


def cmd_dataset_stats(run: Run) -> int:
    args = run.args
    records = load_records(run.read(args.records).splitlines())
    stats = dataset_stats(records)
    if args.plot:
        from .plotting import plot_dataset_stats
        run.write(str(plot_dataset_stats(stats, args.plot)))
    run.emit(stats)
    return EXIT_OK


def cmd_bench(run: Run) -> int:
    args = run.args
    if not 0.0 <= args.perturbation <= 1.0:
        raise UsageError("--perturbation must be in [0, 1]")
    cfg = BenchConfig(n_instances=args.instances, perturbation=args.perturbation,
                      max_iterations=args.iters if args.iters is not None else 1_000_000,
                      time_limit=args.time_limit, seed=args.seed, k=args.k or 3, paper_scale=args.paper_scale)
    rows, summary = run_bench(cfg, args.jobs)
    if args.csv:
        run.write(args.csv, rows_to_csv(rows))
    if args.plot:
        from .plotting import plot_bench
        run.write(str(plot_bench(rows, args.plot, cfg.max_iterations)))
    run.emit(summary)
    return EXIT_OK


def cmd_replay(run: Run) -> int:
    doc = json.loads(run.read(run.args.manifest_file))
    argv = doc.get("argv")
    if not isinstance(argv, list) or not argv:
        raise UsageError("manifest has no argv")
    for name, digest in doc.get("inputs", {}).items():
        if Path(name).exists() and _sha256(Path(name).read_bytes()) != digest:
            log.warning("input %s changed since the manifest was written", name)
    return main(argv)


# -- manifest and dispatch -----------------------------------------------------------

def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _command_name(args: argparse.Namespace) -> str:
    return args.command + (f" {args.dataset_command}" if getattr(args, "dataset_command", None) else "")


def _resolved_argv(argv: Sequence[str], args: argparse.Namespace) -> list[str]:
    """Original argv with every global setting spelled out, so a replay does
    not depend on the environment."""
    out = list(argv)
    for name in GLOBALS:
        value = getattr(args, name)
        flag = "--" + name.replace("_", "-")
        if isinstance(value, bool):
            if value:
                out.append(flag)
        elif value is not None:
            out += [flag, str(value)]
    return out


def write_manifest(run: Run, path: str) -> None:
    args = run.args
    config = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "verbose", "manifest")}
    manifest = {
        "tool": "minorfeas",
        "version": __version__,
        "subcommand": _command_name(args),
        "seed": args.seed,
        "argv": _resolved_argv(run.argv, args),
        "config": config,
        "inputs": {p: _sha256(Path(p).read_bytes()) for p in dict.fromkeys(run.inputs) if Path(p).exists()},
        "outputs": list(dict.fromkeys(([args.out] if args.out else []) + run.outputs)),
    }
    Path(path).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = build_parser()
    except UsageError as exc:
        print(f"minorfeas: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    run = Run(args, argv)
    try:
        status = args.func(run)
    except UsageError as exc:
        print(f"minorfeas: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MinorFeasError, ValueError, KeyError, TypeError) as exc:
        print(f"minorfeas: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "replay":
        return status
    text = "".join(d + "\n" for d in run.docs)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    manifest = args.manifest or (args.out + ".manifest.json" if args.out else None)
    if manifest:
        write_manifest(run, manifest)
    return status


if __name__ == "__main__":
    sys.exit(main())
