"""Warm-start benchmark: FJ from the zero assignment versus FJ from a
perturbed feasible coloring on oracle-certified SAT 3-coloring instances."""

from __future__ import annotations

import csv
import io
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Any, Sequence

from .datagen import instance_seed, sample_instance
from .encoders import coloring_to_assignment, encode_kcoloring
from .exact import FEASIBLE, Budget, exact_color
from .fjump import FjConfig, fj_search
from .graph import Graph
from .milp import violation, zero_assignment
from .rng import Rng, derive_seed
from .verify import KCOLORING


@dataclass(frozen=True)
class BenchConfig:
    n_instances: int = 100
    perturbation: float = 0.1
    max_iterations: int = 1_000_000
    time_limit: float | None = None
    seed: int = 0
    k: int = 3
    paper_scale: bool = False
    exact_nodes: int = 200_000


@dataclass(frozen=True)
class BenchRow:
    index: int
    seed: int
    n: int
    m: int
    zero_feasible: bool
    zero_iters: int
    warm_feasible: bool
    warm_iters: int
    warm_init_violated: int


def sat_instances(cfg: BenchConfig, max_draws: int | None = None) -> list[tuple[int, int, Graph, list[int]]]:
    """First ``n_instances`` draws the exact solver proves k-colorable, with a witness."""
    out = []
    limit = max_draws if max_draws is not None else 50 * max(cfg.n_instances, 1)
    for i in range(limit):
        if len(out) == cfg.n_instances:
            break
        seed = instance_seed(cfg.seed, i)
        _, inst = sample_instance(KCOLORING, seed, cfg.paper_scale, k=cfg.k)
        cert = exact_color(inst.G, cfg.k, Budget(cfg.exact_nodes))
        if cert.outcome == FEASIBLE:
            out.append((i, seed, inst.G, cert.solution))
    return out


def perturb_coloring(colors: Sequence[int], k: int, rate: float, rng: Rng) -> list[int]:
    """Recolor ``round(rate * n)`` vertices (at least one when ``rate > 0``)
    to a different color drawn uniformly."""
    out = list(colors)
    n = len(out)
    count = min(n, max(1, round(rate * n))) if rate > 0 and n else 0
    for v in rng.sample(range(n), count):
        shift = 1 + rng.below(k - 1) if k > 1 else 0
        out[v] = (out[v] + shift) % k
    return out


def _run_one(args: tuple[BenchConfig, int, int, Graph, list[int]]) -> BenchRow:
    cfg, index, seed, G, witness = args
    enc = encode_kcoloring(G, cfg.k)
    fj = FjConfig(cfg.max_iterations, seed=derive_seed(seed, "fj"), wall_clock_limit=cfg.time_limit)
    zero = fj_search(enc.model, zero_assignment(enc.model), fj)
    warm_colors = perturb_coloring(witness, cfg.k, cfg.perturbation, Rng(derive_seed(seed, "perturb")))
    x0 = coloring_to_assignment(enc, warm_colors)
    init_violated = sum(1 for i in range(enc.model.num_constraints) if violation(enc.model, x0, i) > 0)
    warm = fj_search(enc.model, x0, fj)
    return BenchRow(index, seed, G.n, G.m, zero.feasible, zero.iterations, warm.feasible, warm.iterations,
                    init_violated)


def run_bench(cfg: BenchConfig, jobs: int = 1) -> tuple[list[BenchRow], dict[str, Any]]:
    items = [(cfg, i, s, G, w) for i, s, G, w in sat_instances(cfg)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_run_one, items))
    else:
        rows = [_run_one(it) for it in items]
    return rows, summarize(rows, cfg)


def _median_iters(rows: Sequence[BenchRow], warm: bool, cap: int) -> float:
    # failed runs count as the full iteration budget
    vals = [(r.warm_iters if r.warm_feasible else cap) if warm else (r.zero_iters if r.zero_feasible else cap)
            for r in rows]
    return float(statistics.median(vals)) if vals else 0.0


def summarize(rows: Sequence[BenchRow], cfg: BenchConfig) -> dict[str, Any]:
    n = len(rows)
    zero_med = _median_iters(rows, False, cfg.max_iterations)
    warm_med = _median_iters(rows, True, cfg.max_iterations)
    return {
        "n_instances": n,
        "perturbation": cfg.perturbation,
        "max_iterations": cfg.max_iterations,
        "zero_success_rate": sum(r.zero_feasible for r in rows) / n if n else 0.0,
        "warm_success_rate": sum(r.warm_feasible for r in rows) / n if n else 0.0,
        "zero_median_iters": zero_med,
        "warm_median_iters": warm_med,
        "ratio": warm_med / zero_med if zero_med else None,
        "speedup": zero_med / warm_med if warm_med else None,
        "mean_warm_init_violated": sum(r.warm_init_violated for r in rows) / n if n else 0.0,
        "config": asdict(cfg),
    }


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    fields = list(BenchRow.__dataclass_fields__)
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(asdict(r))
    return buf.getvalue()
