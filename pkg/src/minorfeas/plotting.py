"""Figures for the report paths of the CLI (PNG via the Agg backend)."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchRow  # noqa: E402


def _ecdf(values: Sequence[int]) -> tuple[list[int], list[float]]:
    xs = sorted(values)
    n = len(xs)
    return xs, [(i + 1) / n for i in range(n)]


def plot_bench(rows: Sequence[BenchRow], path: str | Path, cap: int) -> Path:
    """Fraction of instances solved within a given iteration count, zero vs warm start."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, solved in (("zero init", [r.zero_iters for r in rows if r.zero_feasible]),
                          ("warm start", [r.warm_iters for r in rows if r.warm_feasible])):
        if solved:
            xs, ys = _ecdf([max(1, v) for v in solved])
            frac = len(solved) / len(rows)
            ax.step(xs, [y * frac for y in ys], where="post", label=f"{label} ({len(solved)}/{len(rows)})")
    ax.set_xscale("log")
    ax.set_xlim(1, max(cap, 10))
    ax.set_ylim(0, 1.02)
    ax.set_xlabel("iterations")
    ax.set_ylabel("fraction solved")
    ax.grid(alpha=0.3)
    ax.legend(loc="lower right")
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return out


def plot_dataset_stats(stats: Mapping[str, Any], path: str | Path) -> Path:
    """Size histogram and provenance breakdown side by side."""
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.5))
    sizes = stats.get("size_histogram", {})
    left.bar(list(sizes), list(sizes.values()), color="tab:blue")
    left.set_xlabel("problem vertices")
    left.set_ylabel("records")
    left.tick_params(axis="x", rotation=45)
    prov = stats.get("provenance", {})
    right.bar(list(prov), list(prov.values()), color="tab:orange")
    right.set_xlabel("label provenance")
    right.set_ylabel("records")
    right.set_title(f"SAT fraction {stats.get('sat_fraction', 0.0):.2f}")
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return out
