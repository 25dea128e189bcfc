"""Render experiment results to figures and an aggregate table.

Input is the CSV emitted by ``run_experiment``; output is a pair of PNG
figures plus ``summary.csv``, one aggregate row per (n, k) cell.  The CSV
stays the data boundary: nothing here feeds back into the pipeline.
"""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .harness import ExperimentRow, read_rows  # noqa: E402

SUMMARY_COLUMNS = ("n", "k", "trials", "found", "none_exists",
                   "budget_exceeded", "covered", "fallback_used", "stuck",
                   "mean_moves", "mean_runtime_ms")


def summarize(rows: list[ExperimentRow]) -> list[dict]:
    cells: dict[tuple[int, int], list[ExperimentRow]] = defaultdict(list)
    for row in rows:
        cells[(row.n, row.k)].append(row)
    out = []
    for (n, k) in sorted(cells):
        group = cells[(n, k)]
        trials = len(group)
        out.append({
            "n": n,
            "k": k,
            "trials": trials,
            "found": sum(1 for r in group if r.oracle_ddpc == "found"),
            "none_exists": sum(1 for r in group
                               if r.oracle_ddpc == "none_exists"),
            "budget_exceeded": sum(1 for r in group
                                   if r.oracle_ddpc == "budget_exceeded"),
            "covered": sum(1 for r in group
                           if r.engine_outcome == "covered"),
            "fallback_used": sum(1 for r in group
                                 if r.engine_outcome == "fallback_used"),
            "stuck": sum(1 for r in group if r.engine_outcome == "stuck"),
            "mean_moves": sum(r.moves_applied for r in group) / trials,
            "mean_runtime_ms": sum(r.runtime_ms for r in group) / trials,
        })
    return out


def write_summary(summary: list[dict], path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(SUMMARY_COLUMNS) + "\n")
        for cell in summary:
            fields = []
            for col in SUMMARY_COLUMNS:
                value = cell[col]
                fields.append(f"{value:.3f}" if isinstance(value, float)
                              else str(value))
            fh.write(",".join(fields) + "\n")


def _rate_figure(summary: list[dict], path: Path) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ks = sorted({cell["k"] for cell in summary})
    for k in ks:
        cells = [c for c in summary if c["k"] == k]
        ns = [c["n"] for c in cells]
        rates = []
        for c in cells:
            decided = c["trials"] - c["budget_exceeded"]
            rates.append(c["found"] / decided if decided else 0.0)
        ax.plot(ns, rates, marker="o", label=f"k={k}")
    ax.set_xlabel("n")
    ax.set_ylabel("spanning cover found (rate)")
    ax.set_ylim(-0.05, 1.05)
    ax.set_title("Exhaustive-search success rate per instance size")
    ax.grid(True, alpha=0.3)
    if ks:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _outcome_figure(summary: list[dict], path: Path) -> None:
    cells = sorted(summary, key=lambda c: (c["n"], c["k"]))
    labels = [f"{c['n']}/{c['k']}" for c in cells]
    xs = range(len(cells))
    covered = [c["covered"] for c in cells]
    fallback = [c["fallback_used"] for c in cells]
    stuck = [c["stuck"] for c in cells]
    fig, ax = plt.subplots(figsize=(max(7, 0.45 * len(cells)), 4.5))
    ax.bar(xs, covered, label="covered by moves", color="#2a9d8f")
    ax.bar(xs, fallback, bottom=covered, label="fallback settled",
           color="#e9c46a")
    bottom2 = [a + b for a, b in zip(covered, fallback)]
    ax.bar(xs, stuck, bottom=bottom2, label="stuck", color="#e76f51")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=60, fontsize=8)
    ax.set_xlabel("n/k")
    ax.set_ylabel("trials")
    ax.set_title("Engine outcome per plan cell")
    if cells:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def report(csv_path: str | Path, out_dir: str | Path) -> list[Path]:
    """Render figures and the aggregate table; returns the written paths."""
    rows = read_rows(csv_path)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    summary = summarize(rows)
    written = [out / "summary.csv", out / "ddpc_rate.png",
               out / "engine_outcomes.png"]
    write_summary(summary, written[0])
    _rate_figure(summary, written[1])
    _outcome_figure(summary, written[2])
    return written
