"""Figure and CSV rendering for the report-producing commands.

Given a sweep or theorem-suite report, writes a delimited per-row summary
and matplotlib figures next to it. Import stays local to the CLI so the
library itself never pulls in a plotting backend.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import bigphi, totient
from .harness import ConjectureReport, TheoremSuiteReport


def render_sweep_outputs(report: ConjectureReport, outdir: str | Path) -> list[Path]:
    """Write sweep.csv plus count/counterexample figures; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    ns = range(report.config.n_min, report.config.n_max + 1)
    rows = [(n, totient.phi(n), bigphi.big_phi_count(n)) for n in ns]
    cx_by_n: dict[int, int] = {}
    for cx in report.counterexamples:
        cx_by_n[cx.n] = cx_by_n.get(cx.n, 0) + 1

    csv_path = outdir / "sweep.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "phi", "big_phi", "counterexamples"])
        for n, phi_n, big in rows:
            writer.writerow([n, phi_n, big, cx_by_n.get(n, 0)])

    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs = [r[0] for r in rows]
    ax.plot(xs, xs, lw=0.8, color="0.7", label="n")
    ax.plot(xs, [r[2] for r in rows], ".", ms=2.5, color="tab:blue", label="membership count")
    ax.plot(xs, [r[1] for r in rows], ".", ms=2.5, color="tab:orange", label="phi(n)")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    ax.set_title(f"Membership counts over [{report.config.n_min}, {report.config.n_max}]")
    ax.legend(loc="upper left", fontsize=8)
    counts_path = outdir / "sweep_counts.png"
    fig.savefig(counts_path, dpi=150, bbox_inches="tight")
    plt.close(fig)

    paths = [csv_path, counts_path]
    if cx_by_n:
        fig, ax = plt.subplots(figsize=(7, 3.5))
        ax.bar(list(cx_by_n), list(cx_by_n.values()), color="tab:red")
        ax.set_xlabel("n")
        ax.set_ylabel("counterexamples")
        ax.set_title("Messages recovered despite non-membership")
        cx_path = outdir / "sweep_counterexamples.png"
        fig.savefig(cx_path, dpi=150, bbox_inches="tight")
        plt.close(fig)
        paths.append(cx_path)
    return paths


def render_verify_outputs(report: TheoremSuiteReport, outdir: str | Path) -> list[Path]:
    """Write verify.csv plus a per-check bar chart; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    csv_path = outdir / "verify.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["check", "bound", "checked", "passed"])
        for check in report.checks:
            writer.writerow([check.name, check.bound, check.checked, check.passed])

    fig, ax = plt.subplots(figsize=(7, 0.32 * len(report.checks) + 1.2))
    names = [c.name for c in report.checks][::-1]
    counts = [max(c.checked, 1) for c in report.checks][::-1]
    colors = ["tab:green" if c.passed else "tab:red" for c in report.checks][::-1]
    ax.barh(names, counts, color=colors)
    ax.set_xscale("log")
    ax.set_xlabel("instances checked")
    ax.set_title(f"Verification suite (n_max = {report.n_max})")
    ax.tick_params(axis="y", labelsize=7)
    fig_path = outdir / "verify_checks.png"
    fig.savefig(fig_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return [csv_path, fig_path]
