"""Matplotlib rendering for verification reports and closed-form tables.

Figures are built directly on Figure objects with the Agg canvas, so no
global pyplot state or display backend is involved.
"""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .solvers import closed_forms
from .verify import VerifyReport


def report_figure(report: VerifyReport) -> Figure:
    """Per-group pass/fail counts and wall-clock for one verification run."""
    groups: dict[str, dict[str, float]] = defaultdict(lambda: {"pass": 0, "fail": 0, "ms": 0.0})
    for check in report.checks:
        head = check.id.split("/", 2)
        key = "/".join(head[: min(2, len(head))])
        groups[key]["pass" if check.status == "pass" else "fail"] += 1
        groups[key]["ms"] += check.ms
    names = sorted(groups)
    fig = Figure(figsize=(9, max(2.5, 0.32 * len(names) + 1.2)))
    ax = fig.add_subplot(1, 1, 1)
    ys = range(len(names))
    ax.barh(
        ys,
        [groups[k]["ms"] for k in names],
        color=["#c0392b" if groups[k]["fail"] else "#2d7f5e" for k in names],
    )
    for y, name in zip(ys, names):
        info = groups[name]
        note = f"{int(info['pass'])} pass" + (
            f", {int(info['fail'])} FAIL" if info["fail"] else ""
        )
        ax.annotate(note, (info["ms"], y), xytext=(4, -3), textcoords="offset points", fontsize=7)
    ax.set_yticks(list(ys))
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xlabel("wall-clock per check group [ms]")
    summary = report.summary
    ax.set_title(
        f"suite {report.suite}: {summary['passed']}/{summary['total']} checks passed"
    )
    fig.tight_layout()
    return fig


def growth_figure(max_n: int) -> Figure:
    """Closed-form move counts and bounds against the disk count."""
    ns = list(range(1, max_n + 1))
    rows = [closed_forms(n) for n in ns]
    fig = Figure(figsize=(7, 4.5))
    ax = fig.add_subplot(1, 1, 1)
    ax.semilogy(ns, [2**n - 1 for n in ns], "o-", base=2, label="single tower 2^n - 1")
    ax.semilogy(ns, [r.switch_moves for r in rows], "s-", base=2, label="twin switch")
    ax.semilogy(ns, [r.shift_moves for r in rows], "d-", base=2, label="smallest-disk shift")
    ax.semilogy(
        ns,
        [float(r.basic_bound) for r in rows],
        "--",
        base=2,
        label="basic-pair bound 11/3 * 2^n",
    )
    ax.semilogy(
        ns,
        [r.near_diagonal_diameter for r in rows],
        "^-",
        base=2,
        label="near-diagonal diameter",
    )
    ax.set_xlabel("disks")
    ax.set_ylabel("moves")
    ax.set_xticks(ns)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def save_figure(fig: Figure, path: Path | str) -> None:
    FigureCanvasAgg(fig).print_figure(str(path), dpi=150)
