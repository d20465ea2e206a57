"""Command-line surface: solving, distances, verification, graph export, tables.

Exit codes: 0 success, 1 failed verification, 2 usage error, 3 incompatible
inputs, 4 capacity exceeded.

Output is byte-deterministic for a fixed command line, seed and cache state;
wall-clock timings appear only in report files and behind ``--timings``.
Move words print in display order (rightmost letter first) unless
``--order applied`` is given, and the empty word prints as ``1``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import graphs, solvers, verify
from .errors import CapacityExceeded, Incompatible, SizeMismatch, TwinHanoiError
from .words import Config, CoupledConfig, MoveSeq, apply_seq, apply_seq_coupled

SUITE_NAMES = (*verify.SUITES, "all")


class UsageError(Exception):
    pass


def _parse_config(text: str) -> Config:
    try:
        return Config(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_coupled(text: str) -> CoupledConfig:
    try:
        return CoupledConfig.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _render(seq: MoveSeq, order: str) -> str:
    return seq.render(order) or "1"


def _emit_word(args, seq: MoveSeq, extra: dict) -> None:
    """Print a solution word, re-validated by application before printing."""
    if args.json:
        payload = {"moves": _render(seq, args.order), "order": args.order,
                   "length": len(seq), **extra}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(_render(seq, args.order))
        print(f"length {len(seq)}")


def _cmd_solve(args) -> int:
    if args.problem == "classic":
        if args.corners:
            if args.n is None:
                raise UsageError("--corners needs --n")
            if len(args.corners) != 2 or not set(args.corners) <= set("012"):
                raise UsageError("--corners wants two peg digits, e.g. 02")
            x, y = int(args.corners[0]), int(args.corners[1])
            if x == y:
                raise UsageError("corner endpoints must differ")
            start = Config.corner(x, args.n)
            goal = Config.corner(y, args.n)
            word = solvers.corner_seq(x, y, args.n)
        else:
            if not (args.src and args.dst):
                raise UsageError("solve classic needs --from/--to or --n/--corners")
            start, goal = _parse_config(args.src), _parse_config(args.dst)
            if len(start) != len(goal):
                raise UsageError("configurations must have the same disk count")
            if start.is_corner() and goal.is_corner() and start != goal:
                word = solvers.corner_seq(int(start.word[0]), int(goal.word[0]), len(start))
            else:
                word = solvers.transform_single(start, goal)
        if apply_seq(word, start) != goal:
            raise AssertionError("solution failed re-validation")
        _emit_word(args, word, {"problem": "classic", "from": str(start), "to": str(goal)})
        return 0

    if args.problem in ("tts", "sds"):
        if args.n is None:
            raise UsageError(f"solve {args.problem} needs --n")
        if args.problem == "tts":
            word = solvers.tts_alt_seq(args.n) if args.alt else solvers.tts_seq(args.n)
            start, goal = solvers.tts_endpoints(args.n)
        else:
            word = solvers.sds_seq(args.n)
            start, goal = solvers.sds_endpoints(args.n)
        if apply_seq_coupled(word, start) != goal:
            raise AssertionError("solution failed re-validation")
        _emit_word(
            args, word,
            {"problem": args.problem, "n": args.n, "from": str(start), "to": str(goal)},
        )
        return 0

    # twin: any compatible coupled pair
    if not (args.src and args.dst):
        raise UsageError("solve twin needs --from top,bottom --to top,bottom")
    start, goal = _parse_coupled(args.src), _parse_coupled(args.dst)
    if len(start) != len(goal):
        raise UsageError("coupled configurations must have the same disk count")
    from .words import lcp_len

    plan = None
    if lcp_len(start) == 0 and lcp_len(goal) == 0:
        plan = solvers.solve_basic(start, goal)
        word = plan.total
    else:
        word = solvers.solve_compatible(start, goal)
    if apply_seq_coupled(word, start) != goal:
        raise AssertionError("solution failed re-validation")
    extra = {"problem": "twin", "from": str(start), "to": str(goal)}
    if args.json and plan is not None and args.plan:
        extra["plan"] = plan.as_json_dict()
    _emit_word(args, word, extra)
    if args.plan and not args.json:
        print(plan.as_text() if plan is not None else "plan: prefix transform + lifted basic solve")
    return 0


def _cmd_distance(args) -> int:
    coupled = args.coupled or ("," in args.src)
    if coupled:
        start, goal = _parse_coupled(args.src), _parse_coupled(args.dst)
        if len(start) != len(goal):
            raise UsageError("coupled configurations must have the same disk count")
        value = graphs.distance(
            graphs.pack_coupled(start), graphs.pack_coupled(goal),
            graphs.COUPLED, len(start),
        )
    else:
        start, goal = _parse_config(args.src), _parse_config(args.dst)
        if len(start) != len(goal):
            raise UsageError("configurations must have the same disk count")
        value = graphs.distance(
            graphs.pack_config(start), graphs.pack_config(goal),
            graphs.SINGLE, len(start),
        )
    if args.json:
        print(json.dumps({
            "from": str(start), "to": str(goal),
            "kind": "coupled" if coupled else "single", "distance": value,
        }, sort_keys=True))
    else:
        print(value)
    return 0


def _write_report_files(report, directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    (directory / f"{report.suite}.json").write_text(
        json.dumps(report.to_json_dict(with_timings=True), indent=2, sort_keys=True) + "\n"
    )
    with (directory / f"{report.suite}.csv").open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["id", "status", "expected", "observed", "ms"])
        for check in report.checks:
            writer.writerow([
                check.id, check.status,
                json.dumps(check.expected, sort_keys=True),
                json.dumps(check.observed, sort_keys=True),
                f"{check.ms:.3f}",
            ])
    from . import figures  # deferred: pulls in matplotlib

    figures.save_figure(figures.report_figure(report), directory / f"{report.suite}.png")


def _cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    overrides = {"n_max": args.max_n, "samples": args.samples, "seed": args.seed}
    all_ok = True
    for name in names:
        report = verify.run_suite(name, **overrides)
        if args.json:
            print(json.dumps(report.to_json_dict(with_timings=args.timings), sort_keys=True))
        else:
            print(report.render_text())
        if args.report_dir:
            _write_report_files(report, Path(args.report_dir))
        all_ok = all_ok and report.passed
    return 0 if all_ok else 1


def _cmd_graph(args) -> int:
    text = graphs.export_dot(args.n, args.kind, component=args.component)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return 0


def _table_rows(max_n: int) -> list[dict]:
    rows = []
    for n in range(1, max_n + 1):
        forms = solvers.closed_forms(n)
        sizes = [graphs.expected_component_size(n, i) for i in range(n + 1)]
        rows.append({
            "n": n,
            "switch": forms.switch_moves,
            "shift": forms.shift_moves,
            "cycles": forms.corner_cycles,
            "components": ";".join(str(s) for s in sizes),
            "pair_bound": str(forms.basic_bound),
            "near_diag_diam": forms.near_diagonal_diameter,
        })
    return rows


def _cmd_tables(args) -> int:
    rows = _table_rows(args.max_n)
    header = f"{'n':>3} {'switch':>9} {'shift':>9} {'cycles':>7} {'pair-bound':>12} {'near-diag':>10}  components"
    print(header)
    for row in rows:
        print(
            f"{row['n']:>3} {row['switch']:>9} {row['shift']:>9} {row['cycles']:>7} "
            f"{row['pair_bound']:>12} {row['near_diag_diam']:>10}  {row['components']}"
        )
    if args.out_dir:
        directory = Path(args.out_dir)
        directory.mkdir(parents=True, exist_ok=True)
        with (directory / "tables.csv").open("w", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        from . import figures

        figures.save_figure(figures.growth_figure(args.max_n), directory / "growth.png")
    return 0


def _cmd_cache(args) -> int:
    root = graphs.cache_dir()
    if args.action == "info":
        if root is None:
            print(f"cache directory unset ({graphs.CACHE_ENV})")
            return 0
        print(f"cache directory {root}")
        entries = graphs.cache_entries()
        for path, description in entries:
            print(f"  {path.name}: {description}")
        print(f"{len(entries)} file(s)")
        return 0
    removed = graphs.cache_clear()
    print(f"removed {removed} file(s)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twinhanoi",
        description="Solvers, distances and verification for the coupled three-peg puzzle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="produce a move word")
    solve.add_argument("problem", choices=("classic", "tts", "sds", "twin"))
    solve.add_argument("--n", type=int, default=None, help="disk count")
    solve.add_argument("--corners", default=None, help="two peg digits, e.g. 02 (classic)")
    solve.add_argument("--from", dest="src", default=None, help="start configuration")
    solve.add_argument("--to", dest="dst", default=None, help="goal configuration")
    solve.add_argument("--alt", action="store_true", help="alternative switch word (tts)")
    solve.add_argument("--plan", action="store_true", help="print the stage report (twin)")
    solve.add_argument("--order", choices=("display", "applied"), default="display")
    solve.add_argument("--json", action="store_true")

    dist = sub.add_parser("distance", help="exact graph distance")
    dist.add_argument("--from", dest="src", required=True)
    dist.add_argument("--to", dest="dst", required=True)
    dist.add_argument("--coupled", action="store_true",
                      help="force coupled interpretation (implied by a comma)")
    dist.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", choices=SUITE_NAMES, required=True)
    ver.add_argument("--max-n", dest="max_n", type=int, default=None)
    ver.add_argument("--samples", type=int, default=None)
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--json", action="store_true")
    ver.add_argument("--timings", action="store_true",
                     help="include wall-clock fields in stdout JSON")
    ver.add_argument("--report-dir", default=None,
                     help="write JSON, CSV and a figure per suite")

    graph = sub.add_parser("graph", help="export a graph")
    graph.add_argument("--n", type=int, required=True)
    graph.add_argument("--kind", choices=(graphs.SINGLE, graphs.COUPLED), default=graphs.SINGLE)
    graph.add_argument("--component", type=int, default=None,
                       help="common-prefix length (coupled only)")
    graph.add_argument("--format", choices=("dot",), default="dot")
    graph.add_argument("--out", default=None)

    tables = sub.add_parser("tables", help="closed-form tables")
    tables.add_argument("--max-n", dest="max_n", type=int, default=10)
    tables.add_argument("--out-dir", dest="out_dir", default=None,
                        help="write tables.csv and growth.png")

    cache = sub.add_parser("cache", help="distance-cache maintenance")
    cache.add_argument("action", choices=("info", "clear"))

    return parser


_HANDLERS = {
    "solve": _cmd_solve,
    "distance": _cmd_distance,
    "verify": _cmd_verify,
    "graph": _cmd_graph,
    "tables": _cmd_tables,
    "cache": _cmd_cache,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Incompatible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CapacityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except TwinHanoiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
