"""Command-line interface.

Subcommands: ``analyze`` (project dirs -> CSV/JSON report), ``generate``
(emit the synthetic suite), ``stats`` (Friedman + Holm over a report CSV),
``chart`` (SVG trendlines from a report CSV).

Exit codes: 0 success, 1 analysis/input failure (diagnostics on stderr),
2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import analyze_directory
from .chart import render_chart
from .frontend import Diagnostic
from .generator import generate_suite
from .report import ReportFormatError, parse_report_csv, report_row, rows_to_csv, rows_to_json
from .stats import friedman_test, split_by_threshold


def _print_diagnostic(diag: Diagnostic) -> None:
    print(
        f"{diag.path}:{diag.line}:{diag.column}: {diag.severity}: {diag.message}",
        file=sys.stderr,
    )


def _write_output(payload: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        Path(out).write_text(payload, encoding="utf-8")


def cmd_analyze(args: argparse.Namespace) -> int:
    paths = [Path(p) for p in args.paths]
    for path in paths:
        if not path.is_dir():
            print(f"error: not a directory: {path}", file=sys.stderr)
            return 2
    rows = []
    failed = False
    for path in sorted(paths, key=lambda p: p.name):
        analysis, diagnostics = analyze_directory(path)
        for diag in diagnostics:
            _print_diagnostic(diag)
        if analysis is None:
            failed = True
            continue
        rows.append(report_row(analysis))
    rows.sort(key=lambda row: row.project)
    payload = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows)
    _write_output(payload, args.out)
    return 1 if failed else 0


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        dirs = generate_suite(Path(args.output_root), step=args.step)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for project_dir in dirs:
        print(project_dir)
    return 0


def _load_report(path: str) -> list | None:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None
    try:
        return parse_report_csv(text)
    except ReportFormatError as exc:
        print(f"{path}:{exc.line}: error: {exc}", file=sys.stderr)
        return None


def cmd_stats(args: argparse.Namespace) -> int:
    rows = _load_report(args.report_csv)
    if rows is None:
        return 1
    pairs = [(row.di, getattr(row, args.metric)) for row in rows]
    try:
        matrix = split_by_threshold(pairs, args.threshold, args.boundary)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    result = friedman_test(matrix, alpha=args.alpha)
    print(f"metric: {args.metric}")
    print(f"blocks: {matrix.n_blocks}  treatments: {matrix.n_treatments}")
    print(f"Friedman chi-square: {result.chi_square:.6f} (df={result.df})")
    print(f"p-value: {result.p_value:.6f}")
    ranks = "  ".join(f"{name}={rank:.3f}" for name, rank in result.mean_ranks.items())
    print(f"mean ranks: {ranks}")
    print("Holm pairwise comparisons:")
    for comparison in result.pairwise:
        verdict = "reject" if comparison.rejected else "retain"
        print(
            f"  {comparison.pair[0]} vs {comparison.pair[1]}:"
            f" z={comparison.z:.4f}"
            f" raw p={comparison.raw_p:.6f}"
            f" adjusted p={comparison.adjusted_p:.6f}"
            f" -> {verdict}"
        )
    decision = "reject" if any(c.rejected for c in result.pairwise) else "retain"
    print(f"decision at alpha={args.alpha:g}: {decision}")
    return 0


def cmd_chart(args: argparse.Namespace) -> int:
    rows = _load_report(args.report_csv)
    if rows is None:
        return 1
    try:
        Path(args.out_svg).write_text(render_chart(rows), encoding="utf-8")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimetrics",
        description="Measure dependency injection and its effect on coupling"
        " and maintainability metrics in class-based source projects.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze project directories into a report")
    analyze.add_argument("paths", nargs="+", help="project directories (one row each)")
    analyze.add_argument("--format", choices=("csv", "json"), default="csv")
    analyze.add_argument("--out", default=None, help="output file (default: stdout)")
    analyze.set_defaults(func=cmd_analyze)

    generate = sub.add_parser("generate", help="emit the synthetic benchmark suite")
    generate.add_argument("output_root", help="directory to create the projects under")
    generate.add_argument("--step", type=int, default=10, help="injection percent step")
    generate.set_defaults(func=cmd_generate)

    stats = sub.add_parser("stats", help="Friedman test over an analyze report")
    stats.add_argument("report_csv", help="CSV produced by the analyze command")
    stats.add_argument("--threshold", type=float, default=0.5)
    stats.add_argument("--boundary", choices=("exclude", "lower", "upper"), default="exclude")
    stats.add_argument("--metric", choices=("mai", "dmai"), default="dmai")
    stats.add_argument("--alpha", type=float, default=0.05)
    stats.set_defaults(func=cmd_stats)

    chart = sub.add_parser("chart", help="SVG trendlines from an analyze report")
    chart.add_argument("report_csv", help="CSV produced by the analyze command")
    chart.add_argument("out_svg", help="output SVG path")
    chart.set_defaults(func=cmd_chart)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
