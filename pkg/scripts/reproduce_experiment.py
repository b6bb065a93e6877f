#!/usr/bin/env python3
"""Run the full experiment loop into one output directory.

Generates the di_0 … di_100 suite, analyzes it into CSV and JSON reports,
renders the trendline chart, and prints the Friedman/Holm analysis for both
maintainability indices at the 0.5 DI threshold.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from dimetrics.cli import main as dimetrics_main


def run(out_dir: Path) -> int:
    projects = out_dir / "projects"
    report_csv = out_dir / "report.csv"
    report_json = out_dir / "report.json"
    chart_svg = out_dir / "trends.svg"
    out_dir.mkdir(parents=True, exist_ok=True)

    rc = dimetrics_main(["generate", str(projects), "--step", "10"])
    if rc:
        return rc
    project_dirs = sorted(str(p) for p in projects.iterdir() if p.is_dir())
    rc = dimetrics_main(["analyze", *project_dirs, "--out", str(report_csv)])
    if rc:
        return rc
    rc = dimetrics_main(
        ["analyze", *project_dirs, "--format", "json", "--out", str(report_json)]
    )
    if rc:
        return rc
    rc = dimetrics_main(["chart", str(report_csv), str(chart_svg)])
    if rc:
        return rc

    print(f"report: {report_csv}")
    print(f"json:   {report_json}")
    print(f"chart:  {chart_svg}")
    for metric in ("mai", "dmai"):
        print(f"\n=== Friedman analysis ({metric}, threshold 0.5) ===")
        rc = dimetrics_main(["stats", str(report_csv), "--metric", metric])
        if rc:
            return rc
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out-dir", default="experiment_out", help="where to place all artifacts"
    )
    args = parser.parse_args()
    return run(Path(args.out_dir))


if __name__ == "__main__":
    sys.exit(main())
