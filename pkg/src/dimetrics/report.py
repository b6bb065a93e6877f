"""Report rows and their CSV/JSON renderings.

The CSV carries the 2-decimal presentation (half-up rounding, fixed column
order); the JSON carries full-precision values plus the same display strings,
so golden-file comparisons and high-precision regression checks coexist.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Sequence

from .analysis import ProjectAnalysis

CSV_COLUMNS = (
    "project",
    "di",
    "cbo",
    "dcbo",
    "lcom",
    "rfc",
    "loc",
    "ncbo",
    "ndcbo",
    "nlcom",
    "nrfc",
    "mai",
    "dmai",
)
CSV_HEADER = ",".join(CSV_COLUMNS)


@dataclass(frozen=True)
class ReportRow:
    project: str
    di: float
    cbo: float
    dcbo: float
    lcom: float
    rfc: float
    loc: int
    ncbo: float
    ndcbo: float
    nlcom: float
    nrfc: float
    mai: float
    dmai: float


class ReportFormatError(ValueError):
    """Malformed report input; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(message)
        self.line = line


def report_row(analysis: ProjectAnalysis) -> ReportRow:
    metrics = analysis.metrics
    scores = analysis.scores
    return ReportRow(
        project=analysis.name,
        di=metrics.di_proportion,
        cbo=metrics.mean_cbo,
        dcbo=metrics.mean_dcbo,
        lcom=metrics.mean_lcom,
        rfc=metrics.mean_rfc,
        loc=metrics.total_loc,
        ncbo=scores.ncbo,
        ndcbo=scores.ndcbo,
        nlcom=scores.nlcom,
        nrfc=scores.nrfc,
        mai=scores.mai,
        dmai=scores.dmai,
    )


def format_decimal(value: float, places: int = 2) -> str:
    """Fixed-point rendering with half-up rounding (0.125 -> "0.13")."""
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def _display_cells(row: ReportRow) -> dict[str, str]:
    cells = {"project": row.project, "loc": str(row.loc)}
    for column in CSV_COLUMNS:
        if column in cells:
            continue
        cells[column] = format_decimal(getattr(row, column))
    return cells


def rows_to_csv(rows: Sequence[ReportRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        cells = _display_cells(row)
        writer.writerow([cells[column] for column in CSV_COLUMNS])
    return buffer.getvalue()


def rows_to_json(rows: Sequence[ReportRow]) -> str:
    payload = []
    for row in rows:
        entry: dict = {column: getattr(row, column) for column in CSV_COLUMNS}
        entry["display"] = _display_cells(row)
        payload.append(entry)
    return json.dumps(payload, indent=2) + "\n"


def parse_report_csv(text: str) -> list[ReportRow]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ReportFormatError(1, "empty report") from None
    if header != list(CSV_COLUMNS):
        raise ReportFormatError(1, f"unexpected header {','.join(header)!r}")
    rows = []
    for line_number, record in enumerate(reader, start=2):
        if not record:
            continue
        if len(record) != len(CSV_COLUMNS):
            raise ReportFormatError(
                line_number, f"expected {len(CSV_COLUMNS)} fields, got {len(record)}"
            )
        try:
            rows.append(
                ReportRow(
                    project=record[0],
                    di=float(record[1]),
                    cbo=float(record[2]),
                    dcbo=float(record[3]),
                    lcom=float(record[4]),
                    rfc=float(record[5]),
                    loc=int(record[6]),
                    ncbo=float(record[7]),
                    ndcbo=float(record[8]),
                    nlcom=float(record[9]),
                    nrfc=float(record[10]),
                    mai=float(record[11]),
                    dmai=float(record[12]),
                )
            )
        except ValueError as exc:
            raise ReportFormatError(line_number, f"bad numeric field: {exc}") from None
    return rows
