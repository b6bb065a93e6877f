"""Self-contained SVG trendline chart for the normalized report columns.

NCBO, NDCBO, MAI, and DMAI are plotted against the DI proportion on fixed
[0, 1] axes, each series with a least-squares linear trendline (omitted when
fewer than two distinct x positions exist).  Output is byte-deterministic
for identical input: fixed canvas, fixed colors, fixed number formatting,
no timestamps.
"""
from __future__ import annotations

from typing import Sequence

from .report import ReportRow

_WIDTH = 640
_HEIGHT = 440
_LEFT, _RIGHT = 70.0, 620.0
_TOP, _BOTTOM = 30.0, 390.0

_SERIES = (
    ("ncbo", "#1f77b4", "NCBO"),
    ("ndcbo", "#ff7f0e", "NDCBO"),
    ("mai", "#2ca02c", "MAI"),
    ("dmai", "#d62728", "DMAI"),
)


def _sx(value: float) -> float:
    return _LEFT + value * (_RIGHT - _LEFT)


def _sy(value: float) -> float:
    return _BOTTOM - value * (_BOTTOM - _TOP)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def least_squares(points: Sequence[tuple[float, float]]) -> tuple[float, float] | None:
    """(slope, intercept) of the least-squares line, or None if undefined."""
    if len(points) < 2:
        return None
    mean_x = sum(x for x, _ in points) / len(points)
    mean_y = sum(y for _, y in points) / len(points)
    sxx = sum((x - mean_x) ** 2 for x, _ in points)
    if sxx == 0:
        return None
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in points)
    slope = sxy / sxx
    return slope, mean_y - slope * mean_x


def render_chart(rows: Sequence[ReportRow]) -> str:
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}"'
        f' viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
    ]
    # axes and grid
    for i in range(6):
        tick = i / 5.0
        x = _sx(tick)
        y = _sy(tick)
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(_BOTTOM)}" x2="{_fmt(x)}"'
            f' y2="{_fmt(_TOP)}" stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<line x1="{_fmt(_LEFT)}" y1="{_fmt(y)}" x2="{_fmt(_RIGHT)}"'
            f' y2="{_fmt(y)}" stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(_BOTTOM + 18)}" font-family="sans-serif"'
            f' font-size="11" text-anchor="middle">{tick:.1f}</text>'
        )
        parts.append(
            f'<text x="{_fmt(_LEFT - 8)}" y="{_fmt(y + 4)}" font-family="sans-serif"'
            f' font-size="11" text-anchor="end">{tick:.1f}</text>'
        )
    parts.append(
        f'<line x1="{_fmt(_LEFT)}" y1="{_fmt(_BOTTOM)}" x2="{_fmt(_RIGHT)}"'
        f' y2="{_fmt(_BOTTOM)}" stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{_fmt(_LEFT)}" y1="{_fmt(_BOTTOM)}" x2="{_fmt(_LEFT)}"'
        f' y2="{_fmt(_TOP)}" stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{_fmt((_LEFT + _RIGHT) / 2)}" y="{_fmt(_BOTTOM + 36)}"'
        f' font-family="sans-serif" font-size="13" text-anchor="middle">DI proportion</text>'
    )
    parts.append(
        f'<text x="16" y="{_fmt((_TOP + _BOTTOM) / 2)}" font-family="sans-serif"'
        f' font-size="13" text-anchor="middle"'
        f' transform="rotate(-90 16 {_fmt((_TOP + _BOTTOM) / 2)})">normalized value</text>'
    )
    # series
    for key, color, label in _SERIES:
        points = [(row.di, getattr(row, key)) for row in rows]
        fit = least_squares(points)
        if fit is not None:
            slope, intercept = fit
            x0 = min(x for x, _ in points)
            x1 = max(x for x, _ in points)
            parts.append(
                f'<line x1="{_fmt(_sx(x0))}" y1="{_fmt(_sy(slope * x0 + intercept))}"'
                f' x2="{_fmt(_sx(x1))}" y2="{_fmt(_sy(slope * x1 + intercept))}"'
                f' stroke="{color}" stroke-width="1.5" stroke-dasharray="5 4"/>'
            )
        for x, y in points:
            parts.append(
                f'<circle cx="{_fmt(_sx(x))}" cy="{_fmt(_sy(y))}" r="3.5"'
                f' fill="{color}" data-series="{label}"/>'
            )
    # legend
    for index, (_, color, label) in enumerate(_SERIES):
        y = _TOP + 8 + 18 * index
        parts.append(
            f'<rect x="{_fmt(_LEFT + 12)}" y="{_fmt(y - 9)}" width="12" height="12"'
            f' fill="{color}"/>'
        )
        parts.append(
            f'<text x="{_fmt(_LEFT + 30)}" y="{_fmt(y + 2)}" font-family="sans-serif"'
            f' font-size="12">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
