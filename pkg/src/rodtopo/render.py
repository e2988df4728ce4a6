"""CSV tables and SVG lattice plots of scan results."""
from __future__ import annotations

import csv
import io
from string import ascii_lowercase
from typing import Sequence

from .catalog import match_d_vector
from .families import GridCell, Marker
from .report import format_rational

CELL = 14
MARGIN = 40
COLORS = {
    Marker.EQUALITY_RED: "#d62728",
    Marker.KNOWN_BLUE: "#1f77b4",
    Marker.ADMISSIBLE_BLACK: "#000000",
}


def param_names(k: int) -> list[str]:
    if k <= len(ascii_lowercase):
        return list(ascii_lowercase[:k])
    return [f"d{i}" for i in range(1, k + 1)]


def _flag(x: bool) -> str:
    return "true" if x else "false"


def grid_csv(cells: Sequence[GridCell]) -> str:
    """One row per (cell, asymptotic class): a,b,[c,...],class,admissible,equality,marker,reason,slack."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    width = len(cells[0].params) if cells else 2
    writer.writerow(param_names(width) + ["class", "admissible", "equality", "marker", "reason", "slack"])
    for cell in cells:
        for r in cell.reports:
            writer.writerow(
                list(cell.params)
                + [
                    r.geometry.value,
                    _flag(r.admissible),
                    _flag(r.equality),
                    report_marker(cell, r).value,
                    "" if r.reason is None else r.reason.value,
                    format_rational(r.slack) or "",
                ]
            )
    return buf.getvalue()


def report_marker(cell: GridCell, r) -> Marker:
    """Marker of one class's verdict; a cell's own marker combines all classes."""
    if r.equality:
        return Marker.EQUALITY_RED
    if match_d_vector(cell.params, r.geometry):
        return Marker.KNOWN_BLUE
    return Marker.ADMISSIBLE_BLACK if r.admissible else Marker.INADMISSIBLE


def grid_svg(cells: Sequence[GridCell], title: str = "") -> str:
    """Square lattice over the scanned (a, b) box; b increases upwards.

    Black squares are strictly admissible, red ones attain equality, blue
    ones are known instantons from the catalog; inadmissible cells are left
    blank apart from a faint lattice dot.
    """
    if not cells:
        raise ValueError("no cells to draw")
    if any(len(c.params) != 2 for c in cells):
        raise ValueError("SVG plots need two-parameter cells")
    box = max(max(abs(a), abs(b)) for a, b in (c.params for c in cells))
    span = 2 * box + 1
    size = span * CELL + 2 * MARGIN

    def x_of(a: int) -> int:
        return MARGIN + (a + box) * CELL

    def y_of(b: int) -> int:
        return MARGIN + (box - b) * CELL

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if title:
        out.append(f'<title>{title}</title>')
    out.append(f'<rect x="0" y="0" width="{size}" height="{size}" fill="#ffffff"/>')
    mid_x, mid_y = x_of(0) + CELL // 2, y_of(0) + CELL // 2
    lo, hi = MARGIN, MARGIN + span * CELL
    out.append(f'<g stroke="#999999" stroke-width="1">')
    out.append(f'<line x1="{lo}" y1="{mid_y}" x2="{hi}" y2="{mid_y}"/>')
    out.append(f'<line x1="{mid_x}" y1="{lo}" x2="{mid_x}" y2="{hi}"/>')
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="10" fill="#333333" text-anchor="middle">')
    ticks = sorted({-box, 0, box} | {t for t in range(-box, box + 1) if t % 5 == 0})
    for t in ticks:
        out.append(f'<text x="{x_of(t) + CELL // 2}" y="{hi + 14}">{t}</text>')
        out.append(f'<text x="{lo - 12}" y="{y_of(t) + CELL // 2 + 3}">{t}</text>')
    out.append(f'<text x="{hi + 16}" y="{mid_y + 4}" font-size="14">a</text>')
    out.append(f'<text x="{mid_x}" y="{lo - 12}" font-size="14">b</text>')
    out.append("</g>")
    for cell in cells:
        a, b = cell.params
        marker = cell.marker
        if marker is Marker.INADMISSIBLE:
            out.append(
                f'<circle class="cell blank" data-a="{a}" data-b="{b}" '
                f'cx="{x_of(a) + CELL // 2}" cy="{y_of(b) + CELL // 2}" r="1" fill="#cccccc"/>'
            )
            continue
        out.append(
            f'<rect class="cell {marker.value}" data-a="{a}" data-b="{b}" '
            f'x="{x_of(a) + 2}" y="{y_of(b) + 2}" width="{CELL - 4}" height="{CELL - 4}" '
            f'fill="{COLORS[marker]}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_grid(cells: Sequence[GridCell], fmt: str = "csv", title: str = "") -> str:
    if fmt == "csv":
        return grid_csv(cells)
    if fmt == "svg":
        return grid_svg(cells, title)
    raise ValueError(f"unknown grid format {fmt!r}")
