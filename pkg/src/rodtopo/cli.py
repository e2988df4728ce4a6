"""Command-line interface.

Exit status: 0 success, 1 usage error, 2 unreadable or invalid rod file,
3 internal consistency failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .admissibility import check
from .catalog import catalog_entries, get_entry
from .families import enumerate_d_box, scan_four_point_af, scan_three_point
from .render import emit_grid, grid_csv
from .report import emit_report, report_dict
from .rodfile import RodFileError, parse_rod_file
from .rods import RodError, validate

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise RodFileError(f"cannot read {path}: {exc.strerror}") from None
    return validate(parse_rod_file(text))


def cmd_validate(args) -> int:
    rs = _load(args.file)
    print(f"valid rod structure with {rs.n} turning point{'s' if rs.n != 1 else ''}: {rs}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    rs = _load(args.file)
    sys.stdout.write(emit_report(rs, (), "json" if args.json else "human"))
    return EXIT_OK


def cmd_check(args) -> int:
    rs = _load(args.file)
    reports = check(rs, args.geometry)
    sys.stdout.write(emit_report(rs, reports, "json" if args.json else "human"))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cells = enumerate_d_box(args.turning_points, args.box, args.geometry, args.dedup, args.workers)
    out = sys.stdout
    if args.out == "csv":
        header = True
        for cell in cells:
            text = grid_csv([cell])
            out.write(text if header else text.split("\n", 1)[1])
            header = False
        return EXIT_OK
    out.write("[")
    for i, cell in enumerate(cells):
        doc = report_dict(cell.structure, cell.reports)
        doc = {"params": list(cell.params), "marker": cell.marker.value, **doc}
        out.write(("," if i else "") + "\n" + json.dumps(doc))
    out.write("\n]\n")
    return EXIT_OK


def _summary(cells, geometry: str) -> str:
    ok = [c for c in cells if c.admissible]
    eq = [c.params for c in cells if c.equality]
    return f"{geometry}: {len(ok)} of {len(cells)} cells admissible; equality at {eq}"


def cmd_scan3(args) -> int:
    cells = scan_three_point(args.geometry, args.box, args.workers)
    title = f"three turning points, {args.geometry.upper()}, |a|,|b| <= {args.box}"
    Path(args.svg).write_text(emit_grid(cells, "svg", title))
    if args.csv:
        Path(args.csv).write_text(emit_grid(cells, "csv"))
    print(_summary(cells, args.geometry.upper()))
    return EXIT_OK


def cmd_scan4af(args) -> int:
    cells = scan_four_point_af(args.box, args.workers)
    Path(args.csv).write_text(emit_grid(cells, "csv"))
    strict = sum(1 for c in cells if c.admissible and not c.equality)
    print(f"AF, four turning points, box {args.box}: {len(cells)} structures, {strict} strictly admissible")
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.name is None:
        for entry in catalog_entries():
            rows = ", ".join(row.name for row in entry.rows)
            print(f"{entry.name:20s} {entry.rods}   ({rows})")
        return EXIT_OK
    try:
        entry = get_entry(args.name)
    except KeyError:
        raise UsageError(f"unknown catalog entry {args.name!r}") from None
    reports = check(entry.rods, "both")
    sys.stdout.write(emit_report(entry.rods, reports, "json" if args.json else "human"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rodtopo", description="Topology of toric instantons from rod structures.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check a rod file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariants", help="chi, intersection form, signature, boundary")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("check", help="Hitchin-Thorpe admissibility")
    p.add_argument("file")
    p.add_argument("--class", dest="geometry", choices=["ale", "alf", "both"], required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="all d-vectors in a box")
    p.add_argument("--turning-points", type=int, required=True)
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--class", dest="geometry", choices=["ale", "alf"])
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--out", choices=["csv", "json"], required=True)
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("scan3", help="three-turning-point (a, b) grid")
    p.add_argument("--class", dest="geometry", choices=["ale", "alf"], required=True)
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--csv")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_scan3)

    p = sub.add_parser("scan4af", help="four-turning-point AF structures")
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--csv", required=True)
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_scan4af)

    p = sub.add_parser("catalog", help="known instantons")
    p.add_argument("name", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "box", None) is not None and args.box < (0 if args.command == "enumerate" else 1):
            raise UsageError("--box is too small")
        if args.command == "enumerate" and args.turning_points < 2:
            raise UsageError("--turning-points must be at least 2")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (RodFileError, RodError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
