"""Parametrized rod-structure families and exhaustive scans over d-vector boxes.

Every scan returns cells in ``itertools.product`` order over the box, so the
output is a pure function of the arguments. Passing ``workers`` spreads the
cell evaluation over a process pool; results are merged back by index.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import islice, product
from typing import Callable, Iterable, Iterator, Sequence

from .admissibility import AdmissibilityReport, check_alf, check
from .boundary import Geometry
from .catalog import match_d_vector
from .rods import RodStructure, det, from_d_vector

BATCH = 4096


class Marker(str, Enum):
    EQUALITY_RED = "red"
    KNOWN_BLUE = "blue"
    ADMISSIBLE_BLACK = "black"
    INADMISSIBLE = "blank"


_PRIORITY = (Marker.EQUALITY_RED, Marker.KNOWN_BLUE, Marker.ADMISSIBLE_BLACK, Marker.INADMISSIBLE)


@dataclass(frozen=True)
class GridCell:
    params: tuple[int, ...]
    structure: RodStructure
    reports: tuple[AdmissibilityReport, ...]
    markers: frozenset[Marker]
    catalog: tuple[str, ...] = ()

    @property
    def marker(self) -> Marker:
        """The single marker a plot shows: red, then blue, then black."""
        for m in _PRIORITY:
            if m in self.markers:
                return m
        return Marker.INADMISSIBLE

    def report(self, geometry: Geometry | str) -> AdmissibilityReport:
        geometry = Geometry(geometry)
        for r in self.reports:
            if r.geometry is geometry:
                return r
        raise KeyError(geometry)

    @property
    def admissible(self) -> bool:
        return any(r.admissible for r in self.reports)

    @property
    def equality(self) -> bool:
        return any(r.equality for r in self.reports)


def _markers(d: tuple[int, ...], reports: Sequence[AdmissibilityReport]) -> tuple[frozenset, tuple]:
    marks = set()
    names: list[str] = []
    for r in reports:
        if r.equality:
            marks.add(Marker.EQUALITY_RED)
        for entry in match_d_vector(d, r.geometry):
            marks.add(Marker.KNOWN_BLUE)
            if entry.name not in names:
                names.append(entry.name)
    marks.add(Marker.ADMISSIBLE_BLACK if any(r.admissible for r in reports) else Marker.INADMISSIBLE)
    return frozenset(marks), tuple(names)


def make_cell(d: Sequence[int], mode: str = "both") -> GridCell:
    d = tuple(d)
    rs = from_d_vector(d)
    reports = tuple(check(rs, mode))
    marks, names = _markers(d, reports)
    return GridCell(d, rs, reports, marks, names)


def _af_cell(d: tuple[int, ...]) -> GridCell | None:
    rs = from_d_vector(d)
    if det(rs.rods[0], rs.rods[-1]) != 0:
        return None
    reports = (check_alf(rs),)
    marks, names = _markers(d, reports)
    return GridCell(d, rs, reports, marks, names)


def _cell_ale(d):
    return make_cell(d, "ale")


def _cell_alf(d):
    return make_cell(d, "alf")


def _cell_both(d):
    return make_cell(d, "both")


_CELL_FUNCS = {"ale": _cell_ale, "alf": _cell_alf, "both": _cell_both}


def _mode_name(mode: str | Geometry | None) -> str:
    if mode is None or mode == "both":
        return "both"
    return Geometry(mode).value


def _ordered_map(func: Callable, items: Iterable, workers: int | None) -> Iterator:
    """``map`` that stays lazy and ordered, optionally over a process pool."""
    if not workers or workers <= 1:
        yield from map(func, items)
        return
    it = iter(items)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        while True:
            batch = list(islice(it, BATCH))
            if not batch:
                break
            yield from pool.map(func, batch, chunksize=max(1, len(batch) // (4 * workers)))


def three_point_structure(a: int, b: int) -> RodStructure:
    """``((0,1), (-1,0), (a,-1), (1-ab, b))``."""
    return from_d_vector((a, b))


def scan_three_point(geometry: Geometry | str, box: int, workers: int | None = None) -> list[GridCell]:
    """All ``(a, b)`` with ``|a|, |b| <= box``, row-major in ``a`` then ``b``."""
    if box < 1:
        raise ValueError("box must be at least 1")
    rng = range(-box, box + 1)
    func = _CELL_FUNCS[_mode_name(geometry)]
    return list(_ordered_map(func, product(rng, rng), workers))


def scan_four_point_af(box: int, workers: int | None = None) -> list[GridCell]:
    """AF structures (``v_4 = +-v_0``) among d-vectors ``(a, b, c)`` in the box."""
    if box < 1:
        raise ValueError("box must be at least 1")
    rng = range(-box, box + 1)
    cells = _ordered_map(_af_cell, product(rng, rng, rng), workers)
    return [c for c in cells if c is not None]


def orbit(d: Sequence[int]) -> set[tuple[int, ...]]:
    """d-vectors of the same torus action up to GL(2, Z) and reading order.

    An orientation-reversing relabeling negates every ``d_i``; reading the
    rods backwards reverses and negates the tuple.
    """
    d = tuple(d)
    neg = tuple(-x for x in d)
    return {d, neg, d[::-1], neg[::-1]}


def canonical_d(d: Sequence[int]) -> tuple[int, ...]:
    return min(orbit(d))


def enumerate_d_box(
    n: int,
    box: int,
    class_filter: str | Geometry | None = None,
    dedup: bool = False,
    workers: int | None = None,
) -> Iterator[GridCell]:
    """Stream every structure with ``n`` turning points and ``|d_i| <= box``.

    ``class_filter`` restricts the reports to ALE or ALF; ``dedup`` keeps only
    the lexicographically smallest member of each :func:`orbit`.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if box < 0:
        raise ValueError("box must be non-negative")
    rng = range(-box, box + 1)
    params: Iterable[tuple[int, ...]] = product(rng, repeat=n - 1)
    if dedup:
        params = (d for d in params if d == canonical_d(d))
    yield from _ordered_map(_CELL_FUNCS[_mode_name(class_filter)], params, workers)
