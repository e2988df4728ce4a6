"""Known toric gravitational instantons and their tabulated invariants.

Each entry records the isotropy subgroups in the order they occur along the
axis of the orbit space, and the ordering actually used for ``rods``. Where
the two differ the rods were read in reverse so that the recomputed signature
has the tabulated sign; a torus relabeling by ``-I`` is applied where noted.
Entries sharing a rod structure (R^4 and Taub-NUT, Schwarzschild and Kerr)
are one entry with several table rows.
"""
from __future__ import annotations

from dataclasses import dataclass

from .boundary import Geometry, Kind
from .rods import RodStructure, d_vector, validate


@dataclass(frozen=True)
class TableRow:
    """One line of the table of known instantons."""

    name: str
    geometry: Geometry
    boundary_kind: Kind
    hyperkahler: bool
    # |Gamma| for ALE rows, e = -k-1 for ALF-A_k rows
    group_order: int | None = None
    e: int | None = None

    @property
    def asymptotics(self) -> str:
        if self.geometry is Geometry.ALE:
            return "ALE trivial group" if self.group_order == 1 else f"ALE Z_{self.group_order}"
        return f"ALF-A_{-self.e - 1}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    title: str
    topology: str
    rods: RodStructure
    expected_chi: int
    expected_tau: int
    rows: tuple[TableRow, ...]
    isotropy: tuple[tuple[int, int], ...]
    ordering: str

    @property
    def d_vector(self) -> tuple[int, ...]:
        return d_vector(self.rods)

    @property
    def aliases(self) -> tuple[str, ...]:
        return tuple(row.name for row in self.rows)


_ALE, _ALF = Geometry.ALE, Geometry.ALF

_ENTRIES = (
    CatalogEntry(
        name="r4_taub_nut",
        title="Euclidean space and Taub-NUT",
        topology="R^4",
        rods=validate([(0, 1), (-1, 0)]),
        expected_chi=1,
        expected_tau=0,
        rows=(
            TableRow("euclidean", _ALE, Kind.S3, True, group_order=1),
            TableRow("taub_nut", _ALF, Kind.S3, True, e=-1),
        ),
        isotropy=((0, 1), (1, 0)),
        ordering="axis order, signs normalized",
    ),
    CatalogEntry(
        name="schwarzschild_kerr",
        title="Kerr and Schwarzschild",
        topology="R^2 x S^2",
        rods=validate([(0, 1), (-1, 0), (0, -1)]),
        expected_chi=2,
        expected_tau=0,
        rows=(
            TableRow("schwarzschild", _ALF, Kind.S2XS1, False, e=0),
            TableRow("kerr", _ALF, Kind.S2XS1, False, e=0),
        ),
        isotropy=((0, 1), (1, 0), (0, 1)),
        ordering="axis order, signs normalized",
    ),
    CatalogEntry(
        name="taub_bolt",
        title="Taub-bolt",
        topology="CP^2 minus a point",
        rods=validate([(0, 1), (-1, -1), (1, 0)]),
        expected_chi=2,
        expected_tau=1,
        rows=(TableRow("taub_bolt", _ALF, Kind.S3, False, e=-1),),
        isotropy=((0, 1), (1, 1), (1, 0)),
        ordering="axis order, signs normalized",
    ),
    CatalogEntry(
        name="eguchi_hanson",
        title="Eguchi-Hanson",
        topology="T*S^2",
        rods=validate([(1, 1), (-1, 0), (1, -1)]),
        expected_chi=2,
        expected_tau=1,
        rows=(TableRow("eguchi_hanson", _ALE, Kind.LENS, True, group_order=2),),
        isotropy=((-1, 1), (1, 0), (1, 1)),
        ordering="reversed axis order, signs normalized, relabeled by -I",
    ),
    CatalogEntry(
        name="chen_teo",
        title="Chen-Teo",
        topology="CP^2 minus a circle",
        rods=validate([(0, 1), (-1, 0), (1, -1), (0, 1)]),
        expected_chi=3,
        expected_tau=1,
        rows=(TableRow("chen_teo", _ALF, Kind.S2XS1, False, e=0),),
        isotropy=((0, 1), (1, 0), (1, 1), (0, 1)),
        ordering="reversed axis order, signs normalized, canonical frame",
    ),
)


def catalog_entries() -> list[CatalogEntry]:
    return list(_ENTRIES)


def table_rows() -> list[tuple[CatalogEntry, TableRow]]:
    return [(entry, row) for entry in _ENTRIES for row in entry.rows]


def get_entry(name: str) -> CatalogEntry:
    """Look up an entry by its name or by any of its table-row names."""
    key = name.lower().replace("-", "_")
    for entry in _ENTRIES:
        if key == entry.name or key in entry.aliases:
            return entry
    raise KeyError(name)


def match_d_vector(d: tuple[int, ...], geometry: Geometry | str) -> list[CatalogEntry]:
    """Entries of the given asymptotic type whose structure has d-vector ``d``.

    A structure read in the opposite order has d-vector ``(-d_{n-1}, ..., -d_1)``;
    both readings count, since they are two torus actions on the same space.
    """
    geometry = Geometry(geometry)
    d = tuple(d)
    flipped = tuple(-x for x in reversed(d))
    hits = []
    for entry in _ENTRIES:
        if len(entry.rods) != len(d) + 2:
            continue
        if not any(row.geometry is geometry for row in entry.rows):
            continue
        if entry.d_vector in (d, flipped):
            hits.append(entry)
    return hits
