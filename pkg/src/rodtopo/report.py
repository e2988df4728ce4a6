"""Serialization of invariants and admissibility verdicts.

JSON layout (``"schema": 1``), keys in this order::

    schema, rods, d_vector, chi, tau, inertia{n_plus, n_minus, n_zero},
    betti2, boundary{p, q, q_raw, kind}, verdicts[...]

Each verdict has ``class, asymptotics, admissible, equality, slack, eta,
reason, e_candidates[{e, slack, equality, admissible, reason}]``. Exact
rationals are written as ``"num/den"`` strings, integers included
(``"3/1"``); ``null`` marks a value that was not computed.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .admissibility import AdmissibilityReport
from .boundary import boundary_lens
from .invariants import inertia
from .rods import RodStructure, d_vector

SCHEMA = 1


def format_rational(x: Fraction | None) -> str | None:
    if x is None:
        return None
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def _enum_value(x):
    return None if x is None else x.value


def verdict_dict(r: AdmissibilityReport) -> dict:
    return {
        "class": r.geometry.value,
        "asymptotics": None if r.asymptotics is None else r.asymptotics.describe(),
        "admissible": r.admissible,
        "equality": r.equality,
        "slack": format_rational(r.slack),
        "eta": format_rational(r.eta),
        "reason": _enum_value(r.reason),
        "e_candidates": [
            {
                "e": c.e,
                "slack": format_rational(c.slack),
                "equality": c.equality,
                "admissible": c.admissible,
                "reason": _enum_value(c.reason),
            }
            for c in r.e_candidates
        ],
    }


def report_dict(rs: RodStructure, reports: Sequence[AdmissibilityReport] = ()) -> dict:
    d = d_vector(rs)
    ine = inertia(d)
    bd = boundary_lens(rs)
    return {
        "schema": SCHEMA,
        "rods": rs.as_lists(),
        "d_vector": list(d),
        "chi": rs.n,
        "tau": ine.signature,
        "inertia": {"n_plus": ine.n_plus, "n_minus": ine.n_minus, "n_zero": ine.n_zero},
        "betti2": rs.n - 1,
        "boundary": {"p": bd.p, "q": bd.q, "q_raw": bd.q_raw, "kind": bd.kind.value},
        "verdicts": [verdict_dict(r) for r in reports],
    }


def _human_verdict(r: AdmissibilityReport) -> list[str]:
    head = f"{r.geometry.value.upper()}: "
    if r.admissible:
        head += "admissible, equality (hyper-Kaehler)" if r.equality else "admissible, strict"
    else:
        head += f"inadmissible ({r.reason.value})"
    lines = [head]
    if r.asymptotics is not None:
        lines.append(f"  asymptotics: {r.asymptotics.describe()}")
    if r.eta is not None:
        lines.append(f"  eta: {format_rational(r.eta)}")
    if r.slack is not None and not r.e_candidates:
        lines.append(f"  slack: {format_rational(r.slack)}")
    for c in r.e_candidates:
        state = "pass" if c.admissible else f"fail ({c.reason.value})"
        eq = ", equality" if c.equality else ""
        lines.append(f"  e={c.e}: slack {format_rational(c.slack)}{eq}, {state}")
    return lines


def emit_report(rs: RodStructure, reports: Sequence[AdmissibilityReport] = (), fmt: str = "human") -> str:
    """Render the invariants of ``rs`` and any verdicts as text or JSON."""
    if fmt == "json":
        return json.dumps(report_dict(rs, reports), indent=2) + "\n"
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}")
    doc = report_dict(rs)
    ine = doc["inertia"]
    bd = boundary_lens(rs)
    lines = [
        f"rods: {rs}",
        f"turning points (chi): {doc['chi']}",
        f"b2: {doc['betti2']}",
        f"d-vector: {tuple(doc['d_vector'])}",
        f"inertia (+,-,0): ({ine['n_plus']},{ine['n_minus']},{ine['n_zero']})",
        f"signature: {doc['tau']}",
        f"boundary: {bd} [{bd.kind.value}], q_raw={bd.q_raw}",
    ]
    for r in reports:
        lines.extend(_human_verdict(r))
    return "\n".join(lines) + "\n"
