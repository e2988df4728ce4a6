"""Hitchin-Thorpe screening of rod structures for ALE and ALF asymptotics.

Both tests are necessary conditions only. A rejected structure cannot be the
rod structure of a toric Ricci-flat instanton of that class; an admissible
one may or may not be realized. Every comparison is done on exact fractions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .boundary import (
    AsymptoticClass,
    Geometry,
    LensBoundary,
    Reason,
    boundary_lens,
    classify_compatibility,
    sgn,
)
from .eta import eta_lens
from .invariants import Inertia, inertia
from .rods import RodStructure, d_vector


@dataclass(frozen=True)
class ECandidate:
    """One tested sign of the asymptotic Euler number ``e``."""

    e: int
    slack: Fraction
    equality: bool
    admissible: bool
    reason: Reason | None = None


@dataclass(frozen=True)
class AdmissibilityReport:
    structure: RodStructure
    geometry: Geometry
    admissible: bool
    equality: bool
    chi: int
    tau: int
    inertia: Inertia
    d_vector: tuple[int, ...]
    boundary: LensBoundary
    asymptotics: AsymptoticClass | None = None
    slack: Fraction | None = None
    eta: Fraction | None = None
    e_candidates: tuple[ECandidate, ...] = ()
    reason: Reason | None = None

    @property
    def hyperkahler(self) -> bool:
        """Equality in the inequality; for simply connected M this forces hyper-Kaehler."""
        return self.equality


def _base(rs: RodStructure) -> dict:
    d = d_vector(rs)
    ine = inertia(d)
    return dict(
        structure=rs,
        chi=rs.n,
        tau=ine.signature,
        inertia=ine,
        d_vector=d,
        boundary=boundary_lens(rs),
    )


def ale_slack(chi: int, tau: int, p: int, eta: Fraction) -> Fraction:
    return 2 * (chi - Fraction(1, p)) - 3 * abs(tau + eta)


def alf_slack(chi: int, tau: int, e: int) -> Fraction:
    return 2 * chi - 3 * abs(tau - Fraction(e, 3) + sgn(e))


def check_ale(rs: RodStructure) -> AdmissibilityReport:
    base = _base(rs)
    compat = classify_compatibility(rs, Geometry.ALE)
    if not compat.compatible:
        return AdmissibilityReport(
            geometry=Geometry.ALE, admissible=False, equality=False, reason=compat.reason, **base
        )
    bd = base["boundary"]
    eta = eta_lens(bd.p, bd.q)
    slack = ale_slack(base["chi"], base["tau"], bd.p, eta)
    ok = slack >= 0
    return AdmissibilityReport(
        geometry=Geometry.ALE,
        admissible=ok,
        equality=slack == 0,
        asymptotics=compat.asymptotics,
        slack=slack,
        eta=eta,
        reason=None if ok else Reason.INEQUALITY_VIOLATED,
        **base,
    )


def _alf_candidate(e: int, chi: int, tau: int, d: tuple[int, ...]) -> ECandidate:
    slack = alf_slack(chi, tau, e)
    if slack < 0:
        return ECandidate(e, slack, False, False, Reason.INEQUALITY_VIOLATED)
    if slack > 0:
        return ECandidate(e, slack, False, True)
    # Equality means hyper-Kaehler, hence multi-Taub-NUT: chi = |e| and an
    # even intersection form. Otherwise the equality case is impossible.
    if chi == abs(e) and all(x % 2 == 0 for x in d):
        return ECandidate(e, slack, True, True)
    return ECandidate(e, slack, True, False, Reason.NOT_MULTI_TAUB_NUT)


def check_alf(rs: RodStructure) -> AdmissibilityReport:
    base = _base(rs)
    compat = classify_compatibility(rs, Geometry.ALF)
    if not compat.compatible:
        return AdmissibilityReport(
            geometry=Geometry.ALF, admissible=False, equality=False, reason=compat.reason, **base
        )
    cands = tuple(
        _alf_candidate(e, base["chi"], base["tau"], base["d_vector"])
        for e in compat.asymptotics.e_candidates
    )
    passing = [c for c in cands if c.admissible]
    admissible = bool(passing)
    if admissible:
        reason = None
        # smallest passing slack, so an equality candidate reports slack 0
        slack = min(c.slack for c in passing)
    else:
        reasons = {c.reason for c in cands}
        reason = Reason.NOT_MULTI_TAUB_NUT if Reason.NOT_MULTI_TAUB_NUT in reasons else Reason.INEQUALITY_VIOLATED
        slack = max(c.slack for c in cands)
    return AdmissibilityReport(
        geometry=Geometry.ALF,
        admissible=admissible,
        equality=any(c.equality for c in passing),
        asymptotics=compat.asymptotics,
        slack=slack,
        e_candidates=cands,
        reason=reason,
        **base,
    )


def _modes(mode: str | Geometry) -> Iterable[Geometry]:
    if mode == "both":
        return (Geometry.ALE, Geometry.ALF)
    return (Geometry(mode),)


def check(rs: RodStructure, mode: str | Geometry = "both") -> list[AdmissibilityReport]:
    """Run the ALE and/or ALF test; ``mode`` is ``"ale"``, ``"alf"`` or ``"both"``."""
    funcs = {Geometry.ALE: check_ale, Geometry.ALF: check_alf}
    return [funcs[g](rs) for g in _modes(mode)]
