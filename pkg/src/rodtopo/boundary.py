"""Boundary at infinity and compatibility with ALE / ALF asymptotics."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .rods import RodStructure, det


class Kind(str, Enum):
    S2XS1 = "s2xs1"
    S3 = "s3"
    LENS = "lens"


class Geometry(str, Enum):
    ALE = "ale"
    ALF = "alf"


class Reason(str, Enum):
    """Closed set of rejection reasons; scans aggregate over these."""

    BOUNDARY_NOT_LENS = "BoundaryNotLens"
    POSITIVE_MASS = "PositiveMass"
    Q_NOT_PM_ONE = "QNotPmOne"
    INEQUALITY_VIOLATED = "InequalityViolated"
    NOT_MULTI_TAUB_NUT = "NotMultiTaubNut"


class InternalNonCoprime(AssertionError):
    pass


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class LensBoundary:
    """``L(p, q)`` with ``0 <= q < p``; ``p = 0`` stands for S^2 x S^1."""

    p: int
    q: int
    q_raw: int

    @property
    def kind(self) -> Kind:
        if self.p == 0:
            return Kind.S2XS1
        if self.p == 1:
            return Kind.S3
        return Kind.LENS

    def __str__(self) -> str:
        if self.p == 0:
            return "S2xS1"
        return f"L({self.p},{self.q})"


def boundary_lens(rs: RodStructure) -> LensBoundary:
    v0, v1, vn = rs.rods[0], rs.rods[1], rs.rods[-1]
    d0n = det(v0, vn)
    p = abs(d0n)
    q_raw = sgn(d0n) * det(v1, vn)
    if p == 0:
        return LensBoundary(0, 1, q_raw)
    q = q_raw % p
    if gcd(p, q) != 1:
        raise InternalNonCoprime(f"gcd({p}, {q}) != 1 for {rs}")
    return LensBoundary(p, q, q_raw)


@dataclass(frozen=True)
class AsymptoticClass:
    """ALE with cyclic group of order ``p``, or ALF-A_k with Euler number ``e``.

    For ALF with ``p`` in {1, 2} the sign of ``e`` is not fixed by topology;
    ``e`` is then ``None`` and ``both_signs`` is set.
    """

    geometry: Geometry
    p: int
    e: int | None = None
    both_signs: bool = False

    @property
    def e_candidates(self) -> tuple[int, ...]:
        if self.geometry is not Geometry.ALF:
            return ()
        if self.both_signs:
            return (-self.p, self.p)
        return (self.e,)

    def describe(self) -> str:
        if self.geometry is Geometry.ALE:
            return "ALE trivial group" if self.p == 1 else f"ALE Z_{self.p}"
        if self.both_signs:
            return f"ALF-A_{self.p - 1} or ALF-A_{-self.p - 1}"
        return f"ALF-A_{-self.e - 1}"


@dataclass(frozen=True)
class Compatibility:
    compatible: bool
    asymptotics: AsymptoticClass | None
    reason: Reason | None = None


def classify_compatibility(rs: RodStructure, geometry: Geometry | str) -> Compatibility:
    geometry = Geometry(geometry)
    bd = boundary_lens(rs)
    p, q = bd.p, bd.q
    if geometry is Geometry.ALE:
        if p == 0:
            return Compatibility(False, None, Reason.BOUNDARY_NOT_LENS)
        if p == 1 and rs.n > 1:
            # asymptotically Euclidean: positive mass forces R^4, so chi = 1
            return Compatibility(False, None, Reason.POSITIVE_MASS)
        return Compatibility(True, AsymptoticClass(Geometry.ALE, p))

    if p == 0:
        return Compatibility(True, AsymptoticClass(Geometry.ALF, 0, e=0))
    if p <= 2:
        # q is 0 for p = 1 and 1 for p = 2, both congruent to +-1
        return Compatibility(True, AsymptoticClass(Geometry.ALF, p, both_signs=True))
    if q == 1:
        return Compatibility(True, AsymptoticClass(Geometry.ALF, p, e=-p))
    if q == p - 1:
        return Compatibility(True, AsymptoticClass(Geometry.ALF, p, e=p))
    return Compatibility(False, None, Reason.Q_NOT_PM_ONE)
