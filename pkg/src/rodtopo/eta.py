"""Exact eta-invariants of the signature operator on lens spaces."""
from __future__ import annotations

from fractions import Fraction
from math import gcd


class DomainError(ValueError):
    pass


class OutOfCaseRange(ValueError):
    pass


def eta_lens(p: int, q: int) -> Fraction:
    """Eta-invariant of ``L(p, q)`` for ``0 <= q < p`` and ``gcd(p, q) = 1``.

    ``(p-1)(2pq - 3p - q + 3)/(3p) - (2/p) * sum_{k=1}^{q-1} floor(kp/q)^2``,
    evaluated in integers and returned as a reduced fraction.
    """
    if p < 1 or not 0 <= q < p or gcd(p, q) != 1:
        raise DomainError(f"L({p},{q}) needs p >= 1, 0 <= q < p and gcd(p, q) = 1")
    floor_sq = sum((k * p // q) ** 2 for k in range(1, q))
    return Fraction((p - 1) * (2 * p * q - 3 * p - q + 3) - 6 * floor_sq, 3 * p)


def eta_closed_form_3pt(a: int, b: int) -> Fraction:
    """Closed forms of ``eta(L(p, q))`` for the three-turning-point family.

    Valid on the cases of the ALE classification argument: ``a < 0 < b``,
    ``a, b < -1``, and one of ``a, b`` equal to -1 with the other below -1.
    """
    if a < 0 < b:
        return Fraction(-a * b * (a + b), 3 * (1 - a * b))
    if a < -1 and b < -1:
        return Fraction(a * a * b + a * b * b, 3 * (a * b - 1)) + 2
    if a == -1 and b < -1:
        return Fraction((b + 2) * (b + 3), 3 * (b + 1))
    if b == -1 and a < -1:
        return Fraction((a + 2) * (a + 3), 3 * (a + 1))
    raise OutOfCaseRange(f"no closed form for (a, b) = ({a}, {b})")
