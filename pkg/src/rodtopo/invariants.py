"""Euler characteristic, intersection form and signature of a rod structure.

The intersection form in the sphere basis is tridiagonal with diagonal
``d_1, ..., d_{n-1}`` and ones on the first off-diagonals. Its inertia is
computed by exact symmetric elimination (:func:`inertia`) and, independently,
from the characteristic polynomial with Descartes' rule (:func:`inertia_oracle`).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .rods import RodStructure, d_vector

ORACLE_MAX_SIZE = 12


class SizeTooLarge(ValueError):
    pass


class Inertia(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus


@dataclass(frozen=True)
class IntersectionData:
    diagonal: tuple[int, ...]
    inertia: Inertia | None = None

    @property
    def size(self) -> int:
        return len(self.diagonal)

    @property
    def tau(self) -> int | None:
        return None if self.inertia is None else self.inertia.signature

    def matrix(self) -> list[list[int]]:
        """Dense form, mostly for display and tests."""
        k = self.size
        rows = [[0] * k for _ in range(k)]
        for i, di in enumerate(self.diagonal):
            rows[i][i] = di
            if i + 1 < k:
                rows[i][i + 1] = rows[i + 1][i] = 1
        return rows


def euler_characteristic(rs: RodStructure) -> int:
    return rs.n


def betti2(rs: RodStructure) -> int:
    return rs.n - 1


def intersection_matrix(rs: RodStructure) -> IntersectionData:
    return IntersectionData(d_vector(rs))


def inertia(diagonal: Sequence[int]) -> Inertia:
    """Exact inertia of the unit-off-diagonal tridiagonal matrix.

    Symmetric Gaussian elimination by congruence. A nonzero pivot ``x`` is
    split off as a 1x1 block and the next diagonal entry becomes
    ``d - 1/x``. A zero pivot followed by another row is paired with it into
    the 2x2 block ``[[0, 1], [1, y]]``, which has determinant -1 and hence
    one positive and one negative eigenvalue; its Schur complement leaves the
    following diagonal entry unchanged because ``B^{-1}[1, 1] = 0``.
    A zero pivot in the last row is a genuine null direction.
    """
    plus = minus = zero = 0
    k = len(diagonal)
    # current pivot as num/den with den > 0; den == 0 means "take d_i as is"
    num, den = 0, 0
    i = 0
    while i < k:
        if den == 0:
            num, den = diagonal[i], 1
        if num > 0:
            plus += 1
        elif num < 0:
            minus += 1
        elif i + 1 < k:
            plus += 1
            minus += 1
            i += 2
            den = 0
            continue
        else:
            zero += 1
            break
        if i + 1 < k:
            # d - den/num, renormalized to a positive denominator
            num, den = diagonal[i + 1] * num - den, num
            if den < 0:
                num, den = -num, -den
        i += 1
    return Inertia(plus, minus, zero)


def charpoly(diagonal: Sequence[int]) -> list[int]:
    """Coefficients (lowest degree first) of ``det(t*I - T)``.

    Three-term recurrence ``p_k = (t - d_k) p_{k-1} - p_{k-2}``.
    """
    prev: list[int] = [1]
    cur: list[int] = [1]
    for j, dj in enumerate(diagonal):
        nxt = [0] * (len(cur) + 1)
        for deg, c in enumerate(cur):
            nxt[deg + 1] += c
            nxt[deg] -= dj * c
        if j > 0:
            for deg, c in enumerate(prev):
                nxt[deg] -= c
        prev, cur = cur, nxt
    return cur


def _sign_changes(coeffs: Sequence[int]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def inertia_oracle(diagonal: Sequence[int]) -> Inertia:
    """Inertia via Descartes' rule of signs on the characteristic polynomial.

    Exact because a real symmetric matrix has a real-rooted characteristic
    polynomial, for which the sign-change count equals the number of
    positive roots.
    """
    if len(diagonal) > ORACLE_MAX_SIZE:
        raise SizeTooLarge(f"oracle handles size <= {ORACLE_MAX_SIZE}, got {len(diagonal)}")
    coeffs = charpoly(diagonal)
    zero = 0
    while zero < len(coeffs) - 1 and coeffs[zero] == 0:
        zero += 1
    reduced = coeffs[zero:]
    plus = _sign_changes(reduced)
    minus = _sign_changes([c if deg % 2 == 0 else -c for deg, c in enumerate(reduced)])
    return Inertia(plus, minus, zero)


def intersection_data(rs: RodStructure) -> IntersectionData:
    diag = d_vector(rs)
    return IntersectionData(diag, inertia(diag))


def signature(rs: RodStructure) -> int:
    return inertia(d_vector(rs)).signature
