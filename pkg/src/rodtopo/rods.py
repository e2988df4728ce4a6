"""Rod vectors, rod structures and their SL(2, Z) normal forms.

A rod structure is an ordered sequence ``(v_0, ..., v_n)`` of primitive
integer vectors with ``det(v_{i-1}, v_i) = 1`` for every consecutive pair.
Everything here is immutable and built on Python integers, so entries never
overflow no matter how large the d-vector gets.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence


class RodError(ValueError):
    """Base class for malformed rod data."""


class TooShort(RodError):
    def __init__(self, length: int, minimum: int = 2):
        super().__init__(f"need at least {minimum} rod vectors, got {length}")
        self.length = length
        self.minimum = minimum


class NonCoprimeEntry(RodError):
    def __init__(self, index: int, vector):
        super().__init__(f"rod {index} = {tuple(vector)} is not a primitive vector")
        self.index = index
        self.vector = tuple(vector)


class BadDeterminant(RodError):
    def __init__(self, index: int, value: int):
        super().__init__(f"det(v_{index - 1}, v_{index}) = {value}, expected 1")
        self.index = index
        self.value = value


class NotUnitDeterminant(RodError):
    def __init__(self, index: int, value: int):
        super().__init__(f"det(v_{index - 1}, v_{index}) = {value}, expected +1 or -1")
        self.index = index
        self.value = value


class RodVector(NamedTuple):
    """Primitive integer vector naming the circle subgroup T^2(a, b)."""

    a: int
    b: int

    def __neg__(self) -> RodVector:
        return RodVector(-self.a, -self.b)

    def is_primitive(self) -> bool:
        return gcd(self.a, self.b) == 1


def det(u: Sequence[int], v: Sequence[int]) -> int:
    """Determinant of the 2x2 matrix with columns ``u`` and ``v``."""
    return u[0] * v[1] - u[1] * v[0]


class UnimodularMap(NamedTuple):
    """Integer matrix ``[[m11, m12], [m21, m22]]`` with determinant 1."""

    m11: int
    m12: int
    m21: int
    m22: int

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __call__(self, v: Sequence[int]) -> RodVector:
        return RodVector(self.m11 * v[0] + self.m12 * v[1], self.m21 * v[0] + self.m22 * v[1])

    def __matmul__(self, other: UnimodularMap) -> UnimodularMap:
        return UnimodularMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def as_rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.m11, self.m12), (self.m21, self.m22))


IDENTITY = UnimodularMap(1, 0, 0, 1)
SEED = (RodVector(0, 1), RodVector(-1, 0))


@dataclass(frozen=True)
class RodStructure:
    """A validated rod structure; build it with :func:`validate`."""

    rods: tuple[RodVector, ...]

    @property
    def n(self) -> int:
        """Number of turning points (fixed points of the torus action)."""
        return len(self.rods) - 1

    def __len__(self) -> int:
        return len(self.rods)

    def __iter__(self):
        return iter(self.rods)

    def __getitem__(self, i):
        return self.rods[i]

    def as_lists(self) -> list[list[int]]:
        return [[v.a, v.b] for v in self.rods]

    def __str__(self) -> str:
        return " ".join(f"({v.a},{v.b})" for v in self.rods)


def _as_vectors(raw: Iterable[Sequence[int]]) -> tuple[RodVector, ...]:
    out = []
    for pair in raw:
        a, b = pair
        out.append(RodVector(int(a), int(b)))
    return tuple(out)


def _check_primitive(vectors: Sequence[RodVector]) -> None:
    for i, v in enumerate(vectors):
        if not v.is_primitive():
            raise NonCoprimeEntry(i, v)


def validate(raw: Iterable[Sequence[int]]) -> RodStructure:
    """Check a sequence of integer pairs and wrap it as a :class:`RodStructure`.

    Raises :class:`TooShort` for fewer than two vectors, :class:`NonCoprimeEntry`
    for a non-primitive vector and :class:`BadDeterminant` when a consecutive
    determinant is not 1.
    """
    vectors = _as_vectors(raw)
    if len(vectors) < 2:
        raise TooShort(len(vectors))
    _check_primitive(vectors)
    for i in range(1, len(vectors)):
        value = det(vectors[i - 1], vectors[i])
        if value != 1:
            raise BadDeterminant(i, value)
    return RodStructure(vectors)


def normalize_signs(raw: Iterable[Sequence[int]]) -> RodStructure:
    """Flip signs left to right until every consecutive determinant is +1.

    ``v_0`` is kept; ``v_i`` is negated whenever ``det(v_{i-1}, v_i) = -1``
    after the earlier flips. Since ``T^2(v) = T^2(-v)`` the isotropy data
    is unchanged.
    """
    vectors = list(_as_vectors(raw))
    if len(vectors) < 2:
        raise TooShort(len(vectors))
    _check_primitive(vectors)
    for i in range(1, len(vectors)):
        value = det(vectors[i - 1], vectors[i])
        if value == -1:
            vectors[i] = -vectors[i]
        elif value != 1:
            raise NotUnitDeterminant(i, value)
    return RodStructure(tuple(vectors))


def apply_map(u: UnimodularMap, rs: RodStructure) -> RodStructure:
    """Relabel the torus by ``u``; requires ``det u = 1``."""
    if u.det != 1:
        raise ValueError(f"map {u.as_rows()} has determinant {u.det}, expected 1")
    return RodStructure(tuple(u(v) for v in rs.rods))


def canonicalize(rs: RodStructure) -> tuple[RodStructure, UnimodularMap]:
    """Return the unique relabeling with ``v_0 = (0, 1)`` and ``v_1 = (-1, 0)``.

    The map sends the basis ``(v_0, v_1)`` to ``((0, 1), (-1, 0))``; it is
    ``S @ B^{-1}`` where ``B`` has columns ``v_0, v_1`` (det 1) and ``S`` has
    columns ``(0, 1), (-1, 0)``.
    """
    (x0, y0), (x1, y1) = rs.rods[0], rs.rods[1]
    # B = [[x0, x1], [y0, y1]], B^{-1} = [[y1, -x1], [-y0, x0]]
    b_inv = UnimodularMap(y1, -x1, -y0, x0)
    u = UnimodularMap(0, -1, 1, 0) @ b_inv
    return apply_map(u, rs), u


def reverse(rs: RodStructure) -> RodStructure:
    """Read the rods in the opposite order, then renormalize signs."""
    return normalize_signs(rs.rods[::-1])


def to_d_vector(rs: RodStructure) -> tuple[int, ...]:
    """Self-intersection numbers ``d_i = -det(v_{i-1}, v_{i+1})``, i = 1..n-1."""
    if rs.n < 2:
        raise TooShort(len(rs.rods), minimum=3)
    r = rs.rods
    return tuple(-det(r[i - 1], r[i + 1]) for i in range(1, rs.n))


def d_vector(rs: RodStructure) -> tuple[int, ...]:
    """Like :func:`to_d_vector` but returns ``()`` for a single turning point."""
    if rs.n < 2:
        return ()
    return to_d_vector(rs)


def from_d_vector(d: Iterable[int]) -> RodStructure:
    """Build the canonical structure from ``v_{i+1} = -d_i v_i - v_{i-1}``."""
    rods = list(SEED)
    for di in d:
        di = int(di)
        prev, cur = rods[-2], rods[-1]
        rods.append(RodVector(-di * cur.a - prev.a, -di * cur.b - prev.b))
    return RodStructure(tuple(rods))
