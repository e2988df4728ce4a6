import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rodtopo.catalog import get_entry
from rodtopo.invariants import (
    Inertia,
    SizeTooLarge,
    betti2,
    charpoly,
    euler_characteristic,
    inertia,
    inertia_oracle,
    intersection_data,
    intersection_matrix,
    signature,
)
from rodtopo.rods import apply_map, canonicalize, from_d_vector, reverse, validate

from conftest import d_vectors


def numeric_inertia(diag):
    """Float eigenvalue count; integer tridiagonals of this size have well separated spectra."""
    if not diag:
        return Inertia(0, 0, 0)
    m = np.diag(np.array(diag, dtype=float))
    for i in range(len(diag) - 1):
        m[i, i + 1] = m[i + 1, i] = 1.0
    ev = np.linalg.eigvalsh(m)
    tol = 1e-9
    return Inertia(int((ev > tol).sum()), int((ev < -tol).sum()), int((abs(ev) <= tol).sum()))


class TestEuler:
    def test_r4(self):
        assert euler_characteristic(get_entry("r4_taub_nut").rods) == 1

    def test_taub_bolt(self):
        assert euler_characteristic(get_entry("taub_bolt").rods) == 2

    def test_chen_teo(self):
        assert euler_characteristic(get_entry("chen_teo").rods) == 3

    def test_betti(self):
        for d in d_vectors(6, -1, 1):
            rs = from_d_vector(d)
            assert betti2(rs) == euler_characteristic(rs) - 1 == intersection_matrix(rs).size


class TestIntersectionMatrix:
    def test_single_point(self):
        data = intersection_matrix(validate([(0, 1), (-1, 0)]))
        assert data.size == 0 and data.diagonal == ()

    def test_eguchi_hanson(self):
        assert intersection_matrix(validate([(1, 1), (-1, 0), (1, -1)])).diagonal == (2,)

    @given(st.integers(-30, 30), st.integers(-30, 30))
    def test_two_parameter(self, a, b):
        assert intersection_matrix(from_d_vector((a, b))).diagonal == (a, b)

    def test_dense_form(self):
        assert intersection_data(from_d_vector((2, -1, 3))).matrix() == [[2, 1, 0], [1, -1, 1], [0, 1, 3]]


class TestInertia:
    @pytest.mark.parametrize(
        "diag, expected",
        [
            ((0,), (0, 0, 1)),
            # t^2 - 4t + 3 = (t - 1)(t - 3)
            ((2, 2), (2, 0, 0)),
            # eigenvalues 0 and 2
            ((1, 1), (1, 0, 1)),
            # eigenvalues 0 and -2
            ((-1, -1), (0, 1, 1)),
            ((5,), (1, 0, 0)),
            ((), (0, 0, 0)),
            # all-zero 3x3 path matrix: eigenvalues -sqrt2, 0, sqrt2
            ((0, 0, 0), (1, 1, 1)),
            # zero pivot in the middle after a 1x1 step: [[1,1,0],[1,1,1],[0,1,1]] has eigenvalues 1, 1 +- sqrt2
            ((1, 1, 1), (2, 1, 0)),
        ],
    )
    def test_examples(self, diag, expected):
        assert inertia(diag) == expected
        assert inertia_oracle(diag) == expected

    def test_against_numeric_eigenvalues(self):
        for diag in product(range(-3, 4), repeat=4):
            assert inertia(diag) == numeric_inertia(diag)

    def test_exhaustive_small(self):
        for k in range(0, 5):
            for diag in product(range(-3, 4), repeat=k):
                assert inertia(diag) == inertia_oracle(diag)

    def test_exhaustive_size6(self):
        # oracle contract: every diagonal of size <= 6 with entries in [-4, 4]
        for k in range(5, 7):
            for diag in product(range(-4, 5), repeat=k):
                assert inertia(diag) == inertia_oracle(diag), diag

    def test_random(self):
        rng = random.Random(20241014)
        for _ in range(10_000):
            k = rng.randint(0, 8)
            diag = tuple(rng.randint(-5, 5) for _ in range(k))
            assert inertia(diag) == inertia_oracle(diag)

    def test_oracle_size_limit(self):
        inertia_oracle((1,) * 12)
        with pytest.raises(SizeTooLarge):
            inertia_oracle((1,) * 13)

    def test_large_exact(self):
        diag = (2,) * 60
        # A_60 Cartan matrix is positive definite
        assert inertia(diag) == (60, 0, 0)
        assert inertia((-2,) * 60) == (0, 60, 0)

    @given(st.lists(st.integers(-6, 6), max_size=10))
    def test_counts_and_zero_multiplicity(self, diag):
        ine = inertia(diag)
        assert sum(ine) == len(diag)
        assert abs(ine.signature) <= len(diag)
        coeffs = charpoly(diag)
        zero_mult = next(i for i, c in enumerate(coeffs) if c != 0)
        assert ine.n_zero == zero_mult


class TestCharpoly:
    def test_two_by_two(self):
        # det(tI - [[a,1],[1,b]]) = t^2 - (a+b)t + ab - 1
        assert charpoly((3, 5)) == [14, -8, 1]

    def test_empty(self):
        assert charpoly(()) == [1]


class TestSignature:
    def test_schwarzschild(self):
        assert signature(get_entry("schwarzschild_kerr").rods) == 0

    def test_eguchi_hanson(self):
        assert signature(get_entry("eguchi_hanson").rods) == 1

    def test_chen_teo(self):
        assert signature(get_entry("chen_teo").rods) == 1

    def test_single_point(self):
        assert signature(validate([(0, 1), (-1, 0)])) == 0

    def test_reverse_example(self):
        rs = validate([(0, 1), (-1, 0), (1, -1), (0, 1)])
        assert signature(rs) == 1
        assert signature(reverse(rs)) == -1

    def test_reverse_negates(self):
        for d in d_vectors(5, -3, 3):
            rs = from_d_vector(d)
            assert signature(reverse(rs)) == -signature(rs)

    def test_relabel_invariant(self, sl2z):
        for d in d_vectors(4, -3, 3):
            rs = from_d_vector(d)
            tau = signature(rs)
            for u in sl2z[::5]:
                moved = apply_map(u, rs)
                assert signature(moved) == tau
                assert signature(canonicalize(moved)[0]) == tau
