import pytest
from hypothesis import given, strategies as st

from rodtopo.rods import (
    BadDeterminant,
    NonCoprimeEntry,
    NotUnitDeterminant,
    RodStructure,
    TooShort,
    UnimodularMap,
    apply_map,
    canonicalize,
    d_vector,
    det,
    from_d_vector,
    normalize_signs,
    reverse,
    to_d_vector,
    validate,
)

from conftest import d_vectors


def _consecutive_dets(rs):
    return [det(u, v) for u, v in zip(rs.rods, rs.rods[1:])]


class TestValidate:
    def test_minimal(self):
        rs = validate([(0, 1), (-1, 0)])
        assert rs.n == 1
        assert rs.rods == ((0, 1), (-1, 0))

    def test_bad_determinant(self):
        with pytest.raises(BadDeterminant) as exc:
            validate([(0, 1), (1, 0)])
        assert (exc.value.index, exc.value.value) == (1, -1)

    def test_non_coprime(self):
        with pytest.raises(NonCoprimeEntry) as exc:
            validate([(0, 2), (-1, 0)])
        assert exc.value.index == 0

    def test_zero_vector(self):
        with pytest.raises(NonCoprimeEntry):
            validate([(0, 1), (0, 0)])

    @pytest.mark.parametrize("raw", [[], [(0, 1)]])
    def test_too_short(self, raw):
        with pytest.raises(TooShort):
            validate(raw)

    def test_does_not_mutate(self):
        raw = [[0, 1], [-1, 0]]
        validate(raw)
        assert raw == [[0, 1], [-1, 0]]

    def test_immutable(self):
        rs = validate([(0, 1), (-1, 0)])
        with pytest.raises(AttributeError):
            rs.rods = ()


class TestNormalizeSigns:
    def test_already_normal(self):
        assert normalize_signs([(0, 1), (-1, 0)]).rods == ((0, 1), (-1, 0))

    def test_schwarzschild_list(self):
        rs = normalize_signs([(0, 1), (1, 0), (0, 1)])
        assert rs.rods == ((0, 1), (-1, 0), (0, -1))
        assert _consecutive_dets(rs) == [1, 1]

    def test_eguchi_hanson_list(self):
        rs = normalize_signs([(-1, 1), (1, 0), (1, 1)])
        assert rs.rods == ((-1, 1), (-1, 0), (-1, -1))
        assert _consecutive_dets(rs) == [1, 1]

    def test_rejects_non_unit(self):
        with pytest.raises(NotUnitDeterminant) as exc:
            normalize_signs([(0, 1), (1, 0), (1, 2)])
        assert exc.value.index == 2

    def test_rejects_non_coprime(self):
        with pytest.raises(NonCoprimeEntry):
            normalize_signs([(0, 1), (2, 2)])

    @given(st.lists(st.sampled_from([1, -1]), min_size=1, max_size=8), st.lists(st.integers(-4, 4), max_size=7))
    def test_output_validates(self, flips, d):
        rods = from_d_vector(d).rods
        flips = (flips * len(rods))[: len(rods)]
        raw = [(s * v.a, s * v.b) for s, v in zip(flips, rods)]
        rs = normalize_signs(raw)
        assert rs.rods[0] == raw[0]
        validate(rs.rods)
        # every T^2(v) is unchanged
        assert all(w in (v, (-v[0], -v[1])) for v, w in zip(raw, rs.rods))


class TestCanonicalize:
    def test_identity(self):
        rs = validate([(0, 1), (-1, 0), (1, -1)])
        out, u = canonicalize(rs)
        assert u == UnimodularMap(1, 0, 0, 1)
        assert out == rs

    def test_eguchi_hanson(self):
        rs = validate([(1, 1), (-1, 0), (1, -1)])
        out, u = canonicalize(rs)
        assert u.as_rows() == ((1, -1), (0, 1))
        assert out.rods == ((0, 1), (-1, 0), (2, -1))
        # images checked by hand multiplication
        assert u((1, 1)) == (0, 1) and u((-1, 0)) == (-1, 0)

    def test_d_vector_preserved(self, sl2z):
        for d in d_vectors(5, -3, 3):
            rs = from_d_vector(d)
            for u in sl2z[:12]:
                moved = apply_map(u, rs)
                out, back = canonicalize(moved)
                assert back.det == 1
                assert out == rs
                assert d_vector(out) == d


class TestReverse:
    def test_minimal(self):
        assert reverse(validate([(0, 1), (-1, 0)])).rods == ((-1, 0), (0, -1))

    def test_involution_on_d(self):
        for d in d_vectors(5, -3, 3):
            rs = from_d_vector(d)
            assert d_vector(reverse(reverse(rs))) == d

    def test_d_vector_of_reverse(self):
        for d in d_vectors(5, -3, 3):
            flipped = tuple(-x for x in reversed(d))
            assert d_vector(reverse(from_d_vector(d))) == flipped


class TestDVector:
    def test_one_one(self):
        assert from_d_vector((1, 1)).rods == ((0, 1), (-1, 0), (1, -1), (0, 1))

    @given(st.integers(-50, 50), st.integers(-50, 50))
    def test_symbolic_three_point(self, a, b):
        rods = from_d_vector((a, b)).rods
        assert rods[2] == (a, -1)
        assert rods[3] == (1 - a * b, b)

    def test_empty(self):
        assert from_d_vector(()).rods == ((0, 1), (-1, 0))
        assert d_vector(from_d_vector(())) == ()

    def test_to_d_vector_too_short(self):
        with pytest.raises(TooShort):
            to_d_vector(validate([(0, 1), (-1, 0)]))

    def test_round_trips(self):
        for d in d_vectors(6, -5, 5):
            rs = from_d_vector(d)
            assert to_d_vector(rs) == d
            assert isinstance(rs, RodStructure)

    def test_round_trip_from_structure(self, sl2z):
        for d in d_vectors(5, -3, 3):
            for u in sl2z[::9]:
                rs = apply_map(u, from_d_vector(d))
                assert from_d_vector(to_d_vector(rs)) == canonicalize(rs)[0]

    def test_large_entries_exact(self):
        rs = from_d_vector([1000] * 40)
        validate(rs.rods)
        assert max(abs(v.a) for v in rs.rods) > 10**100


def test_apply_map_requires_det_one():
    with pytest.raises(ValueError):
        apply_map(UnimodularMap(1, 0, 0, -1), validate([(0, 1), (-1, 0)]))
