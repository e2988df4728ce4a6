from itertools import product

import pytest

from rodtopo.rods import UnimodularMap

T = UnimodularMap(1, 1, 0, 1)
S = UnimodularMap(0, -1, 1, 0)
T_INV = UnimodularMap(1, -1, 0, 1)


def sl2z_sample():
    """A fixed spread of SL(2, Z) elements: words in S, T, T^-1 up to length 4."""
    gens = (S, T, T_INV)
    maps = {UnimodularMap(1, 0, 0, 1)}
    for length in range(1, 5):
        for word in product(gens, repeat=length):
            u = word[0]
            for g in word[1:]:
                u = u @ g
            maps.add(u)
    return sorted(maps)


def d_vectors(max_n, lo, hi, min_n=2):
    """All d-vectors for min_n <= n <= max_n turning points with entries in [lo, hi]."""
    for n in range(min_n, max_n + 1):
        yield from product(range(lo, hi + 1), repeat=n - 1)


@pytest.fixture(scope="session")
def sl2z():
    return sl2z_sample()
