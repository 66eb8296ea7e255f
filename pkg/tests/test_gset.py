from math import gcd

import pytest

from permroots.gset import g_set, g_set_by_definition, g_set_by_factorization, prime_factorization


@pytest.mark.parametrize("build", [g_set_by_definition, g_set_by_factorization])
@pytest.mark.parametrize(
    "k, ell, expected",
    [(8, 1, (1, 2, 4, 8)), (2, 3, (1, 2)), (2, 4, (2,)), (1, 5, (1,)), (12, 3, (3, 6, 12))],
)
def test_examples(build, k, ell, expected):
    assert build(k, ell).members == expected


def test_go_ge_split():
    s = g_set(12, 1)
    assert s.go == (1, 3)
    assert s.ge == (2, 4, 6, 12)


def test_prime_factorization():
    assert prime_factorization(1) == []
    assert prime_factorization(360) == [(2, 3), (3, 2), (5, 1)]
    assert prime_factorization(97) == [(97, 1)]


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        g_set(0, 1)
    with pytest.raises(ValueError):
        g_set_by_factorization(3, 0)


def test_properties_up_to_100():
    for k in range(1, 101):
        divisors = tuple(d for d in range(1, k + 1) if k % d == 0)
        for ell in range(1, 101):
            s = g_set_by_definition(k, ell)
            assert s.members == g_set_by_factorization(k, ell).members
            assert set(s.go) | set(s.ge) == set(s.members)
            assert not set(s.go) & set(s.ge)
            assert all(k % g == 0 and gcd(g * ell, k) == g for g in s.members)
            assert (1 in s) == (gcd(ell, k) == 1)
            if k % 2 == 0 and ell % 2 == 0:
                assert not s.go
        assert g_set(k, 1).members == divisors
