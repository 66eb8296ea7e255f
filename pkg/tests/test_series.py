import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from permroots.counting import single_length_difference
from permroots.cycletype import CycleType, parity_of_type, partitions_of
from permroots.series import (
    EgfSeries,
    Monomial,
    build_signed_difference_series,
    build_total_root_series,
    egf_coefficient,
    root_exponent,
    series_add,
    series_exp,
    series_mul,
)

T = EgfSeries.variable


def involutions(n):
    # a(n) = a(n-1) + (n-1) a(n-2)
    a = [1, 1]
    for m in range(2, n + 1):
        a.append(a[m - 1] + (m - 1) * a[m - 2])
    return a[n]


def test_monomial_weight_and_product():
    m = Monomial.from_mapping({3: 2, 1: 1})
    assert m.exponents == ((1, 1), (3, 2)) and m.weight == 7
    assert (m * Monomial.from_mapping({2: 1, 3: 1})).exponents == ((1, 1), (2, 1), (3, 3))


def test_add_mul_examples():
    one = EgfSeries.one(5)
    assert series_mul(one + T(1, 5), one - T(1, 5)) == one - EgfSeries.term(1, {1: 2}, 5)
    assert (T(2, 4) * T(3, 4)).is_zero()
    e = sum((EgfSeries.term(Fraction(1, math.factorial(i)), {1: i}, 3) for i in range(4)), EgfSeries.zero(3))
    f = sum((EgfSeries.term(Fraction((-1) ** i, math.factorial(i)), {1: i}, 3) for i in range(4)), EgfSeries.zero(3))
    assert e * f == EgfSeries.one(3)


def test_mixed_truncation_takes_minimum():
    s = series_add(EgfSeries.variable(1, 6), EgfSeries.term(1, {1: 5}, 4))
    assert s.truncation == 4
    assert (EgfSeries.variable(1, 6) * EgfSeries.variable(1, 3)).truncation == 3


def test_no_zero_coefficients_stored():
    s = T(1, 4) - T(1, 4)
    assert s.is_zero() and len(s) == 0
    assert len(EgfSeries({Monomial.from_mapping({1: 9}): 1}, 4)) == 0


def test_exp_examples():
    assert series_exp(EgfSeries.zero(5)) == EgfSeries.one(5)
    e = T(1, 4).exp()
    assert {m.exponents: c for m, c in e} == {((1, c),): Fraction(1, math.factorial(c)) for c in range(1, 5)} | {(): 1}
    s = (T(1, 4) + EgfSeries.term(Fraction(1, 2), {1: 2}, 4)).exp()
    assert egf_coefficient(s, CycleType.from_mapping({1: 4})) == involutions(4) == 10


def test_exp_rejects_constant():
    with pytest.raises(ValueError):
        EgfSeries.one(3).exp()


def test_egf_coefficient_examples():
    assert egf_coefficient(T(1, 3).exp(), CycleType.from_mapping({1: 3})) == 1
    assert egf_coefficient(EgfSeries.one(4), CycleType.from_mapping({2: 1})) == 0
    assert egf_coefficient(build_total_root_series(2, 4), CycleType.from_mapping({2: 2})) == 2
    with pytest.raises(ValueError):
        egf_coefficient(EgfSeries.one(3), CycleType.from_mapping({2: 2}))


def test_total_series_examples():
    s = build_total_root_series(1, 6)
    assert all(egf_coefficient(s, c) == 1 for n in range(7) for c in partitions_of(n))
    assert egf_coefficient(build_total_root_series(2, 4), CycleType.identity(4)) == 10
    assert egf_coefficient(build_total_root_series(3, 3), CycleType.from_mapping({3: 1})) == 0


def test_signed_series_examples():
    s = build_signed_difference_series(2, 2)
    assert egf_coefficient(s, CycleType.identity(2)) == 0
    assert egf_coefficient(s, CycleType.from_mapping({2: 1})) == 0
    s1 = build_signed_difference_series(1, 6)
    assert all(egf_coefficient(s1, c) == parity_of_type(c) for n in range(7) for c in partitions_of(n))


def test_root_exponent_terms():
    # k=2, weight <= 8: t_1 + t_1^2/2 + t_2^2 + t_3 + 3/2 t_3^2 + 2 t_4^2 + t_5 + t_7
    e = root_exponent(2, 8)
    got = {m.exponents: c for m, c in e}
    assert got == {
        ((1, 1),): 1, ((1, 2),): Fraction(1, 2), ((2, 2),): 1, ((3, 1),): 1, ((3, 2),): Fraction(3, 2),
        ((4, 2),): 2, ((5, 1),): 1, ((7, 1),): 1,
    }


def test_text_format_graded_lex():
    text = build_total_root_series(1, 2).to_text()
    assert text.splitlines() == ["1/1", "1/1 1^1", "1/2 1^2", "1/1 2^1"]


@pytest.mark.parametrize("k", range(1, 9))
def test_coefficients_are_integral_and_bounded(k):
    N = 10
    total, diff = build_total_root_series(k, N), build_signed_difference_series(k, N)
    for n in range(N + 1):
        for c in partitions_of(n):
            t, d = egf_coefficient(total, c), egf_coefficient(diff, c)
            assert t.denominator == 1 and d.denominator == 1
            assert t >= 0 and abs(d) <= t


@pytest.mark.parametrize("k", range(1, 9))
def test_difference_is_multiplicative_over_lengths(k):
    diff = build_signed_difference_series(k, 10)
    for n in range(11):
        for c in partitions_of(n):
            expected = 1
            for ell, m in c.parts:
                expected *= egf_coefficient(diff, CycleType(((ell, m),)))
            assert egf_coefficient(diff, c) == expected
            # and each single-length factor matches the closed form
            for ell, m in c.parts:
                assert egf_coefficient(diff, CycleType(((ell, m),))) == single_length_difference(k, ell, m)


def series_strategy(truncation, zero_constant=False):
    monomials = st.dictionaries(st.integers(1, 4), st.integers(1, 3), max_size=3).map(Monomial.from_mapping)
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=5)
    return st.dictionaries(monomials, coeffs, max_size=5).map(
        lambda d: EgfSeries({m: c for m, c in d.items() if not (zero_constant and not m.exponents)}, truncation)
    )


truncations = st.integers(0, 8)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_ring_laws(data):
    N = data.draw(truncations)
    a, b, c = (data.draw(series_strategy(N)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a + (-a) == EgfSeries.zero(N)
    assert a * EgfSeries.one(N) == a


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_exp_homomorphism(data):
    N = data.draw(truncations)
    a, b = data.draw(series_strategy(N, True)), data.draw(series_strategy(N, True))
    assert a.exp() * (-a).exp() == EgfSeries.one(N)
    assert (a + b).exp() == a.exp() * b.exp()
    assert a.cosh() + a.sinh() == a.exp()
    assert a.cosh() * a.cosh() - a.sinh() * a.sinh() == EgfSeries.one(N)
