import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from probid.exact_core import binomial, factorial, pochhammer
from probid.orthopoly import eval_poly, gegenbauer, legendre
from probid.series import (
    TruncatedSeries,
    binomial_series,
    compose,
    gegenbauer_gf_check,
    mgf_product_check,
    series_mul,
    series_pow,
)

from conftest import small_rationals


def series_st(order):
    return st.lists(small_rationals, min_size=order, max_size=order).map(TruncatedSeries)


def test_binomial_series_examples():
    assert list(binomial_series(Fraction(1, 2), 4, 4).coefficients) == [1, 2, 6, 20]
    assert list(binomial_series(1, 1, 6).coefficients) == [1] * 6
    assert list(binomial_series(2, 1, 8).coefficients) == list(range(1, 9))


def test_mul_examples():
    f = TruncatedSeries([1, 2, 3])
    assert series_mul(f, TruncatedSeries.one(3)) == f
    assert series_mul(TruncatedSeries([1, 1, 0, 0]), TruncatedSeries([1, -1, 0, 0])) == TruncatedSeries([1, 0, -1, 0])
    sq = series_mul(binomial_series(Fraction(1, 2), 4, 30), binomial_series(Fraction(1, 2), 4, 30))
    assert list(sq.coefficients) == [4**n for n in range(30)]


def test_order_is_min():
    assert series_mul(TruncatedSeries([1] * 5), TruncatedSeries([1] * 3)).order == 3


def test_beyond_order_is_unknown():
    with pytest.raises(IndexError):
        TruncatedSeries([1, 2])[2]


def test_pow_examples():
    f = binomial_series(Fraction(1, 2), 4, 3)
    assert series_pow(f, 1) == f
    # brute-force 3-fold convolution of 1, 2, 6 at degree 1
    brute = sum(
        f[i] * f[j] * f[k] for i, j, k in itertools.product(range(2), repeat=3) if i + j + k == 1
    )
    assert series_pow(f, 3)[1] == brute == 6


def test_pow_matches_closed_form():
    for m in range(1, 7):
        g = series_pow(binomial_series(Fraction(1, 2), 4, 21), m)
        for n in range(21):
            assert g[n] == 4**n * pochhammer(Fraction(m, 2), n) / factorial(n)


@settings(max_examples=30)
@given(series_st(8), series_st(8), series_st(8))
def test_ring_laws(f, g, h):
    assert series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h))
    assert series_mul(f, g) == series_mul(g, f)
    assert series_mul(f, g + h) == series_mul(f, g) + series_mul(f, h)


@settings(max_examples=20)
@given(series_st(6), st.integers(1, 6))
def test_pow_is_fold_of_mul(f, m):
    acc = TruncatedSeries.one(6)
    for _ in range(m):
        acc = series_mul(acc, f)
    assert series_pow(f, m) == acc


@settings(max_examples=20)
@given(series_st(12), series_st(12))
def test_truncation_consistency(f, g):
    assert series_mul(f, g).truncate(5) == series_mul(f.truncate(5), g.truncate(5))


def test_compose_requires_zero_constant():
    with pytest.raises(ValueError):
        compose([1, 1, 1], TruncatedSeries([1, 1, 0]))


def test_gegenbauer_gf_examples():
    assert gegenbauer_gf_check(Fraction(1, 2), 1, 16).passed
    v = gegenbauer_gf_check(Fraction(1, 2), 0, 4)
    assert v.passed and v.lhs.split(", ")[2] == "-1/2"
    assert gegenbauer_gf_check(1, Fraction(1, 2), 10).passed


def test_gegenbauer_gf_at_one_is_geometric():
    from probid.series import gegenbauer_generating_series

    assert list(gegenbauer_generating_series(Fraction(1, 2), 1, 12).coefficients) == [1] * 12


def test_mgf_product_examples():
    assert mgf_product_check(1, Fraction(3, 4), 8).passed
    assert mgf_product_check(Fraction(3, 2), Fraction(1, 2), 8).passed
    assert mgf_product_check(0, Fraction(1, 2), 8).status == "unsupported"


def test_series_coefficients_equal_polynomials():
    from probid.series import gegenbauer_generating_series

    gf = gegenbauer_generating_series(Fraction(1, 2), Fraction(2, 3), 15)
    assert [gf[n] for n in range(15)] == [eval_poly(legendre(n), Fraction(2, 3)) for n in range(15)]
