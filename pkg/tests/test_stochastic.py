from fractions import Fraction

import numpy as np
import pytest
from scipy import stats

from probid.stochastic import (
    InvalidShape,
    MomentEstimate,
    RngStream,
    dissection_moment,
    mc_beta_moment,
    mc_dissection,
    mc_gamma_additivity,
    mc_gamma_moment,
    mc_independence_probe,
    mc_symmetric_beta_moment,
    sample_beta,
    sample_gamma,
    sample_symmetric_beta,
    symmetric_beta_moment,
)

N = 10**6
HALF = Fraction(1, 2)


def stream(i):
    return RngStream(42, i)


def test_determinism():
    a = sample_gamma(Fraction(7, 3), stream(3), 1000)
    b = sample_gamma(Fraction(7, 3), stream(3), 1000)
    c = sample_gamma(Fraction(7, 3), stream(4), 1000)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_stream_validation():
    with pytest.raises(ValueError):
        RngStream(-1, 0)
    with pytest.raises(ValueError):
        RngStream(0, 2**64)


def test_invalid_shape():
    with pytest.raises(InvalidShape):
        sample_gamma(0, stream(0), 10)
    with pytest.raises(InvalidShape):
        sample_beta(1, -2, stream(0), 10)


@pytest.mark.parametrize("shape", [HALF, Fraction(1, 3), Fraction(1), Fraction(5, 2), Fraction(17)])
def test_gamma_sampler_distribution(shape):
    # every sampler path (squared normal, boost, squeeze) against the exact CDF
    x = sample_gamma(shape, stream(100), 20_000)
    assert stats.kstest(x, stats.gamma(float(shape)).cdf).pvalue > 1e-3


def test_gamma_means():
    assert mc_gamma_moment(HALF, 1, stream(1), N).passed
    assert mc_gamma_moment(1, 1, stream(2), N).passed


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_half_shape_moments(k):
    v = mc_gamma_moment(HALF, k, stream(10 + k), N)
    assert v.passed and abs(float(v.extra["z_score"])) <= 4


def test_beta_samples():
    x = sample_beta(Fraction(1), Fraction(2), stream(5), 10_000)
    assert x.min() >= 0 and x.max() <= 1
    assert mc_beta_moment(1, 1, 1, stream(6), N).passed
    v = mc_beta_moment(1, 2, 1, stream(7), N)
    assert v.passed and v.rhs == "1/3"


def test_symmetric_beta_samples():
    z = sample_symmetric_beta(HALF, stream(8), 10_000)
    assert z.min() >= -1 and z.max() <= 1
    assert symmetric_beta_moment(HALF, 2) == HALF
    assert symmetric_beta_moment(HALF, 4) == Fraction(3, 8)
    for c in (HALF, Fraction(1), Fraction(2)):
        for k in (1, 3):
            assert mc_symmetric_beta_moment(c, k, stream(20 + k), N).passed
    assert mc_symmetric_beta_moment(HALF, 2, stream(30), N).rhs == "1/2"
    assert mc_symmetric_beta_moment(HALF, 4, stream(31), N).passed


def test_symmetric_beta_moments_by_quadrature():
    import mpmath

    for c in (HALF, Fraction(2), Fraction(7, 3)):
        cf = mpmath.mpf(c.numerator) / c.denominator
        # t = sin(u) removes the endpoint singularity of (1 - t^2)^(c-1)
        half_pi = mpmath.pi / 2
        norm = mpmath.quad(lambda u: mpmath.cos(u) ** (2 * cf - 1), [-half_pi, half_pi])
        for k in (2, 4, 6):
            num = mpmath.quad(lambda u: mpmath.sin(u) ** k * mpmath.cos(u) ** (2 * cf - 1), [-half_pi, half_pi])
            exact = symmetric_beta_moment(c, k)
            assert mpmath.almosteq(num / norm, mpmath.mpf(exact.numerator) / exact.denominator, rel_eps=1e-10)


def test_gamma_additivity():
    v = mc_gamma_additivity([HALF, HALF], 2, stream(40), N)
    assert v.passed and v.rhs == "2"
    assert mc_gamma_additivity([HALF, HALF], 0, stream(41), N).lhs == "1.0"
    v = mc_gamma_additivity([HALF] * 3, 3, stream(42), N)
    assert v.passed and v.rhs == "105/8"
    with pytest.raises(ValueError):
        mc_gamma_additivity([1], 7, stream(0), 10)


def test_dissection():
    assert dissection_moment(0) == 1
    assert dissection_moment(1) == 1
    assert dissection_moment(2) == 9
    for n in (1, 2):
        assert mc_dissection(n, stream(50 + n), N).passed


def test_independence_probe():
    v = mc_independence_probe(HALF, HALF, stream(60), N)
    assert v.passed and float(v.rhs) == pytest.approx(0.005)
    assert mc_independence_probe(1, 1, stream(61), N).passed
    with pytest.raises(ValueError):
        mc_independence_probe(1, 1, stream(62), 50)


def test_probe_detects_dependence():
    # a dependent pair must be flagged: feed B and B^2 through the Pearson test
    from probid.stochastic import _pearson

    b = sample_beta(1, 1, stream(63), 10_000)
    assert abs(_pearson(b, b**2)) > 5 / np.sqrt(10_000)


def test_moment_estimate():
    est = MomentEstimate.of(np.array([1.0, 2.0, 3.0, 4.0]))
    assert est.mean == 2.5
    assert est.standard_error == pytest.approx(np.std([1, 2, 3, 4], ddof=1) / 2)
    with pytest.raises(ValueError):
        MomentEstimate.of(np.array([1.0]))
