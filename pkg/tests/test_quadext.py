from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from probid.quadext import (
    DiscriminantMismatch,
    IrrationalResidue,
    QuadExtScalar,
    quad_str,
    rational_only,
    special_cosine,
)

from conftest import small_rationals


def quads(d):
    return st.builds(lambda a, b: QuadExtScalar(a, b, d), small_rationals, small_rationals)


def test_norm_example():
    assert QuadExtScalar(1, 1, 3) * QuadExtScalar(1, -1, 3) == -2


def test_conjugate_of_moment_root():
    x = Fraction(3, 2)
    s = QuadExtScalar.sqrt(x * x - 1)
    assert (x + s).conjugate() == x - s


def test_perfect_square_collapse():
    u = QuadExtScalar(0, 1, 4)
    assert u.is_rational() and u == 2
    assert QuadExtScalar(1, 1, Fraction(9, 4)) == Fraction(5, 2)


def test_discriminant_normalization():
    assert QuadExtScalar.sqrt(Fraction(5, 4)) == QuadExtScalar(0, Fraction(1, 2), 5)
    assert QuadExtScalar.sqrt(12) == QuadExtScalar(0, 2, 3)


def test_mismatch_raises():
    with pytest.raises(DiscriminantMismatch):
        QuadExtScalar.sqrt(2) + QuadExtScalar.sqrt(3)


def test_rational_only():
    assert rational_only(QuadExtScalar(Fraction(1, 3))) == Fraction(1, 3)
    with pytest.raises(IrrationalResidue):
        rational_only(QuadExtScalar.sqrt(2))


def test_serialization():
    assert quad_str(QuadExtScalar(Fraction(-1, 2), Fraction(3, 4), 5)) == "-1/2 + 3/4*sqrt(5)"
    assert quad_str(QuadExtScalar(7)) == "7"


@pytest.mark.parametrize("d", [2, 3, 5])
@settings(max_examples=40)
@given(data=st.data())
def test_field_axioms(d, data):
    u, v, w = (data.draw(quads(d)) for _ in range(3))
    assert (u + v) + w == u + (v + w)
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert u * v == v * u
    if u:
        assert u * u.inverse() == 1


@pytest.mark.parametrize("d", [2, 3, 5])
@settings(max_examples=200)
@given(data=st.data())
def test_norm_multiplicative_and_conjugation(d, data):
    u, v = data.draw(quads(d)), data.draw(quads(d))
    assert (u * v).norm() == u.norm() * v.norm()
    assert (u + v).conjugate() == u.conjugate() + v.conjugate()
    assert (u * v).conjugate() == u.conjugate() * v.conjugate()


@given(small_rationals, small_rationals)
def test_imaginary_quadratic_inverse(a, b):
    assume(a or b)
    u = QuadExtScalar(a, b, -1)
    assert u * u.inverse() == 1


def test_special_cosine_examples():
    assert special_cosine(0, 3) == 1
    assert special_cosine(1, 2) == 0
    assert special_cosine(1, 6) == QuadExtScalar(0, Fraction(1, 2), 3)
    assert special_cosine(1, 5) is None


@pytest.mark.parametrize("p", [1, 2, 3, 4, 6])
def test_special_cosine_matches_high_precision(p):
    with mpmath.workdps(60):
        for ell in range(p):
            exact = special_cosine(ell, p).to_mpmath()
            assert mpmath.almosteq(exact, mpmath.cospi(mpmath.mpf(ell) / p), abs_eps=mpmath.mpf(10) ** -50)


def test_special_cosine_range():
    with pytest.raises(ValueError):
        special_cosine(3, 3)
