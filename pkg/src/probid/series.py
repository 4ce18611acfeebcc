"""Truncated formal power series with exact coefficients.

Coefficients are Fractions or :class:`~probid.quadext.QuadExtScalar` values;
the class only needs ``+`` and ``*`` from them.  A series of order N knows
the coefficients of t^0 .. t^(N-1); everything above is unknown, not zero.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Sequence

from .exact_core import as_rational, factorial, pochhammer
from .orthopoly import eval_poly, gegenbauer
from .quadext import QuadExtScalar, as_quad, quad_str
from .verdict import Verdict


class TruncatedSeries:
    __slots__ = ("_c",)

    def __init__(self, coefficients: Sequence, order: int | None = None):
        c = list(coefficients)
        if order is None:
            order = len(c)
        if order < 1:
            raise ValueError(f"series order must be >= 1, got {order}")
        if len(c) < order:
            c.extend([Fraction(0)] * (order - len(c)))
        self._c = tuple(c[:order])

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(1)], order)

    @property
    def order(self) -> int:
        return len(self._c)

    @property
    def coefficients(self) -> tuple:
        return self._c

    def __getitem__(self, k: int):
        if not 0 <= k < len(self._c):
            raise IndexError(f"coefficient {k} is beyond truncation order {len(self._c)}")
        return self._c[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self._c[:order])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries([self._c[k] + other._c[k] for k in range(n)])

    def __neg__(self):
        return TruncatedSeries([-c for c in self._c])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, s) -> "TruncatedSeries":
        return TruncatedSeries([c * s for c in self._c])

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        return series_pow(self, m)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._c == other._c

    def __repr__(self):
        body = ", ".join(quad_str(c) for c in self._c)
        return f"TruncatedSeries([{body}])"


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to the smaller order."""
    n = min(f.order, g.order)
    a, b = f.coefficients, g.coefficients
    out = []
    for k in range(n):
        acc = Fraction(0)
        for i in range(k + 1):
            if a[i] and b[k - i]:
                acc = acc + a[i] * b[k - i]
        out.append(acc)
    return TruncatedSeries(out)


def series_pow(f: TruncatedSeries, m: int) -> TruncatedSeries:
    if m < 0:
        raise ValueError(f"power must be >= 0, got {m}")
    result = TruncatedSeries.one(f.order)
    base = f
    while m:
        if m & 1:
            result = series_mul(result, base)
        m >>= 1
        if m:
            base = series_mul(base, base)
    return result


def binomial_series(a, scale, order: int) -> TruncatedSeries:
    """(1 - scale*t)^(-a) = sum (a)_j scale^j t^j / j!."""
    if order < 1:
        raise ValueError(f"series order must be >= 1, got {order}")
    a = as_rational(a)
    if not isinstance(scale, QuadExtScalar):
        scale = as_rational(scale)
    out = []
    power = Fraction(1)
    for j in range(order):
        out.append(power * (pochhammer(a, j) / factorial(j)))
        power = power * scale
    return TruncatedSeries(out)


def compose(outer: Sequence, inner: TruncatedSeries) -> TruncatedSeries:
    """sum_j outer[j] * inner^j, for an inner series with zero constant term."""
    if inner[0] != 0:
        raise ValueError("composition needs an inner series with zero constant term")
    n = inner.order
    if len(outer) < n:
        raise ValueError("outer coefficients shorter than the truncation order")
    # Horner in the series ring; inner^j only reaches t^j and above
    acc = TruncatedSeries([outer[n - 1]], n)
    for j in range(n - 2, -1, -1):
        acc = series_mul(acc, inner) + TruncatedSeries([outer[j]], n)
    return acc


def gegenbauer_generating_series(a, x, order: int) -> TruncatedSeries:
    """(1 - 2tx + t^2)^(-a) expanded in t through the given order."""
    a, x = as_rational(a), as_rational(x)
    outer = binomial_series(a, 1, order).coefficients
    inner = TruncatedSeries([0, 2 * x, -1], order) if order > 2 else TruncatedSeries([0, 2 * x], order)
    return compose(outer, inner)


def gegenbauer_gf_check(a, x, order: int) -> Verdict:
    """Coefficients of (1 - 2tx + t^2)^(-a) against the recurrence values C_n^(a)(x)."""
    t0 = time.perf_counter()
    a, x = as_rational(a), as_rational(x)
    params = {"a": a, "x": x, "order": order}
    if a <= 0:
        return Verdict.unsupported("gegenbauer-gf", params, "exact", "a must be > 0", t0)
    gf = gegenbauer_generating_series(a, x, order)
    expected = [eval_poly(gegenbauer(n, a), x) for n in range(order)]
    for n in range(order):
        if gf[n] != expected[n]:
            return Verdict.compare(
                "gegenbauer-gf", params, "exact", gf[n], expected[n], t0,
                detail=f"first mismatch at coefficient {n}",
            )
    return Verdict.compare("gegenbauer-gf", params, "exact", list(gf.coefficients), expected, t0)


def mgf_product_check(x, a, order: int) -> Verdict:
    """Product of the two gamma MGF factors (1 - t(x +- s))^(-a) against (1 - 2tx + t^2)^(-a).

    s = sqrt(x^2 - 1) is carried exactly; |x| < 1 would need an imaginary
    surd and is reported as unsupported.
    """
    t0 = time.perf_counter()
    x, a = as_rational(x), as_rational(a)
    params = {"x": x, "a": a, "order": order}
    if a <= 0:
        return Verdict.unsupported("mgf-product", params, "quad", "a must be > 0", t0)
    if x * x < 1:
        return Verdict.unsupported("mgf-product", params, "quad", "x^2 - 1 < 0 leaves the real extension", t0)
    s = QuadExtScalar.sqrt(x * x - 1)
    left = series_mul(binomial_series(a, x + s, order), binomial_series(a, x - s, order))
    right = gegenbauer_generating_series(a, x, order)
    for n in range(order):
        if as_quad(left[n]) != as_quad(right[n]):
            return Verdict.compare(
                "mgf-product", params, "quad", left[n], right[n], t0,
                detail=f"first mismatch at coefficient {n}",
            )
    return Verdict.compare("mgf-product", params, "quad", list(left.coefficients), list(right.coefficients), t0)
