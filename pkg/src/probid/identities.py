"""Checkable identity families.

Every ``check_*`` function evaluates both sides of one identity instance with
the strongest engine available and returns a :class:`~probid.verdict.Verdict`:

* ``exact``: both sides are Fractions, compared literally;
* ``quad``: the right side lives in Q(sqrt d) and must collapse to the left;
* ``bigfloat``: the right side needs cyclotomic values outside a single
  quadratic field, or a limit; compared at a relative tolerance.

Constrained sums over compositions k_1 + ... + k_m = n are evaluated by
:func:`constrained_sum` (nested summation, memoized on the remainder) or,
for small sizes, by :func:`enumerated_sum` which walks every composition.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import bigfloat
from .exact_core import (
    as_rational,
    binomial,
    central_binomial,
    compositions,
    factorial,
    pochhammer,
)
from .orthopoly import eval_poly, gegenbauer, hermite, legendre
from .quadext import EXACT_COSINE_ORDERS, IrrationalResidue, QuadExtScalar, rational_only, special_cosine
from .series import TruncatedSeries, binomial_series, series_mul, series_pow
from .verdict import Verdict

MAX_PARTS = 8


class InvalidCheck(ValueError):
    """Parameters violate a family's preconditions."""


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidCheck(message)


def _positive_rationals(values: Sequence, name: str = "a") -> tuple[Fraction, ...]:
    out = tuple(as_rational(v) for v in values)
    _need(len(out) >= 1, f"{name} needs at least one entry")
    _need(len(out) <= MAX_PARTS, f"at most {MAX_PARTS} parts supported, got {len(out)}")
    _need(all(v > 0 for v in out), f"all {name} entries must be > 0")
    return out


# -- constrained sums -----------------------------------------------------

def constrained_sum(weights: Sequence[Callable[[int], Fraction]], n: int) -> Fraction:
    """sum over k_1+...+k_m = n of prod_i weights[i](k_i)."""
    m = len(weights)
    _need(1 <= m <= MAX_PARTS, f"number of parts must be in 1..{MAX_PARTS}, got {m}")
    if n < 0:
        return Fraction(0)
    tables = [[w(k) for k in range(n + 1)] for w in weights]

    @lru_cache(maxsize=None)
    def tail(i: int, r: int) -> Fraction:
        if i == m - 1:
            return tables[i][r]
        row = tables[i]
        return sum((row[k] * tail(i + 1, r - k) for k in range(r + 1) if row[k]), Fraction(0))

    return tail(0, n)


def enumerated_sum(weights: Sequence[Callable[[int], Fraction]], n: int) -> Fraction:
    """Same sum, walking every composition explicitly; cost C(n+m-1, m-1)."""
    m = len(weights)
    _need(1 <= m <= MAX_PARTS, f"number of parts must be in 1..{MAX_PARTS}, got {m}")
    tables = [[w(k) for k in range(n + 1)] for w in weights]
    total = Fraction(0)
    for parts in compositions(n, m):
        term = Fraction(1)
        for table, k in zip(tables, parts):
            term *= table[k]
            if not term:
                break
        total += term
    return total


# -- families with rational right-hand sides ------------------------------

def check_power_sum(n: int) -> Verdict:
    t0 = time.perf_counter()
    _need(n >= 0, "n must be >= 0")
    lhs = sum(binomial(n, k) for k in range(n + 1))
    return Verdict.compare("power-sum", {"n": n}, "exact", lhs, 2**n, t0)


def _quarter_central(k: int) -> Fraction:
    return Fraction(central_binomial(k), 4**k)


def check_pretty(m: int) -> Verdict:
    t0 = time.perf_counter()
    _need(m >= 0, "m must be >= 0")
    lhs = sum((_quarter_central(k) * binomial(2 * m - k, m) for k in range(m + 1)), Fraction(0))
    rhs = sum((_quarter_central(k) * binomial(2 * m + 1, 2 * k) for k in range(m + 1)), Fraction(0))
    return Verdict.compare("pretty", {"m": m}, "exact", lhs, rhs, t0)


def pair_convolution_lhs(n: int) -> int:
    return sum(central_binomial(i) * central_binomial(n - i) for i in range(n + 1))


def check_pair_convolution(n: int) -> Verdict:
    t0 = time.perf_counter()
    _need(n >= 0, "n must be >= 0")
    return Verdict.compare("pair-convolution", {"n": n}, "exact", pair_convolution_lhs(n), 4**n, t0)


def multi_convolution_lhs(m: int, n: int, enumerate_all: bool = False) -> Fraction:
    weights = [central_binomial] * m
    return (enumerated_sum if enumerate_all else constrained_sum)(weights, n)


def multi_convolution_rhs(m: int, n: int) -> Fraction:
    # 4^n Gamma(m/2 + n) / (n! Gamma(m/2)), the gamma ratio as a Pochhammer symbol
    return 4**n * pochhammer(Fraction(m, 2), n) / factorial(n)


def check_multi_convolution(m: int, n: int) -> Verdict:
    t0 = time.perf_counter()
    _need(1 <= m <= MAX_PARTS, f"m must be in 1..{MAX_PARTS}")
    _need(n >= 0, "n must be >= 0")
    return Verdict.compare(
        "multi-convolution", {"m": m, "n": n}, "exact",
        multi_convolution_lhs(m, n), multi_convolution_rhs(m, n), t0,
    )


def brychkov_lhs(n: int) -> int:
    return sum(binomial(4 * k, 2 * k) * binomial(4 * n - 4 * k, 2 * n - 2 * k) for k in range(n + 1))


def brychkov_rhs(n: int) -> Fraction:
    return Fraction(2 ** (4 * n), 2) + Fraction(2 ** (2 * n), 2) * central_binomial(n)


def check_brychkov(n: int) -> Verdict:
    t0 = time.perf_counter()
    _need(n >= 0, "n must be >= 0")
    return Verdict.compare("brychkov", {"n": n}, "exact", brychkov_lhs(n), brychkov_rhs(n), t0)


def _cv_weight(a: Fraction) -> Callable[[int], Fraction]:
    return lambda k: pochhammer(a, k) / factorial(k)


def multi_cv_lhs(a: Sequence[Fraction], n: int, enumerate_all: bool = False) -> Fraction:
    weights = [_cv_weight(ai) for ai in a]
    return (enumerated_sum if enumerate_all else constrained_sum)(weights, n)


def _check_cv(family: str, a: Sequence, n: int) -> Verdict:
    t0 = time.perf_counter()
    a = _positive_rationals(a)
    _need(n >= 0, "n must be >= 0")
    lhs = multi_cv_lhs(a, n)
    rhs = pochhammer(sum(a), n) / factorial(n)
    return Verdict.compare(family, {"a": list(a), "n": n}, "exact", lhs, rhs, t0)


def check_chu_vandermonde(a1, a2, n: int) -> Verdict:
    return _check_cv("chu-vandermonde", (a1, a2), n)


def check_multi_cv(a: Sequence, n: int) -> Verdict:
    return _check_cv("multi-chu-vandermonde", a, n)


def hermite_multinomial_sides(m: int, n: int, x: Sequence) -> tuple[Fraction, Fraction]:
    """Both sides of the Hermite multinomial identity, multiplied by m^(n/2)."""
    x = tuple(as_rational(v) for v in x)
    total = sum(x, Fraction(0))
    # S/sqrt(m) = (S/m) sqrt(m); perfect-square m collapses to a rational
    arg = QuadExtScalar(0, total / m, m)
    if n % 2 == 0:
        scale = QuadExtScalar(m ** (n // 2))
    else:
        scale = QuadExtScalar(0, m ** (n // 2), m)
    lhs = rational_only(scale * eval_poly(hermite(n), arg) / factorial(n))
    weights = [(lambda xi: lambda k: eval_poly(hermite(k), xi) / factorial(k))(xi) for xi in x]
    rhs = constrained_sum(weights, n)
    return lhs, rhs


def check_hermite_multinomial(m: int, n: int, x: Sequence) -> Verdict:
    t0 = time.perf_counter()
    _need(1 <= m <= MAX_PARTS, f"m must be in 1..{MAX_PARTS}")
    _need(n >= 0, "n must be >= 0")
    _need(len(x) == m, f"need exactly m={m} x values, got {len(x)}")
    xs = [as_rational(v) for v in x]
    params = {"m": m, "n": n, "x": xs}
    try:
        lhs, rhs = hermite_multinomial_sides(m, n, xs)
    except IrrationalResidue as exc:
        return Verdict.failed("hermite-multinomial", params, "quad", "", "", t0, str(exc))
    engine = "exact" if math.isqrt(m) ** 2 == m else "quad"
    return Verdict.compare("hermite-multinomial", params, engine, lhs, rhs, t0)


def gegenbauer_convolution_rhs(a: Sequence[Fraction], n: int, x: Fraction, enumerate_all: bool = False) -> Fraction:
    weights = [(lambda ai: lambda k: eval_poly(gegenbauer(k, ai), x))(ai) for ai in a]
    return (enumerated_sum if enumerate_all else constrained_sum)(weights, n)


def check_gegenbauer_convolution(a: Sequence, n: int, x) -> Verdict:
    t0 = time.perf_counter()
    a = _positive_rationals(a)
    _need(n >= 0, "n must be >= 0")
    x = as_rational(x)
    lhs = eval_poly(gegenbauer(n, sum(a)), x)
    rhs = gegenbauer_convolution_rhs(a, n, x)
    return Verdict.compare("gegenbauer-convolution", {"a": list(a), "n": n, "x": x}, "exact", lhs, rhs, t0)


# -- roots-of-unity filters ----------------------------------------------

def legendre_filter_lhs(n: int, p: int) -> int:
    return sum(central_binomial(k * p) * central_binomial((n - k) * p) for k in range(n + 1))


def legendre_filter_rhs_quad(n: int, p: int) -> Fraction:
    """4^(np)/p * sum_l (-1)^(ln) P_np(cos(pi l/p)) with exact cosines."""
    P = legendre(n * p)
    acc = QuadExtScalar(0)
    for ell in range(p):
        term = eval_poly(P, special_cosine(ell, p))
        acc = acc - term if (ell * n) % 2 else acc + term
    return rational_only(acc * Fraction(4 ** (n * p), p))


def legendre_filter_rhs_bigfloat(ctx, n: int, p: int):
    N = n * p
    acc = ctx.mpf(0)
    for ell in range(p):
        term = bigfloat.legendre_value(ctx, N, ctx.cospi(ctx.mpf(ell) / p))
        acc = acc - term if (ell * n) % 2 else acc + term
    return acc * ctx.mpf(4) ** N / p


def check_legendre_filter(n: int, p: int, engine: str | None = None,
                          precision: int = bigfloat.DEFAULT_PRECISION,
                          tol=bigfloat.DEFAULT_TOLERANCE) -> Verdict:
    t0 = time.perf_counter()
    _need(n >= 0, "n must be >= 0")
    _need(p >= 1, "p must be >= 1")
    params = {"n": n, "p": p}
    if engine is None:
        engine = "quad" if p in EXACT_COSINE_ORDERS else "bigfloat"
    lhs = legendre_filter_lhs(n, p)
    if engine == "quad":
        if p not in EXACT_COSINE_ORDERS:
            return Verdict.unsupported("legendre-filter", params, "quad",
                                       f"cos(pi/{p}) is not in a single quadratic field", t0)
        try:
            rhs = legendre_filter_rhs_quad(n, p)
        except IrrationalResidue as exc:
            return Verdict.failed("legendre-filter", params, "quad", lhs, "", t0, str(exc))
        return Verdict.compare("legendre-filter", params, "quad", lhs, rhs, t0)
    _need(engine == "bigfloat", f"unknown engine {engine!r}")
    ctx = bigfloat.context(precision)
    rhs = legendre_filter_rhs_bigfloat(ctx, n, p)
    return Verdict.toleranced("legendre-filter", params, Fraction(lhs), rhs, tol, t0, ctx,
                              extra={"precision": precision})


def gegenbauer_filter_lhs(a: Fraction, n: int, p: int, z: Fraction) -> Fraction:
    def w(j: int) -> Fraction:
        return pochhammer(a, j) / factorial(j)

    return sum((w(k * p) * w((n - k) * p) * z ** (2 * k * p) for k in range(n + 1)), Fraction(0))


def gegenbauer_filter_rhs_quad(a: Fraction, n: int, p: int) -> Fraction:
    """z = 1 form: (1/p) sum_l (-1)^(ln) C_np^(a)(cos(pi l/p))."""
    C = gegenbauer(n * p, a)
    acc = QuadExtScalar(0)
    for ell in range(p):
        term = eval_poly(C, special_cosine(ell, p))
        acc = acc - term if (ell * n) % 2 else acc + term
    return rational_only(acc * Fraction(1, p))


def gegenbauer_filter_rhs_bigfloat(ctx, a: Fraction, n: int, p: int, z: Fraction):
    """(1/p) sum_l e^(i pi l n) z^(np) C_np^(a)((z w^l + w^-l / z) / 2), w = e^(i pi/p)."""
    N = n * p
    a_mp = bigfloat.to_mp(ctx, a)
    z_mp = bigfloat.to_mp(ctx, z)
    acc = ctx.mpc(0)
    for ell in range(p):
        w = bigfloat.root_of_unity(ctx, ell, p, half=True)
        arg = (z_mp * w + 1 / (z_mp * w)) / 2
        term = bigfloat.gegenbauer_value(ctx, N, a_mp, arg)
        acc = acc - term if (ell * n) % 2 else acc + term
    return acc * z_mp**N / p


def check_gegenbauer_filter(a, n: int, p: int, z=1, engine: str | None = None,
                            precision: int = bigfloat.DEFAULT_PRECISION,
                            tol=bigfloat.DEFAULT_TOLERANCE) -> Verdict:
    """Default engine is quad when z = 1 and the cosines are exact, else bigfloat."""
    t0 = time.perf_counter()
    a, z = as_rational(a), as_rational(z)
    _need(a > 0, "a must be > 0")
    _need(z > 0, "z must be a positive rational")
    _need(n >= 0, "n must be >= 0")
    _need(p >= 1, "p must be >= 1")
    params = {"a": a, "n": n, "p": p, "z": z}
    quad_ok = z == 1 and p in EXACT_COSINE_ORDERS
    if engine is None:
        engine = "quad" if quad_ok else "bigfloat"
    lhs = gegenbauer_filter_lhs(a, n, p, z)
    if engine == "quad":
        if not quad_ok:
            return Verdict.unsupported("gegenbauer-filter", params, "quad",
                                       "exact engine needs z = 1 and p in {1,2,3,4,6}", t0)
        try:
            rhs = gegenbauer_filter_rhs_quad(a, n, p)
        except IrrationalResidue as exc:
            return Verdict.failed("gegenbauer-filter", params, "quad", lhs, "", t0, str(exc))
        return Verdict.compare("gegenbauer-filter", params, "quad", lhs, rhs, t0)
    _need(engine == "bigfloat", f"unknown engine {engine!r}")
    ctx = bigfloat.context(precision)
    rhs = gegenbauer_filter_rhs_bigfloat(ctx, a, n, p, z)
    return Verdict.toleranced("gegenbauer-filter", params, lhs, rhs, tol, t0, ctx,
                              extra={"precision": precision})


# -- Gegenbauer -> Hermite limit -----------------------------------------

def gh_limit_errors(ctx, n: int, x: Fraction, a_values: Sequence[Fraction]) -> list:
    x_mp = bigfloat.to_mp(ctx, x)
    target = bigfloat.hermite_value(ctx, n, x_mp) / ctx.factorial(n)
    errs = []
    for a in a_values:
        a_mp = bigfloat.to_mp(ctx, a)
        root = ctx.sqrt(a_mp)
        scaled = bigfloat.gegenbauer_value(ctx, n, a_mp, x_mp / root) / root**n
        errs.append(abs(scaled - target))
    return errs


def fitted_decay_exponent(ctx, a_values: Sequence, errs: Sequence):
    """Least-squares slope of log(err) against log(a)."""
    xs = [ctx.log(bigfloat.to_mp(ctx, a)) for a in a_values]
    ys = [ctx.log(e) for e in errs]
    k = len(xs)
    mx, my = sum(xs) / k, sum(ys) / k
    num = sum((u - mx) * (v - my) for u, v in zip(xs, ys))
    den = sum((u - mx) ** 2 for u in xs)
    return num / den


def check_gh_limit(n: int, x, a_values: Sequence, precision: int = bigfloat.DEFAULT_PRECISION,
                   max_exponent: float = -0.9) -> Verdict:
    """a^(-n/2) C_n^(a)(x/sqrt a) -> H_n(x)/n!: errors must shrink like 1/a."""
    t0 = time.perf_counter()
    _need(n >= 0, "n must be >= 0")
    x = as_rational(x)
    a_values = [as_rational(v) for v in a_values]
    _need(len(a_values) >= 3, "need at least three a values")
    _need(all(v > 0 for v in a_values), "a values must be positive")
    _need(all(u < v for u, v in zip(a_values, a_values[1:])), "a values must be increasing")
    params = {"n": n, "x": x, "a": a_values}
    ctx = bigfloat.context(precision)
    errs = gh_limit_errors(ctx, n, x, a_values)
    target = bigfloat.hermite_value(ctx, n, bigfloat.to_mp(ctx, x)) / ctx.factorial(n)
    floor = ctx.ldexp(max(ctx.mpf(1), abs(target)), 16 - precision)
    extra = {"errors": [ctx.nstr(e, 40) for e in errs], "precision": precision}
    lhs = ctx.nstr(errs[-1], 40)
    if all(e <= floor for e in errs):
        extra["decay_exponent"] = None
        return _gh_verdict(params, lhs, "0", "pass", errs[-1], t0, extra)
    decreasing = all(u > v for u, v in zip(errs, errs[1:])) and errs[-1] > 0
    slope = fitted_decay_exponent(ctx, a_values, errs) if all(e > 0 for e in errs) else None
    extra["decay_exponent"] = ctx.nstr(slope, 40) if slope is not None else None
    ok = decreasing and slope is not None and slope <= max_exponent
    return _gh_verdict(params, lhs, "0", "pass" if ok else "fail", errs[-1], t0, extra)


def _gh_verdict(params, lhs, rhs, status, err, t0, extra) -> Verdict:
    import mpmath

    return Verdict("gegenbauer-hermite-limit", params, "bigfloat", lhs, rhs, status,
                   abs_err=mpmath.nstr(err, 40), rel_err=None,
                   elapsed_ms=round((time.perf_counter() - t0) * 1000.0, 3), extra=extra)


# -- series route --------------------------------------------------------

def _series_from(fn: Callable[[int], Fraction], order: int) -> TruncatedSeries:
    return TruncatedSeries([fn(k) for k in range(order)])


def series_lhs(family: str, **params) -> Fraction:
    """Left-hand side of a convolution family as a coefficient of a product of series."""
    n = params["n"]
    order = n + 1
    if family == "power-sum":
        # sum_k C(n,k) * 1: coefficient of t^n in (1+t)^n / (1-t)
        ones = binomial_series(1, 1, order)
        return series_mul(_series_from(lambda k: binomial(n, n - k), order), ones)[n]
    if family == "pair-convolution":
        return series_pow(binomial_series(Fraction(1, 2), 4, order), 2)[n]
    if family == "multi-convolution":
        return series_pow(binomial_series(Fraction(1, 2), 4, order), params["m"])[n]
    if family == "brychkov":
        f = _series_from(lambda k: binomial(4 * k, 2 * k), order)
        return series_mul(f, f)[n]
    if family == "legendre-filter":
        p = params["p"]
        f = _series_from(lambda k: central_binomial(k * p), order)
        return series_mul(f, f)[n]
    if family in ("chu-vandermonde", "multi-chu-vandermonde"):
        prod = TruncatedSeries.one(order)
        for ai in params["a"]:
            prod = series_mul(prod, binomial_series(ai, 1, order))
        return prod[n]
    if family == "gegenbauer-filter":
        a, p, z = as_rational(params["a"]), params["p"], as_rational(params.get("z", 1))
        g = _series_from(lambda k: pochhammer(a, k * p) / factorial(k * p), order)
        gz = _series_from(lambda k: g[k] * z ** (2 * k * p), order)
        return series_mul(gz, g)[n]
    if family == "hermite-multinomial":
        prod = TruncatedSeries.one(order)
        for xi in params["x"]:
            xi = as_rational(xi)
            prod = series_mul(prod, _series_from(lambda k: eval_poly(hermite(k), xi) / factorial(k), order))
        return prod[n]
    if family == "gegenbauer-convolution":
        x = as_rational(params["x"])
        prod = TruncatedSeries.one(order)
        for ai in params["a"]:
            ai = as_rational(ai)
            prod = series_mul(prod, _series_from(lambda k: eval_poly(gegenbauer(k, ai), x), order))
        return prod[n]
    raise InvalidCheck(f"family {family!r} has no series form")


def direct_lhs(family: str, **params) -> Fraction:
    """Left-hand side of a convolution family by explicit composition enumeration."""
    n = params["n"]
    if family == "power-sum":
        return Fraction(sum(binomial(n, k) for k in range(n + 1)))
    if family == "pair-convolution":
        return Fraction(pair_convolution_lhs(n))
    if family == "multi-convolution":
        return multi_convolution_lhs(params["m"], n, enumerate_all=True)
    if family == "brychkov":
        return Fraction(brychkov_lhs(n))
    if family == "legendre-filter":
        return Fraction(legendre_filter_lhs(n, params["p"]))
    if family in ("chu-vandermonde", "multi-chu-vandermonde"):
        return multi_cv_lhs([as_rational(v) for v in params["a"]], n, enumerate_all=True)
    if family == "gegenbauer-filter":
        return gegenbauer_filter_lhs(as_rational(params["a"]), n, params["p"], as_rational(params.get("z", 1)))
    if family == "hermite-multinomial":
        xs = [as_rational(v) for v in params["x"]]
        weights = [(lambda xi: lambda k: eval_poly(hermite(k), xi) / factorial(k))(xi) for xi in xs]
        return enumerated_sum(weights, n)
    if family == "gegenbauer-convolution":
        a = [as_rational(v) for v in params["a"]]
        return gegenbauer_convolution_rhs(a, n, as_rational(params["x"]), enumerate_all=True)
    raise InvalidCheck(f"family {family!r} has no convolution form")


# -- registry ------------------------------------------------------------

@dataclass(frozen=True)
class IdentityFamily:
    name: str
    anchor: str
    statement: str
    params: tuple[str, ...]
    check: Callable[..., Verdict]


FAMILIES: dict[str, IdentityFamily] = {
    f.name: f
    for f in [
        IdentityFamily("power-sum", "row sum of Pascal's triangle",
                       "sum_k C(n,k) = 2^n", ("n",), check_power_sum),
        IdentityFamily("pretty", "central-binomial warm-up pair",
                       "sum_k 4^-k C(2k,k) C(2m-k,m) = sum_k 4^-k C(2k,k) C(2m+1,2k)", ("m",), check_pretty),
        IdentityFamily("pair-convolution", "self-convolution of 1/sqrt(1-4x)",
                       "sum_i C(2i,i) C(2n-2i,n-i) = 4^n", ("n",), check_pair_convolution),
        IdentityFamily("multi-convolution", "m-th power of 1/sqrt(1-4x)",
                       "sum_{k_1+..+k_m=n} prod C(2k_i,k_i) = 4^n (m/2)_n / n!", ("m", "n"),
                       check_multi_convolution),
        IdentityFamily("brychkov", "Brychkov handbook entry 4.2.5.74",
                       "sum_k C(4k,2k) C(4n-4k,2n-2k) = 2^(4n-1) + 2^(2n-1) C(2n,n)", ("n",), check_brychkov),
        IdentityFamily("legendre-filter", "roots-of-unity filter, Legendre form",
                       "sum_k C(2kp,kp) C(2(n-k)p,(n-k)p) = 4^(np)/p sum_l (-1)^(ln) P_np(cos(pi l/p))",
                       ("n", "p"), check_legendre_filter),
        IdentityFamily("chu-vandermonde", "Chu-Vandermonde",
                       "sum_k (a1)_k/k! (a2)_(n-k)/(n-k)! = (a1+a2)_n/n!", ("a", "n"),
                       lambda a, n, **kw: check_chu_vandermonde(a[0], a[1], n)),
        IdentityFamily("multi-chu-vandermonde", "multivariable Chu-Vandermonde",
                       "sum_{k_1+..+k_m=n} prod (a_i)_(k_i)/k_i! = (a_1+..+a_m)_n/n!", ("a", "n"),
                       check_multi_cv),
        IdentityFamily("gegenbauer-filter", "roots-of-unity filter, Gegenbauer form",
                       "sum_k (a)_kp/(kp)! (a)_(n-k)p/((n-k)p)! z^(2kp) = "
                       "1/p sum_l e^(i pi l n) z^(np) C_np^(a)((z w^l + 1/(z w^l))/2), w = e^(i pi/p)",
                       ("a", "n", "p", "z"), check_gegenbauer_filter),
        IdentityFamily("hermite-multinomial", "Hermite addition over m arguments",
                       "H_n((x_1+..+x_m)/sqrt m)/n! = m^(-n/2) sum_{k_1+..+k_m=n} prod H_(k_i)(x_i)/k_i!",
                       ("m", "n", "x"), check_hermite_multinomial),
        IdentityFamily("gegenbauer-convolution", "Gegenbauer parameter additivity",
                       "C_n^(a_1+..+a_m)(x) = sum_{k_1+..+k_m=n} prod C_(k_i)^(a_i)(x)", ("a", "n", "x"),
                       check_gegenbauer_convolution),
        IdentityFamily("gegenbauer-hermite-limit", "Gegenbauer to Hermite scaling limit",
                       "a^(-n/2) C_n^(a)(x/sqrt a) -> H_n(x)/n! as a -> infinity, error O(1/a)",
                       ("n", "x", "a"), check_gh_limit),
    ]
}
