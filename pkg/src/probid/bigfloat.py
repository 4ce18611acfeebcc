"""Arbitrary-precision real/complex evaluation for the non-exact paths.

Each evaluation gets its own :class:`mpmath.MPContext` so the precision is
uniform within it and workers never share mpmath's global state.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

DEFAULT_PRECISION = 256
DEFAULT_TOLERANCE = "1e-30"


def context(bits: int = DEFAULT_PRECISION) -> mpmath.ctx_mp.MPContext:
    if bits < 64:
        raise ValueError(f"precision must be at least 64 bits, got {bits}")
    ctx = mpmath.MPContext()
    ctx.prec = bits
    return ctx


def to_mp(ctx, value):
    """Exact rational (or int/str/float) to a ctx.mpf, rounded once."""
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    return ctx.mpf(value)


def root_of_unity(ctx, ell: int, p: int, half: bool = False):
    """exp(2*pi*i*ell/p), or exp(pi*i*ell/p) when ``half``."""
    turns = ctx.mpf(ell) / p if half else ctx.mpf(2 * ell) / p
    return ctx.expjpi(turns)


def legendre_value(ctx, n: int, x):
    """P_n(x) by the three-term recurrence in ctx arithmetic."""
    if n == 0:
        return ctx.mpf(1) + 0 * x
    prev, cur = ctx.mpf(1) + 0 * x, x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1) * x * cur - k * prev) / (k + 1)
    return cur


def gegenbauer_value(ctx, n: int, a, x):
    """C_n^(a)(x) by recurrence; ``a`` and ``x`` may be real or complex ctx numbers."""
    one = ctx.mpf(1) + 0 * x
    if n == 0:
        return one
    prev, cur = one, 2 * a * x
    for k in range(2, n + 1):
        prev, cur = cur, (2 * (k + a - 1) * x * cur - (k + 2 * a - 2) * prev) / k
    return cur


def hermite_value(ctx, n: int, x):
    one = ctx.mpf(1) + 0 * x
    if n == 0:
        return one
    prev, cur = one, 2 * x
    for k in range(1, n):
        prev, cur = cur, 2 * x * cur - 2 * k * prev
    return cur
