"""Legendre, Gegenbauer and Hermite polynomials over the rationals.

The recurrences are the constructors.  The ``*_moment_rep`` functions build
the same values a second way, as expectations of powers of a linear form in
independent gamma (or normal) variables, and serve as independent oracles.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_core import as_rational, binomial, factorial, pochhammer, rational_str
from .quadext import QuadExtScalar, Scalar


class InvalidParameter(ValueError):
    pass


class RationalPoly:
    """Dense polynomial with Fraction coefficients, index = degree."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Sequence = ()):
        c = [as_rational(v) for v in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __len__(self):
        return len(self._c)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self._c), len(other._c))
        return RationalPoly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self._c), len(other._c))
        return RationalPoly([self[k] - other[k] for k in range(n)])

    def __mul__(self, other):
        if isinstance(other, RationalPoly):
            if not self._c or not other._c:
                return RationalPoly()
            out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
            for i, a in enumerate(self._c):
                if a:
                    for j, b in enumerate(other._c):
                        out[i + j] += a * b
            return RationalPoly(out)
        s = as_rational(other)
        return RationalPoly([s * c for c in self._c])

    __rmul__ = __mul__

    def shift(self) -> "RationalPoly":
        """Multiply by x."""
        if not self._c:
            return self
        return RationalPoly((Fraction(0),) + self._c)

    def reflect(self) -> "RationalPoly":
        """P(-x)."""
        return RationalPoly([c if k % 2 == 0 else -c for k, c in enumerate(self._c)])

    def __call__(self, x: Scalar):
        return eval_poly(self, x)

    def __repr__(self):
        return f"RationalPoly({poly_str(self)})"

    def __str__(self):
        return poly_str(self)


def poly_str(P: RationalPoly) -> str:
    terms = []
    for k, c in enumerate(P.coefficients):
        if c == 0:
            continue
        if k == 0:
            terms.append(rational_str(c))
        elif k == 1:
            terms.append(f"{rational_str(c)}*x")
        else:
            terms.append(f"{rational_str(c)}*x^{k}")
    return " + ".join(terms) if terms else "0"


def eval_poly(P: RationalPoly, x: Scalar):
    """Horner evaluation.  Rational x gives a Fraction, surd x a QuadExtScalar."""
    if isinstance(x, QuadExtScalar):
        acc = QuadExtScalar(0)
        for c in reversed(P.coefficients):
            acc = acc * x + c
        return acc
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(P.coefficients):
        acc = acc * x + c
    return acc


_LEGENDRE: list[RationalPoly] = [RationalPoly([1]), RationalPoly([0, 1])]
_HERMITE: list[RationalPoly] = [RationalPoly([1]), RationalPoly([0, 2])]
_GEGENBAUER: dict[Fraction, list[RationalPoly]] = {}
_lock = threading.Lock()


def legendre(n: int) -> RationalPoly:
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    with _lock:
        table = _LEGENDRE
        while len(table) <= n:
            k = len(table) - 1
            # (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
            table.append(
                Fraction(1, k + 1) * (Fraction(2 * k + 1) * table[k].shift() - Fraction(k) * table[k - 1])
            )
        return table[n]


def _check_gegenbauer_param(a: Fraction) -> None:
    if a <= 0:
        raise InvalidParameter(f"Gegenbauer parameter must be > 0, got {rational_str(a)}")


def gegenbauer(n: int, a) -> RationalPoly:
    a = as_rational(a)
    _check_gegenbauer_param(a)
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    with _lock:
        table = _GEGENBAUER.setdefault(a, [RationalPoly([1]), RationalPoly([0, 2 * a])])
        while len(table) <= n:
            k = len(table)
            # k C_k = 2x (k+a-1) C_{k-1} - (k+2a-2) C_{k-2}
            table.append(
                Fraction(1, k) * (2 * (k + a - 1) * table[k - 1].shift() - (k + 2 * a - 2) * table[k - 2])
            )
        return table[n]


def hermite(n: int) -> RationalPoly:
    """Physicists' H_n."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    with _lock:
        table = _HERMITE
        while len(table) <= n:
            k = len(table) - 1
            table.append(2 * table[k].shift() - (2 * k) * table[k - 1])
        return table[n]


def _gamma_moment_form(n: int, x: Fraction, moments) -> QuadExtScalar:
    # (1/n!) E[(x+s) U + (x-s) V]^n with s = sqrt(x^2 - 1), E U^k = E V^k = moments[k]
    s = QuadExtScalar.sqrt(x * x - 1)
    up, down = x + s, x - s
    total = QuadExtScalar(0)
    up_pow = [QuadExtScalar(1)]
    down_pow = [QuadExtScalar(1)]
    for _ in range(n):
        up_pow.append(up_pow[-1] * up)
        down_pow.append(down_pow[-1] * down)
    for k in range(n + 1):
        weight = binomial(n, k) * moments[k] * moments[n - k]
        total = total + up_pow[k] * down_pow[n - k] * weight
    return total * Fraction(1, factorial(n))


def legendre_moment_rep(n: int, x) -> QuadExtScalar:
    """P_n(x) as (1/n!) E[(x+s)X1 + (x-s)X2]^n with X1, X2 ~ Gamma(1/2, 1).

    The surd parts cancel for every rational x; callers use
    :func:`~probid.quadext.rational_only` to assert that.
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    x = as_rational(x)
    half = Fraction(1, 2)
    return _gamma_moment_form(n, x, [pochhammer(half, k) for k in range(n + 1)])


def gegenbauer_moment_rep(n: int, a, x) -> QuadExtScalar:
    """C_n^(a)(x) from two independent Gamma(a, 1) variables, moments (a)_k."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    a = as_rational(a)
    _check_gegenbauer_param(a)
    x = as_rational(x)
    return _gamma_moment_form(n, x, [pochhammer(a, k) for k in range(n + 1)])


def normal_half_variance_moment(j: int) -> Fraction:
    """E N^j for N normal with mean 0 and variance 1/2."""
    if j % 2:
        return Fraction(0)
    # (j-1)!! / 2^(j/2)
    dfact = 1
    for odd in range(j - 1, 0, -2):
        dfact *= odd
    return Fraction(dfact, 2 ** (j // 2))


def hermite_moment_rep(n: int, x) -> Fraction:
    """H_n(x) = 2^n E (x + iN)^n; only even powers of iN survive, i^(2j) = (-1)^j."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    x = as_rational(x)
    total = Fraction(0)
    for j in range(0, n + 1, 2):
        sign = -1 if (j // 2) % 2 else 1
        total += sign * binomial(n, j) * x ** (n - j) * normal_half_variance_moment(j)
    return 2**n * total


@dataclass(frozen=True)
class PolyFamilyTag:
    family: str
    a: Fraction | None = None

    def __post_init__(self):
        if self.family not in ("legendre", "gegenbauer", "hermite"):
            raise InvalidParameter(f"unknown polynomial family {self.family!r}")
        if self.family == "gegenbauer":
            if self.a is None:
                raise InvalidParameter("Gegenbauer family needs a parameter")
            _check_gegenbauer_param(as_rational(self.a))

    def build(self, n: int) -> RationalPoly:
        if self.family == "legendre":
            return legendre(n)
        if self.family == "hermite":
            return hermite(n)
        return gegenbauer(n, self.a)
