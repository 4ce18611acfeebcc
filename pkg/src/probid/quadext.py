"""Exact arithmetic in a single quadratic extension Q(sqrt(d)).

A :class:`QuadExtScalar` stores ``a + b*sqrt(d)``.  The discriminant is
normalized to a squarefree integer (``sqrt(5/4)`` becomes ``sqrt(5)/2``) so
values built from different rational radicands of the same field combine.
Negative ``d`` is allowed: the field laws are identical, and moment
representations evaluated at ``|x| < 1`` need ``sqrt(x^2 - 1)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

from .exact_core import as_rational, rational_str


class DiscriminantMismatch(ValueError):
    """Two surds from different quadratic fields were combined."""


class IrrationalResidue(ArithmeticError):
    """A value expected to be rational still carries a surd part."""


_TRIAL_LIMIT = 10_000


def _split_square(n: int) -> tuple[int, int]:
    """Return (s, f) with n = s^2 * f; f is squarefree for all factors below the trial bound."""
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    r = math.isqrt(n)
    if r * r == n:
        return r, sign
    s = 1
    p = 2
    while p * p <= n and p < _TRIAL_LIMIT:
        pp = p * p
        while n % pp == 0:
            n //= pp
            s *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(n)
    if r * r == n:
        return s * r, sign
    return s, sign * n


def _normalize(a: Fraction, b: Fraction, d: Fraction) -> tuple[Fraction, Fraction, int]:
    if b == 0 or d == 0:
        return a, Fraction(0), 0
    # sqrt(p/q) = sqrt(p*q)/q, then pull squares out of p*q
    s, f = _split_square(d.numerator * d.denominator)
    b = b * Fraction(s, d.denominator)
    if f == 1:
        return a + b, Fraction(0), 0
    return a, b, f


class QuadExtScalar:
    """Immutable element ``rational + surd*sqrt(d)``."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, rational_part=0, surd_part=0, discriminant=0):
        a, b, d = _normalize(
            as_rational(rational_part), as_rational(surd_part), as_rational(discriminant)
        )
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "QuadExtScalar":
        obj = cls.__new__(cls)
        if b == 0:
            d = 0
        obj._a, obj._b, obj._d = a, b, d
        return obj

    @classmethod
    def sqrt(cls, d) -> "QuadExtScalar":
        return cls(0, 1, d)

    @property
    def rational_part(self) -> Fraction:
        return self._a

    @property
    def surd_part(self) -> Fraction:
        return self._b

    @property
    def discriminant(self) -> int:
        return self._d

    def is_rational(self) -> bool:
        return self._b == 0

    def _common_d(self, other: "QuadExtScalar") -> int:
        if self._d == 0:
            return other._d
        if other._d == 0 or other._d == self._d:
            return self._d
        raise DiscriminantMismatch(
            f"cannot combine sqrt({self._d}) with sqrt({other._d})"
        )

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)
        return QuadExtScalar._raw(self._a + other._a, self._b + other._b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtScalar._raw(-self._a, -self._b, self._d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return QuadExtScalar._raw(a1 * a2 + d * b1 * b2, a1 * b2 + a2 * b1, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExtScalar":
        return QuadExtScalar._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return self._a * self._a - self._d * self._b * self._b

    def inverse(self) -> "QuadExtScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in quadratic extension")
        return QuadExtScalar._raw(self._a / n, -self._b / n, self._d)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExtScalar._raw(Fraction(1), Fraction(0), 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._a == other._a and self._b == other._b and self._d == other._d

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __float__(self):
        if self._d < 0:
            raise ValueError("value is not real")
        return float(self._a) + float(self._b) * math.sqrt(self._d)

    def to_mpmath(self):
        import mpmath

        a = mpmath.mpf(self._a.numerator) / self._a.denominator
        if self._b == 0:
            return a
        b = mpmath.mpf(self._b.numerator) / self._b.denominator
        return a + b * mpmath.sqrt(self._d)

    def __repr__(self):
        return f"QuadExtScalar({self})"

    def __str__(self):
        return quad_str(self)


Scalar = Union[int, Fraction, QuadExtScalar]


def _coerce(x) -> QuadExtScalar:
    if isinstance(x, QuadExtScalar):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QuadExtScalar._raw(Fraction(x), Fraction(0), 0)
    return NotImplemented


def as_quad(x: Scalar) -> QuadExtScalar:
    q = _coerce(x)
    if q is NotImplemented:
        raise TypeError(f"cannot use {type(x).__name__} as a quadratic-extension scalar")
    return q


def rational_only(u: Scalar) -> Fraction:
    """The rational value of ``u``; raises IrrationalResidue if a surd survives."""
    u = as_quad(u)
    if u.surd_part != 0:
        raise IrrationalResidue(f"surd part survived: {quad_str(u)}")
    return u.rational_part


def quad_str(u: Scalar) -> str:
    u = as_quad(u)
    if u.surd_part == 0:
        return rational_str(u.rational_part)
    return f"{rational_str(u.rational_part)} + {rational_str(u.surd_part)}*sqrt({u.discriminant})"


# cos(pi*l/p) for the p whose values sit in Q or a single Q(sqrt d)
_HALF = Fraction(1, 2)
_COS_TABLE = {
    1: [(1, 0, 0)],
    2: [(1, 0, 0), (0, 0, 0)],
    3: [(1, 0, 0), (_HALF, 0, 0), (-_HALF, 0, 0)],
    4: [(1, 0, 0), (0, _HALF, 2), (0, 0, 0), (0, -_HALF, 2)],
    6: [(1, 0, 0), (0, _HALF, 3), (_HALF, 0, 0), (0, 0, 0), (-_HALF, 0, 0), (0, -_HALF, 3)],
}

EXACT_COSINE_ORDERS = frozenset(_COS_TABLE)


def special_cosine(ell: int, p: int) -> Optional[QuadExtScalar]:
    """Exact cos(pi*ell/p) for p in {1,2,3,4,6}; None when not representable here."""
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if not 0 <= ell <= p - 1:
        raise ValueError(f"need 0 <= ell <= p-1, got ell={ell}, p={p}")
    row = _COS_TABLE.get(p)
    if row is None:
        return None
    return QuadExtScalar(*row[ell])
