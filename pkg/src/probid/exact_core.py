"""Exact integer/rational scalars and combinatorial primitives.

Rationals are :class:`fractions.Fraction`, which already normalizes to lowest
terms with a positive denominator on every operation.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

BigRational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class CompositionMismatch(ValueError):
    """Parts of a composition do not add up to the declared total."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats and decimal strings are refused: silently rounding a parameter
    would defeat the point of exact checks.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise ValueError(f"not a rational literal 'p' or 'p/q': {value!r}")
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def rational_str(q: Fraction | int) -> str:
    """Canonical report form: ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    return math.factorial(n)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return _factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial with negative top {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(k < 0 for k in parts):
        raise CompositionMismatch(f"negative part in {tuple(parts)}")
    if sum(parts) != n:
        raise CompositionMismatch(f"parts {tuple(parts)} sum to {sum(parts)}, not {n}")
    result = 1
    running = 0
    # product of binomials keeps intermediates integral and small
    for k in parts:
        running += k
        result *= math.comb(running, k)
    return result


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial a(a+1)...(a+n-1); (a)_0 = 1."""
    if n < 0:
        raise ValueError(f"pochhammer order must be >= 0, got {n}")
    a = as_rational(a)
    # accumulate over a common denominator: one gcd at the end
    num, den = 1, 1
    p, q = a.numerator, a.denominator
    for j in range(n):
        num *= p + j * q
        den *= q
    return Fraction(num, den)


def central_binomial(k: int) -> int:
    if k < 0:
        raise ValueError(f"central binomial of negative index {k}")
    return math.comb(2 * k, k)


def compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into m nonnegative parts, lexicographic order."""
    if m < 1:
        raise ValueError("need at least one part")
    if n < 0:
        return
    if m == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, m - 1):
            yield (first,) + rest
