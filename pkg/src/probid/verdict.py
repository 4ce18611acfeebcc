"""Outcome record of one identity check and its report serialization."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .exact_core import rational_str
from .quadext import QuadExtScalar, quad_str

PASS, FAIL, UNSUPPORTED = "pass", "fail", "unsupported"
ENGINES = ("exact", "quad", "bigfloat", "montecarlo")
FLOAT_DIGITS = 40


def scalar_str(value: Any) -> str:
    """Canonical string for any scalar a report may carry."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, Fraction)):
        return rational_str(value)
    if isinstance(value, QuadExtScalar):
        return quad_str(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(scalar_str(v) for v in value) + "]"
    if isinstance(value, float):
        return repr(value)
    try:
        import mpmath

        if isinstance(value, (mpmath.mpf, mpmath.mpc)):
            return mpmath.nstr(value, FLOAT_DIGITS)
    except ImportError:  # pragma: no cover
        pass
    return str(value)


def _param_json(value: Any):
    if isinstance(value, (list, tuple)):
        return [_param_json(v) for v in value]
    return scalar_str(value)


def _sort_atom(value: Any):
    if isinstance(value, (list, tuple)):
        return (1, tuple(_sort_atom(v) for v in value))
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return (0, Fraction(value))
    return (2, str(value))


def _elapsed_ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000.0, 3)


@dataclass
class Verdict:
    family: str
    params: dict
    engine: str
    lhs: str
    rhs: str
    status: str
    abs_err: Optional[str] = None
    rel_err: Optional[str] = None
    elapsed_ms: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @classmethod
    def compare(cls, family, params, engine, lhs, rhs, t0, detail=None) -> "Verdict":
        """Exact or quad engine: pass iff the two sides are literally equal."""
        extra = {"detail": detail} if detail else {}
        status = PASS if lhs == rhs else FAIL
        return cls(family, dict(params), engine, scalar_str(lhs), scalar_str(rhs), status,
                   elapsed_ms=_elapsed_ms(t0), extra=extra)

    @classmethod
    def failed(cls, family, params, engine, lhs, rhs, t0, detail) -> "Verdict":
        return cls(family, dict(params), engine, scalar_str(lhs), scalar_str(rhs), FAIL,
                   elapsed_ms=_elapsed_ms(t0), extra={"detail": detail})

    @classmethod
    def unsupported(cls, family, params, engine, reason, t0) -> "Verdict":
        return cls(family, dict(params), engine, "", "", UNSUPPORTED,
                   elapsed_ms=_elapsed_ms(t0), extra={"detail": reason})

    @classmethod
    def toleranced(cls, family, params, lhs, rhs, tol, t0, ctx, extra=None) -> "Verdict":
        """Bigfloat engine: errors measured against max(1, |lhs|) in ``ctx`` precision.

        A complex right-hand side must also have |Im| <= tol.
        """
        lhs_f = ctx.mpf(lhs.numerator) / lhs.denominator if isinstance(lhs, Fraction) else ctx.mpf(lhs)
        rhs_c = ctx.convert(rhs)
        tol = ctx.mpf(str(tol)) if not isinstance(tol, Fraction) else ctx.mpf(tol.numerator) / tol.denominator
        scale = max(ctx.mpf(1), abs(lhs_f))
        re_err = abs(ctx.re(rhs_c) - lhs_f)
        im_err = abs(ctx.im(rhs_c))
        rel = re_err / scale
        info = dict(extra or {})
        info["imag_err"] = ctx.nstr(im_err, FLOAT_DIGITS)
        ok = rel <= tol and im_err <= tol
        return cls(family, dict(params), "bigfloat", scalar_str(lhs), ctx.nstr(rhs_c, FLOAT_DIGITS),
                   PASS if ok else FAIL,
                   abs_err=ctx.nstr(re_err, FLOAT_DIGITS),
                   rel_err=ctx.nstr(rel, FLOAT_DIGITS),
                   elapsed_ms=_elapsed_ms(t0), extra=info)

    def sort_key(self):
        return (self.family, tuple(_sort_atom(v) for v in self.params.values()), self.engine)

    def to_dict(self) -> dict:
        out = {
            "family": self.family,
            "params": {k: _param_json(v) for k, v in self.params.items()},
            "engine": self.engine,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "status": self.status,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "elapsed_ms": self.elapsed_ms,
        }
        out.update(self.extra)
        return out
