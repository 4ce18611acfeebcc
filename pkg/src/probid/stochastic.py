"""Seeded gamma/beta samplers and Monte Carlo moment checks.

Sampling is double precision on top of numpy's bit generators.  A stream is
identified by ``(master_seed, stream_index)``; the index goes into the
SeedSequence spawn key, so distinct indices give independent streams.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .exact_core import as_rational, binomial, factorial, pochhammer
from .verdict import FAIL, PASS, Verdict, scalar_str

SE_THRESHOLD = 4.0
MIN_PROBE_COUNT = 100


class InvalidShape(ValueError):
    pass


@dataclass(frozen=True)
class RngStream:
    master_seed: int
    stream_index: int = 0

    def __post_init__(self):
        for name in ("master_seed", "stream_index"):
            v = getattr(self, name)
            if not 0 <= v < 2**64:
                raise ValueError(f"{name} must be an unsigned 64-bit integer, got {v}")

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(self.master_seed, spawn_key=(self.stream_index,))
        return np.random.Generator(np.random.PCG64(seq))


RngLike = Union[RngStream, np.random.Generator]


def _rng(stream: RngLike) -> np.random.Generator:
    if isinstance(stream, np.random.Generator):
        return stream
    return stream.generator()


def _shape_value(shape) -> tuple[float, Fraction]:
    exact = as_rational(shape) if isinstance(shape, (str, int, Fraction)) else Fraction(shape)
    if exact <= 0:
        raise InvalidShape(f"shape must be > 0, got {shape}")
    return float(exact), exact


def _marsaglia_tsang(rng: np.random.Generator, shape: float, count: int) -> np.ndarray:
    # shape >= 1; squeeze test first, full log test on the rest
    d = shape - 1.0 / 3.0
    c = 1.0 / math.sqrt(9.0 * d)
    out = np.empty(count)
    filled = 0
    while filled < count:
        need = count - filled
        batch = need + need // 20 + 16
        x = rng.standard_normal(batch)
        u = rng.random(batch)
        v = (1.0 + c * x) ** 3
        ok = v > 0
        with np.errstate(invalid="ignore", divide="ignore"):
            logv = np.log(np.where(ok, v, 1.0))
            accept = ok & (
                (u < 1.0 - 0.0331 * x**4) | (np.log(u) < 0.5 * x * x + d * (1.0 - v + logv))
            )
        got = (d * v[accept])[:need]
        out[filled:filled + got.size] = got
        filled += got.size
    return out


def sample_gamma(shape, stream: RngLike, count: int) -> np.ndarray:
    """i.i.d. Gamma(shape, 1) samples."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    value, exact = _shape_value(shape)
    rng = _rng(stream)
    if exact == Fraction(1, 2):
        return 0.5 * rng.standard_normal(count) ** 2
    if value >= 1.0:
        return _marsaglia_tsang(rng, value, count)
    # boost: Gamma(s) = Gamma(s+1) * U^(1/s)
    y = _marsaglia_tsang(rng, value + 1.0, count)
    return y * rng.random(count) ** (1.0 / value)


def sample_beta(a, b, stream: RngLike, count: int) -> np.ndarray:
    """Gamma_a / (Gamma_a + Gamma_b) with independent gammas."""
    rng = _rng(stream)
    ga = sample_gamma(a, rng, count)
    gb = sample_gamma(b, rng, count)
    return ga / (ga + gb)


def sample_symmetric_beta(c, stream: RngLike, count: int) -> np.ndarray:
    """(Gamma_c - Gamma'_c) / (Gamma_c + Gamma'_c), supported on [-1, 1]."""
    rng = _rng(stream)
    g1 = sample_gamma(c, rng, count)
    g2 = sample_gamma(c, rng, count)
    return (g1 - g2) / (g1 + g2)


@dataclass(frozen=True)
class MomentEstimate:
    mean: float
    standard_error: float
    sample_count: int

    @classmethod
    def of(cls, values: np.ndarray) -> "MomentEstimate":
        values = np.asarray(values, dtype=float)
        n = values.size
        if n < 2:
            raise ValueError("need at least two samples")
        return cls(float(values.mean()), float(values.std(ddof=1) / math.sqrt(n)), n)

    def z_score(self, expected) -> float:
        diff = self.mean - float(expected)
        if self.standard_error == 0.0:
            return 0.0 if diff == 0.0 else math.copysign(math.inf, diff)
        return diff / self.standard_error


def _mc_verdict(family, params, estimate: MomentEstimate, expected, t0, stream: RngStream | None) -> Verdict:
    z = estimate.z_score(expected)
    extra = {
        "standard_error": repr(estimate.standard_error),
        "z_score": repr(z),
        "samples": estimate.sample_count,
        "statistical": True,
    }
    if stream is not None:
        extra["seed"] = stream.master_seed
        extra["stream"] = stream.stream_index
    abs_err = abs(estimate.mean - float(expected))
    rel = abs_err / max(1.0, abs(float(expected)))
    return Verdict(family, dict(params), "montecarlo", repr(estimate.mean), scalar_str(expected),
                   PASS if abs(z) <= SE_THRESHOLD else FAIL,
                   abs_err=repr(abs_err), rel_err=repr(rel),
                   elapsed_ms=round((time.perf_counter() - t0) * 1000.0, 3), extra=extra)


def _exact_one(family, params, t0, stream) -> Verdict:
    # zeroth moment: no sampling needed
    est = MomentEstimate(1.0, 0.0, 0)
    return _mc_verdict(family, params, est, 1, t0, stream if isinstance(stream, RngStream) else None)


def _as_stream(stream: RngLike):
    return stream if isinstance(stream, RngStream) else None


def mc_gamma_moment(shape, k: int, stream: RngLike, count: int) -> Verdict:
    """E X^k = (shape)_k for X ~ Gamma(shape, 1)."""
    t0 = time.perf_counter()
    _, exact = _shape_value(shape)
    params = {"shape": exact, "k": k}
    if k == 0:
        return _exact_one("mc-gamma-moment", params, t0, stream)
    x = sample_gamma(exact, stream, count)
    return _mc_verdict("mc-gamma-moment", params, MomentEstimate.of(x**k), pochhammer(exact, k), t0,
                       _as_stream(stream))


def mc_beta_moment(a, b, k: int, stream: RngLike, count: int) -> Verdict:
    """E B^k = (a)_k / (a+b)_k."""
    t0 = time.perf_counter()
    _, ea = _shape_value(a)
    _, eb = _shape_value(b)
    params = {"a": ea, "b": eb, "k": k}
    if k == 0:
        return _exact_one("mc-beta-moment", params, t0, stream)
    x = sample_beta(ea, eb, stream, count)
    if x.min() < 0.0 or x.max() > 1.0:
        return Verdict.failed("mc-beta-moment", params, "montecarlo", "", "", t0, "sample outside [0, 1]")
    expected = pochhammer(ea, k) / pochhammer(ea + eb, k)
    return _mc_verdict("mc-beta-moment", params, MomentEstimate.of(x**k), expected, t0, _as_stream(stream))


def symmetric_beta_moment(c, k: int) -> Fraction:
    """E Z_c^k: zero for odd k, (1/2)_j / (c+1/2)_j for k = 2j."""
    c = as_rational(c) if not isinstance(c, float) else Fraction(c)
    if k % 2:
        return Fraction(0)
    j = k // 2
    half = Fraction(1, 2)
    return pochhammer(half, j) / pochhammer(c + half, j)


def mc_symmetric_beta_moment(c, k: int, stream: RngLike, count: int) -> Verdict:
    t0 = time.perf_counter()
    _, ec = _shape_value(c)
    params = {"c": ec, "k": k}
    if k == 0:
        return _exact_one("mc-symmetric-beta-moment", params, t0, stream)
    z = sample_symmetric_beta(ec, stream, count)
    if z.min() < -1.0 or z.max() > 1.0:
        return Verdict.failed("mc-symmetric-beta-moment", params, "montecarlo", "", "", t0,
                              "sample outside [-1, 1]")
    return _mc_verdict("mc-symmetric-beta-moment", params, MomentEstimate.of(z**k),
                       symmetric_beta_moment(ec, k), t0, _as_stream(stream))


def mc_gamma_additivity(shapes: Sequence, n: int, stream: RngLike, count: int) -> Verdict:
    """E (X_1 + ... + X_m)^n against (k_1 + ... + k_m)_n."""
    t0 = time.perf_counter()
    if not 0 <= n <= 6:
        raise ValueError(f"moment order must be in 0..6, got {n}")
    exact = [_shape_value(s)[1] for s in shapes]
    params = {"shapes": exact, "n": n}
    if n == 0:
        return _exact_one("mc-gamma-additivity", params, t0, stream)
    rng = _rng(stream)
    total = np.zeros(count)
    for s in exact:
        total += sample_gamma(s, rng, count)
    return _mc_verdict("mc-gamma-additivity", params, MomentEstimate.of(total**n),
                       pochhammer(sum(exact), n), t0, _as_stream(stream))


def dissection_moment(n: int) -> Fraction:
    """E (X_1 - X_2)^(2n) for independent Gamma(1/2, 1): (2n)!/4^n * C(2n, n)."""
    return Fraction(factorial(2 * n) * binomial(2 * n, n), 4**n)


def mc_dissection(n: int, stream: RngLike, count: int) -> Verdict:
    t0 = time.perf_counter()
    if not 0 <= n <= 3:
        raise ValueError(f"n must be in 0..3, got {n}")
    params = {"n": n}
    if n == 0:
        return _exact_one("mc-dissection", params, t0, stream)
    rng = _rng(stream)
    half = Fraction(1, 2)
    diff = sample_gamma(half, rng, count) - sample_gamma(half, rng, count)
    return _mc_verdict("mc-dissection", params, MomentEstimate.of(diff ** (2 * n)),
                       dissection_moment(n), t0, _as_stream(stream))


def _pearson(u: np.ndarray, v: np.ndarray) -> float:
    return float(np.corrcoef(u, v)[0, 1])


def mc_independence_probe(a, b, stream: RngLike, count: int) -> Verdict:
    """Correlation of B^j with (Gamma_a + Gamma_b)^j, j = 1, 2, must be within 5/sqrt(count)."""
    t0 = time.perf_counter()
    if count < MIN_PROBE_COUNT:
        raise ValueError(f"independence probe needs at least {MIN_PROBE_COUNT} samples, got {count}")
    _, ea = _shape_value(a)
    _, eb = _shape_value(b)
    params = {"a": ea, "b": eb}
    rng = _rng(stream)
    ga = sample_gamma(ea, rng, count)
    gb = sample_gamma(eb, rng, count)
    total = ga + gb
    ratio = ga / total
    corrs = [_pearson(ratio**j, total**j) for j in (1, 2)]
    bound = 5.0 / math.sqrt(count)
    worst = max(abs(r) for r in corrs)
    extra = {"correlations": [repr(r) for r in corrs], "samples": count, "statistical": True}
    if isinstance(stream, RngStream):
        extra["seed"] = stream.master_seed
        extra["stream"] = stream.stream_index
    return Verdict("mc-independence", params, "montecarlo", repr(worst), repr(bound),
                   PASS if worst <= bound else FAIL, abs_err=repr(worst), rel_err=None,
                   elapsed_ms=round((time.perf_counter() - t0) * 1000.0, 3), extra=extra)
