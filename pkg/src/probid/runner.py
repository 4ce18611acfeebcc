"""Parameter grids, (optionally parallel) execution and report writing."""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable

from . import __version__, identities, stochastic
from .bigfloat import DEFAULT_PRECISION, DEFAULT_TOLERANCE
from .exact_core import as_rational, rational_str
from .identities import FAMILIES, MAX_PARTS
from .quadext import EXACT_COSINE_ORDERS
from .verdict import PASS, FAIL, UNSUPPORTED, Verdict

log = logging.getLogger(__name__)

MIN_MC_SAMPLES = 10_000
BASE_COLUMNS = ["family", "params", "engine", "lhs", "rhs", "status", "abs_err", "rel_err", "elapsed_ms"]


class ConfigError(ValueError):
    pass


def _rationals(values) -> list[Fraction]:
    return [as_rational(v) for v in values]


@dataclass
class RunConfig:
    families: list[str] = field(default_factory=lambda: list(FAMILIES))
    n_max: int = 8
    m_max: int = 3
    p_set: list[int] = field(default_factory=lambda: [1, 2, 3])
    a_list: list[Fraction] = field(default_factory=lambda: _rationals(["1/2", "1", "3/2"]))
    z_list: list[Fraction] = field(default_factory=lambda: _rationals(["1", "1/2", "2"]))
    x_list: list[Fraction] = field(default_factory=lambda: _rationals(["0", "2/3", "-5/4"]))
    limit_a: list[Fraction] = field(default_factory=lambda: _rationals(["100", "10000", "1000000"]))
    engine: str | None = None
    precision: int = DEFAULT_PRECISION
    tol: str = DEFAULT_TOLERANCE
    seed: int = 42
    samples: int = 1_000_000
    jobs: int = 1

    def validate(self) -> None:
        unknown = [f for f in self.families if f not in FAMILIES]
        if unknown:
            raise ConfigError(f"unknown families: {', '.join(unknown)}")
        if self.n_max < 0:
            raise ConfigError(f"--n-max must be >= 0, got {self.n_max}")
        if not 1 <= self.m_max <= MAX_PARTS:
            raise ConfigError(f"--m-max must be in 1..{MAX_PARTS}, got {self.m_max}")
        if not self.p_set or any(p < 1 for p in self.p_set):
            raise ConfigError("--p-set needs positive integers")
        for name in ("a_list", "z_list", "limit_a"):
            if any(v <= 0 for v in getattr(self, name)):
                raise ConfigError(f"{name} entries must be positive")
        if len(self.limit_a) < 3 or any(u >= v for u, v in zip(self.limit_a, self.limit_a[1:])):
            raise ConfigError("--limit-a needs at least three increasing values")
        if self.engine not in (None, "exact", "quad", "bigfloat"):
            raise ConfigError(f"unknown engine {self.engine!r}")
        if self.precision < 64:
            raise ConfigError(f"--precision must be >= 64 bits, got {self.precision}")
        try:
            tol = Decimal(self.tol)
        except InvalidOperation:
            raise ConfigError(f"--tol is not a decimal number: {self.tol!r}") from None
        if not tol > 0:
            raise ConfigError("--tol must be > 0")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("--seed must be an unsigned 64-bit integer")
        if self.jobs < 1:
            raise ConfigError("--jobs must be >= 1")

    def to_json(self) -> dict:
        out = {}
        for k, v in asdict(self).items():
            if isinstance(v, list):
                out[k] = [rational_str(x) if isinstance(x, Fraction) else x for x in v]
            else:
                out[k] = v
        return out


# -- grids ---------------------------------------------------------------

Task = tuple  # (family, params, options)


def _x_vectors(m: int, xs: list[Fraction]) -> list[tuple[Fraction, ...]]:
    vectors = [tuple(Fraction(0) for _ in range(m))]
    for i in range(len(xs)):
        v = tuple(xs[(i + j) % len(xs)] for j in range(m))
        if v not in vectors:
            vectors.append(v)
    return vectors


def build_tasks(cfg: RunConfig) -> list[Task]:
    opts = {"engine": cfg.engine, "precision": cfg.precision, "tol": cfg.tol}
    ns = range(cfg.n_max + 1)
    tasks: list[Task] = []
    for fam in cfg.families:
        if fam in ("power-sum", "pair-convolution", "brychkov"):
            tasks += [(fam, {"n": n}, opts) for n in ns]
        elif fam == "pretty":
            tasks += [(fam, {"m": m}, opts) for m in ns]
        elif fam == "multi-convolution":
            tasks += [(fam, {"m": m, "n": n}, opts) for m in range(1, cfg.m_max + 1) for n in ns]
        elif fam == "legendre-filter":
            tasks += [(fam, {"n": n, "p": p}, opts) for p in cfg.p_set for n in ns]
        elif fam == "chu-vandermonde":
            tasks += [(fam, {"a": list(a), "n": n}, opts)
                      for a in combinations_with_replacement(cfg.a_list, 2) for n in ns]
        elif fam == "multi-chu-vandermonde":
            tasks += [(fam, {"a": list(a), "n": n}, opts)
                      for m in range(1, cfg.m_max + 1)
                      for a in combinations_with_replacement(cfg.a_list, m) for n in ns]
        elif fam == "gegenbauer-filter":
            for a in cfg.a_list:
                for p in cfg.p_set:
                    for z in cfg.z_list:
                        for n in ns:
                            params = {"a": a, "n": n, "p": p, "z": z}
                            if cfg.engine is None and z == 1 and p in EXACT_COSINE_ORDERS:
                                # exact run plus the complex-float run of the same point
                                tasks.append((fam, params, dict(opts, engine="quad")))
                                tasks.append((fam, params, dict(opts, engine="bigfloat")))
                            else:
                                tasks.append((fam, params, opts))
        elif fam == "hermite-multinomial":
            tasks += [(fam, {"m": m, "n": n, "x": list(x)}, opts)
                      for m in range(1, cfg.m_max + 1) for x in _x_vectors(m, cfg.x_list) for n in ns]
        elif fam == "gegenbauer-convolution":
            tasks += [(fam, {"a": list(a), "n": n, "x": x}, opts)
                      for m in range(2, max(cfg.m_max, 2) + 1)
                      for a in combinations_with_replacement(cfg.a_list, m)
                      for x in cfg.x_list for n in ns]
        elif fam == "gegenbauer-hermite-limit":
            tasks += [(fam, {"n": n, "x": x, "a": list(cfg.limit_a)}, opts)
                      for x in cfg.x_list for n in ns]
    return tasks


def run_task(task: Task) -> Verdict:
    fam, params, opts = task
    engine, precision, tol = opts.get("engine"), opts.get("precision"), opts.get("tol")
    if fam == "legendre-filter":
        return identities.check_legendre_filter(params["n"], params["p"], engine, precision, tol)
    if fam == "gegenbauer-filter":
        return identities.check_gegenbauer_filter(params["a"], params["n"], params["p"], params["z"],
                                                  engine, precision, tol)
    if fam == "gegenbauer-hermite-limit":
        return identities.check_gh_limit(params["n"], params["x"], params["a"], precision)
    return FAMILIES[fam].check(**params)


# -- Monte Carlo battery -------------------------------------------------

HALF = Fraction(1, 2)


def mc_tasks(seed: int, samples: int) -> list[tuple]:
    """Fixed battery; stream index = ordinal in this list."""
    specs = (
        [("gamma-moment", (HALF, k)) for k in range(1, 5)]
        + [("gamma-moment", (Fraction(1), 1)), ("gamma-moment", (Fraction(1, 3), 2)),
           ("gamma-moment", (Fraction(5, 2), 3))]
        + [("beta-moment", (Fraction(1), Fraction(1), 1)), ("beta-moment", (Fraction(1), Fraction(2), 1)),
           ("beta-moment", (HALF, Fraction(3, 2), 2))]
        + [("symmetric-beta", (c, k)) for c in (HALF, Fraction(1), Fraction(2)) for k in (1, 2, 3, 4)]
        + [("additivity", ((HALF, HALF), 2)), ("additivity", ((HALF, HALF, HALF), 3)),
           ("additivity", ((Fraction(1, 3), Fraction(2, 3), Fraction(1)), 4))]
        + [("dissection", (n,)) for n in (1, 2, 3)]
        + [("independence", (HALF, HALF)), ("independence", (Fraction(1), Fraction(1))),
           ("independence", (Fraction(1), Fraction(2)))]
    )
    return [(kind, args, seed, i, samples) for i, (kind, args) in enumerate(specs)]


def run_mc_task(task: tuple) -> Verdict:
    kind, args, seed, index, samples = task
    stream = stochastic.RngStream(seed, index)
    if kind == "gamma-moment":
        return stochastic.mc_gamma_moment(args[0], args[1], stream, samples)
    if kind == "beta-moment":
        return stochastic.mc_beta_moment(args[0], args[1], args[2], stream, samples)
    if kind == "symmetric-beta":
        return stochastic.mc_symmetric_beta_moment(args[0], args[1], stream, samples)
    if kind == "additivity":
        return stochastic.mc_gamma_additivity(list(args[0]), args[1], stream, samples)
    if kind == "dissection":
        return stochastic.mc_dissection(args[0], stream, samples)
    if kind == "independence":
        return stochastic.mc_independence_probe(args[0], args[1], stream, samples)
    raise ValueError(f"unknown Monte Carlo task {kind!r}")


# -- execution and reports -----------------------------------------------

def execute(fn, tasks: list, jobs: int = 1) -> list[Verdict]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        verdicts = [fn(t) for t in tasks]
    verdicts.sort(key=Verdict.sort_key)
    return verdicts


def summarize(verdicts: Iterable[Verdict]) -> dict:
    counts = {PASS: 0, FAIL: 0, UNSUPPORTED: 0}
    for v in verdicts:
        counts[v.status] += 1
    return counts


def build_report(config: dict, verdicts: list[Verdict]) -> dict:
    return {
        "version": __version__,
        "config": config,
        "verdicts": [v.to_dict() for v in verdicts],
        "summary": summarize(verdicts),
    }


def write_json(path: str, report: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, (dict, list, bool, int, float)):
        return json.dumps(value)
    return value


def verdicts_csv(rows: list[dict]) -> str:
    extra = sorted({k for r in rows for k in r} - set(BASE_COLUMNS))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BASE_COLUMNS + extra, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: _csv_cell(r.get(k)) for k in BASE_COLUMNS + extra})
    return buf.getvalue()


def write_csv(path: str, report: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(verdicts_csv(report["verdicts"]))
