"""Command-line front end: ``probid verify | mc | list``.

Every flag can also be set through an environment variable named
``PROBID_<FLAG>`` (upper case, dashes as underscores), e.g. ``PROBID_N_MAX=20``.
Command-line values win over the environment.

Exit codes: 0 when every verdict passes, 1 when any does not, 2 on usage or
configuration errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import __version__
from .exact_core import as_rational
from .identities import FAMILIES, InvalidCheck
from .runner import (
    MIN_MC_SAMPLES,
    ConfigError,
    RunConfig,
    build_report,
    build_tasks,
    execute,
    mc_tasks,
    run_mc_task,
    run_task,
    summarize,
    write_csv,
    write_json,
)

ENV_PREFIX = "PROBID_"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("probid")


def _env(dest: str, default=None):
    return os.environ.get(ENV_PREFIX + dest.upper(), default)


def _env_flag(dest: str) -> bool:
    return _env(dest, "").strip().lower() in ("1", "true", "yes", "on")


def _rational_list(text: str):
    try:
        return [as_rational(t) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family_list(text: str):
    names = [t.strip() for t in text.split(",") if t.strip()]
    for name in names:
        if name not in FAMILIES:
            raise argparse.ArgumentTypeError(
                f"unknown family {name!r} (choose from {', '.join(FAMILIES)})"
            )
    return names


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"not an unsigned 64-bit integer: {text}")
    return v


def _add(parser, *flags, **kw):
    """add_argument with the default taken from PROBID_<DEST> when set."""
    dest = kw.get("dest") or flags[0].lstrip("-").replace("-", "_")
    env = _env(dest)
    if env is not None:
        kw["default"] = env
    parser.add_argument(*flags, **kw)


def _global_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add(common, "--json", metavar="PATH", help="write the JSON report here")
    _add(common, "--csv", metavar="PATH", help="write the verdicts as CSV here")
    _add(common, "--precision", type=int, default=256, metavar="BITS",
         help="bigfloat working precision (default 256)")
    _add(common, "--tol", default="1e-30", metavar="DECIMAL",
         help="bigfloat relative tolerance (default 1e-30)")
    _add(common, "--jobs", type=int, default=1, metavar="N", help="worker processes")
    _add(common, "--seed", type=_u64, default=42, metavar="U64", help="Monte Carlo master seed")
    _add(common, "--samples", type=int, default=1_000_000, metavar="N", help="Monte Carlo sample count")
    common.add_argument("-v", "--verbose", action="store_true", default=_env_flag("verbose"),
                        help="print every verdict, not only failures")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="probid", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _global_flags()

    v = sub.add_parser("verify", parents=[common], help="run exact/quad/bigfloat identity checks")
    v.add_argument("--family", type=_family_list, action="append",
                   help="family name(s), comma separated; repeatable")
    v.add_argument("--all", action="store_true", default=_env_flag("all"), help="every family")
    _add(v, "--n-max", type=int, default=None, help="largest n (default 8)")
    _add(v, "--m-max", type=int, default=None, help="largest number of parts m (default 3)")
    _add(v, "--p-set", type=_int_list, default=None, help="filter orders p, e.g. 1,2,3")
    _add(v, "--a", type=_rational_list, default=None, dest="a", help="rational parameters, e.g. 1/2,2/3")
    _add(v, "--z", type=_rational_list, default=None, dest="z", help="positive rational z values")
    _add(v, "--x", type=_rational_list, default=None, dest="x", help="rational x values")
    _add(v, "--limit-a", type=_rational_list, default=None, help="increasing a values for the limit check")
    _add(v, "--engine", choices=["exact", "quad", "bigfloat"], default=None,
         help="force an engine where a family offers a choice")

    sub.add_parser("mc", parents=[common], help="run the Monte Carlo battery")

    ls = sub.add_parser("list", help="list identity families")
    ls.add_argument("--families", action="store_true", help="(default) list families")
    ls.add_argument("--json", action="store_true", dest="as_json", help="machine-readable output")
    return parser


def _config_from(args) -> RunConfig:
    cfg = RunConfig()
    families = getattr(args, "family", None)
    if not families and _env("family"):
        families = [_family_list(_env("family"))]
    if families:
        cfg.families = [f for group in families for f in group]
    if getattr(args, "all", False):
        cfg.families = list(FAMILIES)
    for attr, field_name in (("n_max", "n_max"), ("m_max", "m_max"), ("p_set", "p_set"),
                             ("a", "a_list"), ("z", "z_list"), ("x", "x_list"),
                             ("limit_a", "limit_a"), ("engine", "engine")):
        value = getattr(args, attr, None)
        if value is not None:
            setattr(cfg, field_name, value)
    cfg.precision = args.precision
    cfg.tol = str(args.tol)
    cfg.jobs = args.jobs
    cfg.seed = args.seed
    cfg.samples = args.samples
    cfg.validate()
    return cfg


def _emit(args, config_json: dict, verdicts) -> int:
    report = build_report(config_json, verdicts)
    if args.json:
        write_json(args.json, report)
    if args.csv:
        write_csv(args.csv, report)
    for v in verdicts:
        if args.verbose or not v.passed:
            print(f"{v.status:11s} {v.engine:10s} {v.family} {json.dumps(v.to_dict()['params'])}")
    s = summarize(verdicts)
    print(f"{len(verdicts)} verdicts: {s['pass']} pass, {s['fail']} fail, {s['unsupported']} unsupported")
    return EXIT_OK if s["pass"] == len(verdicts) else EXIT_FAIL


def cmd_verify(args) -> int:
    cfg = _config_from(args)
    tasks = build_tasks(cfg)
    log.info("running %d checks with %d job(s)", len(tasks), cfg.jobs)
    verdicts = execute(run_task, tasks, cfg.jobs)
    return _emit(args, cfg.to_json(), verdicts)


def cmd_mc(args) -> int:
    cfg = _config_from(args)
    if cfg.samples < MIN_MC_SAMPLES:
        raise ConfigError(f"--samples must be at least {MIN_MC_SAMPLES}, got {cfg.samples}")
    verdicts = execute(run_mc_task, mc_tasks(cfg.seed, cfg.samples), cfg.jobs)
    config_json = {"seed": cfg.seed, "samples": cfg.samples, "jobs": cfg.jobs}
    return _emit(args, config_json, verdicts)


def cmd_list(args) -> int:
    rows = [{"name": f.name, "anchor": f.anchor, "statement": f.statement, "params": list(f.params)}
            for f in FAMILIES.values()]
    if args.as_json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            print(f"{r['name']:26s} [{r['anchor']}] params: {', '.join(r['params'])}")
            print(f"{'':26s} {r['statement']}")
    return EXIT_OK


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "mc":
            return cmd_mc(args)
        return cmd_list(args)
    except (ConfigError, InvalidCheck, argparse.ArgumentTypeError) as exc:
        print(f"probid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
