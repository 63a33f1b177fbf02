"""Command-line surface: tables, polynomial evaluation, series, verification.

Output is a single JSON document per invocation (CSV available for tables).
Rationals are parsed and emitted exactly as "p/q" or integer strings --
decimal input is rejected to keep the exact commands exact.  Exit codes:
0 success, 1 a check failed its tolerance or an unexpected identity status,
2 parse/validation error.  GEOPOLY_BITS sets the default float precision.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from fractions import Fraction

from . import __version__
from .analytic import (
    EvalConfig,
    eval_dobinski_numeric,
    eval_eq17_18,
    eval_eq30_family,
    eval_theorem5,
)
from .families import exp_poly, geometric_poly
from .identities import DESCRIPTIONS, IDENTITY_IDS, PROFILES, run, run_all
from .params import HsuShiueParams
from .report import fmt_rational
from .stirling import build_table

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class CliError(Exception):
    """Invalid input; maps to exit code 2."""


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text.strip()):
        raise CliError(f"not an exact rational (use p/q or an integer): {text!r}")
    return Fraction(text.strip())


def _params_from(ns: argparse.Namespace) -> HsuShiueParams:
    try:
        return HsuShiueParams(
            parse_rational(ns.alpha), parse_rational(ns.beta), parse_rational(ns.r)
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _emit(ns: argparse.Namespace, payload: dict, started: float) -> None:
    if not ns.no_timing:
        payload["timing_ms"] = round((time.time() - started) * 1000, 3)
    text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(ns, "out", None):
        with open(ns.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_stirling(ns: argparse.Namespace, started: float) -> int:
    params = _params_from(ns)
    if ns.nmax < 0:
        raise CliError("--nmax must be >= 0")
    table = build_table(params, ns.nmax)
    if ns.format == "csv":
        lines = [
            ",".join(fmt_rational(v) for v in table.row(n)) for n in range(ns.nmax + 1)
        ]
        text = "\n".join(lines)
        if ns.out:
            with open(ns.out, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return 0
    payload = {
        "command": "stirling",
        "params": {"alpha": ns.alpha, "beta": ns.beta, "r": ns.r, "nmax": ns.nmax},
        "result": {
            "rows": [[fmt_rational(v) for v in table.row(n)] for n in range(ns.nmax + 1)]
        },
        "status": "ok",
    }
    _emit(ns, payload, started)
    return 0


def _cmd_poly(ns: argparse.Namespace, started: float) -> int:
    params = _params_from(ns)
    if ns.n < 0:
        raise CliError("--n must be >= 0")
    if ns.family == "exp":
        poly = exp_poly(ns.n, params)
    else:
        poly = geometric_poly(ns.n, parse_rational(ns.order_m), params)
    result: dict = {"coeffs": [fmt_rational(c) for c in poly.coeffs] or ["0"]}
    if ns.at is not None:
        result["at"] = ns.at
        result["value"] = fmt_rational(poly(parse_rational(ns.at)))
    payload = {
        "command": "poly",
        "params": {
            "family": ns.family,
            "n": ns.n,
            "order_m": ns.order_m,
            "alpha": ns.alpha,
            "beta": ns.beta,
            "r": ns.r,
        },
        "result": result,
        "status": "ok",
    }
    _emit(ns, payload, started)
    return 0


def _default_bits(ns: argparse.Namespace) -> int:
    if ns.bits is not None:
        return ns.bits
    env = os.environ.get("GEOPOLY_BITS")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise CliError(f"GEOPOLY_BITS is not an integer: {env!r}") from exc
    return 256


def _cmd_series(ns: argparse.Namespace, started: float) -> int:
    cfg = EvalConfig(_default_bits(ns))
    if ns.n < 0:
        raise CliError("--n must be >= 0")
    try:
        if ns.id == "zeta2k":
            rpt = eval_eq30_family(ns.n, cfg)
        elif ns.id == "theorem5":
            if ns.x is None:
                raise CliError("--x is required for theorem5")
            rpt = eval_theorem5(_params_from(ns), ns.n, parse_rational(ns.x), cfg)
        elif ns.id in ("eq17", "eq18"):
            rpt = eval_eq17_18(ns.n, _params_from(ns), cfg, eq=int(ns.id[2:]))
        else:  # dobinski
            if ns.x is None:
                raise CliError("--x is required for dobinski")
            rpt = eval_dobinski_numeric(ns.n, _params_from(ns), parse_rational(ns.x), cfg)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    payload = {
        "command": "series",
        "params": {
            "id": ns.id,
            "n": ns.n,
            "x": ns.x,
            "alpha": ns.alpha,
            "beta": ns.beta,
            "r": ns.r,
            "bits": cfg.precision_bits,
        },
        "result": rpt.to_dict(),
        "status": rpt.status,
    }
    _emit(ns, payload, started)
    return 0 if rpt.status == "pass" else 1


def _cmd_verify(ns: argparse.Namespace, started: float) -> int:
    if ns.profile not in PROFILES:
        raise CliError(f"unknown profile {ns.profile!r}")
    if ns.id == "all":
        summary = run_all(seed=ns.seed, profile=ns.profile)
        reports = summary.pop("reports")
        payload = {
            "command": "verify",
            "params": {"id": "all", "seed": ns.seed, "profile": ns.profile},
            "result": {
                "summary": summary,
                "reports": [r.to_dict() for r in reports],
            },
            "status": "ok" if not summary["unexpected"] else "unexpected_failures",
        }
        _emit(ns, payload, started)
        return 0 if not summary["unexpected"] else 1
    if ns.id not in IDENTITY_IDS:
        raise CliError(
            f"unknown identity id {ns.id!r}; known ids: {', '.join(IDENTITY_IDS)}"
        )
    reports = run(ns.id, seed=ns.seed, samples=ns.samples, profile=ns.profile)
    bad = [r for r in reports if not r.ok()]
    payload = {
        "command": "verify",
        "params": {
            "id": ns.id,
            "seed": ns.seed,
            "samples": ns.samples,
            "profile": ns.profile,
        },
        "result": {
            "description": DESCRIPTIONS[ns.id],
            "reports": [r.to_dict() for r in reports],
        },
        "status": "ok" if not bad else "unexpected_failures",
    }
    _emit(ns, payload, started)
    return 0 if not bad else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geopoly",
        description="Exact generalized Stirling / geometric polynomial toolkit",
    )
    parser.add_argument("--version", action="version", version=f"geopoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p: argparse.ArgumentParser) -> None:
        p.add_argument("--alpha", required=True, help="rational p/q or integer")
        p.add_argument("--beta", required=True, help="rational p/q or integer")
        p.add_argument("--r", required=True, help="rational p/q or integer")

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--no-timing", action="store_true", help="omit the timing field")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("stirling", help="emit a triangular table")
    add_params(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add_common(p)
    p.set_defaults(fn=_cmd_stirling)

    p = sub.add_parser("poly", help="polynomial coefficients / evaluation")
    add_params(p)
    p.add_argument("--family", choices=("exp", "geom"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order-m", dest="order_m", default="1", help="order m (geom family)")
    p.add_argument("--at", default=None, help="evaluate at rational x")
    add_common(p)
    p.set_defaults(fn=_cmd_poly)

    p = sub.add_parser("series", help="numeric series identity evaluation")
    p.add_argument(
        "--id", choices=("theorem5", "zeta2k", "eq17", "eq18", "dobinski"), required=True
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", default=None, help="rational series argument")
    p.add_argument("--alpha", default="0")
    p.add_argument("--beta", default="1")
    p.add_argument("--r", default="0")
    p.add_argument("--bits", type=int, default=None, help="precision bits (default 256)")
    add_common(p)
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("--id", required=True, help="identity id or 'all'")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=4)
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    add_common(p)
    p.set_defaults(fn=_cmd_verify)

    # let "-2/3" style values through to --alpha/--beta/--r/--at/--x
    matcher = re.compile(r"^-\d+(/\d+)?$")
    parser._negative_number_matcher = matcher
    for action in sub._name_parser_map.values():
        action._negative_number_matcher = matcher

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    started = time.time()
    try:
        return ns.fn(ns, started)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
