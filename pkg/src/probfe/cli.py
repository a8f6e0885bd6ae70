"""Command-line interface: ``probfe {stirling,family,expand,verify}``.

Exit codes: 0 success, 1 a check failed, 2 bad usage or unparsable input.
All numbers on the command line are rational literals such as ``3``,
``-1/2``; floats are refused.  Output is JSON (or CSV for Stirling
tables) with every rational written as a string.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .exact import rat_parse, rat_str
from .families import FamilySpec, build_family
from .polyparse import parse_poly
from .represent import THEOREM_FORMULAS, expand, reconstruct
from .rvmodels import KINDS, PARAM_NAMES, UNIT, MomentModel, load_custom_moments, make_model
from .stirling import FAMILIES, family_table
from .verify import SUITES, run_suite

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2

_PROBABILISTIC = ("s1y", "s2y", "s1yl", "s2yl")
_DEGENERATE = ("s1l", "s2l", "s1yl", "s2yl")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return rat_parse(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}") from None


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _param(text: str) -> tuple[str, Fraction]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    return name.strip(), _rational(value)


def _add_model_flags(p: argparse.ArgumentParser):
    p.add_argument("--rv", choices=KINDS, help="random-variable model (default: unit, Y = 1)")
    p.add_argument("--param", type=_param, action="append", default=[], metavar="NAME=Q",
                   help="model parameter, repeatable, e.g. --param alpha=2")
    p.add_argument("--moments-file", help='JSON {"moments": [...]} for --rv custom')


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="probfe", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stirling", help="Stirling number tables")
    s.add_argument("--family", required=True, choices=FAMILIES)
    s.add_argument("--nmax", type=_nonneg_int, required=True)
    s.add_argument("--lambda", dest="lam", type=_rational)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    _add_model_flags(s)

    f = sub.add_parser("family", help="Frobenius-Euler polynomial families")
    f.add_argument("--u", type=_rational, default=Fraction(-1))
    f.add_argument("--nmax", type=_nonneg_int, default=16)
    f.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(0))
    f.add_argument("--order", type=_nonneg_int, default=1)
    _add_model_flags(f)

    e = sub.add_parser("expand", help="expand a polynomial in a family basis")
    e.add_argument("--poly", required=True, help='polynomial in x, e.g. "x^2 - 1/2*x"')
    e.add_argument("--u", type=_rational, default=Fraction(-1))
    e.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(0))
    e.add_argument("--order", type=_nonneg_int, default=1)
    e.add_argument("--theorem", choices=tuple(THEOREM_FORMULAS), default="4")
    e.add_argument("--formula", type=int, default=1)
    e.add_argument("--nmax", type=_nonneg_int, help="pad the expansion to this length")
    e.add_argument("--verify", action="store_true",
                   help="also cross-check every formula in the chosen set")
    _add_model_flags(e)

    v = sub.add_parser("verify", help="run self-check suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--nmax", type=_nonneg_int, default=8)
    return ap


def _model(args) -> Optional[MomentModel]:
    """The model named by the flags, or None when --rv is absent."""
    if args.rv is None:
        if args.param or args.moments_file:
            raise UsageError("--param and --moments-file need --rv")
        return None
    if args.rv == "custom":
        if not args.moments_file:
            raise UsageError("--rv custom needs --moments-file")
        if args.param:
            raise UsageError("--rv custom takes no --param")
        return load_custom_moments(args.moments_file)
    if args.moments_file:
        raise UsageError("--moments-file is only for --rv custom")
    params = dict(args.param)
    if len(params) != len(args.param):
        raise UsageError("a parameter was given twice")
    expected = PARAM_NAMES[args.rv]
    if set(params) != set(expected):
        want = ", ".join(expected) or "no parameters"
        raise UsageError(f"--rv {args.rv} takes {want}")
    return make_model(args.rv, **params)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_stirling(args) -> int:
    model = _model(args)
    fam = args.family
    if fam in _PROBABILISTIC and model is None:
        raise UsageError(f"family {fam} is probabilistic and needs --rv")
    if fam not in _PROBABILISTIC and model is not None:
        raise UsageError(f"family {fam} does not depend on a random variable; drop --rv")
    if args.lam is not None and fam not in _DEGENERATE:
        raise UsageError(f"family {fam} takes no --lambda")
    lam = args.lam if args.lam is not None else Fraction(0)
    table = family_table(fam, args.nmax, lam, model)
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        _emit(table.to_json())
    return EXIT_OK


def _spec(args, nmax: int) -> FamilySpec:
    if args.u == 1:
        raise UsageError("u = 1 is not allowed: the families assume u != 1")
    return FamilySpec(_model(args) or UNIT, args.u, args.lam, args.order, nmax)


def cmd_family(args) -> int:
    fam = build_family(_spec(args, args.nmax))
    out = fam.to_json()
    out["numbers"] = [rat_str(c) for c in fam.numbers()]
    _emit(out)
    return EXIT_OK


def cmd_expand(args) -> int:
    try:
        p = parse_poly(args.poly)
    except ValueError as exc:
        raise UsageError(f"--poly: {exc}") from None
    if args.nmax is not None and args.nmax < p.degree:
        raise UsageError(f"--nmax {args.nmax} is below the degree {p.degree} of --poly")
    spec = _spec(args, 0)
    theorem = args.theorem
    if theorem in ("31", "33") and spec.order_r != 1:
        raise UsageError(f"theorem {theorem} is for order 1")
    if theorem == "31" and spec.lam != 0:
        raise UsageError("theorem 31 is for lambda = 0; use theorem 33")
    if args.formula not in THEOREM_FORMULAS[theorem]:
        raise UsageError(f"theorem {theorem} has formulas {THEOREM_FORMULAS[theorem]}")
    e = expand(p, spec, theorem, args.formula, args.nmax)
    ok = reconstruct(e) == p
    out = e.to_json(reconstruction_ok=ok)
    status = EXIT_OK if ok else EXIT_CHECK
    if args.verify:
        others = {f: expand(p, spec, theorem, f, args.nmax).coefficients for f in THEOREM_FORMULAS[theorem]}
        agree = all(c == e.coefficients for c in others.values())
        out["formulas_agree"] = agree
        if not agree:
            status = EXIT_CHECK
    _emit(out)
    return status


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.nmax)
    for c in checks:
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_CHECK if failed else EXIT_OK


_COMMANDS = {"stirling": cmd_stirling, "family": cmd_family, "expand": cmd_expand, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"probfe {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
