"""Command-line front end.

Subcommands: ``construct``, ``profile``, ``certify``, ``reproduce``,
``expand``.  Output is JSON (``--table`` for aligned text).  Exit codes:
0 pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .atlas.catalog import CODE_IDS, construct, read_codefile, write_codefile
from .certify import CannotCertify, avoid_set, certify_design, certify_energy, certify_max
from .designs import DEFAULT_SEED, Potential, design_strength, moments, profile
from .exactnum import IntervalSet, format_rational, to_rational
from .gegenbauer import expand
from .polyexpr import PolyExpr, PolySyntaxError, parse_poly
from .registry import entry_ids, reproduce_all

__all__ = ["main", "parse_poly", "parse_T", "parse_potential", "PolyExpr"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


_INTERVAL = re.compile(r"\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\)")


def parse_T(text: str) -> IntervalSet:
    """``"(a,b)∪(c,d)"``; ``u`` also separates pieces, ``""`` or ``none`` is empty."""
    text = text.strip()
    if text in ("", "none", "∅"):
        return IntervalSet()
    pairs = []
    pos = 0
    for i, m in enumerate(_INTERVAL.finditer(text)):
        sep = text[pos : m.start()].strip()
        if (i == 0 and sep) or (i > 0 and sep not in ("∪", "u", "U")):
            raise UsageError(f"bad T near position {pos}: {text!r}")
        pairs.append((m.group(1), m.group(2)))
        pos = m.end()
    if not pairs or text[pos:].strip():
        raise UsageError(f"bad T {text!r}; expected (a,b) pieces joined by ∪ or u")
    try:
        return avoid_set(pairs)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad T {text!r}: {exc}") from None


def parse_potential(text: str) -> Potential:
    family, _, arg = text.partition(":")
    try:
        if family == "riesz":
            return Potential.riesz(int(arg or 1))
        if family == "exp":
            return Potential.exponential(to_rational(arg))
        if family == "poly":
            return Potential.polynomial(parse_poly(arg).to_poly())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad potential {text!r}: {exc}") from None
    raise UsageError(f"unknown potential {text!r}; use riesz:k, exp:c or poly:EXPR")


def _rational(text: str) -> Fraction:
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _poly_arg(text: str) -> PolyExpr:
    try:
        return parse_poly(text)
    except PolySyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ---- output ----


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return ", ".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return "; ".join(f"{k}={_cell(x)}" for k, x in v.items())
    return str(v)


def _emit(obj: dict, table: bool) -> None:
    if not table:
        print(json.dumps(obj, default=str))
        return
    width = max((len(str(k)) for k in obj), default=0)
    for k, v in obj.items():
        print(f"{str(k).ljust(width)}  {_cell(v)}")
    print()


# ---- subcommands ----


def _load_code(ref: str):
    if Path(ref).exists():
        return read_codefile(ref)
    if ref in CODE_IDS or ref.startswith("srg:"):
        return construct(ref)
    raise UsageError(f"no codefile or code id {ref!r}")


def cmd_construct(args) -> int:
    try:
        code = construct(args.code_id)
    except (KeyError, ValueError, FileNotFoundError) as exc:
        raise UsageError(str(exc).strip("'\"")) from None
    out = {"id": args.code_id, "N": code.size, "dim": code.dim}
    if args.out:
        write_codefile(code, args.out)
        out["out"] = args.out
    _emit(out, args.table)
    return EXIT_OK


def cmd_profile(args) -> int:
    code = _load_code(args.codefile)
    if args.sample:
        p = profile(code, mode="sampled", k=args.sample, seed=args.seed, tau=args.tau, jobs=args.jobs)
    else:
        p = profile(code, jobs=args.jobs)
    out = {
        "name": getattr(code, "name", args.codefile),
        "n": p.n,
        "N": p.N,
        "mode": p.mode,
        "I": [format_rational(t) for t in p.inner_products],
        "distance_invariant": p.distance_invariant,
    }
    if p.distribution is not None:
        out["F"] = list(p.distribution)
    if p.pair_counts is not None:
        out["strength"] = design_strength(p, max(args.moments, 1))
        if args.moments:
            out["moments"] = [format_rational(m) for m in moments(p, args.moments)]
    _emit(out, args.table)
    return EXIT_OK


def cmd_certify(args) -> int:
    T = parse_T(args.T)
    f = args.poly.to_poly() if args.poly else None
    factored = args.poly.source if args.poly else ""
    if args.kind in ("max", "design") and f is None:
        raise UsageError(f"certify {args.kind} needs --poly")
    if args.kind == "max":
        if args.s is None:
            raise UsageError("certify max needs --s")
        try:
            cert = certify_max(f, args.dim, args.s, T, factored)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.kind == "design":
        if args.tau is None:
            raise UsageError("certify design needs --tau")
        cert = certify_design(f, args.dim, args.tau, T, factored)
    else:
        if args.potential is None or args.N is None:
            raise UsageError("certify energy needs --potential and --N")
        h = parse_potential(args.potential)
        nodes = None
        if args.nodes:
            try:
                nodes = [to_rational(x) for x in args.nodes.split(",")]
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad --nodes {args.nodes!r}") from None
        try:
            cert = certify_energy(f, h, args.dim, args.N, T, nodes=nodes, factored=factored)
        except CannotCertify as exc:
            _emit({"kind": "energy", "status": "undecided", "reason": str(exc)}, args.table)
            return EXIT_FAIL
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    out = cert.to_json()
    out["status"] = "pass" if cert.valid else "fail"
    _emit(out, args.table)
    return EXIT_OK if cert.valid else EXIT_FAIL


def cmd_reproduce(args) -> int:
    if args.id and args.id not in entry_ids():
        raise UsageError(f"unknown registry id {args.id!r}")
    ids = [args.id] if args.id else None
    failed = 0
    for row in reproduce_all(long=args.long, jobs=args.jobs, ids=ids):
        failed += row["status"] == "fail"
        if args.table:
            detail = row["failures"] or row["errata"]
            print(f"{row['status']:8} {row['id']:32} {_cell(detail) if detail else ''}")
        else:
            print(json.dumps(row, default=str), flush=True)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_expand(args) -> int:
    e = expand(args.poly.to_poly(), args.dim)
    _emit({"dim": args.dim, "poly": args.poly.source, "coefficients": e.as_strings()}, args.table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", action="store_true", help="human-readable output instead of JSON")

    ap = argparse.ArgumentParser(prog="tavoid", description=__doc__.splitlines()[0], parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a named code")
    c.add_argument("code_id", help=f"one of {', '.join(CODE_IDS)} or srg:<file>:<first|second>")
    c.add_argument("--out", help="write a codefile/v1 JSON file")
    c.set_defaults(func=cmd_construct)

    p = sub.add_parser("profile", parents=[common], help="inner products, distribution and moments")
    p.add_argument("codefile", help="codefile path or code id")
    p.add_argument("--sample", type=int, metavar="K", help="tally K seeded points instead of all pairs")
    p.add_argument("--tau", type=int, help="design strength vouched for when sampling")
    p.add_argument("--moments", type=int, default=0, metavar="M", help="report M_1..M_M")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_profile)

    ce = sub.add_parser("certify", parents=[common], help="check a linear-programming certificate")
    ce.add_argument("kind", choices=["max", "design", "energy"])
    ce.add_argument("--dim", type=int, required=True)
    ce.add_argument("--poly", type=_poly_arg)
    ce.add_argument("--T", default="", help='avoided set, e.g. "(-1/2,-1/4)∪(0,1/4)"')
    ce.add_argument("--s", type=_rational)
    ce.add_argument("--tau", type=int)
    ce.add_argument("--potential", help="riesz:k, exp:c or poly:EXPR")
    ce.add_argument("--N", type=int)
    ce.add_argument("--nodes", help="comma-separated inner products for the interpolation route")
    ce.set_defaults(func=cmd_certify)

    r = sub.add_parser("reproduce", parents=[common], help="re-derive the certificate registry")
    g = r.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", help="every entry (default)")
    g.add_argument("--id")
    r.add_argument("--long", action="store_true", help="full enumeration of the largest codes")
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_reproduce)

    e = sub.add_parser("expand", parents=[common], help="Gegenbauer coefficients of a polynomial")
    e.add_argument("--dim", type=int, required=True)
    e.add_argument("--poly", type=_poly_arg, required=True)
    e.set_defaults(func=cmd_expand)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tavoid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
