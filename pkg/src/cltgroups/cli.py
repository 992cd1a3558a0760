"""Command-line front end.

Exit codes: 0 success, 1 a re-checked certificate failed, 2 user error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import builtins
from .constructions import (
    CERTIFICATE_ONLY,
    TraceStep,
    check_trace,
    describe,
    g_pqn,
    g_pqn_description,
    plan,
    theorem1_construct,
)
from .density import approximate_target, result_to_dict, witness_description
from .errors import DomainError, ResourceError
from .numtheory import factorize
from .permgroup import generate, parse_group_file
from .spectrum import has_subgroup_of_order, oracle_cap, sn_report, spectrum

EXIT_OK, EXIT_FAILED, EXIT_USER, EXIT_RESOURCE = 0, 1, 2, 3


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _emit(data: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(data, ensure_ascii=False, indent=2))
        return
    for key, value in data.items():
        if isinstance(value, dict):
            print(f"{key}:")
            for k, v in value.items():
                print(f"  {k}: {v}")
        else:
            print(f"{key}: {value}")


def _load_group(args):
    if args.file:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read {args.file}: {exc}") from None
        return parse_group_file(text)
    return builtins.resolve(args.builtin)


def cmd_construct(args) -> int:
    d = args.d
    cert = theorem1_construct(d, verify=not args.no_verify)
    data = cert.to_dict()
    if args.full_agl:
        full = theorem1_construct(d, full_agl=True, verify=not args.no_verify)
        data = {"minimal": data, "full": full.to_dict()}
    _emit(data, args.json)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    G = _load_group(args)
    rep = spectrum(G, workers=args.workers)
    if args.command == "degree":
        print(_frac(rep.degree))
        return EXIT_OK
    _emit(rep.to_dict(), args.json)
    return EXIT_OK


def cmd_approximate(args) -> int:
    try:
        t, eps = Fraction(args.t), Fraction(args.eps)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse target {args.t!r} / epsilon {args.eps!r} as rationals") from None
    result = approximate_target(t, eps)
    witness = witness_description(result)
    _emit(result_to_dict(result, witness), args.json)
    return EXIT_OK


def cmd_sn(args) -> int:
    rep = sn_report(args.n, allow_slow=args.allow_slow, workers=args.workers)
    _emit({"n": args.n, **rep.to_dict()}, args.json)
    return EXIT_OK


def cmd_gpqn(args) -> int:
    G = g_pqn(args.p, args.q, args.n)
    rep = spectrum(G)
    _emit({"description": g_pqn_description(args.p, args.q, args.n), **rep.to_dict()}, args.json)
    return EXIT_OK


def recheck_certificate(data: dict) -> List[str]:
    """Problems found when re-checking a saved certificate; empty if it holds up."""
    problems = []
    d = data["d"]
    f = factorize(d)
    if [list(pe) for pe in f.parts] != data["factorization"]:
        problems.append("factorization does not match d")
    trace = [TraceStep.from_dict(s) for s in data["trace"]]
    try:
        check_trace(d, trace)
    except AssertionError as exc:
        problems.append(f"trace arithmetic: {exc or 'invariant violated'}")
        return problems
    if trace != plan(d):
        problems.append("trace differs from the deterministic recursion")
    description, order = describe(trace, data.get("full_agl", False))
    if (description, order) != (data["description"], data["order"]):
        problems.append("description or order inconsistent with the trace")
    if order % d:
        problems.append("d does not divide the group order")
    if "generators" in data:
        gens = [[x - 1 for x in g] for g in data["generators"]]
        G = generate(data["degree"], gens)
        if G.order != order:
            problems.append(f"generators give order {G.order}, expected {order}")
        elif order <= oracle_cap() and has_subgroup_of_order(G, d):
            problems.append(f"oracle found a subgroup of order {d}")
    elif data["verified"] != CERTIFICATE_ONLY:
        problems.append("oracle-verified certificate carries no generators")
    return problems


def cmd_verify(args) -> int:
    try:
        with open(args.path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot load certificate {args.path}: {exc}") from None
    certs = [data["minimal"], data["full"]] if "minimal" in data else [data]
    try:
        problems = [p for c in certs for p in recheck_certificate(c)]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed certificate: {exc}") from None
    for p in problems:
        print(f"FAIL: {p}")
    if problems:
        return EXIT_FAILED
    print(f"OK: certificate for d={certs[0]['d']} re-checked")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cltgroups", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="solvable group with no subgroup of order d")
    p.add_argument("d", type=int)
    p.add_argument("--full-agl", action="store_true", help="also report the full AGL(1, p^m)-based witness")
    p.add_argument("--no-verify", action="store_true", help="skip the oracle check")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    for name in ("spectrum", "degree"):
        p = sub.add_parser(name, help="subgroup-order spectrum" if name == "spectrum" else "CLT-degree only")
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--file", help="group file: 'degree N' then 'gen i1 ... iN' lines")
        src.add_argument("--builtin", help="A4, S3..S6, SL23, V4, Q8, agl:p:m, cyclic:n, gpqn:p:q:n, sym:n")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("approximate", help="witness group with CLT-degree in [t, t + eps)")
    p.add_argument("t", help="target in (0, 1], e.g. 0.9 or 9/10")
    p.add_argument("--eps", default="1e-3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("sn", help="spectrum of the symmetric group S_n")
    p.add_argument("n", type=int)
    p.add_argument("--allow-slow", action="store_true", help="permit n = 7")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sn)

    p = sub.add_parser("gpqn", help="spectrum of (C_p^2 ⋊ C_q) × C_q^n")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gpqn)

    p = sub.add_parser("verify", help="re-check a saved construct --json certificate")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
