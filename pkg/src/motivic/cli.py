"""Command-line front end: ``motivic {zeta,power,verify,strata,oracle}``.

Exit codes: 0 all checks pass, 1 a verified identity failed, 2 usage or
parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import suites
from .oracle import (
    brute_force_cycles,
    closed_points,
    counts_from_class,
    cycles_from_closed_points,
    space_class,
    weil_coefficients,
)
from .parsing import ParseError, format_series, parse_class, parse_series
from .power import UnsupportedExponentError, power
from .varieties import (
    cell_min_level,
    count_at_most_parts,
    count_parts_at_most,
    match_strata,
    stratum_min_level,
)
from .zeta import VerificationReport, kapranov_zeta, stack_zeta_bcstar

DEFAULT_ORDER = 5
MAX_FAILURES_SHOWN = 20
VERIFY_TARGETS = ("theorem1", "scaling", "lemma", "theorem2-finite", "properties", "bcstar", "oracle", "all")


class UsageError(Exception):
    pass


def _color(text: str, code: str) -> str:
    if os.environ.get("MOTIVIC_COLOR", "0") == "1":
        return f"\033[{code}m{text}\033[0m"
    return text


def _status(ok: bool) -> str:
    return _color("PASS", "32") if ok else _color("FAIL", "31")


# ---------------------------------------------------------------------------

def cmd_zeta(args) -> int:
    c = parse_class(args.class_)
    z = kapranov_zeta(c, args.order)
    if args.json:
        print(json.dumps({
            "class": str(c),
            "order": args.order,
            "coefficients": [str(x) for x in z.coefficients],
            "series": format_series(z),
        }))
    else:
        print(format_series(z))
    return 0


def cmd_power(args) -> int:
    order = args.order
    if order is None and "O" not in args.series:
        order = DEFAULT_ORDER
    a = parse_series(args.series, order)
    m = parse_class(args.exponent)
    result = power(a, m)
    if args.json:
        print(json.dumps({
            "series": format_series(a),
            "exponent": str(m),
            "order": result.order,
            "coefficients": [str(x) for x in result.coefficients],
            "result": format_series(result),
        }))
    else:
        print(format_series(result))
    return 0


def _verify_reports(args) -> List[VerificationReport]:
    target = args.target
    reports: List[VerificationReport] = []
    if target in ("theorem1", "all"):
        reports += suites.suite_theorem1(args.max_n, args.order or 16, args.n)
    if target in ("scaling", "all"):
        reports += suites.suite_scaling(args.class_ or suites.SCALING_CLASSES, args.order or 12)
    if target in ("lemma", "all"):
        reports += suites.suite_lemma(args.trials or 200, args.seed, args.order or 10)
    if target in ("properties", "all"):
        reports += suites.suite_properties(args.trials or 500, args.seed, args.order or 10)
        reports += suites.suite_power_finite(args.draws, args.seed)
    if target in ("theorem2-finite", "all"):
        reports += suites.suite_theorem2_finite(args.max_total, args.max_m, args.max_dim)
    if target in ("bcstar", "all"):
        reports += suites.suite_bcstar(args.order or 8)
    if target in ("oracle", "all"):
        reports += suites.suite_oracle(tuple(args.q or (2, 3, 4, 5)), args.max_degree)
    return reports


def cmd_verify(args) -> int:
    reports = _verify_reports(args)
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps({"pass": ok, "reports": [r.to_dict() for r in reports]}, sort_keys=True))
        return 0 if ok else 1
    for r in reports:
        print(r.summary().replace("PASS", _status(True), 1).replace("FAIL", _status(False), 1))
        for f in r.failures[:MAX_FAILURES_SHOWN]:
            print(f"    {f.identity}: {f.lhs} != {f.rhs}")
        if len(r.failures) > MAX_FAILURES_SHOWN:
            print(f"    ... {len(r.failures) - MAX_FAILURES_SHOWN} more failures")
    if args.target == "bcstar":
        for m, c in enumerate(stack_zeta_bcstar(args.order or 8)):
            if m:
                print(f"c_{m} = {c}")
    failed = sum(not r.passed for r in reports)
    if ok:
        print(f"{_status(True)}: all {len(reports)} reports passed")
    else:
        print(f"{_status(False)}: {failed} of {len(reports)} reports failed")
    return 0 if ok else 1


def cmd_strata(args) -> int:
    if args.m < 1 or args.max_dim < 0:
        raise UsageError("--m must be >= 1 and --max-dim >= 0")
    rows = []
    ok = True
    for n in range(args.max_dim + 1):
        pairs = match_strata(args.m, n)
        a = count_parts_at_most(args.m, n)
        b = count_at_most_parts(args.m, n)
        ok = ok and a == b == len(pairs)
        rows.append((n, pairs, a, b))
    if args.json:
        print(json.dumps({
            "m": args.m,
            "max_dim": args.max_dim,
            "pass": ok,
            "dimensions": [
                {
                    "n": n,
                    "strata": len(pairs),
                    "cells_parts_at_most_m": a,
                    "cells_at_most_m_parts": b,
                    "pairs": [
                        {
                            "signature": list(sig.multiplicities),
                            "partition": list(lam.parts),
                            "stratum_level": stratum_min_level(sig),
                            "cell_level": cell_min_level(lam, args.m),
                        }
                        for sig, lam in pairs
                    ],
                }
                for n, pairs, a, b in rows
            ],
        }))
    else:
        for n, pairs, a, b in rows:
            print(f"dim {n}: {len(pairs)} strata <-> {a} cells (parts <= {args.m}: {a}, at most {args.m} parts: {b})")
            for sig, lam in pairs:
                print(
                    f"  {sig} <-> {lam}  S^{args.m}P^N from N={stratum_min_level(sig)}, "
                    f"Gr({args.m},N) from N={cell_min_level(lam, args.m)}"
                )
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    try:
        c = space_class(args.space)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.q < 2 or args.m < 0:
        raise UsageError("--q must be >= 2 and --m >= 0")
    brute = None
    if args.brute_force:
        try:
            brute = brute_force_cycles(args.space, args.q, args.m)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    table = counts_from_class(c, args.q, max(args.m, 1))
    motivic = kapranov_zeta(c, args.m).coeff(args.m).evaluate(args.q)
    weil = weil_coefficients(table, args.m)
    census = cycles_from_closed_points(closed_points(table), args.m)
    values = [motivic, weil, census] + ([brute] if brute is not None else [])
    ok = all(v == values[0] for v in values)
    if args.json:
        print(json.dumps({
            "space": args.space,
            "class": str(c),
            "q": args.q,
            "m": args.m,
            "table": {"q": table.q, "counts": list(table.counts)},
            "motivic": str(motivic),
            "weil": weil,
            "closed_points": census,
            "brute_force": brute,
            "pass": ok,
        }))
    else:
        print(f"|S^{args.m} {args.space}(F_{args.q})|, class {c}")
        rows = [(f"motivic (L -> {args.q})", motivic), ("Weil zeta", weil), ("closed-point census", census)]
        if brute is not None:
            rows.append(("brute force", brute))
        for label, value in rows:
            print(f"  {label + ':':<22}{value}")
        print(_status(ok) if ok else f"{_status(False)}: channels disagree")
    return 0 if ok else 1


# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="motivic", description="Power structure and Kapranov zeta computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("zeta", help="truncated Kapranov zeta function of a class")
    p.add_argument("--class", dest="class_", required=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("power", help="(A(T))^M for a series A and class M")
    p.add_argument("--series", required=True)
    p.add_argument("--exponent", required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("target", choices=VERIFY_TARGETS)
    p.add_argument("--n", type=int, help="theorem1: a single n")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--order", type=int)
    p.add_argument("--class", dest="class_", action="append", help="scaling: class (repeatable)")
    p.add_argument("--trials", type=int)
    p.add_argument("--draws", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-total", type=int, default=12)
    p.add_argument("--max-m", type=int, default=8)
    p.add_argument("--max-dim", type=int, default=40)
    p.add_argument("--q", type=int, action="append")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("strata", help="strata of S^m CP^inf against Schubert cells")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("oracle", help="finite-field check of a symmetric power")
    p.add_argument("--space", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--brute-force", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnsupportedExponentError, UsageError) as exc:
        print(f"motivic {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"motivic {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
