"""Command-line front end: ``qpart {p,series,verify,bench}``.

Exit codes: 0 success, 1 a value or identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import determinants as det_mod
from . import general, oracle, seven
from .report import VerificationReport
from .series import TruncatedIntSeries, etaq, invert, mul

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FIXED_METHODS = ("euler", "brute", "det-full", "det-mod7")


class UsageError(Exception):
    pass


def parse_method(method: str):
    """Return ``(kind, N)``; N is only meaningful for ``det-general:N``."""
    if method in FIXED_METHODS:
        return method, None
    m = re.fullmatch(r"det-general:(\d+)", method)
    if m and int(m.group(1)) >= 1:
        return "det-general", int(m.group(1))
    raise UsageError(
        f"unknown method {method!r}; choose from "
        f"{', '.join(FIXED_METHODS)}, det-general:N (N >= 1)")


def compute_p(n: int, method: str) -> int:
    kind, N = parse_method(method)
    if kind == "euler":
        return oracle.p_euler(n)[n]
    if kind == "brute":
        try:
            return oracle.p_bruteforce(n)[n]
        except oracle.OracleCapError as exc:
            raise UsageError(str(exc)) from exc
    if kind == "det-full":
        return det_mod.det(det_mod.build_eq1(n))
    if kind == "det-mod7":
        k, a = divmod(n, 7)
        return det_mod.det(det_mod.build_mod7(a, k))
    k, a = divmod(n, N)
    return det_mod.det(general.build_general(N, a, k))


# ---------------------------------------------------------------------------
# series catalog

CATALOG = (
    "J1", "J2", "J3", *(f"H{i}" for i in range(1, 8)),
    *(f"Z7_{a}" for a in range(7)), "A010815", "A108483", "D:N", "ZN:a",
)


def named_series(name: str, order: int) -> TruncatedIntSeries:
    if name in ("J1", "J2", "J3", "A108483"):
        idx = 0 if name == "A108483" else int(name[1]) - 1
        return tuple(seven.j_closed(order))[idx]
    m = re.fullmatch(r"H([1-7])", name)
    if m:
        return seven.h_closed(seven.j_closed(order), order)[int(m.group(1)) - 1]
    m = re.fullmatch(r"Z7_([0-6])", name)
    if m:
        return seven.z_series_7(int(m.group(1)), order)
    if name == "A010815":
        return etaq(1, order)
    m = re.fullmatch(r"D:(\d+)", name)
    if m and int(m.group(1)) >= 1:
        return general.d_full(int(m.group(1)), order)
    m = re.fullmatch(r"Z(\d+):(\d+)", name)
    if m:
        N, a = int(m.group(1)), int(m.group(2))
        if N >= 1 and a < N:
            return general.z_general(N, order)[a]
    raise UsageError(f"unknown series {name!r}; catalog: {' '.join(CATALOG)}")


# ---------------------------------------------------------------------------
# verification beyond the modulus-7 identities

GENERAL_MODULI = (2, 3, 5, 11, 13)


def _seq_mismatch(got, want):
    for i, (x, y) in enumerate(zip(got, want)):
        if x != y:
            return i
    return None


def _cross_checks(order: int):
    """Yield ``(name, mismatch)`` for oracle and cross-module checks."""
    limit = 7 * order + 6
    table = oracle.p_euler(max(limit, 13 * order + 12))
    brute = oracle.p_bruteforce(min(limit, oracle.oracle_cap()))
    yield "oracle", _seq_mismatch(brute.values, table.values)

    inv = invert(etaq(1, order))
    yield "invert-eta", _seq_mismatch(inv.coeffs, table.values)

    eq1 = det_mod.leading_minors(det_mod.build_eq1(order))
    yield "det-full", _seq_mismatch(eq1, table.values)

    worst = None
    for a in range(7):
        u = det_mod.leading_minors(det_mod.build_mod7(a, order))
        mm = _seq_mismatch(u, table.values[a::7])
        if mm is not None and (worst is None or mm < worst):
            worst = mm
    yield "det-mod7", worst

    worst = None
    for N in GENERAL_MODULI:
        plan = general.modulus_plan(N, order)
        for a in range(N):
            u = det_mod.leading_minors(plan.problem(a, order))
            mm = _seq_mismatch(u, table.values[a::N])
            if mm is not None and (worst is None or mm < worst):
                worst = mm
    yield "det-general", worst

    worst = None
    for N in (1, 2, 3, 7):
        try:
            fl = general.d_full_float(N, min(order, 60) * N)
        except general.FloatOracleError:
            continue
        mm = _seq_mismatch(general.d_full(N, min(order, 60) * N).coeffs, fl.coeffs)
        if mm is not None and (worst is None or mm < worst):
            worst = mm
    yield "d-float", worst

    # the two modulus-7 constructions differ by the unit factor (q^7)_inf
    zg = general.z_general(7, order)
    worst = None
    for a in range(7):
        mm = mul(zg[a], etaq(7, order)).first_mismatch(seven.z_series_7(a, order))
        if mm is not None and (worst is None or mm < worst):
            worst = mm
    yield "z7-cross", worst


CROSS_NAMES = ("oracle", "invert-eta", "det-full", "det-mod7", "det-general",
               "d-float", "z7-cross")
ALL_CHECKS = seven.IDENTITY_NAMES + CROSS_NAMES + seven.NEGATIVE_CONTROLS


def run_verification(order: int, only=None) -> VerificationReport:
    if only:
        unknown = sorted(set(only) - set(ALL_CHECKS))
        if unknown:
            raise UsageError(
                f"unknown check(s) {', '.join(unknown)}; known: {' '.join(ALL_CHECKS)}")
    id_only = [n for n in only if n not in CROSS_NAMES] if only else None
    report = VerificationReport()
    if not only or id_only:
        report = seven.verify_identities(order, id_only)
    if not only or set(only) & set(CROSS_NAMES):
        for name, mm in _cross_checks(order):
            if not only or name in only:
                report.add(name, order, mm)
    return report


# ---------------------------------------------------------------------------
# commands


def cmd_p(args) -> int:
    value = compute_p(args.n, args.method)
    if args.json:
        print(json.dumps({"n": args.n, "method": args.method, "value": str(value)}))
    else:
        print(value)
    return EXIT_OK


def cmd_series(args) -> int:
    s = named_series(args.name, args.order)
    if args.json:
        print(json.dumps({"name": args.name, **s.to_json()}))
    else:
        print(" ".join(str(c) for c in s.coeffs))
    return EXIT_OK


def cmd_verify(args) -> int:
    only = [x for x in args.only.split(",") if x] if args.only else None
    report = run_verification(args.order, only)
    print(report.dumps() if args.json else report.to_text())
    return EXIT_OK if report.overall else EXIT_FAIL


def cmd_bench(args) -> int:
    methods = [m for m in args.methods.split(",") if m]
    for m in methods:
        parse_method(m)
    if args.nmax > oracle.oracle_cap():
        raise UsageError(f"nmax {args.nmax} exceeds oracle cap {oracle.oracle_cap()}")
    rows = []
    for m in methods:
        t0 = time.perf_counter()
        value = compute_p(args.nmax, m)
        rows.append((m, value, time.perf_counter() - t0))
    agree = len({v for _, v, _ in rows}) <= 1
    if args.json:
        print(json.dumps({
            "nmax": args.nmax, "agree": agree,
            "rows": [{"method": m, "value": str(v), "seconds": t} for m, v, t in rows],
        }))
    else:
        width = max(len(m) for m in methods)
        print(f"{'method':<{width}}  {'seconds':>10}  value")
        for m, v, t in rows:
            print(f"{m:<{width}}  {t:>10.4f}  {v}")
        if not agree:
            print("methods disagree", file=sys.stderr)
    return EXIT_OK if agree else EXIT_FAIL


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpart", description="Exact partition-function determinants and q-series checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("p", help="compute p(n)")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--method", default="euler",
                   help="euler, brute, det-full, det-mod7 or det-general:N")
    p.set_defaults(func=cmd_p)

    s = sub.add_parser("series", help="print a named series")
    s.add_argument("name", help="one of: " + " ".join(CATALOG))
    s.add_argument("--order", type=_nonneg, default=10)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_series)

    v = sub.add_parser("verify", help="check identities to a truncation order")
    v.add_argument("--order", type=_nonneg, default=50)
    v.add_argument("--only", default="", help="comma-separated check names")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time methods against each other")
    b.add_argument("--nmax", type=_nonneg, default=500)
    b.add_argument("--methods", default="euler,brute,det-full,det-mod7")
    b.set_defaults(func=cmd_bench)

    for sp in (p, s, v, b):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) == "json":
        args.json = True
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qpart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
