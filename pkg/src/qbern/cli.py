"""Command line: ``qbern {compute,table,verify,numcheck}``.

Exit codes: 0 success, 1 failed verification or internal contradiction,
2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from . import bernoulli, qexp, verify
from .errors import InconsistencyError, PoleError, UsageError
from .exactq import format_fraction
from .render import (
    latex_poly,
    latex_scalar_qrat,
    rational_poly_to_dict,
)
from .xpoly import XPoly

DEFAULT_CAP = 12
WARN_CAP = 20
FORMATS = ("json", "latex", "csv", "plain")
WHATS = ("bpoly", "fpoly", "bnumber", "eta", "beta", "classical", "limit")
TABLE_COLUMNS = ("n", "bpoly", "bnumber", "beta_number", "limit")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _resolve_cap(args) -> int:
    cap = args.max_n_cap
    if cap is None:
        env = os.environ.get("QBERN_MAX_N")
        if env:
            try:
                cap = int(env)
            except ValueError:
                raise UsageError(f"QBERN_MAX_N must be an integer, got {env!r}") from None
    if cap is None:
        cap = DEFAULT_CAP
    if cap < 0:
        raise UsageError("cap must be >= 0")
    if cap > WARN_CAP:
        print(f"warning: cap {cap} > {WARN_CAP}; expect long runtimes", file=sys.stderr)
    return cap


def _check_n(n: int, cap: int, name: str = "n"):
    if n < 0:
        raise UsageError(f"{name} must be >= 0, got {n}")
    if n > cap:
        raise UsageError(f"{name}={n} exceeds the cap {cap} (use --max-n-cap or QBERN_MAX_N)")


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _compute_object(n: int, what: str):
    if what == "bpoly":
        return bernoulli.qbernoulli(n).poly
    if what == "fpoly":
        return bernoulli.qbernoulli(n).antiderivative
    if what == "bnumber":
        return bernoulli.qbernoulli(n).number
    if what == "eta":
        return qexp.eta(n)
    if what == "beta":
        return qexp.beta(n)
    if what == "classical":
        return bernoulli.classical_bernoulli(n)
    return bernoulli.limit_q_to_1(bernoulli.qbernoulli(n).poly)


def _json_of(obj, rational: bool):
    if rational:
        return rational_poly_to_dict(obj)
    return obj.to_dict()


def _latex_of(obj, brackets: bool) -> str:
    if isinstance(obj, XPoly) or hasattr(obj, "coeffs"):
        return latex_poly(obj, brackets)
    return latex_scalar_qrat(obj, brackets)


def cmd_compute(args, out) -> int:
    cap = _resolve_cap(args)
    _check_n(args.n, cap)
    obj = _compute_object(args.n, args.what)
    rational = args.what in ("classical", "limit")
    fmt = args.format
    if fmt == "json":
        print(_dumps(_json_of(obj, rational)), file=out)
    elif fmt == "latex":
        print(_latex_of(obj, args.bracket_notation), file=out)
    elif fmt == "plain":
        print(str(obj), file=out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "what", "value"])
        w.writerow([args.n, args.what, str(obj)])
    return EXIT_OK


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def table_records(max_n: int) -> list[dict]:
    rows = []
    for n in range(max_n + 1):
        r = bernoulli.qbernoulli(n)
        rows.append({"n": n, "bpoly": r.poly, "bnumber": r.number,
                     "beta_number": qexp.beta_number(n),
                     "limit": bernoulli.limit_q_to_1(r.poly)})
    return rows


def cmd_table(args, out) -> int:
    cap = _resolve_cap(args)
    _check_n(args.max_n, cap, "max-n")
    rows = table_records(args.max_n)
    fmt = args.format
    if fmt == "json":
        payload = [{"n": r["n"], "bpoly": r["bpoly"].to_dict(),
                    "bnumber": r["bnumber"].to_dict(),
                    "beta_number": r["beta_number"].to_dict(),
                    "limit": rational_poly_to_dict(r["limit"])} for r in rows]
        print(_dumps(payload), file=out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(TABLE_COLUMNS)
        for r in rows:
            w.writerow([r["n"]] + [str(r[c]) for c in TABLE_COLUMNS[1:]])
    elif fmt == "plain":
        for r in rows:
            print(f"n = {r['n']}", file=out)
            print(f"  B_n(X)       = {r['bpoly']}", file=out)
            print(f"  B_n          = {r['bnumber']}", file=out)
            print(f"  beta_n       = {r['beta_number']}", file=out)
            print(f"  limit q -> 1 = {r['limit']}", file=out)
    else:
        b = args.bracket_notation
        print(r"\begin{tabular}{r l l l l}", file=out)
        print(r"$n$ & $B_{n,q}(X)$ & $B_{n,q}$ & $\beta_{n,q}$ & $\lim_{q \to 1} B_{n,q}(X)$ \\",
              file=out)
        print(r"\hline", file=out)
        for r in rows:
            cells = [str(r["n"]), latex_poly(r["bpoly"], b), latex_scalar_qrat(r["bnumber"], b),
                     latex_scalar_qrat(r["beta_number"], b), latex_poly(r["limit"])]
            print(" & ".join(f"${c}$" if i else c for i, c in enumerate(cells)) + r" \\",
                  file=out)
        print(r"\end{tabular}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _parse_tags(raw):
    if not raw:
        return None
    tags = []
    for item in raw:
        tags.extend(t for t in item.split(",") if t)
    return [verify.Identity.parse(t.strip().upper()) for t in tags]


def cmd_verify(args, out) -> int:
    cap = _resolve_cap(args)
    _check_n(args.max_n, cap, "max-n")
    if args.max_N < 1:
        raise UsageError("max-N must be >= 1")
    tags = _parse_tags(args.tags)
    t0 = time.perf_counter()
    reports = verify.run_suite(args.max_n, args.max_N, tags)
    elapsed = (time.perf_counter() - t0) * 1000
    fmt = args.format
    if fmt == "json":
        for line in verify.report_lines(reports, elapsed):
            print(line, file=out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["identity", "params", "passed", "detail"])
        for r in reports:
            w.writerow([r.identity.value, _dumps(r.to_dict()["params"]), r.passed, r.detail])
    elif fmt == "plain":
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.to_dict()["params"].items())
            print(f"{'PASS' if r.passed else 'FAIL'} {r.identity.value} {params}  {r.detail}",
                  file=out)
        s = verify.summary(reports, elapsed)
        print(f"{s['passed']}/{s['total']} passed", file=out)
    else:
        print(r"\begin{tabular}{l l l}", file=out)
        print(r"identity & parameters & result \\ \hline", file=out)
        for r in reports:
            params = ", ".join(f"{k}={v}" for k, v in r.to_dict()["params"].items())
            tag = r.identity.value.replace("_", r"\_")
            print(f"{tag} & {params} & {'pass' if r.passed else 'FAIL'} \\\\", file=out)
        print(r"\end{tabular}", file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# ---------------------------------------------------------------------------
# numcheck
# ---------------------------------------------------------------------------

NUMCHECK_BOUNDS = ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(2)),
                   (Fraction(1, 2), Fraction(1)))


def cmd_numcheck(args, out) -> int:
    try:
        q0 = Fraction(args.q)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read q0 from {args.q!r}") from None
    if q0 <= 0 or q0 == 1:
        raise UsageError(f"q0 must be positive and different from 1, got {q0}")
    ok = True
    total = 0
    for P in verify.numeric_fixtures():
        for a, b in NUMCHECK_BOUNDS:
            sample = verify.NumericSample(q0, a, b, args.truncation, args.tolerance)
            series, closed = verify.numeric_jackson(P, sample)
            err = abs(series - closed)
            passed = err <= args.tolerance
            ok &= passed
            total += 1
            print(_dumps({"integrand": f"t^{P.degree}", "a": format_fraction(a),
                          "b": format_fraction(b), "q0": format_fraction(q0),
                          "series": series, "closed_form": closed, "error": err,
                          "passed": passed}), file=out)
    print(_dumps({"total": total, "all_within_tolerance": ok}), file=out)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--max-n-cap", type=int, default=None,
                        help=f"largest n allowed (default {DEFAULT_CAP}, or $QBERN_MAX_N)")
    common.add_argument("--bracket-notation", action="store_true",
                        help="render denominators as products of [m]_q where possible")

    p = argparse.ArgumentParser(prog="qbern", description="Exact q-Bernoulli polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="emit one object")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--what", choices=WHATS, default="bpoly")
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", parents=[common], help="B_n, B_n(0), beta_n and q->1 limits")
    t.add_argument("--max-n", type=int, required=True)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="run the identity suite")
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--max-N", dest="max_N", type=int, default=6)
    v.add_argument("--tags", nargs="+", default=None,
                   help="restrict to these identity tags (space or comma separated)")
    v.set_defaults(func=cmd_verify)

    nc = sub.add_parser("numcheck", help="Jackson series against the closed form")
    nc.add_argument("--q", required=True, help="q0 > 0, q0 != 1 (e.g. 0.5, 1/3, 2)")
    nc.add_argument("--truncation", type=int, default=verify.DEFAULT_TRUNCATION)
    nc.add_argument("--tolerance", type=float, default=verify.DEFAULT_TOLERANCE)
    nc.set_defaults(func=cmd_numcheck)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"qbern: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InconsistencyError, PoleError) as exc:
        print(f"qbern: internal contradiction: {exc}", file=sys.stderr)
        return EXIT_FAIL


def run(argv=None) -> tuple[int, str]:
    """Run the CLI in-process and capture standard output."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
