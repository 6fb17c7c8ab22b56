"""Command-line interface: closed forms, exact sums, verification suites,
and a closed-form-vs-brute-force benchmark.

All numeric output is exact decimal text; nothing is ever rendered through
floating point.  With --json, each command emits a single JSON object whose
exact-arithmetic values are decimal strings.  Exit codes: 0 success,
1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from .exactnum import factorial, format_rational
from .expr_parser import ParseError, parse_polynomial
from .poly import Polynomial
from .powersum import (
    power_sum_closed_form,
    power_sum_factored_form,
    power_sum_value,
    alternating_binomial_power_sum,
)
from .summation import brute_force_sum, sum_polynomial, sum_range

__all__ = ["main"]


class _UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(text)


# ---------------------------------------------------------------------------
# closed-form


def _cmd_closed_form(args: argparse.Namespace) -> int:
    n = args.n
    if n == 0:
        raise _UsageError("n must be >= 1; the n = 0 sum is m itself: polysum sum --expr 1")
    if n < 0:
        raise _UsageError(f"n must be >= 1 (got {n})")
    if args.factored:
        if n < 3:
            raise _UsageError(f"the factored form requires n >= 3 (got {n})")
        form = power_sum_factored_form(n)
        rendering = form.render()
        payload = {
            "mode": "closed_form",
            "n": n,
            "format": "factored",
            "variable": "m",
            "rendering": rendering,
            "sign": form.sign,
            "prefactor": form.prefactor.render(),
            "inner_constant": format_rational(form.inner_constant),
            "inner_terms": [
                {"length": i, "coefficient": format_rational(c)}
                for i, c in form.inner_coeffs
            ],
        }
        _emit(args, payload, rendering)
    else:
        rendering = power_sum_closed_form(n).render()
        payload = {
            "mode": "closed_form",
            "n": n,
            "format": "expanded",
            "variable": "m",
            "polynomial": rendering,
        }
        _emit(args, payload, rendering)
    return 0


# ---------------------------------------------------------------------------
# sum


def _cmd_sum(args: argparse.Namespace) -> int:
    try:
        f = parse_polynomial(args.expr)
    except ParseError as e:
        raise _UsageError(f"cannot parse --expr: {e}") from e
    has_lo = args.lo is not None
    has_hi = args.hi is not None
    if has_lo != has_hi:
        raise _UsageError("--lo and --hi must be given together")
    if has_lo:
        if args.lo > args.hi:
            raise _UsageError(f"--lo {args.lo} exceeds --hi {args.hi}")
        value = sum_range(f, args.lo, args.hi)
        text = format_rational(value)
        payload = {
            "mode": "value",
            "expr": args.expr,
            "lo": args.lo,
            "hi": args.hi,
            "value": text,
        }
        _emit(args, payload, text)
    else:
        closed = sum_polynomial(f)
        rendering = closed.poly.render()
        payload = {
            "mode": "closed_form",
            "expr": args.expr,
            "variable": "m",
            "polynomial": rendering,
            "source_degree": closed.source_degree,
        }
        _emit(args, payload, rendering)
    return 0


# ---------------------------------------------------------------------------
# verify


def _suite_identities(max_n: int) -> tuple[int, int, list[dict]]:
    failures = []
    for n in range(1, max_n + 1):
        expected = factorial(n) * (-1 if n % 2 else 1)
        got = alternating_binomial_power_sum(n)
        if got != expected:
            failures.append(
                {"check": "alternating-identity", "n": n, "expected": str(expected), "got": str(got)}
            )
    return max_n - len(failures), max_n, failures


def _suite_oracle(max_n: int, max_m: int) -> tuple[int, int, list[dict]]:
    failures = []
    total = max_n * max_m
    for n in range(1, max_n + 1):
        literal = 0
        for m in range(1, max_m + 1):
            literal += m**n
            got = power_sum_value(n, m)
            if got != literal:
                failures.append(
                    {
                        "check": "power-sum-oracle",
                        "n": n,
                        "m": m,
                        "expected": str(literal),
                        "got": str(got),
                    }
                )
    return total - len(failures), total, failures


def _suite_divisibility(max_n: int) -> tuple[int, int, list[dict]]:
    failures = []
    modulus = Polynomial((0, 1, 1))  # m^2 + m
    for n in range(1, max_n + 1):
        closed = power_sum_closed_form(n)
        _, remainder = closed.divide_exact(modulus)
        if remainder:
            failures.append(
                {
                    "check": "divisible-by-m(m+1)",
                    "n": n,
                    "expected": "0",
                    "got": remainder.render(),
                }
            )
        if closed.coefficient(0) != 0:
            failures.append(
                {
                    "check": "zero-constant-term",
                    "n": n,
                    "expected": "0",
                    "got": format_rational(closed.coefficient(0)),
                }
            )
    return 2 * max_n - len(failures), 2 * max_n, failures


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise _UsageError(f"--max-n must be >= 1 (got {args.max_n})")
    if args.max_m < 1:
        raise _UsageError(f"--max-m must be >= 1 (got {args.max_m})")
    selected = ["identities", "oracle", "divisibility"] if args.suite == "all" else [args.suite]
    results = []
    for name in selected:
        if name == "identities":
            passed, total, failures = _suite_identities(args.max_n)
        elif name == "oracle":
            passed, total, failures = _suite_oracle(args.max_n, args.max_m)
        else:
            passed, total, failures = _suite_divisibility(args.max_n)
        # counts cover every check; the report keeps the smallest counterexamples
        results.append({"name": name, "passed": passed, "total": total, "failures": failures[:3]})
    ok = all(r["passed"] == r["total"] for r in results)
    payload = {"mode": "verify", "suites": results, "ok": ok}
    lines = []
    for r in results:
        lines.append(f"{r['name']}: {r['passed']}/{r['total']} passed")
        for f in r["failures"]:
            where = f"n={f['n']}" + (f", m={f['m']}" if "m" in f else "")
            lines.append(
                f"  FAIL {f['check']} at {where}: expected {f['expected']}, got {f['got']}"
            )
    lines.append("all checks passed" if ok else "verification FAILED")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# bench


def _time_best_ns(fn, reps: int):
    """Best-of-reps wall time; returns (nanos, value) and checks the value
    is identical across repetitions."""
    best = None
    value = None
    for _ in range(reps):
        start = time.perf_counter_ns()
        result = fn()
        elapsed = time.perf_counter_ns() - start
        if best is None or elapsed < best:
            best = elapsed
        if value is None:
            value = result
        elif result != value:
            raise ArithmeticError("non-deterministic result across repetitions")
    return best, value


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise _UsageError(f"--n must be >= 1 (got {args.n})")
    if args.reps < 1:
        raise _UsageError(f"--reps must be >= 1 (got {args.reps})")
    try:
        m_values = [int(part) for part in args.m.split(",") if part != ""]
    except ValueError as e:
        raise _UsageError(f"--m must be a comma-separated list of integers: {e}") from e
    if not m_values or any(m < 1 for m in m_values):
        raise _UsageError("--m values must be integers >= 1")

    n = args.n
    monomial = Polynomial.monomial(1, n)
    power_sum_closed_form(n)  # build outside the timed region
    rows = []
    for m in m_values:
        closed_ns, closed_value = _time_best_ns(lambda: power_sum_value(n, m), args.reps)
        brute_ns, brute_value = _time_best_ns(lambda: brute_force_sum(monomial, m), args.reps)
        if closed_value != brute_value:
            print(
                f"error: method mismatch at n={n}, m={m}: "
                f"closed_form={closed_value}, brute_force={format_rational(brute_value)}",
                file=sys.stderr,
            )
            return 1
        rows.append(
            {
                "m": m,
                "closed_ns": closed_ns,
                "brute_ns": brute_ns,
                "value": str(closed_value),
            }
        )

    if args.csv:
        out = sys.stdout if args.csv == "-" else open(args.csv, "w", newline="")
        try:
            writer = csv.writer(out)
            writer.writerow(["n", "m", "method", "nanos", "value"])
            for row in rows:
                writer.writerow([n, row["m"], "closed_form", row["closed_ns"], row["value"]])
                writer.writerow([n, row["m"], "brute_force", row["brute_ns"], row["value"]])
        finally:
            if out is not sys.stdout:
                out.close()

    payload = {
        "mode": "bench",
        "n": n,
        "reps": args.reps,
        "rows": [
            {"m": r["m"], "method": method, "nanos": r[ns_key], "value": r["value"]}
            for r in rows
            for method, ns_key in (("closed_form", "closed_ns"), ("brute_force", "brute_ns"))
        ],
        "ok": True,
    }
    header = f"{'m':>12} {'closed_form_ns':>16} {'brute_force_ns':>16}  equal"
    lines = [header]
    for r in rows:
        lines.append(f"{r['m']:>12} {r['closed_ns']:>16} {r['brute_ns']:>16}  yes")
    _emit(args, payload, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# parser wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polysum",
        description="Exact closed-form sums of polynomial values over integer ranges.",
    )
    parser.add_argument("--json", action="store_true", help="emit structured JSON output")
    # subcommands accept --json too; SUPPRESS keeps a pre-subcommand --json
    # from being overwritten by the subparser default
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="emit structured JSON output",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_closed = sub.add_parser(
        "closed-form", parents=[common],
        help="closed form of the power sum 1^n + 2^n + ... + m^n",
    )
    p_closed.add_argument("--n", type=int, required=True, help="the exponent (n >= 1)")
    p_closed.add_argument(
        "--factored", action="store_true",
        help="factored form pulling out m*(m+1) (requires n >= 3)",
    )
    p_closed.set_defaults(func=_cmd_closed_form)

    p_sum = sub.add_parser(
        "sum", parents=[common],
        help="sum a polynomial expression over an integer range, or symbolically",
    )
    p_sum.add_argument("--expr", required=True, help='polynomial expression, e.g. "x^3 - x"')
    p_sum.add_argument("--lo", type=int, help="lower bound (inclusive)")
    p_sum.add_argument("--hi", type=int, help="upper bound (inclusive)")
    p_sum.set_defaults(func=_cmd_sum)

    p_verify = sub.add_parser(
        "verify", parents=[common],
        help="run exactness and divisibility check suites",
    )
    p_verify.add_argument(
        "--suite", required=True,
        choices=["identities", "oracle", "divisibility", "all"],
    )
    p_verify.add_argument("--max-n", type=int, required=True, help="largest exponent checked")
    p_verify.add_argument("--max-m", type=int, default=100, help="largest m for the oracle suite")
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser(
        "bench", parents=[common],
        help="time closed-form evaluation against literal summation",
    )
    p_bench.add_argument("--n", type=int, required=True, help="the exponent (n >= 1)")
    p_bench.add_argument("--m", required=True, help="comma-separated m values, e.g. 100,10000")
    p_bench.add_argument("--reps", type=int, default=3, help="repetitions per timing (best-of)")
    p_bench.add_argument("--csv", help="also write CSV rows to this path ('-' for stdout)")
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        code = e.code
        return code if isinstance(code, int) else 0
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
