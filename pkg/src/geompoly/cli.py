"""Command-line front end: tables, polynomials, series evaluation, verification.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from fractions import Fraction

from . import series, verify
from ._numeric import DomainError
from .combinatorics import bernoulli, lah, stirling1, stirling2
from .polynomials import coefficients_str, exponential_poly, geometric_poly, poly_eval

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

_TRIANGLES = {"stirling1": stirling1, "stirling2": stirling2, "lah": lah}


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    """Parse "p/q", an integer, or a decimal literal exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "text"), default="json")

    parser = argparse.ArgumentParser(prog="geompoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[fmt], help="Stirling, Lah or Bernoulli tables")
    t.add_argument("kind", choices=("stirling1", "stirling2", "lah", "bernoulli"))
    t.add_argument("--max-n", type=nonneg_int, required=True)

    p = sub.add_parser("poly", parents=[fmt], help="exponential or geometric polynomial")
    p.add_argument("kind", choices=("exp", "geom"))
    p.add_argument("--n", type=nonneg_int, required=True)
    p.add_argument("--r", type=rational, default=Fraction(1))
    p.add_argument("--eval", type=rational, dest="at")

    s = sub.add_parser("series", help="closed-form series evaluation")
    ssub = s.add_subparsers(dest="series_command", required=True)
    e = ssub.add_parser("eval", parents=[fmt])
    e.add_argument("--identity", required=True, choices=[i.value for i in series.Identity])
    for name in ("r", "p", "x", "z", "a", "sigma", "n"):
        e.add_argument(f"--{name}", type=rational)
    e.add_argument("--mode", choices=("closed", "direct", "both"), default="both")
    e.add_argument("--tol", type=positive_float, default=series.DIRECT_TOL)

    v = sub.add_parser("verify", parents=[fmt], help="run verification suites")
    v.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    v.add_argument("--tol", type=positive_float, default=1e-12)
    return parser


def _table(args):
    n = args.max_n
    if args.kind == "bernoulli":
        rows = [[str(bernoulli(i))] for i in range(n + 1)]
        header = ["B_n"]
    else:
        f = _TRIANGLES[args.kind]
        rows = [[str(f(i, k)) for k in range(i + 1)] for i in range(n + 1)]
        header = [f"k={k}" for k in range(n + 1)]
    if args.format == "json":
        return {"table": args.kind, "max_n": n, "rows": [r[0] for r in rows]
                if args.kind == "bernoulli" else rows}
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n"] + header)
        for i, row in enumerate(rows):
            w.writerow([i] + row)
        return buf.getvalue()
    return "\n".join(f"{i}: " + " ".join(row) for i, row in enumerate(rows))


def _poly(args):
    poly = exponential_poly(args.n) if args.kind == "exp" else geometric_poly(args.n, args.r)
    out = {"kind": args.kind, "n": args.n, "coefficients": coefficients_str(poly)}
    if args.kind == "geom":
        out["r"] = str(args.r)
    if args.at is not None:
        out["eval"] = {"x": str(args.at), "value": str(poly_eval(poly, args.at))}
    if args.format == "json":
        return out
    text = str(poly)
    if args.at is not None:
        text += f"\nat x = {args.at}: {out['eval']['value']}"
    return text


def _series(args):
    params = {k: getattr(args, k) for k in ("r", "p", "x", "z", "a", "sigma", "n")
              if getattr(args, k) is not None}
    result = series.evaluate(args.identity, params, args.mode, args.tol)
    out = {"identity": args.identity, "params": {k: str(v) for k, v in params.items()}}
    for key in ("closed", "direct"):
        if key in result:
            out[key] = result[key].to_dict()
    if "abs_diff" in result:
        out["abs_diff"] = float(result["abs_diff"])
    if args.format == "json":
        return out
    lines = [f"{args.identity} {out['params']}"]
    for key in ("closed", "direct"):
        if key in out:
            d = out[key]
            lines.append(f"{key:>6}: {d['value_digits']}  (+/- {d['tol']:.2e}, "
                         f"terms {d['terms_used']}, special evals {d['special_evals']})")
    if "abs_diff" in out:
        lines.append(f"  diff: {out['abs_diff']:.3e}")
    return "\n".join(lines)


def _verify(args):
    results = verify.run_suite(args.suite, args.tol)
    ok = all(r.passed for r in results)
    if args.format == "json":
        payload = {"suite": args.suite, "passed": ok, "checks": [r.to_dict() for r in results]}
    else:
        payload = "\n".join(f"{'pass' if r.passed else 'FAIL'}  [{r.suite}] {r.name}: {r.detail}"
                            for r in results)
    return payload, ok


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    ok = True
    try:
        if args.format == "csv" and args.command != "table":
            raise UsageError("csv output is only available for tables")
        if args.command == "table":
            payload = _table(args)
        elif args.command == "poly":
            payload = _poly(args)
        elif args.command == "series":
            payload = _series(args)
        else:
            payload, ok = _verify(args)
    except UsageError as exc:
        print(f"geompoly: {exc}", file=stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"geompoly: domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    if isinstance(payload, str):
        print(payload.rstrip("\n"), file=stdout)
    else:
        print(json.dumps(payload, indent=2), file=stdout)
    return EXIT_OK if ok else EXIT_VERIFY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
