"""Command-line front end: ``lagint eval | verify | table | version``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 numerical inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .engines import QuadratureConfig, closed_form, quadrature_integral, residue_exact
from .errors import NumericalInconsistencyError, ParameterError
from .report import SCHEMA_VERSION, check_line, jsonable, render_text, report_to_dict
from .suite import DEFAULT_GRID, SuiteConfig, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

_EXACT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_RANGE_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:\.\.\s*([+-]?\d+)\s*)?$")
# options whose values may legitimately start with '-'
_VALUE_OPTIONS = {"--n", "--k", "--s", "--t", "--k-range", "--n-max", "--grid", "--seed", "--tol"}


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    m = _RANGE_RE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_real(text: str) -> float:
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a real number or p/q, got {text!r}") from None


def parse_exact(text: str) -> Fraction:
    if not _EXACT_RE.match(text.strip()):
        raise UsageError(f"the residue method needs exact p/q arguments, got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise UsageError(f"zero denominator in {text!r}") from None


def parse_grid(text: str) -> tuple[tuple[float, float], ...]:
    text = text.strip()
    if not text:
        return ()
    pts = []
    for item in text.split(","):
        try:
            s, t = item.split(":")
        except ValueError:
            raise argparse.ArgumentTypeError(f"grid point must be s:t, got {item!r}") from None
        pts.append((parse_real(s), parse_real(t)))
    return tuple(pts)


def _join_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--k-range -8..8`` into ``--k-range=-8..8`` so argparse keeps the value."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lagint", description="Laguerre-exponential integral evaluator and identity checker.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate I_{n,k}(s,t)")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--s", required=True)
    e.add_argument("--t", required=True)
    e.add_argument("--method", choices=("closed", "quadrature", "residue"), default="closed")
    e.add_argument("--alpha", type=int, choices=(0, 1), default=0)
    e.add_argument("--json", action="store_true", help="print a JSON record")

    v = sub.add_parser("verify", help="run the identity suite")
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("--k-range", type=parse_range, default=(-8, 8))
    v.add_argument("--grid", type=parse_grid, default=DEFAULT_GRID, help="comma-separated s:t points")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--tol", type=float, default=1e-10, help="relative tolerance; absolute is tol/100")
    v.add_argument("--json", action="store_true", help="line-delimited check records, then the report")
    v.add_argument("--fail-fast", action="store_true")

    t = sub.add_parser("table", help="tabulate the closed form")
    t.add_argument("--n", type=parse_range, required=True)
    t.add_argument("--k", type=parse_range, required=True)
    t.add_argument("--s", type=parse_real, required=True)
    t.add_argument("--t", type=parse_real, required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")

    sub.add_parser("version", help="print the version")
    return p


def fmt17(x: float) -> str:
    return format(x, "#.17g")


def cmd_eval(args, out) -> int:
    if args.method == "closed" and args.alpha != 0:
        raise UsageError("the closed form exists only for alpha=0")
    record = {"schema_version": SCHEMA_VERSION, "n": args.n, "k": args.k, "alpha": args.alpha, "method": args.method}
    if args.method == "residue":
        s, t = parse_exact(args.s), parse_exact(args.t)
        value = residue_exact(args.n, args.k, s, t, args.alpha)
        text = str(value)
        record.update(s=str(s), t=str(t), value=str(value))
    else:
        try:
            s, t = parse_real(args.s), parse_real(args.t)
        except argparse.ArgumentTypeError as exc:
            raise UsageError(str(exc)) from None
        record.update(s=s, t=t)
        if args.method == "closed":
            value = closed_form(args.n, args.k, s, t)
            text = repr(value)
            record["value"] = value
        else:
            q = quadrature_integral(args.n, args.k, s, t, args.alpha, QuadratureConfig())
            text = repr(q.real)
            record.update(value=q.real, re=q.real, im=q.imag)
    print(json.dumps(record) if args.json else text, file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    k_min, k_max = args.k_range
    if args.tol < 0:
        raise UsageError("--tol must be non-negative")
    cfg = SuiteConfig(
        n_max=args.n_max, k_min=k_min, k_max=k_max, grid=args.grid, seed=args.seed,
        rel_tol=args.tol, abs_tol=args.tol / 100, fail_fast=args.fail_fast,
    )
    on_check = (lambda c: print(check_line(c), file=out, flush=False)) if args.json else None
    report = run_suite(cfg, on_check=on_check)
    if args.json:
        print(json.dumps({"record": "report", **report_to_dict(report)}, allow_nan=False), file=out)
    else:
        print(render_text(report), file=out)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_table(args, out) -> int:
    rows = []
    for n in range(args.n[0], args.n[1] + 1):
        for k in range(args.k[0], args.k[1] + 1):
            rows.append((n, k, args.s, args.t, closed_form(n, k, args.s, args.t)))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "s", "t", "value"])
        for n, k, s, t, v in rows:
            w.writerow([n, k, repr(s), repr(t), fmt17(v)])
        out.write(buf.getvalue())
    else:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "rows": [{"n": n, "k": k, "s": s, "t": t, "value": jsonable(v)} for n, k, s, t, v in rows],
        }
        print(json.dumps(doc), file=out)
    return EXIT_OK


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "version":
            print(f"lagint {__version__}", file=out)
            return EXIT_OK
        handler = {"eval": cmd_eval, "verify": cmd_verify, "table": cmd_table}[args.command]
        return handler(args, out)
    except (UsageError, ParameterError) as exc:
        print(f"lagint: error: {exc}", file=err)
        return EXIT_USAGE
    except NumericalInconsistencyError as exc:
        print(f"lagint: numerical inconsistency: {exc}", file=err)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
