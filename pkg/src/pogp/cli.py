"""Command-line front end: ``pogp {count,series,expand,equiv,mnd,verify}``.

Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch or
counterexample, 3 enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import gf, oracle, verify
from .pattern import PatternError, expand, parse_pattern

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


class Report:
    """What a command prints: a JSON payload plus a table for table/csv."""

    def __init__(self, payload: dict, columns: list[str], rows: list[list], exit_code: int = EXIT_OK):
        self.payload = payload
        self.columns = columns
        self.rows = [[str(v) for v in row] for row in rows]
        self.exit_code = exit_code

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return dumps(self.payload)
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.columns)
            writer.writerows(self.rows)
            return buf.getvalue().rstrip("\n")
        widths = [max(len(c), *(len(r[i]) for r in self.rows)) if self.rows else len(c) for i, c in enumerate(self.columns)]
        lines = [self.columns] + self.rows
        return "\n".join("  ".join(v.rjust(w) for v, w in zip(line, widths)) for line in lines)


def dumps(payload) -> str:
    """Canonical JSON: sorted keys, compact separators."""
    return json.dumps(_stringify(payload), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _stringify(obj):
    # counts travel as decimal strings so no consumer loses precision
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj if isinstance(obj, str) else str(obj)


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _pattern(args, text: str | None = None):
    return parse_pattern(text if text is not None else args.pattern, args.order, args.relations or ())


def _int_cells(values) -> list:
    return [int(v) if getattr(v, "denominator", 1) == 1 else v for v in values]


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------

def cmd_count(args) -> Report:
    p = _pattern(args)
    if args.quasi:
        count = oracle.count_quasi_avoiders(p, args.k, args.n, args.cap)
    else:
        count = oracle.count_avoiders(p, args.k, args.n, args.cap)
    what = "quasi_avoiders" if args.quasi else "avoiders"
    payload = {"pattern": str(p), "k": args.k, "n": args.n, "kind": what, "count": count}
    return Report(payload, ["pattern", "k", "n", what], [[p, args.k, args.n, count]])


def cmd_series(args) -> Report:
    p = _pattern(args)
    engine = args.engine
    if engine == "gf":
        provide = gf.resolve_provider(p)
        if provide is None:
            _note(f"note: no formula covers {p}; falling back to the oracle")
            engine = "oracle"
        else:
            coeffs = provide(args.k, args.N).as_ints()
    if engine == "oracle":
        coeffs = list(oracle.avoider_series(p, args.k, args.N, args.cap).counts)
    payload = {"pattern": str(p), "k": args.k, "N": args.N, "engine": engine, "coefficients": coeffs}
    return Report(payload, ["n", "coefficient"], [[n, c] for n, c in enumerate(coeffs)])


def cmd_expand(args) -> Report:
    p = _pattern(args)
    out = sorted(map(str, expand(p)))
    payload = {"pattern": str(p), "size": len(out), "patterns": out}
    return Report(payload, ["pattern"], [[q] for q in out])


def cmd_equiv(args) -> Report:
    p = _pattern(args)
    q = _pattern(args, args.other)
    v = oracle.equiv_check(p, q, args.K, args.N, args.cap)
    payload = {
        "p": str(p),
        "q": str(q),
        "K": args.K,
        "N": args.N,
        "equivalent": v.equivalent,
        "per_k": v.per_k,
        "counterexample": None,
    }
    rows = [[k, "equal" if ok else "differ"] for k, ok in v.per_k.items()]
    if v.counterexample:
        k, n, a, b = v.counterexample
        payload["counterexample"] = {"k": k, "n": n, "p_count": a, "q_count": b}
        _note(f"counterexample: k={k} n={n}: {p} has {a} avoiders, {q} has {b}")
    return Report(payload, ["k", "verdict"], rows, EXIT_OK if v.equivalent else EXIT_MISMATCH)


def cmd_mnd(args) -> Report:
    p = _pattern(args)
    if args.gf:
        provide = gf.resolve_provider(p) if p.hyphen_free else None
        if provide is None:
            raise UsageError(f"no formula covers {p}; drop --gf to use the oracle")
        Y = gf.mnd_gf(provide(args.k, args.n), args.k, S=args.n)
        hist = Y.histogram(args.n)
    else:
        hist = oracle.mnd_distribution(p, args.k, args.n, args.cap).histogram
    payload = {"pattern": str(p), "k": args.k, "n": args.n, "engine": "gf" if args.gf else "oracle", "histogram": hist}
    return Report(payload, ["s", "count"], [[s, c] for s, c in sorted(hist.items())])


def cmd_verify(args) -> Report:
    budget = verify.Budget(args.K, args.N, args.oracle_K, args.oracle_N, args.cap)
    results = verify.run_all(budget, args.only)
    rows = [[r.name, r.comparisons, "pass" if r.passed else "FAIL", r.mismatch or ""] for r in results]
    failed = [r for r in results if not r.passed]
    payload = {
        "budget": {"K": budget.K, "N": budget.N, "oracle_K": budget.oracle_K, "oracle_N": budget.oracle_N},
        "checks": [
            {
                "name": r.name,
                "comparisons": r.comparisons,
                "passed": r.passed,
                "mismatch": None
                if r.passed
                else {
                    "formula": r.mismatch.formula,
                    "k": r.mismatch.k,
                    "n": r.mismatch.n,
                    "expected": r.mismatch.expected,
                    "got": r.mismatch.got,
                },
            }
            for r in results
        ],
    }
    if failed:
        _note(f"first failure: {failed[0].mismatch}")
    return Report(payload, ["check", "comparisons", "status", "detail"], rows, EXIT_MISMATCH if failed else EXIT_OK)


# --------------------------------------------------------------------------
# Argument parsing
# --------------------------------------------------------------------------

def _default_cap() -> int:
    env = os.environ.get("POGP_ENUM_CAP")
    if env is None:
        return oracle.DEFAULT_CAP
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"POGP_ENUM_CAP must be an integer, got {env!r}") from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--cap", type=_positive, default=None, help="enumeration cap in word-steps")

    pat = _Parser(add_help=False)
    pat.add_argument("-p", "--pattern", required=True)
    pat.add_argument("--order", choices=("incomparable", "shuffle", "explicit"), default="incomparable")
    pat.add_argument("--relations", default=None, help="cross-class pairs for --order explicit, e.g. \"1'<1,1''<1\"")

    parser = _Parser(prog="pogp", description="Partially ordered generalized patterns in k-ary words.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", parents=[common, pat], help="count avoiders (or quasi-avoiders) of length n")
    c.add_argument("-k", type=_nonneg, required=True)
    c.add_argument("-n", type=_nonneg, required=True)
    c.add_argument("--quasi", action="store_true")
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("series", parents=[common, pat], help="avoider counts for n = 0..N")
    s.add_argument("-k", type=_nonneg, required=True)
    s.add_argument("-N", type=_nonneg, default=gf.DEFAULT_ORDER)
    s.add_argument("--engine", choices=("gf", "oracle"), default="gf")
    s.set_defaults(func=cmd_series)

    e = sub.add_parser("expand", parents=[common, pat], help="list the ordinary patterns a POGP stands for")
    e.set_defaults(func=cmd_expand)

    q = sub.add_parser("equiv", parents=[common, pat], help="compare avoider counts of two patterns")
    q.add_argument("-q", "--other", required=True)
    q.add_argument("-K", type=_positive, default=3)
    q.add_argument("-N", type=_nonneg, default=6)
    q.set_defaults(func=cmd_equiv)

    m = sub.add_parser("mnd", parents=[common, pat], help="distribution of max non-overlapping occurrences")
    m.add_argument("-k", type=_nonneg, required=True)
    m.add_argument("-n", type=_nonneg, required=True)
    m.add_argument("--gf", action="store_true", help="use the generating function instead of enumeration")
    m.set_defaults(func=cmd_mnd)

    v = sub.add_parser("verify", parents=[common], help="run the formula-vs-oracle suite")
    v.add_argument("--only", action="append", choices=sorted(verify.CHECKS))
    v.add_argument("-K", type=_positive, default=3)
    v.add_argument("-N", type=_nonneg, default=8)
    v.add_argument("--oracle-K", dest="oracle_K", type=_positive, default=3)
    v.add_argument("--oracle-N", dest="oracle_N", type=_nonneg, default=8)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.cap is None:
            args.cap = _default_cap()
        report = args.func(args)
    except UsageError as exc:
        _note(f"pogp: error: {exc}")
        return EXIT_USAGE
    except (PatternError, ValueError, KeyError) as exc:
        _note(f"pogp: error: {exc}")
        return EXIT_USAGE
    except oracle.BudgetExceeded as exc:
        _note(f"pogp: budget exceeded: {exc}")
        return EXIT_BUDGET
    print(report.render(args.format))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
