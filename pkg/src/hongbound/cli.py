"""Command line: ``hongbound {bound,check,trace,bench}``.

Exit codes: 0 success, 1 differential-check failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys

from .bench import ALGORITHMS, BenchConfig, run_bench, write_csv
from .check import differential_check
from .linear import TraceEnd, trace_linear
from .poly import BoundReport, PolynomialError, validate


class ParseError(ValueError):
    pass


def parse_polynomial(text: str):
    """Parse ``dense: c0 c1 ... cn`` or ``sparse: e1:c1 e2:c2 ...``."""
    kind, sep, body = text.partition(":")
    kind = kind.strip().lower()
    if not sep or kind not in ("dense", "sparse"):
        raise ParseError(f"expected 'dense:' or 'sparse:' prefix in {text!r}")
    tokens = body.split()
    if kind == "dense":
        coeffs = [_real(tok) for tok in tokens]
    else:
        terms = {}
        for tok in tokens:
            e, colon, c = tok.partition(":")
            if not colon:
                raise ParseError(f"bad sparse term {tok!r}, expected exponent:coefficient")
            try:
                exp = int(e)
            except ValueError:
                raise ParseError(f"bad exponent in term {tok!r}") from None
            if exp < 0:
                raise ParseError(f"negative exponent in term {tok!r}")
            if exp in terms:
                raise ParseError(f"duplicate exponent in term {tok!r}")
            terms[exp] = _real(c, tok)
        coeffs = [0.0] * (max(terms) + 1 if terms else 0)
        for exp, c in terms.items():
            coeffs[exp] = c
    try:
        return validate(coeffs)
    except PolynomialError as e:
        raise ParseError(str(e)) from None


def _real(tok, where=None):
    try:
        return float(tok)
    except ValueError:
        raise ParseError(f"bad coefficient {where or tok!r}") from None


def fmt_float(x: float) -> str:
    """Shortest round-trip decimal, without a trailing ``.0``."""
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def format_report(r: BoundReport) -> str:
    sigma = "none" if r.sigma is None else fmt_float(r.sigma)
    witness = "none" if r.witness is None else f"{r.witness[0]},{r.witness[1]}"
    return f"H={fmt_float(r.bound)} sigma={sigma} witness={witness} comparisons={r.comparisons}"


_SIGN = {1: "+", -1: "-", 0: "0"}


def cmd_bound(args):
    p = parse_polynomial(args.polynomial)
    print(format_report(ALGORITHMS[args.alg](p)))
    return 0


def cmd_trace(args):
    p = parse_polynomial(args.polynomial)
    events = trace_linear(p)
    end = events[-1]
    assert isinstance(end, TraceEnd)
    print("V=[" + ",".join(str(v) for v in end.V) + "]")
    for e in events[:-1]:
        print(f"i={e.i} {e.action} sign={_SIGN[e.sign]} "
              f"sigma={fmt_float(e.sigma)} t={e.t_exponent}")
    print(format_report(end.report))
    return 0


def cmd_check(args):
    algs = _alg_list(args.alg)
    bad = differential_check(args.count, args.max_degree, args.seed, algs)
    if bad is None:
        print(f"ok: {args.count} random polynomials (+2 hand cases), "
              f"{','.join(algs)} agree with naive")
        return 0
    print(f"disagreement at corpus element {bad.index}: {bad.algorithm} "
          f"H={fmt_float(bad.got.bound)} naive H={fmt_float(bad.expected.bound)}")
    print("coeffs: " + " ".join(fmt_float(c) for c in bad.polynomial.coeffs))
    return 1


def cmd_bench(args):
    try:
        cfg = BenchConfig(degrees=_int_list(args.degrees), reps=args.reps, seed=args.seed,
                          algorithms=_alg_list(args.alg),
                          negative_fraction=args.neg, zero_fraction=args.zero)
    except ValueError as e:
        raise ParseError(str(e)) from None
    write_csv(run_bench(cfg), sys.stdout, cfg)
    return 0


def _int_list(s):
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"bad integer list {s!r}") from None


def _alg_list(s):
    algs = [a.strip() for a in s.split(",") if a.strip()]
    bad = [a for a in algs if a not in ALGORITHMS]
    if bad or not algs:
        raise ParseError(f"unknown algorithm {bad[0] if bad else s!r}; "
                         f"choose from {','.join(ALGORITHMS)}")
    return algs


def _u64(s):
    v = int(s, 0)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError(f"{s} is not an unsigned 64-bit integer")
    return v


def _positive(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"{s} must be >= 1")
    return v


def build_parser():
    ap = argparse.ArgumentParser(prog="hongbound",
                                 description="Hong's bound for positive polynomial roots")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="compute the bound of one polynomial")
    b.add_argument("--alg", choices=list(ALGORITHMS), default="linear")
    b.add_argument("polynomial", help="'dense: c0 c1 ... cn' or 'sparse: e:c ...'")
    b.set_defaults(func=cmd_bound)

    c = sub.add_parser("check", help="differential test against the naive oracle")
    c.add_argument("--count", type=_positive, default=1000)
    c.add_argument("--max-degree", type=_positive, default=256)
    c.add_argument("--seed", type=_u64, default=42)
    c.add_argument("--alg", default="linear,quadratic",
                   help="comma-separated algorithms checked against naive")
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("trace", help="print V and the sweep states")
    t.add_argument("polynomial")
    t.set_defaults(func=cmd_trace)

    h = sub.add_parser("bench", help="timing CSV on random polynomials")
    h.add_argument("--degrees", default="100,200,500,1000,2000")
    h.add_argument("--reps", type=_positive, default=10)
    h.add_argument("--alg", default="linear,naive")
    h.add_argument("--seed", type=_u64, default=0)
    h.add_argument("--neg", type=float, default=0.4)
    h.add_argument("--zero", type=float, default=0.1)
    h.set_defaults(func=cmd_bench)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"hongbound: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
