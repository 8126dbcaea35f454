"""Time the numba kernels against the numpy/Python fallback.

Each backend runs ``hongbound bench`` in its own interpreter because the
switch (HONGBOUND_DISABLE_NUMBA) is read at import time.

    python benchmarks/compare_backends.py --degrees 250,500,1000,2000 --reps 5
"""
import argparse
import os
import subprocess
import sys

from hongbound.bench import loglog_slope, read_csv


def run(disable, args):
    env = dict(os.environ)
    env.pop("HONGBOUND_DISABLE_NUMBA", None)
    if disable:
        env["HONGBOUND_DISABLE_NUMBA"] = "1"
    cmd = [sys.executable, "-m", "hongbound", "bench", "--degrees", args.degrees,
           "--reps", str(args.reps), "--alg", args.alg, "--seed", str(args.seed)]
    out = subprocess.run(cmd, env=env, check=True, capture_output=True, text=True).stdout
    return read_csv(out)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degrees", default="250,500,1000,2000")
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--alg", default="linear,quadratic,naive")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    fast, slow = run(False, args), run(True, args)
    print(f"{'degree':>7} {'algorithm':>10} {'numba s':>12} {'fallback s':>12} {'speedup':>8}")
    for a, b in zip(fast, slow):
        assert (a.degree, a.algorithm) == (b.degree, b.algorithm)
        assert a.total_comparisons == b.total_comparisons, "backends disagree"
        print(f"{a.degree:>7} {a.algorithm:>10} {a.mean_seconds:>12.3e} "
              f"{b.mean_seconds:>12.3e} {b.mean_seconds / a.mean_seconds:>8.1f}")
    print()
    for alg in dict.fromkeys(r.algorithm for r in fast):
        print(f"log-log slope {alg:>10}: numba {loglog_slope(fast, alg):.2f}  "
              f"fallback {loglog_slope(slow, alg):.2f}")


if __name__ == "__main__":
    main()
