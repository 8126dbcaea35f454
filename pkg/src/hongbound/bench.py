"""Seeded random polynomials and the linear-vs-quadratic timing harness."""
from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, TextIO

import numpy as np

from .linear import hong_linear
from .poly import BoundReport, Polynomial, hong_naive, validate
from .variants import hong_buggy, hong_quadratic_corrected

ALGORITHMS: dict[str, Callable[[Polynomial], BoundReport]] = {
    "naive": hong_naive,
    "buggy": hong_buggy,
    "quadratic": hong_quadratic_corrected,
    "linear": hong_linear,
}

HEADER = ["degree", "algorithm", "reps", "mean_seconds", "total_comparisons"]

_MASK = (1 << 64) - 1
_MUL = 6364136223846793005
_INC = 1442695040888963407


class Lcg64:
    """64-bit LCG (Knuth's MMIX constants); uniforms come from the top 53 bits."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def step(self) -> int:
        self.state = (self.state * _MUL + _INC) & _MASK
        return self.state

    def uniform(self) -> float:
        return (self.step() >> 11) * (1.0 / (1 << 53))

    def randint(self, lo: int, hi: int) -> int:
        """Integer in ``[lo, hi]``."""
        return lo + int(self.uniform() * (hi - lo + 1))


def random_polynomial(degree: int, seed: int, negative_fraction: float = 0.4,
                      zero_fraction: float = 0.1, rng: Lcg64 | None = None) -> Polynomial:
    """Random polynomial with log-uniform magnitudes ``2**u``, ``u`` in [-20, 20].

    Each coefficient below the leading one takes one LCG step for its class
    (zero / negative / positive) and, when nonzero, one more for its
    magnitude.  The leading coefficient is always positive.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    g = rng if rng is not None else Lcg64(seed)
    c = np.empty(degree + 1)
    for i in range(degree):
        r = g.uniform()
        if r < zero_fraction:
            c[i] = 0.0
            continue
        mag = 2.0 ** (-20.0 + 40.0 * g.uniform())
        c[i] = -mag if r < zero_fraction + negative_fraction else mag
    c[degree] = 2.0 ** (-20.0 + 40.0 * g.uniform())
    return validate(c)


@dataclass(frozen=True)
class BenchConfig:
    degrees: Sequence[int]
    reps: int = 10
    seed: int = 0
    algorithms: Sequence[str] = ("linear", "naive")
    negative_fraction: float = 0.4
    zero_fraction: float = 0.1

    def __post_init__(self):
        d = list(self.degrees)
        if not d or any(x < 1 for x in d) or any(a >= b for a, b in zip(d, d[1:])):
            raise ValueError("degrees must be positive and strictly ascending")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown or not self.algorithms:
            raise ValueError(f"unknown algorithms: {sorted(unknown)}")
        if not 0 < self.negative_fraction < 1 or not 0 <= self.zero_fraction < 1:
            raise ValueError("fractions out of range")
        if self.negative_fraction + self.zero_fraction >= 1:
            raise ValueError("negative_fraction + zero_fraction must be < 1")
        if not 0 <= self.seed <= _MASK:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class BenchRow:
    degree: int
    algorithm: str
    reps: int
    mean_seconds: float
    total_comparisons: int


def _time_call(fn, p):
    # One cold call per polynomial: re-running the same input lets the branch
    # predictor learn it and flatters small degrees.
    t0 = time.perf_counter()
    fn(p)
    return time.perf_counter() - t0


def _sig9(x: float) -> float:
    return float(f"{x:.9g}")


def run_bench(config: BenchConfig, progress: Callable[[BenchRow], None] | None = None
              ) -> List[BenchRow]:
    """Time every (degree, algorithm) pair on ``reps`` fresh random polynomials.

    All algorithms at one degree see the same polynomials (seed offset by the
    degree's row index).  Each polynomial is timed once; one untimed call per
    pair warms up the kernels first.
    """
    rows = []
    for d_idx, degree in enumerate(config.degrees):
        polys = [random_polynomial(degree, config.seed + d_idx * config.reps + r,
                                   config.negative_fraction, config.zero_fraction)
                 for r in range(config.reps)]
        for name in config.algorithms:
            fn = ALGORITHMS[name]
            fn(polys[0])
            secs = 0.0
            comps = 0
            for p in polys:
                secs += _time_call(fn, p)
                comps += fn(p).comparisons
            row = BenchRow(degree, name, config.reps,
                           max(_sig9(secs / config.reps), 1e-12), comps)
            rows.append(row)
            if progress is not None:
                progress(row)
    return rows


def provenance(config: BenchConfig) -> str:
    return (f"# generator=lcg64 seed={config.seed} "
            f"neg={config.negative_fraction:g} zero={config.zero_fraction:g}")


def write_csv(rows: Iterable[BenchRow], out: TextIO, config: BenchConfig | None = None):
    if config is not None:
        out.write(provenance(config) + "\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(HEADER)
    for r in rows:
        w.writerow([r.degree, r.algorithm, r.reps, f"{r.mean_seconds:.9g}",
                    r.total_comparisons])


def read_csv(text: str | TextIO) -> List[BenchRow]:
    f = io.StringIO(text) if isinstance(text, str) else text
    lines = (ln for ln in f if not ln.startswith("#"))
    reader = csv.DictReader(lines)
    return [BenchRow(int(r["degree"]), r["algorithm"], int(r["reps"]),
                     float(r["mean_seconds"]), int(r["total_comparisons"]))
            for r in reader]


def loglog_slope(rows: Iterable[BenchRow], algorithm: str) -> float:
    """Least-squares slope of log(mean_seconds) against log(degree)."""
    pts = [(math.log(r.degree), math.log(r.mean_seconds)) for r in rows
           if r.algorithm == algorithm]
    x, y = np.array(pts).T
    return float(np.polyfit(x, y, 1)[0])
