"""Differential fuzzing of the fast algorithms against the quadratic oracle."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .bench import ALGORITHMS, Lcg64, random_polynomial
from .poly import BoundReport, Polynomial, hong_naive, validate

# -1 + 4x^3 - 2x^4 + 4x^5 + 8x^8 and its alpha = -8 twin
COUNTEREXAMPLE = (-1.0, 0.0, 0.0, 4.0, -2.0, 4.0, 0.0, 0.0, 8.0)
COUNTEREXAMPLE_8 = (-8.0, 0.0, 0.0, 4.0, -2.0, 4.0, 0.0, 0.0, 8.0)

RTOL = 1e-9


@dataclass(frozen=True)
class Disagreement:
    index: int
    algorithm: str
    polynomial: Polynomial
    got: BoundReport
    expected: BoundReport


def agree(got: float, expected: float, rtol: float = RTOL) -> bool:
    return abs(got - expected) <= rtol * abs(expected)


def corpus(count: int, max_degree: int, seed: int) -> Iterator[Polynomial]:
    """The two hand counterexamples followed by ``count`` random polynomials.

    Degree, sign mix and seed of each random member come from one LCG stream;
    about a tenth of the coefficients are zero.
    """
    yield validate(COUNTEREXAMPLE)
    yield validate(COUNTEREXAMPLE_8)
    g = Lcg64(seed)
    for _ in range(count):
        degree = g.randint(1, max_degree)
        neg = 0.05 + 0.8 * g.uniform()
        yield random_polynomial(degree, 0, neg, 0.1, rng=g)


def differential_check(count: int, max_degree: int, seed: int,
                       algorithms: Sequence[str] = ("linear", "quadratic")
                       ) -> Optional[Disagreement]:
    """Return the first corpus member where an algorithm misses the oracle."""
    fns = [(a, ALGORITHMS[a]) for a in algorithms]
    for k, p in enumerate(corpus(count, max_degree, seed)):
        ref = hong_naive(p)
        for name, fn in fns:
            got = fn(p)
            if not agree(got.bound, ref.bound):
                return Disagreement(k, name, p, got, ref)
    return None
