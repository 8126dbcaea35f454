"""Polynomial representation, point mapping and the quadratic reference bounds.

A polynomial ``a_0 + a_1 x + ... + a_n x^n`` is stored densely, index equal
to exponent.  Each nonzero term maps to the plane point ``(i, -lg|a_i|)``;
with this mapping ``(-a_j/a_i)**(1/(i-j))`` is ``2**slope(p_j, p_i)``, so
Hong's bound can be evaluated either with powers and roots or with slopes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ._accel import USE_NUMBA, njit

POSITIVE = 1
NEGATIVE = -1


class PolynomialError(ValueError):
    """Invalid coefficient sequence; ``index`` names the offending coefficient."""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class EmptyInput(PolynomialError):
    pass


class NonPositiveLeadingCoefficient(PolynomialError):
    pass


class NonFiniteCoefficient(PolynomialError):
    pass


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Dense real polynomial with a positive leading coefficient.

    Build instances through :func:`validate`; the constructor does not check.
    """

    coeffs: np.ndarray

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        return f"Polynomial({self.coeffs.tolist()!r})"

    def scaled(self, c: float) -> "Polynomial":
        return validate(self.coeffs * c)


@dataclass(frozen=True)
class TermPoint:
    exponent: int
    height: float
    sign: int  # POSITIVE or NEGATIVE

    @property
    def positive(self) -> bool:
        return self.sign == POSITIVE


@dataclass(frozen=True)
class BoundReport:
    """Result of a bound computation.

    ``sigma`` is the maximal tangent slope in log2 units, so that
    ``bound == 2 ** (1 + sigma)``; it is ``None`` when the polynomial has no
    negative coefficient, in which case ``bound`` is 0.  ``witness`` is the
    pair ``(j, i)`` of exponents (negative, positive) attaining the bound.
    """

    bound: float
    sigma: Optional[float]
    witness: Optional[Tuple[int, int]]
    comparisons: int = 0


NO_NEGATIVE = BoundReport(0.0, None, None, 0)


def validate(coeffs: Sequence[float]) -> Polynomial:
    """Check ``coeffs`` (ascending exponents) and wrap them in a :class:`Polynomial`."""
    arr = np.array(coeffs, dtype=np.float64).ravel()
    if arr.size == 0:
        raise EmptyInput("polynomial has no coefficients")
    bad = np.flatnonzero(~np.isfinite(arr))
    if bad.size:
        i = int(bad[0])
        raise NonFiniteCoefficient(f"coefficient a_{i} = {float(arr[i])!r} is not finite", i)
    n = arr.size - 1
    if not arr[n] > 0:
        raise NonPositiveLeadingCoefficient(
            f"leading coefficient a_{n} = {float(arr[n])!r} must be positive", n)
    arr.setflags(write=False)
    return Polynomial(arr)


def point_arrays(p: Polynomial) -> Tuple[np.ndarray, np.ndarray]:
    """Heights ``-lg|a_i|`` and signs (+1, -1, 0) indexed by exponent.

    Heights at zero coefficients are set to 0 and must not be read.
    """
    c = p.coeffs
    signs = np.sign(c).astype(np.int8)
    mag = np.abs(c)
    heights = np.zeros(c.size)
    nz = signs != 0
    heights[nz] = -np.log2(mag[nz])
    return heights, signs


def to_points(p: Polynomial) -> list[TermPoint]:
    heights, signs = point_arrays(p)
    return [TermPoint(int(i), float(heights[i]), int(signs[i]))
            for i in np.flatnonzero(signs)]


def has_negative(p: Polynomial) -> bool:
    return bool((p.coeffs < 0).any())


# -- quadratic oracles -------------------------------------------------------

@njit
def _naive_value_kernel(c):
    n = c.shape[0] - 1
    best = -1.0
    bj = -1
    bi = -1
    count = 0
    for j in range(n):
        if c[j] < 0.0:
            lo = np.inf
            li = -1
            for i in range(j + 1, n + 1):
                if c[i] > 0.0:
                    v = (-c[j] / c[i]) ** (1.0 / (i - j))
                    count += 1
                    if v < lo:
                        lo = v
                        li = i
            if lo > best:
                best = lo
                bj = j
                bi = li
    return best, bj, bi, count


def _row_blocks(neg, pos, budget=1 << 20):
    rows = max(1, budget // max(pos.size, 1))
    for k in range(0, neg.size, rows):
        j = neg[k:k + rows, None]
        gap = pos[None, :] - j
        yield j, gap, gap > 0


def _pick(vals, valid, j, pos, state):
    vals = np.where(valid, vals, np.inf)
    k = np.argmin(vals, axis=1)
    row_min = vals[np.arange(vals.shape[0]), k]
    r = int(np.argmax(row_min))  # first maximum keeps the smallest j
    if row_min[r] > state[0]:
        state[:3] = float(row_min[r]), int(j[r, 0]), int(pos[k[r]])
    state[3] += int(valid.sum())


def _naive_value_numpy(c):
    n = c.shape[0] - 1
    pos = np.flatnonzero(c > 0)
    state = [-1.0, -1, -1, 0]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for j, gap, valid in _row_blocks(np.flatnonzero(c[:n] < 0), pos):
            vals = (-c[j] / c[pos][None, :]) ** (1.0 / np.where(valid, gap, 1))
            _pick(vals, valid, j, pos, state)
    return tuple(state)


@njit
def _naive_log_kernel(heights, signs):
    n = signs.shape[0] - 1
    best = -np.inf
    bj = -1
    bi = -1
    count = 0
    for j in range(n):
        if signs[j] < 0:
            lo = np.inf
            li = -1
            for i in range(j + 1, n + 1):
                if signs[i] > 0:
                    s = (heights[i] - heights[j]) / (i - j)
                    count += 1
                    if s < lo:
                        lo = s
                        li = i
            if lo > best:
                best = lo
                bj = j
                bi = li
    return best, bj, bi, count


def _naive_log_numpy(heights, signs):
    n = signs.shape[0] - 1
    pos = np.flatnonzero(signs > 0)
    state = [-np.inf, -1, -1, 0]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for j, gap, valid in _row_blocks(np.flatnonzero(signs[:n] < 0), pos):
            vals = (heights[pos][None, :] - heights[j]) / np.where(valid, gap, 1)
            _pick(vals, valid, j, pos, state)
    return tuple(state)


naive_value_kernel = _naive_value_kernel if USE_NUMBA else _naive_value_numpy
naive_log_kernel = _naive_log_kernel if USE_NUMBA else _naive_log_numpy


def hong_naive(p: Polynomial) -> BoundReport:
    """Hong's bound straight from its max-min definition, with powers and roots.

    Ties go to the smallest ``j`` and then the smallest ``i``.
    """
    best, j, i, count = naive_value_kernel(p.coeffs)
    if j < 0:
        return NO_NEGATIVE
    return BoundReport(float(2.0 * best), math.log2(best), (int(j), int(i)), int(count))


def hong_naive_log(p: Polynomial) -> BoundReport:
    """Same max-min as :func:`hong_naive`, taken over slopes between term points."""
    heights, signs = point_arrays(p)
    sigma, j, i, count = naive_log_kernel(heights, signs)
    if j < 0:
        return NO_NEGATIVE
    return BoundReport(float(2.0 ** (1.0 + sigma)), float(sigma), (int(j), int(i)), int(count))
