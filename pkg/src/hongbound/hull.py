"""Persistent storage of every suffix lower hull of the positive points.

All hulls ``lhull(P_i+)`` share tails, so a single index array ``V`` holds
them: for a positive point ``p_i``, ``V[i]`` is the second point of its hull;
for a negative or zero coefficient, ``V[i]`` is the first point of the hull
of the positive points to its right.  ``V[n] == -1`` terminates every chain.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._accel import njit
from .poly import Polynomial, TermPoint, point_arrays


class EqualExponents(ValueError):
    pass


@dataclass(frozen=True)
class TangentScanResult:
    tangent_exponent: int
    slope: float
    steps: int


@dataclass(frozen=True, eq=False)
class HullStore:
    V: np.ndarray
    heights: np.ndarray
    signs: np.ndarray
    comparisons: int = 0

    @property
    def n(self) -> int:
        return len(self.V) - 1

    def point(self, i: int) -> TermPoint:
        return TermPoint(i, float(self.heights[i]), int(self.signs[i]))


def slope(a: TermPoint, b: TermPoint) -> float:
    if a.exponent == b.exponent:
        raise EqualExponents(f"both points have exponent {a.exponent}")
    return (b.height - a.height) / (b.exponent - a.exponent)


@njit
def tangent_walk(qx, qy, heights, V, start):
    """Walk the chain from ``start`` to the lower tangent point seen from ``(qx, qy)``.

    Advances while the slope strictly decreases, so collinear ties keep the
    left-most touching point.  Returns ``(point, slope, comparisons)``.
    """
    c = start
    sc = (heights[c] - qy) / (c - qx)
    steps = 0
    while True:
        d = V[c]
        if d < 0:
            break
        sd = (heights[d] - qy) / (d - qx)
        steps += 1
        if sd < sc:
            c = d
            sc = sd
        else:
            break
    return c, sc, steps


@njit
def build_hulls_kernel(heights, signs):
    n = signs.shape[0] - 1
    V = np.empty(n + 1, dtype=np.int64)
    V[n] = -1
    k = n
    total = 0
    for i in range(n - 1, -1, -1):
        if signs[i] > 0:
            t, _, steps = tangent_walk(i, heights[i], heights, V, k)
            total += steps
            V[i] = t
            k = i
        else:
            V[i] = k
    return V, total


def tangent_scan(q: TermPoint, store: HullStore, start_exponent: int) -> TangentScanResult:
    if q.exponent >= start_exponent:
        raise ValueError("query point must lie left of the scanned chain")
    t, s, steps = tangent_walk(q.exponent, q.height, store.heights, store.V,
                               start_exponent)
    return TangentScanResult(int(t), float(s), int(steps))


def build_hulls(p: Polynomial) -> HullStore:
    """First pass: right-to-left construction of every suffix lower hull."""
    heights, signs = point_arrays(p)
    assert signs[-1] > 0, "leading coefficient must be positive"
    V, total = build_hulls_kernel(heights, signs)
    V.setflags(write=False)
    return HullStore(V, heights, signs, int(total))


def hull_chain(store: HullStore, i: int) -> list[int]:
    """Exponents of ``lhull(P_i+)``, left to right."""
    V = store.V
    out = [i] if store.signs[i] > 0 else []
    c = int(V[i])
    while c >= 0:
        out.append(c)
        c = int(V[c])
    return out
