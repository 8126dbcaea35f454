"""Single-sweep right-to-left variants kept for regression and differential tests.

Both keep the current hull of positive points as a stack whose bottom is
``p_n`` and whose top is the left-most point; stack positions therefore never
shift when the front is popped.

``hong_buggy`` reproduces the flawed linear algorithm: the tangency point
starts at ``p_n``, is never lowered, and each new tangent is searched only to
its right.  ``hong_quadratic_corrected`` lowers the tangency point onto a new
positive point whenever that point falls below the current tangent line; it
is always correct but quadratic in the worst case.
"""
from __future__ import annotations

import numpy as np

from ._accel import njit
from .poly import BoundReport, Polynomial, point_arrays


@njit
def _pop_front(i, hi, heights, stack, top):
    """Pop hull points hidden by the new left-most point ``(i, hi)``; return new top."""
    count = 0
    while top >= 1:
        c = stack[top]
        d = stack[top - 1]
        count += 1
        if (heights[d] - hi) / (d - i) < (heights[c] - hi) / (c - i):
            top -= 1
        else:
            break
    return top, count


@njit
def _walk_right(i, hi, heights, stack, pos):
    """Tangent search from stack position ``pos`` towards ``p_n``."""
    count = 0
    c = stack[pos]
    sc = (heights[c] - hi) / (c - i)
    while pos >= 1:
        d = stack[pos - 1]
        sd = (heights[d] - hi) / (d - i)
        count += 1
        if sd < sc:
            pos -= 1
            sc = sd
        else:
            break
    return pos, sc, count


@njit
def buggy_kernel(heights, signs, scanned):
    """``scanned[i]`` receives the tangent slope examined at each negative index."""
    n = signs.shape[0] - 1
    stack = np.empty(n + 1, dtype=np.int64)
    stack[0] = n
    top = 0
    t_pos = 0
    sigma = -np.inf
    wj = -1
    wi = -1
    count = 0
    for i in range(n - 1, -1, -1):
        hi = heights[i]
        if signs[i] > 0:
            top, k = _pop_front(i, hi, heights, stack, top)
            count += k
            top += 1
            stack[top] = i
        elif signs[i] < 0:
            if wj >= 0:
                t = stack[t_pos]
                count += 1
                if not hi < heights[t] + sigma * (i - t):
                    continue
            pos, sl, k = _walk_right(i, hi, heights, stack, t_pos)
            count += k
            scanned[i] = sl
            if sl > sigma:
                sigma = sl
                t_pos = pos
                wj = i
                wi = stack[pos]
    return sigma, wj, wi, count


@njit
def quadratic_kernel(heights, signs):
    n = signs.shape[0] - 1
    stack = np.empty(n + 1, dtype=np.int64)
    stack[0] = n
    top = 0
    t_pos = 0
    ax = n
    ay = heights[n]
    sigma = -np.inf
    wj = -1
    wi = -1
    count = 0
    for i in range(n - 1, -1, -1):
        hi = heights[i]
        if signs[i] > 0:
            top, k = _pop_front(i, hi, heights, stack, top)
            count += k
            top += 1
            stack[top] = i
            if wj >= 0:
                count += 1
                if t_pos >= top or hi < ay + sigma * (i - ax):
                    # below l (or t lost to rounding): restart the tangent at p_i
                    t_pos = top
                    ax = i
                    ay = hi
        elif signs[i] < 0:
            if wj < 0:
                pos, sl, k = _walk_right(i, hi, heights, stack, top)
                count += k
            else:
                count += 1
                if not hi < ay + sigma * (i - ax):
                    continue
                pos, sl, k = _walk_right(i, hi, heights, stack, t_pos)
                count += k
            if sl > sigma:
                sigma = sl
                t_pos = pos
                ax = stack[pos]
                ay = heights[ax]
                wj = i
                wi = ax
    return sigma, wj, wi, count


def _report(sigma, wj, wi, count):
    if wj < 0:
        return BoundReport(0.0, None, None, int(count))
    return BoundReport(float(2.0 ** (1.0 + sigma)), float(sigma), (int(wj), int(wi)), int(count))


def hong_buggy(p: Polynomial, scanned: dict | None = None) -> BoundReport:
    """Flawed linear-time reconstruction; wrong on e.g. ``-1 + 4x^3 - 2x^4 + 4x^5 + 8x^8``.

    If ``scanned`` is a dict it is filled with ``{exponent: tangent slope}`` for
    every negative point the sweep actually scanned.
    """
    heights, signs = point_arrays(p)
    out = np.full(len(signs), np.nan)
    report = _report(*buggy_kernel(heights, signs, out))
    if scanned is not None:
        scanned.update({int(i): float(out[i]) for i in np.flatnonzero(~np.isnan(out))})
    return report


def hong_quadratic_corrected(p: Polynomial) -> BoundReport:
    heights, signs = point_arrays(p)
    return _report(*quadratic_kernel(heights, signs))
