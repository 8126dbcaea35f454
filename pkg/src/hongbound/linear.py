"""Linear-time Hong bound: left-to-right tangent sweep over the stored hulls.

The sweep keeps the largest tangent slope ``sigma`` found so far, the line
``l`` of that slope through the tangency point ``t``, and moves ``t`` only
rightwards.  Everything happens in the log domain; the bound is
``2 ** (1 + sigma)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ._accel import njit
from .hull import HullStore, build_hulls, build_hulls_kernel, tangent_walk
from .poly import BoundReport, Polynomial, TermPoint, point_arrays

NONE, INIT, CARRY, RESET, IGNORE, ADOPT, REJECT = range(7)
ACTIONS = {
    INIT: "init",
    CARRY: "carry",
    RESET: "reset-t",
    IGNORE: "ignore-above",
    ADOPT: "adopt-tangent",
    REJECT: "reject-tangent",
}


@dataclass(frozen=True)
class TangentState:
    sigma: float
    t_exponent: int
    anchor_exponent: int
    anchor_height: float
    comparisons: int = 0

    def line_height(self, x: float) -> float:
        return self.anchor_height + self.sigma * (x - self.anchor_exponent)


def point_below_line(p: TermPoint, state: TangentState) -> bool:
    """Strictly below; a point on the line counts as not below."""
    return p.height < state.line_height(p.exponent)


@njit
def sweep_kernel(heights, signs, V, record, actions, trace_sigma, trace_t):
    """Second pass.  Returns ``(sigma, witness_j, witness_i, comparisons)``.

    ``witness_j < 0`` means there is no negative coefficient.  When ``record``
    is true the per-index action, sigma and tangency point are written into
    the three trace arrays.
    """
    n = signs.shape[0] - 1
    j = -1
    for i in range(n):
        if signs[i] < 0:
            j = i
            break
    if j < 0:
        return np.nan, -1, -1, 0

    t, sigma, count = tangent_walk(j, heights[j], heights, V, V[j])
    ay = heights[t]
    wj = j
    wi = t
    if record:
        actions[j] = INIT
        trace_sigma[j] = sigma
        trace_t[j] = t

    for i in range(j + 1, n + 1):
        s = signs[i]
        act = CARRY
        if s > 0:
            if i == t and i < n:
                # t leaves the hull: restart from the front of lhull(P_{i+1}+),
                # then slide right until the slope-sigma line supports the hull
                t = i + 1 if signs[i + 1] > 0 else V[i + 1]
                while True:
                    d = V[t]
                    if d < 0:
                        break
                    count += 1
                    if (heights[d] - heights[t]) / (d - t) < sigma:
                        t = d
                    else:
                        break
                ay = heights[t]
                act = RESET
        elif s < 0:
            count += 1
            if heights[i] < ay + sigma * (i - t):
                m, sl, steps = tangent_walk(i, heights[i], heights, V, t)
                count += steps
                if sl > sigma:
                    sigma = sl
                    t = m
                    ay = heights[m]
                    wj = i
                    wi = m
                    act = ADOPT
                else:
                    act = REJECT
            else:
                act = IGNORE
        if record:
            actions[i] = act
            trace_sigma[i] = sigma
            trace_t[i] = t
    return sigma, wj, wi, count


_EMPTY_I8 = np.zeros(0, dtype=np.int8)
_EMPTY_F8 = np.zeros(0, dtype=np.float64)
_EMPTY_I64 = np.zeros(0, dtype=np.int64)


def hong_linear(p: Polynomial) -> BoundReport:
    """Hong's bound in linear time (hull pass followed by tangent sweep).

    ``comparisons`` counts slope comparisons and line tests of both passes.
    """
    heights, signs = point_arrays(p)
    V, c1 = build_hulls_kernel(heights, signs)
    sigma, wj, wi, c2 = sweep_kernel(heights, signs, V, False,
                                     _EMPTY_I8, _EMPTY_F8, _EMPTY_I64)
    if wj < 0:
        return BoundReport(0.0, None, None, int(c1))
    return BoundReport(float(2.0 ** (1.0 + sigma)), float(sigma), (int(wj), int(wi)),
                       int(c1 + c2))


@dataclass(frozen=True)
class TraceEvent:
    i: int
    sign: int
    sigma: float
    t_exponent: int
    action: str


@dataclass(frozen=True)
class TraceEnd:
    V: list
    report: BoundReport


def trace_linear(p: Polynomial) -> list[Union[TraceEvent, TraceEnd]]:
    """Per-index states of the sweep, closed by a :class:`TraceEnd`."""
    store = build_hulls(p)
    n = store.n
    actions = np.zeros(n + 1, dtype=np.int8)
    sig = np.full(n + 1, np.nan)
    ts = np.full(n + 1, -1, dtype=np.int64)
    sigma, wj, wi, c2 = sweep_kernel(store.heights, store.signs, store.V, True,
                                     actions, sig, ts)
    events: list[Union[TraceEvent, TraceEnd]] = [
        TraceEvent(i, int(store.signs[i]), float(sig[i]), int(ts[i]),
                   ACTIONS[int(actions[i])])
        for i in range(n + 1) if actions[i] != NONE
    ]
    if wj < 0:
        report = BoundReport(0.0, None, None, store.comparisons)
    else:
        report = BoundReport(float(2.0 ** (1.0 + sigma)), float(sigma), (int(wj), int(wi)),
                             int(store.comparisons + c2))
    events.append(TraceEnd(store.V.tolist(), report))
    return events


def initial_state(store: HullStore) -> Optional[TangentState]:
    """State right after the sweep initialises at the first negative point."""
    neg = np.flatnonzero(store.signs < 0)
    if neg.size == 0:
        return None
    j = int(neg[0])
    t, s, steps = tangent_walk(j, store.heights[j], store.heights, store.V,
                               store.V[j])
    return TangentState(float(s), int(t), int(t), float(store.heights[t]), int(steps))


__all__ = ["TangentState", "TraceEvent", "TraceEnd", "point_below_line",
           "hong_linear", "trace_linear", "initial_state"]
