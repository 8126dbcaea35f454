import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hongbound import (TermPoint, build_hulls, hong_buggy, hong_linear, hong_naive,
                       hong_naive_log, trace_linear, validate)
from hongbound.linear import TangentState, TraceEnd, TraceEvent, initial_state, point_below_line
from hongbound.poly import NEGATIVE

from conftest import A_M1, A_M8, random_coeffs


def state(ax, ay, sigma):
    return TangentState(sigma, ax, ax, float(ay))


@pytest.mark.parametrize("p, st_, below", [
    ((4, -1), ((5, -2), -2 / 3), False),
    ((4, -4 / 3), ((5, -2), -2 / 3), False),
    ((0, 0), ((5, -2), -1.0), True),
])
def test_point_below_line(p, st_, below):
    (ax, ay), sigma = st_
    assert point_below_line(TermPoint(p[0], float(p[1]), NEGATIVE), state(ax, ay, sigma)) is below


def test_point_exactly_on_line_is_not_below():
    s = state(4, -2.0, 0.5)
    assert not point_below_line(TermPoint(2, -3.0, NEGATIVE), s)


@pytest.mark.parametrize("coeffs, bound, witness", [
    (A_M1, 2 ** (1 / 3), (0, 3)),
    (A_M8, 2.0, (0, 8)),
    ([-1, 1], 2.0, (0, 1)),
])
def test_linear_examples(coeffs, bound, witness):
    r = hong_linear(validate(coeffs))
    assert r.bound == pytest.approx(bound, rel=1e-12)
    assert r.witness == witness
    assert r.bound == 2.0 ** (1.0 + r.sigma)


def test_linear_sigma_a_m1(a_m1):
    assert hong_linear(a_m1).sigma == pytest.approx(-2 / 3, abs=1e-15)


def test_linear_no_negative():
    r = hong_linear(validate([1, 1]))
    assert (r.bound, r.sigma, r.witness) == (0.0, None, None)


def test_initial_state(a_m1):
    s = initial_state(build_hulls(a_m1))
    assert (s.t_exponent, s.sigma) == (3, pytest.approx(-2 / 3))


def _events(p):
    ev = trace_linear(p)
    assert isinstance(ev[-1], TraceEnd)
    return {e.i: e for e in ev[:-1]}, ev[-1]


def test_trace_counterexample(a_m1):
    ev, end = _events(a_m1)
    assert ev[0].action == "init"
    assert ev[0].sigma == pytest.approx(-2 / 3)
    assert ev[0].t_exponent == 3
    assert ev[3].action == "reset-t" and ev[3].t_exponent == 5
    assert ev[4].action == "ignore-above"
    assert end.V == [3, 3, 3, 8, 5, 8, 8, 8, -1]
    assert end.report == hong_linear(a_m1)


def test_trace_no_negative():
    ev, end = _events(validate([1, 1]))
    assert ev == {}
    assert end.V == [1, -1]
    assert end.report.bound == 0.0


def test_trace_tangency_monotone(rng):
    for _ in range(300):
        evs = [e for e in trace_linear(validate(random_coeffs(rng, 128)))
               if isinstance(e, TraceEvent)]
        ts = [e.t_exponent for e in evs]
        assert ts == sorted(ts)
        sig = [e.sigma for e in evs]
        assert sig == sorted(sig)


def test_linear_deterministic(rng):
    c = random_coeffs(rng, 200)
    assert hong_linear(validate(c)) == hong_linear(validate(c.copy()))


def test_counterexample_regression(a_m1):
    lin, naive, bug = hong_linear(a_m1), hong_naive(a_m1), hong_buggy(a_m1)
    assert lin.bound == pytest.approx(naive.bound, rel=1e-12)
    assert abs(lin.bound - bug.bound) > 0.2


def adversarial_reset(m, k, top=20.0):
    """After the tangency point leaves the hull, the next hull front sits far
    above the tangent line and the hull then dips back towards it; ``m``
    negative points lie just under the shifted line.  Shifting the line
    through the front without sliding ``t`` along makes each of them rescan
    the ``k`` descending hull points."""
    h = [0.0] * 11 + [top - 0.5] * m + [top]
    s = [-1] + [0] * 9 + [1] + [-1] * m + [1]
    for q in range(1, k + 1):
        h.append(top - (top - 0.1) * (1 - (1 - q / k) ** 2))
        s.append(1)
    return validate(np.array(s) * 2.0 ** -np.array(h))


@pytest.mark.parametrize("m, k", [(50, 50), (400, 400), (1500, 1500)])
def test_linear_count_on_adversarial_reset(m, k):
    p = adversarial_reset(m, k)
    r = hong_linear(p)
    assert r.comparisons <= 4 * p.degree + 8
    assert r.bound == pytest.approx(hong_naive(p).bound, rel=1e-9)


def test_linear_comparisons_bound(rng):
    for _ in range(1000):
        p = validate(random_coeffs(rng, 256))
        assert hong_linear(p).comparisons <= 4 * p.degree + 8


def test_linear_matches_naive_random(rng):
    for _ in range(2000):
        p = validate(random_coeffs(rng, 256))
        a, b = hong_linear(p), hong_naive(p)
        assert abs(a.bound - b.bound) <= 1e-9 * b.bound
        if a.witness is not None and a.witness == hong_naive_log(p).witness:
            assert abs(a.sigma - hong_naive_log(p).sigma) <= 1e-12


exact_coeff = st.builds(lambda s, e: s * 2.0 ** e, st.sampled_from([-1.0, 0.0, 1.0]),
                        st.integers(-4, 4))


@settings(max_examples=500)
@given(st.lists(exact_coeff, min_size=1, max_size=40), st.integers(-4, 4))
def test_linear_matches_naive_degenerate(body, lead):
    # integer heights: ties, collinear runs and repeated tangency points
    p = validate(body + [2.0 ** lead])
    a, b = hong_linear(p), hong_naive(p)
    assert abs(a.bound - b.bound) <= 1e-9 * b.bound
    assert a.comparisons <= 4 * p.degree + 8


@pytest.mark.parametrize("coeffs", [
    [-1, 1, -1, 1, -1, 1],
    [-1, -1, -1, 1],
    [1, -1, 1, -1, 1, -1, 1],
    [-1, 4, -2, 1, -1, 8],
    [-1e6, 1e-6, -1e6, 1e6],
    [-5, 0, 0, 0, 0, 0, 1],
    [1, 2, -3, 0, 0.5, -0.1, 0, 1e-3, 4],
])
def test_linear_hand_cases(coeffs):
    p = validate(coeffs)
    assert hong_linear(p).bound == pytest.approx(hong_naive(p).bound, rel=1e-9)
