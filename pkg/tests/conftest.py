import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hongbound import validate  # noqa: E402

A_M1 = [-1, 0, 0, 4, -2, 4, 0, 0, 8]
A_M8 = [-8, 0, 0, 4, -2, 4, 0, 0, 8]

_criteria = []


def record_criterion(number, ok, detail):
    _criteria.append((number, ok, detail))
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


@pytest.fixture
def criterion():
    return record_criterion


@pytest.fixture
def a_m1():
    return validate(A_M1)


@pytest.fixture
def a_m8():
    return validate(A_M8)


def random_coeffs(rng, max_degree, zero_p=0.1):
    n = int(rng.integers(1, max_degree + 1))
    neg_p = rng.uniform(0.05, 0.85) * (1 - zero_p)
    signs = rng.choice([-1.0, 0.0, 1.0], size=n + 1, p=[neg_p, zero_p, 1 - zero_p - neg_p])
    c = signs * 2.0 ** rng.uniform(-20, 20, n + 1)
    c[-1] = abs(c[-1]) if c[-1] else 1.0
    return c


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(_criteria):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
