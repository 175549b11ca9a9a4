from math import isqrt

import pytest


def scan_pell(n, l, x_max):
    """Ascending scan for l*Y^2 - n*X^2 = l; deliberately naive."""
    out = []
    for X in range(x_max + 1):
        t = l + n * X * X
        if t % l == 0:
            y = isqrt(t // l)
            if y * y == t // l:
                out.append((X, y))
    return out


@pytest.fixture
def pell_scan():
    return scan_pell


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def report(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
