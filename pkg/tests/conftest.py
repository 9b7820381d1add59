from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from illusionfree.formats import read_instance
from illusionfree.graph import Instance

DATA = Path(__file__).parent / "data"

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def cascade():
    return read_instance(DATA / "cascade.dif")


@pytest.fixture
def square():
    return read_instance(DATA / "square.dif")


fractions = st.builds(
    lambda den, num: Fraction(num % (den + 1), den), st.integers(1, 6), st.integers(0, 6)
)


@st.composite
def instances(draw, max_n=9, p=fractions):
    n = draw(st.integers(1, max_n))
    colors = "".join(draw(st.lists(st.sampled_from("BR"), min_size=n, max_size=n)))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3 * n)) if pairs else []
    return Instance(n, edges, colors, draw(p))


# one line per acceptance criterion, filled in by test_acceptance.py
CRITERIA = {}


def record_criterion(number, ok, detail):
    CRITERIA[number] = (ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        ok, detail = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
