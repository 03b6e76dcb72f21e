import random

import pytest
from hypothesis import strategies as st

from burau4.laurent import LaurentPoly

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240521)


def small_polys(max_span=6, bound=5):
    """Laurent polynomials with coefficients in [-bound, bound] and span <= max_span."""
    return st.builds(
        lambda lo, cs: LaurentPoly(cs, lo),
        st.integers(-4, 4),
        st.lists(st.integers(-bound, bound), max_size=max_span + 1),
    )


def braid_words(max_len=10):
    return st.lists(st.sampled_from([1, 2, 3, -1, -2, -3]), max_size=max_len)
