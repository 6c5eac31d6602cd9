from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

COORD_VALUES = [Fraction(k) for k in range(-3, 4)] + [Fraction(1, 2), Fraction(-1, 2)]
COEFF_VALUES = [Fraction(k) for k in (-3, -2, -1, 1, 2, 3)] + [Fraction(1, 2), Fraction(-2, 3)]

coords = st.sampled_from(COORD_VALUES)
coeffs = st.sampled_from(COEFF_VALUES)


def exponents(n):
    return st.tuples(*([coords] * (2 * n))).filter(any)


def h_elements(n, max_terms=3):
    from hamlie import HElement

    return st.lists(st.tuples(exponents(n), coeffs), min_size=0, max_size=max_terms).map(
        lambda ts: HElement(n, ts)
    )


def bar_elements(n, max_terms=3):
    from hamlie import BarElement

    return st.lists(
        st.tuples(st.tuples(*([coords] * (2 * n))), coeffs), min_size=0, max_size=max_terms
    ).map(lambda ts: BarElement(n, ts))


def tensors(n, m, max_terms=3):
    from hamlie import TensorElement

    key = st.tuples(*([exponents(n)] * m))
    return st.lists(st.tuples(key, coeffs), min_size=0, max_size=max_terms).map(
        lambda ts: TensorElement(n, m, ts)
    )


@pytest.fixture
def rng():
    import random

    return random.Random(20261017)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)
