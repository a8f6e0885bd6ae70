import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from probfe import XPolynomial, bernoulli, exponential, geometric, poisson

MODELS = [bernoulli(Fraction(1, 3)), poisson(2), geometric(Fraction(1, 3)), exponential(3)]


def rationals(bound: int = 100):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


def polynomials(max_degree: int = 6, bound: int = 100):
    return st.lists(rationals(bound), min_size=0, max_size=max_degree + 1).map(XPolynomial)


def u_values():
    return rationals(20).filter(lambda u: u != 1)


@pytest.fixture(params=MODELS, ids=str)
def model(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
