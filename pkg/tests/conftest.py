import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from superkit.families import seed_from_env
from superkit.grassmann import GrassmannElement
from superkit.laurent import CircleFn, LaurentFn
from superkit.scalars import ComplexScalar

I = ComplexScalar(0, 1)

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))
scalars = st.builds(ComplexScalar, rationals, rationals)
small_exp = st.integers(min_value=-3, max_value=3)


@st.composite
def laurent(draw, max_terms=3):
    out = LaurentFn()
    for _ in range(draw(st.integers(0, max_terms))):
        out = out + LaurentFn.monomial(draw(small_exp), draw(small_exp), draw(scalars))
    return out


@st.composite
def circle(draw, max_terms=4):
    out = CircleFn()
    for _ in range(draw(st.integers(0, max_terms))):
        out = out + CircleFn.exp(draw(small_exp), draw(scalars))
    return out


@st.composite
def grassmann(draw, coeff=laurent):
    return GrassmannElement(*(draw(coeff()) for _ in range(4)))


@pytest.fixture
def rng():
    return random.Random(seed_from_env(20261016))


HALF = Fraction(1, 2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
