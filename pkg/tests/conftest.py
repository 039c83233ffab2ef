from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from qbern.exactq import QRat
from qbern.xpoly import XPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)
small_polys = st.lists(small_ints, min_size=0, max_size=4)
nonzero_polys = small_polys.filter(lambda cs: any(cs))


@st.composite
def qrats(draw, nonzero=False):
    num = draw(nonzero_polys if nonzero else small_polys)
    den = draw(nonzero_polys)
    scale = Fraction(draw(st.integers(1, 5)), draw(st.integers(1, 5)))
    return QRat([c * scale for c in num], den)


@st.composite
def xpolys(draw, max_degree=8, coeff=None):
    coeff = qrats() if coeff is None else coeff
    return XPoly(draw(st.lists(coeff, max_size=max_degree + 1)))


@st.composite
def rationals(draw, lo=-4, hi=4):
    return Fraction(draw(st.integers(lo * 7, hi * 7)), draw(st.integers(1, 7)))


@pytest.fixture
def q():
    from qbern.exactq import Q

    return Q


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
