from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from dtcol.exactalg import LaurentPoly, RatFunc, parse
from dtcol.quiver import Quiver
from dtcol.stability import CentralCharge

settings.register_profile("dtcol", max_examples=60, deadline=None)
settings.load_profile("dtcol")

K1 = Quiver.kronecker(1)
K2 = Quiver.kronecker(2)
Z10 = CentralCharge((1, 0))
Z01 = CentralCharge((0, 1))
ZGEN = CentralCharge((2, -1), (1, 3))


def rf(text):
    return parse(text)


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def laurent_polys(draw, max_terms=4):
    terms = draw(st.dictionaries(st.integers(-3, 4), fractions, max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def ratfuncs(draw, nonzero=False):
    num = draw(laurent_polys())
    den = draw(laurent_polys().filter(lambda p: not p.is_zero()))
    f = RatFunc(num, den)
    if nonzero and not f:
        f = RatFunc(1)
    return f


def vectors(r=2, max_entry=2):
    return st.tuples(*[st.integers(0, max_entry)] * r).filter(any)


def tuples_of(r=2, max_len=4, max_entry=2):
    return st.lists(vectors(r, max_entry), min_size=1, max_size=max_len).map(tuple)


@pytest.fixture
def k1():
    return K1


@pytest.fixture
def k2():
    return K2


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(RESULTS, key=lambda n: int(n[1:])):
        ok, detail, seconds = RESULTS[name]
        terminalreporter.write_line("%-4s %s  %s (%.1fs)" % (name, "PASS" if ok else "FAIL", detail, seconds))
