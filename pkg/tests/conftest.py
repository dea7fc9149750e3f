import os
import sys
import random

from hypothesis import HealthCheck, settings, strategies as st

from qg2.free import LETTER_NAMES, NcPoly
from qg2.scalars import BiPoly, RatFunc

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=25,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("QG2_HYPOTHESIS_PROFILE", "default"))

small_int = st.integers(min_value=-5, max_value=5)


@st.composite
def bipolys(draw, max_terms=4, max_deg=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = (draw(st.integers(0, max_deg)), draw(st.integers(0, max_deg)))
        terms[e] = terms.get(e, 0) + draw(small_int)
    return BiPoly(terms)


@st.composite
def ratfuncs(draw, nonzero=False):
    num = draw(bipolys())
    den = draw(bipolys().filter(bool))
    if nonzero and not num:
        num = BiPoly.const(draw(st.sampled_from([1, -1, 2, 3])))
    return RatFunc(num, den)


def monomials():
    return st.builds(RatFunc.monomial, st.integers(-3, 3), st.integers(-3, 3),
                     st.sampled_from([1, -1, 2, -3]))


letters = st.integers(0, len(LETTER_NAMES) - 1)
words = st.lists(letters, max_size=4).map(tuple)


@st.composite
def ncpolys(draw, alphabet=letters, max_terms=3, max_len=3):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        w = tuple(draw(st.lists(alphabet, max_size=max_len)))
        terms[w] = draw(monomials())
    return NcPoly(terms)


def rng(seed=0):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "CRITERION_LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 11):
        terminalreporter.write_line(lines.get(n, f"criterion {n}: FAIL  did not report"))
