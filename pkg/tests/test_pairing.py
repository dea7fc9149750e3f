import functools

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from qg2.checks import TABULAR_WORDS
from qg2.free import E1, E2, E_LETTERS, F1, F2, F_LETTERS, NcPoly, OMEGA, OMEGA_INV, OMEGAP, OMEGAP_INV
from qg2.pairing import (DEFAULT_TABLE, PairingError, TabularConstants, check_errata,
                         column_weights, fixture_diff, load_errata, load_fixture, pair,
                         pair_antipode_check, pair_left_peel, tabular_report, zero_oracle)
from qg2.params import SOURCE
from qg2.parser import parse_poly as P
from qg2.scalars import ONE, R, S

from conftest import monomials

B_ALPHA = E_LETTERS + OMEGA + OMEGA_INV
BP_ALPHA = F_LETTERS + OMEGAP + OMEGAP_INV
b_words = st.lists(st.sampled_from(B_ALPHA), max_size=4).map(tuple)
bp_words = st.lists(st.sampled_from(BP_ALPHA), max_size=4).map(tuple)


def test_pair_examples():
    assert pair(P("f1"), P("e1")) == ONE / (S - R)
    assert pair(P("f2"), P("e2")) == ONE / (S ** 3 - R ** 3)
    assert pair(P("w2'"), P("w1*w2")) == R ** 3
    assert pair(P("f1^4*f2"), SOURCE.serre_e[1]) == 0
    assert pair(P("1"), P("e1")) == 0 and pair(P("f1"), P("1")) == 0
    assert pair(P("1"), P("w1")) == ONE


def test_pair_rejects_wrong_sides():
    with pytest.raises(PairingError):
        pair(P("e1"), P("e1"))
    with pytest.raises(PairingError):
        pair(P("f1"), P("w1'"))


def test_antipode_check_examples():
    assert pair_antipode_check(P("f1"), P("e1"))
    assert pair_antipode_check(P("w1'"), P("w2"))
    assert pair_antipode_check(P("f1*f2"), P("e2*e1"))


def test_tabular_constants():
    c = TabularConstants.from_table(DEFAULT_TABLE)
    assert (c.x, c.xbar, c.y) == (R / S, R ** -3, S ** 3)
    assert c.a == (ONE / (S - R)) ** 4 / (S ** 3 - R ** 3)


@given(bp_words, b_words, monomials(), monomials(), b_words)
def test_bilinearity(u, v, c, d, v2):
    U, V, V2 = NcPoly.word(u), NcPoly.word(v), NcPoly.word(v2)
    assert pair(U, V.scale(c) + V2.scale(d)) == c * pair(U, V) + d * pair(U, V2)
    assert pair(U.scale(c), V) == c * pair(U, V)


@given(bp_words, b_words)
def test_left_and_right_peeling_agree(u, v):
    assert pair_left_peel(NcPoly.word(u), NcPoly.word(v)) == pair(NcPoly.word(u), NcPoly.word(v))


@given(bp_words, b_words)
def test_antipode_invariance(u, v):
    assert pair_antipode_check(NcPoly.word(u), NcPoly.word(v))


@given(st.lists(st.sampled_from(F_LETTERS), max_size=6).map(tuple),
       st.lists(st.sampled_from(E_LETTERS), max_size=6).map(tuple))
def test_fast_f_e_path_agrees(u, v):
    assert DEFAULT_TABLE.words_f_e(u, v) == DEFAULT_TABLE.words(u, v)


def test_zero_oracle_examples():
    for elem in SOURCE.serre_e:
        assert zero_oracle(elem, "plus")
    for elem in SOURCE.serre_f:
        assert zero_oracle(elem, "minus")
    assert not zero_oracle(P("e1"), "plus")
    assert zero_oracle(P("E1112*E112 - r^3*E112*E1112"), "plus")
    with pytest.raises(PairingError):
        zero_oracle(P("e1 + e2"), "plus")
    with pytest.raises(PairingError):
        zero_oracle(P("f1"), "plus")


# -- coproduct tables --------------------------------------------------------------

x, xb, y, r, s = sp.symbols("x xbar y r s")
P6 = 1 + 3*x + 5*x**2 + 6*x**3 + 5*x**4 + 3*x**5 + x**6
P4 = 1 + 3*x + 4*x**2 + 3*x**3 + x**4
P5 = 1 + 3*x + 5*x**2 + 5*x**3 + 3*x**4 + x**5
C3 = 1 + 2*x + 2*x**2 + x**3

# displayed column sums divided by a, columns 1..5
DISPLAYED = {
    1: [P6, P6*xb, P6*xb**2, P6*xb**3, P6*xb**4],
    2: [P6*y**4, P6*y**3, P6*y**2, P6*y, P6],
    3: [y**2*P6, y*P4*(1 + xb*y*x**2),
        1 + 2*x + x**2 + xb*x*y*(1 + 4*x + 6*x**2 + 4*x**3 + x**4) + xb**2*y**2*x**4*(1 + 2*x + x**2),
        P4*(xb + xb**2*x**2*y), xb**2*P6],
    4: [y*P6, C3 + x*xb*y*P5, xb*P4 + xb**2*y*x**2*P4, xb**2*P5 + xb**3*y*(x**3 + 2*x**4 + 2*x**5 + x**6),
        xb**3*P6],
    5: [y**3*P6, xb*y**3*x**3*C3 + y**2*P5, y*P4 + xb*y**2*x**2*P4, xb*y*x*P5 + C3, xb*P6],
}
WEIGHTS = [1, -(r + s)*(r**2 + s**2), r*s*(r**2 + s**2)*(r**2 + r*s + s**2),
           -(r*s)**3*(r + s)*(r**2 + s**2), (r*s)**6]
VALUES = {x: r/s, xb: r**-3, y: s**3}

# The intermediate lines of cases (iii)-(v) after substituting x, xbar, y, divided
# by a: (columns combined, printed term, corrected term or None).  Two printed
# terms are off; the factored brackets that follow them are right.
DELTA = r**2 + r*s + s**2
Q4 = s**4 + 3*r*s**3 + 4*r**2*s**2 + 3*r**3*s + r**4
COMMON = (r + s)**2*(r**2 + s**2)*DELTA
REDUCED = {
    3: [((1, 5), 2/(r*s)*r*s*Q4*(s**2 + r**2), None),
        ((3,), 2/(r*s)*Q4*DELTA*(s**2 + r**2), None),
        ((2, 4), -2/(r*s)*Q4*(s**2 + r**2)*(r + s)**2, None)],
    4: [((1,), s**-3*COMMON, None),
        ((2,), -s**-3*r**-3*COMMON*(r**2*s + 2*r**3 + r*s**2), None),
        ((3,), s**-3*r**-3*(r**2 + s**2)*DELTA**2*(r + s)**3, None),
        # printed without the factor Delta
        ((4,), -r**-3*s**-2*(r + s)**2*(r**2 + s**2)*(r**2 + r*s + 2*s**2),
         -r**-3*s**-2*COMMON*(r**2 + r*s + 2*s**2)),
        ((5,), r**-3*COMMON, None)],
    # printed (r+s)^3 where the bracket that follows has r^3 + s^3
    5: [((1, 5), (r + s)**3*(r**2 + s**2)*DELTA, (r**3 + s**3)*COMMON),
        ((2,), -s*COMMON*(r**2 + r*s + 2*s**2), None),
        ((3,), (r**2 + s**2)*DELTA**2*(r + s)**3, None),
        ((4,), -r*COMMON*(2*r**2 + r*s + s**2), None)],
}
BRACKETS = {
    4: s**-3 - s**-3*r**-3*(r**2*s + r*s**2 + 2*r**3) + r**-3*s**-3*DELTA*(r + s)
       - r**-3*s**-2*(r**2 + r*s + 2*s**2) + r**-3,
    5: r**3 + s**3 - s*(r**2 + r*s + 2*s**2) + (r + s)*DELTA - r*(2*r**2 + r*s + s**2),
}


@pytest.fixture(scope="module", params=TABULAR_WORDS, ids=lambda t: f"table{t[0]}")
def report(request):
    n, _ = request.param
    return n, cached_report(n)


@functools.lru_cache(maxsize=None)
def cached_report(n):
    return tabular_report(dict(TABULAR_WORDS)[n])


def column_poly(sums):
    return sum(c * x**i * xb**j * y**k for (i, j, k), c in sums.items())


def test_row_count_and_total(report):
    n, rep = report
    assert len(rep.rows) == 120
    assert rep.total == 0
    assert all(sum(1 for row in rep.rows if row.column == c) == 24 for c in range(1, 6))


def test_column_sums_match_displayed_polynomials(report):
    n, rep = report
    for c in range(1, 6):
        assert sp.expand(column_poly(rep.column_sums[c]) - DISPLAYED[n][c - 1]) == 0, (n, c)


def test_weights_match_displayed_factors(report):
    _, rep = report
    for ours, theirs in zip(rep.weights, WEIGHTS):
        ours_sym = sum(v * r**i * s**j for (i, j), v in ours.num.terms.items()) / \
            sum(v * r**i * s**j for (i, j), v in ours.den.terms.items())
        assert sp.simplify(ours_sym - theirs) == 0
    assert rep.weights == column_weights(SOURCE)


def test_symbolic_total_vanishes_and_factors(report):
    n, rep = report
    total = sum(w * column_poly(rep.column_sums[c]) for c, w in zip(range(1, 6), WEIGHTS))
    assert sp.simplify(total.subs(VALUES)) == 0
    if n == 1:
        assert sp.expand(total - P6*(1 - r**3*xb)*(1 - r**2*s*xb)*(1 - r*s**2*xb)*(1 - s**3*xb)) == 0
    if n == 2:
        assert sp.expand(total - P6*(y - r**3)*(y - r**2*s)*(y - r*s**2)*(y - s**3)) == 0
    if n in BRACKETS:
        assert sp.simplify(BRACKETS[n]) == 0


@pytest.mark.parametrize("n", sorted(REDUCED))
def test_intermediate_lines(n):
    rep = cached_report(n)
    weighted = {c: (w * column_poly(rep.column_sums[c])).subs(VALUES)
                for c, w in zip(range(1, 6), WEIGHTS)}
    assert sorted(c for cols, _, _ in REDUCED[n] for c in cols) == [1, 2, 3, 4, 5]
    for cols, printed, corrected in REDUCED[n]:
        got = sum(weighted[c] for c in cols)
        if corrected is None:
            assert sp.simplify(got - printed) == 0, (n, cols)
        else:
            assert sp.simplify(got - corrected) == 0, (n, cols)
            assert sp.simplify(got - printed) != 0, (n, cols)


def test_fixture_matches_after_errata(report):
    n, rep = report
    assert fixture_diff(rep, n, corrected=True) == []
    assert check_errata(rep, n) == []
    raw = fixture_diff(rep, n)
    assert bool(raw) == bool(load_errata(n))
    assert len(load_fixture(n)) == 120


def test_errata_total():
    assert len(load_errata()) == 9
    assert sum(e.kind == "value" for e in load_errata()) == 1


def test_tabular_weight_mismatch():
    with pytest.raises(PairingError):
        tabular_report((F1, F1, F1, F2, F2))


def test_reports_are_rendered():
    rep = tabular_report((F1, F2, F1, F1, F1))
    csv_lines = rep.to_csv().splitlines()
    assert len(csv_lines) == 1 + 120 + 5 + 1
    assert csv_lines[-1].endswith(",0")
    assert '"total": "0"' in rep.to_json()
    text = rep.to_text()
    assert text.count("SUMMANDS") == 5
