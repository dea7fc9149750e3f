from hypothesis import given, strategies as st

from qg2.checks import ALL_LETTERS, hopf_sample
from qg2.free import E1, E2, F1, F2, NcPoly, W1, W2, W2P
from qg2.hopf import (TensorPoly, adjoint, antipode, check_antipode, check_coassociative,
                      check_counit, check_multiplicative, coproduct_left_fold, coproduct_n, counit,
                      iterated_adjoint, serre_adjoint_scalar)
from qg2.params import SOURCE
from qg2.parser import parse_poly as P
from qg2.rewrite import standard_rules
from qg2.scalars import ONE

from conftest import ncpolys, words

RULES = standard_rules(SOURCE)
w = NcPoly.word


def test_coproduct_examples():
    assert coproduct_n(P("e1"), 2) == TensorPoly.pure(P("e1"), P("1")) + TensorPoly.pure(P("w1"), P("e1"))
    one = ()
    expected = {((F2,), one, one, one, one), ((W2P,), (F2,), one, one, one),
                ((W2P,), (W2P,), (F2,), one, one), ((W2P,), (W2P,), (W2P,), (F2,), one),
                ((W2P,), (W2P,), (W2P,), (W2P,), (F2,))}
    got = coproduct_n(P("f2"), 5, opposite=True)
    assert set(got.terms) == expected and all(c == ONE for c in got.terms.values())
    g = coproduct_n(P("w1*w2"), 3)
    assert list(g.terms.items()) == [(((W1, W2),) * 3, ONE)]


def test_counit_examples():
    assert counit(P("e1*f1")) == 0
    assert counit(P("w1^3*w2'^-1")) == ONE
    assert counit(P("1 + e2")) == ONE


def test_antipode_examples():
    assert antipode(P("e1")) == P("-w1^-1*e1")
    assert antipode(P("w2'")) == P("w2'^-1")
    assert antipode(P("f1")) == P("-f1*w1'^-1")
    mS = NcPoly.zero()
    for (a, b), c in coproduct_n(P("f1"), 2).terms.items():
        mS = mS + (antipode(w(a)) * w(b)).scale(c)
    assert RULES.straighten(mS) == NcPoly.zero()


def test_adjoint_examples():
    assert adjoint("left", P("e1"), P("e2")) == P("e1*e2 - s^3*e2*e1")
    assert adjoint("right", P("f1"), P("f2")) == P("f2*f1 - r^3*f1*f2")
    assert RULES.is_zero(adjoint("left", P("e2"), adjoint("left", P("e2"), P("e1"))))


def test_serre_elements_are_adjoint_powers():
    for side in ("left", "right"):
        for i, j in ((0, 1), (1, 0)):
            c = serre_adjoint_scalar(i, j, side)
            assert c is not None
            mono = c.as_laurent_monomial()
            assert mono is not None and abs(mono[0]) == 1, (side, i, j, c)


def test_axioms_on_generators_and_sample():
    for word in [(x,) for x in ALL_LETTERS] + hopf_sample():
        a = w(word)
        assert check_coassociative(a)
        assert check_counit(a)
        assert check_antipode(a, RULES)


@given(ncpolys(max_len=4))
def test_coassociativity_on_polynomials(a):
    assert check_coassociative(a)
    assert check_counit(a)


@given(ncpolys(max_len=3), ncpolys(max_len=3))
def test_coproduct_is_multiplicative(a, b):
    assert check_multiplicative(a, b)


@given(ncpolys(max_len=3), st.integers(2, 4))
def test_iterated_coproduct_bracketing(a, n):
    assert coproduct_n(a, n) == coproduct_left_fold(a, n)


@given(ncpolys(max_len=3), ncpolys(max_len=3))
def test_antipode_is_an_anti_homomorphism(a, b):
    assert antipode(a * b) == antipode(b) * antipode(a)


@given(ncpolys(max_len=3))
def test_opposite_coproduct_is_the_flip(a):
    flip = {(y, x): c for (x, y), c in coproduct_n(a, 2).terms.items()}
    assert coproduct_n(a, 2, opposite=True).terms == flip


def test_root_vector_adjoints():
    assert iterated_adjoint("left", P("e1"), P("e2"), 2, RULES) == RULES.straighten(P("E112"))
    assert iterated_adjoint("left", P("e1"), P("e2"), 3, RULES) == RULES.straighten(P("E1112"))
    assert iterated_adjoint("right", P("f1"), P("f2"), 3, RULES) == RULES.straighten(P("F1112"))
