import json
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from qg2.free import E1, E2, E_LETTERS, F1, F2, NcPoly, weight_of
from qg2.params import SOURCE, TARGET
from qg2.parser import parse_poly as P
from qg2.rewrite import (DegreeBoundError, rewrite_with_rules, serre_complete, standard_rules,
                         straighten, is_zero)
from qg2.scalars import R, S

from conftest import letters, monomials, ncpolys

RULES = standard_rules(SOURCE)


def test_straighten_examples():
    assert straighten(P("e1*f1")) == P("f1*e1 + (w1 - w1')/(r - s)")
    # w1 e1 w1^-1 = (r/s) e1, checked as an equality in U
    assert straighten(P("w1*e1")) == straighten(P("(r*s^-1)*e1*w1"))
    assert straighten(P("w1*e1*w1^-1")) == P("r*s^-1*e1")
    assert straighten(SOURCE.serre_e[0]) == NcPoly.zero()


def test_is_zero_examples():
    assert is_zero(NcPoly.zero())
    assert not is_zero(P("e1"))
    assert is_zero(P("f1*f2^2 - (r^-3 + s^-3)*f2*f1*f2 + (r*s)^-3*f2^2*f1"))


def test_completion_keeps_inputs():
    # the quartic Serre element has five letters, so it enters at bound 5
    low = serre_complete(list(SOURCE.serre_e), 4)
    assert [r.lead for r in low.rules] == [SOURCE.serre_e[0].leading_word()]
    rs = serre_complete(list(SOURCE.serre_e), 5, names=["G5_1", "G5_2"])
    assert [(r.lead, r.provenance) for r in rs.rules] == [
        (SOURCE.serre_e[0].leading_word(), "G5_1"), (SOURCE.serre_e[1].leading_word(), "G5_2")]


def test_completion_at_seven_decides_root_vector_identities():
    rs = serre_complete(list(SOURCE.serre_e), 7)
    q = P("E1112*E112 - r^3*E112*E1112")
    assert not rs.straighten(q)
    p = P("e1*E21^3 - s*Delta*E21*e1*E21^2 + r*s^3*Delta*E21^2*e1*E21 - (r*s^2)^3*E21^3*e1")
    assert not rs.straighten(p)


def test_rules_are_decreasing():
    from qg2.free import word_key
    for rule in RULES.all_rules():
        for w in rule.replacement.terms:
            assert (len(w), word_key(w)) < (len(rule.lead), word_key(rule.lead)), rule


def test_confluence_witness():
    for side in (RULES.e_side, RULES.f_side):
        assert side.critical_pairs
        assert side.recheck_confluence()
        assert all(cp.normal_form is not None for cp in side.critical_pairs)


def test_degree_bound_error():
    small = standard_rules(SOURCE, D=5)
    with pytest.raises(DegreeBoundError):
        small.straighten(NcPoly.word((E1,) * 6))


def test_degree_bound_from_env(monkeypatch):
    from qg2.rewrite import degree_bound_from_env
    monkeypatch.setenv("QG2_DEGREE_BOUND", "6")
    assert degree_bound_from_env() == 6
    assert standard_rules(SOURCE).degree_bound == 6
    monkeypatch.delenv("QG2_DEGREE_BOUND")
    assert standard_rules(SOURCE).degree_bound == 8


def test_rule_set_json():
    doc = json.loads(RULES.to_json())
    assert doc["params"] == "rs" and doc["degree_bound"] == 8
    assert {"lead", "replacement", "provenance"} <= set(doc["rules"][0])
    tags = {r["provenance"] for r in doc["rules"]}
    assert {"G4", "G5_1", "G5_2"} <= tags or any(t.startswith("G5") for t in tags)


def kostant(weight):
    """Number of ways to write weight as a sum of positive roots (multiset)."""
    roots = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]

    def count(w, k):
        if w == (0, 0):
            return 1
        if k == len(roots) or w[0] < 0 or w[1] < 0:
            return 0
        a, b = roots[k]
        total, cur = 0, w
        while cur[0] >= 0 and cur[1] >= 0:
            total += count(cur, k + 1)
            cur = (cur[0] - a, cur[1] - b)
        return total
    return count(weight, 0)


def irreducible_words(weight):
    m1, m2 = weight
    base = [E1] * m1 + [E2] * m2
    out = 0
    for w in set(permutations(base)):
        if list(RULES.e_side.reduce_word(w)) == [w]:
            out += 1
    return out


@pytest.mark.parametrize("weight", [(a, b) for a in range(7) for b in range(4) if 0 < a + b <= 8])
def test_normal_words_match_kostant_partition(weight):
    assert irreducible_words(weight) == kostant(weight)


# -- properties ---------------------------------------------------------------

@given(ncpolys(max_len=4))
def test_straighten_is_a_projection(a):
    once = RULES.straighten(a)
    assert RULES.straighten(once) == once


@given(ncpolys(max_len=4))
def test_matches_reference_rewriter(a):
    assert RULES.straighten(a) == rewrite_with_rules(a, RULES)


@given(st.lists(st.sampled_from([E1, E2, F1, F2]), min_size=1, max_size=5).map(tuple), monomials())
def test_straighten_preserves_weight(w, c):
    a = NcPoly.word(w, c)
    nf = RULES.straighten(a)
    assert not nf or weight_of(nf) == weight_of(a)


@given(ncpolys(max_len=3), ncpolys(max_len=3))
def test_multiply_agrees_with_straighten(a, b):
    assert RULES.multiply(RULES.straighten(a), b) == RULES.straighten(a * b)


def test_swapped_presentation_serre():
    rules = standard_rules(TARGET)
    for elem in TARGET.serre_e + TARGET.serre_f:
        assert rules.is_zero(elem)
    assert not rules.is_zero(SOURCE.serre_e[1])
