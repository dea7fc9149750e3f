import json
import random

import pytest

from qg2.double import (Double, DoubleElem, double_report_json, random_double_elem, relation_id,
                        verify_double_presentation)
from qg2.free import (B_LETTERS, BPRIME_LETTERS, E1, E2, F1, F2, NcPoly, OMEGA, OMEGAP, W1, W1P,
                      W2, W2P)
from qg2.parser import parse_poly as P
from qg2.scalars import ONE, R, S

DBL = Double()


def elem(a, f, c=ONE):
    return DoubleElem({(tuple(a), tuple(f)): c})


def test_collapsing_products():
    assert DBL.mul(elem((E1,), ()), elem((E2, W1), ())) == DBL.normalize(elem((E1, E2, W1), ()))
    assert DBL.mul(elem((), (F1,)), elem((), (F2,))) == elem((), (F1, F2))


def test_f1_e1_product_is_g4():
    prod = DBL.mul(elem((), (F1,)), elem((E1,), ()))
    assert DBL.embed(prod) == DBL.rules.straighten(P("f1*e1"))
    assert DBL.embed(prod) == DBL.rules.straighten(P("e1*f1 - (w1 - w1')/(r - s)"))


def test_cross_relation_examples():
    assert DBL.cross_relation((W2P,), (E1,)) == elem((E1,), (W2P,), S ** -3)
    assert DBL.cross_relation((F1,), (W1,)) == elem((W1,), (F1,), R / S)
    g4 = DBL.cross_relation((F1,), (E1,))
    assert g4 == elem((E1,), (F1,)) - elem((W1,), (), ONE / (R - S)) + elem((), (W1P,), ONE / (R - S))


def test_presentation_report():
    rows = verify_double_presentation(DBL)
    assert len(rows) == 16
    assert all(r["status"] == "pass" and r["eq8"] and r["eq9"] for r in rows)
    by_pair = {r["pair"]: r["relation_id"] for r in rows}
    assert by_pair["f1,e1"] == "G4diag" and by_pair["f2,e1"] == "G4off"
    assert by_pair["w1',w2"] == "G1" and by_pair["f1,w1"] == "G2" and by_pair["w2',e1"] == "G3"
    doc = json.loads(double_report_json(rows))
    assert set(doc[0]) == {"pair", "relation_id", "status"}


def test_keys_are_validated():
    with pytest.raises(ValueError):
        DoubleElem({((F1,), ()): ONE})


@pytest.mark.parametrize("seed", range(25))
def test_associativity(seed):
    rng = random.Random(seed)
    x, y, z = (random_double_elem(rng) for _ in range(3))
    assert DBL.mul(DBL.mul(x, y), z) == DBL.mul(x, DBL.mul(y, z))


@pytest.mark.parametrize("seed", range(25))
def test_relations_8_and_9_agree_on_random_pairs(seed):
    rng = random.Random(1000 + seed)
    f = tuple(rng.choice(sorted(BPRIME_LETTERS)) for _ in range(rng.randint(1, 2)))
    a = tuple(rng.choice(sorted(B_LETTERS)) for _ in range(rng.randint(1, 2)))
    left9, right9 = DBL.relation_9_sides(f, a)
    assert left9 == right9
    rhs8 = DBL.cross_relation(f, a)
    assert DBL.embed(rhs8) == DBL.rules.straighten(NcPoly.word(f + a))


@pytest.mark.parametrize("seed", range(10))
def test_embedding_into_u_is_multiplicative(seed):
    rng = random.Random(2000 + seed)
    x, y = random_double_elem(rng), random_double_elem(rng)
    assert DBL.embed(DBL.mul(x, y)) == DBL.rules.straighten(
        NcPoly({a + f: c for (a, f), c in x.terms.items()})
        * NcPoly({a + f: c for (a, f), c in y.terms.items()}))


@pytest.mark.parametrize("seed", range(10))
def test_borel_embeddings_are_algebra_maps(seed):
    rng = random.Random(3000 + seed)
    a1 = tuple(rng.choice(sorted(B_LETTERS)) for _ in range(2))
    a2 = tuple(rng.choice(sorted(B_LETTERS)) for _ in range(2))
    f1 = tuple(rng.choice(sorted(BPRIME_LETTERS)) for _ in range(2))
    f2 = tuple(rng.choice(sorted(BPRIME_LETTERS)) for _ in range(2))
    assert DBL.mul(elem(a1, ()), elem(a2, ())) == DBL.normalize(elem(a1 + a2, ()))
    assert DBL.mul(elem((), f1), elem((), f2)) == DBL.normalize(elem((), f1 + f2))


@pytest.mark.parametrize("gen", [(E1,), (E2,), (W1,), (W2,), (F1,), (F2,), (W1P,), (W2P,)])
def test_antipode_axiom_on_generators(gen):
    a, f = (gen, ()) if gen[0] in B_LETTERS else ((), gen)
    assert DBL.antipode_axiom(elem(a, f))


def test_antipode_axiom_on_mixed_element():
    assert DBL.antipode_axiom(elem((E1,), (F2,)))
    assert DBL.antipode_axiom(elem((W1, E2), (F1,)))


def test_relation_ids():
    assert relation_id(F1, E1) == "G4diag" and relation_id(F1, E2) == "G4off"
    assert relation_id(F2, W1) == "G2" and relation_id(W1P, E1) == "G3"
    assert relation_id(W2P, W2) == "G1"
