"""The Drinfel'd double D(B, B') built from the skew-dual pairing.

Elements are combinations of pairs (a, f), a a normal word of B and f a
normal word of B'.  The product is::

    (a (x) f)(a' (x) f') = sum <S(f_(1)), a'_(1)> <f_(3), a'_(3)> a a'_(2) (x) f_(2) f'

with the ordinary double coproduct on both f and a'.  The map a (x) f -> a*f
identifies the double with U_{r,s}(G2); verification straightens there.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .free import (B_LETTERS, BPRIME_LETTERS, E_LETTERS, F_LETTERS, LETTER_NAMES, NcPoly,
                   OMEGA, OMEGAP, Word, word_str)
from .hopf import _word_antipode, coproduct_n, counit_word
from .pairing import DEFAULT_TABLE, PairingTable, pair
from .rewrite import RuleSet, standard_rules
from .scalars import ONE, RatFunc, ZERO

Key = Tuple[Word, Word]


def _add(out: dict, key, c: RatFunc):
    prev = out.get(key)
    if prev is None:
        if c:
            out[key] = c
    else:
        s = prev + c
        if s:
            out[key] = s
        else:
            del out[key]


class DoubleElem:
    """Linear combination of a (x) f with a in B, f in B'."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Key, RatFunc]] = None):
        self.terms: Dict[Key, RatFunc] = {}
        for (a, f), c in (terms or {}).items():
            if any(x not in B_LETTERS for x in a) or any(x not in BPRIME_LETTERS for x in f):
                raise ValueError("DoubleElem keys must be (B-word, B'-word)")
            if c:
                self.terms[(tuple(a), tuple(f))] = c

    @classmethod
    def _raw(cls, terms: Dict[Key, RatFunc]) -> "DoubleElem":
        d = object.__new__(cls)
        d.terms = terms
        return d

    @classmethod
    def from_b(cls, a: NcPoly) -> "DoubleElem":
        return cls({(w, ()): c for w, c in a.terms.items()})

    @classmethod
    def from_bprime(cls, f: NcPoly) -> "DoubleElem":
        return cls({((), w): c for w, c in f.terms.items()})

    @classmethod
    def one(cls) -> "DoubleElem":
        return cls._raw({((), ()): ONE})

    def __add__(self, other: "DoubleElem") -> "DoubleElem":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add(out, k, c)
        return DoubleElem._raw(out)

    def __neg__(self):
        return DoubleElem._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: RatFunc) -> "DoubleElem":
        return DoubleElem._raw({k: v * c for k, v in self.terms.items()} if c else {})

    def __eq__(self, other):
        if not isinstance(other, DoubleElem):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, f), c in sorted(self.terms.items()):
            parts.append(f"({c})*{word_str(a)} ⊗ {word_str(f)}")
        return " + ".join(parts)


class Double:
    """Multiplication, normal form and verification for D(B, B')."""

    def __init__(self, rules: Optional[RuleSet] = None, table: PairingTable = DEFAULT_TABLE):
        self.rules = rules or standard_rules(table.params)
        self.table = table
        self._nf: Dict[Word, NcPoly] = {}
        self._cross: Dict[Key, Dict[Key, RatFunc]] = {}

    def _side_nf(self, w: Word) -> NcPoly:
        hit = self._nf.get(w)
        if hit is None:
            hit = self._nf[w] = self.rules.straighten(NcPoly.word(w))
        return hit

    def normalize(self, d: DoubleElem) -> DoubleElem:
        """Straighten each side in its own Borel subalgebra."""
        out: Dict[Key, RatFunc] = {}
        for (a, f), c in d.terms.items():
            for a2, ca in self._side_nf(a).terms.items():
                for f2, cf in self._side_nf(f).terms.items():
                    _add(out, (a2, f2), c * ca * cf)
        return DoubleElem._raw(out)

    def cross(self, f: Word, a: Word) -> Dict[Key, RatFunc]:
        """Right side of (8) for f^ a^, as raw pairs (a_(2), f_(2))."""
        key = (f, a)
        hit = self._cross.get(key)
        if hit is not None:
            return hit
        out: Dict[Key, RatFunc] = {}
        tf = coproduct_n(NcPoly.word(f), 3)
        ta = coproduct_n(NcPoly.word(a), 3)
        for (f1, f2, f3), cf in tf.terms.items():
            s_f1 = _word_antipode(f1)
            for (a1, a2, a3), ca in ta.terms.items():
                right = self.table.words(f3, a3)
                if not right:
                    continue
                left = pair(s_f1, NcPoly.word(a1), self.table)
                if not left:
                    continue
                _add(out, (a2, f2), cf * ca * left * right)
        self._cross[key] = out
        return out

    def mul(self, p: DoubleElem, q: DoubleElem) -> DoubleElem:
        out: Dict[Key, RatFunc] = {}
        for (a, f), c in p.terms.items():
            for (a2, f2), d in q.terms.items():
                if not f or not a2:
                    _add(out, (a + a2, f + f2), c * d)
                    continue
                for (a_mid, f_mid), e in self.cross(f, a2).items():
                    _add(out, (a + a_mid, f_mid + f2), c * d * e)
        return self.normalize(DoubleElem._raw(out))

    def embed(self, d: DoubleElem) -> NcPoly:
        """Image a*f in U, straightened."""
        total: Dict[Word, RatFunc] = {}
        for (a, f), c in d.terms.items():
            _add(total, a + f, c)
        return self.rules.straighten(NcPoly._raw(total))

    def cross_relation(self, f: Word, a: Word) -> DoubleElem:
        return self.normalize(DoubleElem._raw(dict(self.cross(tuple(f), tuple(a)))))

    def relation_9_sides(self, f: Word, a: Word) -> Tuple[DoubleElem, DoubleElem]:
        """Both sides of (9), the left one multiplied out with (6)."""
        left = DoubleElem._raw({})
        right: Dict[Key, RatFunc] = {}
        tf = coproduct_n(NcPoly.word(tuple(f)), 2)
        ta = coproduct_n(NcPoly.word(tuple(a)), 2)
        for (f1, f2), cf in tf.terms.items():
            for (a1, a2), ca in ta.terms.items():
                lv = self.table.words(f1, a1)
                if lv:
                    prod = self.mul(DoubleElem._raw({((), f2): ONE}), DoubleElem._raw({(a2, ()): ONE}))
                    left = left + prod.scale(cf * ca * lv)
                rv = self.table.words(f2, a2)
                if rv:
                    _add(right, (a1, f1), cf * ca * rv)
        return left, self.normalize(DoubleElem._raw(right))

    def antipode(self, d: DoubleElem) -> DoubleElem:
        """S(a (x) f) = (1 (x) S(f)) (S(a) (x) 1)."""
        out = DoubleElem._raw({})
        for (a, f), c in d.terms.items():
            sf = DoubleElem.from_bprime(_word_antipode(f))
            sa = DoubleElem.from_b(_word_antipode(a))
            out = out + self.mul(sf, sa).scale(c)
        return out

    def antipode_axiom(self, d: DoubleElem) -> bool:
        """m(S (x) id) D = eps = m(id (x) S) D, with the tensor-product coproduct."""
        left = DoubleElem._raw({})
        right = DoubleElem._raw({})
        eps = ZERO
        for (a, f), c in d.terms.items():
            eps = eps + c * counit_word(a) * counit_word(f)
            ta = coproduct_n(NcPoly.word(a), 2)
            tf = coproduct_n(NcPoly.word(f), 2)
            for (a1, a2), ca in ta.terms.items():
                for (f1, f2), cf in tf.terms.items():
                    k = c * ca * cf
                    x1 = DoubleElem._raw({(a1, f1): ONE})
                    x2 = DoubleElem._raw({(a2, f2): ONE})
                    left = left + self.mul(self.antipode(x1), x2).scale(k)
                    right = right + self.mul(x1, self.antipode(x2)).scale(k)
        expected = DoubleElem._raw({((), ()): eps} if eps else {})
        return self.normalize(left) == expected == self.normalize(right)


_GEN_F = (F_LETTERS[0], F_LETTERS[1], OMEGAP[0], OMEGAP[1])
_GEN_A = (E_LETTERS[0], E_LETTERS[1], OMEGA[0], OMEGA[1])


def relation_id(f: int, a: int) -> str:
    if f in F_LETTERS and a in E_LETTERS:
        return "G4diag" if F_LETTERS.index(f) == E_LETTERS.index(a) else "G4off"
    if f in F_LETTERS:
        return "G2"
    if a in E_LETTERS:
        return "G3"
    return "G1"


def verify_pair(dbl: Double, f: int, a: int) -> dict:
    rhs = dbl.cross_relation((f,), (a,))
    lhs_u = dbl.rules.straighten(NcPoly.word((f, a)))
    ok8 = dbl.embed(rhs) == lhs_u
    left9, right9 = dbl.relation_9_sides((f,), (a,))
    ok9 = left9 == right9 and dbl.embed(left9) == dbl.embed(right9)
    return {"pair": f"{LETTER_NAMES[f]},{LETTER_NAMES[a]}", "relation_id": relation_id(f, a),
            "cross_relation": str(rhs), "eq8": ok8, "eq9": ok9,
            "status": "pass" if ok8 and ok9 else "fail"}


def verify_double_presentation(dbl: Optional[Double] = None) -> List[dict]:
    dbl = dbl or Double()
    return [verify_pair(dbl, f, a) for f in _GEN_F for a in _GEN_A]


def double_report_json(rows: List[dict]) -> str:
    return json.dumps([{k: r[k] for k in ("pair", "relation_id", "status")} for r in rows],
                      indent=2, sort_keys=True)


def random_double_elem(rng: random.Random, max_len: int = 2) -> DoubleElem:
    a_letters = sorted(B_LETTERS)
    f_letters = sorted(BPRIME_LETTERS)
    a = tuple(rng.choice(a_letters) for _ in range(rng.randint(0, max_len)))
    f = tuple(rng.choice(f_letters) for _ in range(rng.randint(0, max_len)))
    return DoubleElem({(a, f): ONE})
