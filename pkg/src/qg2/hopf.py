"""Coproduct, counit, antipode and adjoint actions on free-algebra elements.

Generator data::

    D(e_i) = e_i (x) 1 + w_i (x) e_i        S(e_i) = -w_i^-1 e_i
    D(f_i) = 1 (x) f_i + f_i (x) w_i'       S(f_i) = -f_i w_i'^-1
    D(g)   = g (x) g                        S(g)   = g^-1

All maps act on the free algebra; callers straighten when they need equality
in U.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Dict, Iterable, Optional, Tuple

from .free import (E_LETTERS, F_LETTERS, GROUPLIKE, INVERSE, NcPoly, OMEGA, OMEGA_INV,
                   OMEGAP, OMEGAP_INV, Word, format_ncpoly, index_of, word_key, word_str)
from .scalars import ONE, RatFunc, ZERO

Slots = Tuple[Word, ...]


class TensorPoly:
    """Linear combination of n-tuples of words."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Optional[Dict[Slots, RatFunc]] = None):
        self.arity = arity
        self.terms: Dict[Slots, RatFunc] = {}
        for k, c in (terms or {}).items():
            if len(k) != arity:
                raise ValueError(f"tensor of arity {len(k)} in a TensorPoly of arity {arity}")
            if c:
                self.terms[tuple(k)] = c

    @classmethod
    def _raw(cls, arity: int, terms: Dict[Slots, RatFunc]) -> "TensorPoly":
        t = object.__new__(cls)
        t.arity = arity
        t.terms = terms
        return t

    @classmethod
    def pure(cls, *factors: NcPoly) -> "TensorPoly":
        """a_1 (x) a_2 (x) ... expanded bilinearly."""
        terms: Dict[Slots, RatFunc] = {(): ONE}
        for a in factors:
            nxt: Dict[Slots, RatFunc] = {}
            for k, c in terms.items():
                for w, d in a.terms.items():
                    _add(nxt, k + (w,), c * d)
            terms = nxt
        return cls._raw(len(factors), terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _check(self, other: "TensorPoly"):
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add(out, k, c)
        return TensorPoly._raw(self.arity, out)

    def __neg__(self):
        return TensorPoly._raw(self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def scale(self, c: RatFunc) -> "TensorPoly":
        if not c:
            return TensorPoly._raw(self.arity, {})
        return TensorPoly._raw(self.arity, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "TensorPoly") -> "TensorPoly":
        """Slotwise product."""
        self._check(other)
        out: Dict[Slots, RatFunc] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                _add(out, tuple(a + b for a, b in zip(k1, k2)), c1 * c2)
        return TensorPoly._raw(self.arity, out)

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    __hash__ = None

    def map_slot(self, k: int, fn: Callable[[Word], "TensorPoly"]) -> "TensorPoly":
        """Replace slot k by fn(word), which may have any arity m >= 1."""
        out: Dict[Slots, RatFunc] = {}
        arity = None
        cache: Dict[Word, TensorPoly] = {}
        for key, c in self.terms.items():
            w = key[k]
            img = cache.get(w)
            if img is None:
                img = cache[w] = fn(w)
            arity = img.arity
            for sub, d in img.terms.items():
                _add(out, key[:k] + sub + key[k + 1:], c * d)
        if arity is None:
            arity = self.arity
        return TensorPoly._raw(arity + self.arity - 1 if self.terms else self.arity, out)

    def contract(self, fn: Callable[[Slots], RatFunc]) -> RatFunc:
        """Sum of c * fn(slots): applies a multilinear functional."""
        total = ZERO
        for key, c in self.terms.items():
            v = fn(key)
            if v:
                total = total + c * v
        return total

    def multiply_slots(self) -> NcPoly:
        """m: concatenate all slots."""
        out: Dict[Word, RatFunc] = {}
        for key, c in self.terms.items():
            _add(out, sum(key, ()), c)
        return NcPoly._raw(out)

    def straighten(self, rules) -> "TensorPoly":
        """Straighten every slot independently."""
        cache: Dict[Word, NcPoly] = {}
        out: Dict[Slots, RatFunc] = {}
        for key, c in self.terms.items():
            parts = []
            for w in key:
                nf = cache.get(w)
                if nf is None:
                    nf = cache[w] = rules.straighten(NcPoly.word(w))
                parts.append(nf)
            for k2, d in TensorPoly.pure(*parts).terms.items():
                _add(out, k2, c * d)
        return TensorPoly._raw(self.arity, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: tuple(word_key(w) for w in kv[0]))

    def lines(self):
        out = []
        for key, c in self.sorted_terms():
            slots = " ⊗ ".join(word_str(w) for w in key)
            coeff = format_ncpoly(NcPoly.scalar(c))
            if coeff == "1":
                out.append(slots)
            elif coeff == "-1":
                out.append("-" + slots)
            else:
                if " " in coeff:
                    coeff = f"({coeff})"
                out.append(f"{coeff} * {slots}")
        return out

    def __str__(self):
        return "\n".join(self.lines()) if self.terms else "0"

    def __repr__(self):
        return f"TensorPoly(arity={self.arity}, terms={len(self.terms)})"


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


# ---------------------------------------------------------------------------
# coproduct
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _letter_coproduct(x: int, n: int, opposite: bool) -> Tuple[Tuple[Slots, RatFunc], ...]:
    one: Word = ()
    if x in GROUPLIKE:
        terms = [(tuple((x,) for _ in range(n)), ONE)]
    elif x in E_LETTERS:
        w = (OMEGA[index_of(x)],)
        terms = [(tuple([w] * k + [(x,)] + [one] * (n - k - 1)), ONE) for k in range(n)]
    else:
        wp = (OMEGAP[index_of(x)],)
        terms = [(tuple([one] * k + [(x,)] + [wp] * (n - k - 1)), ONE) for k in range(n)]
    if opposite:
        terms = [(key[::-1], c) for key, c in terms]
    return tuple(terms)


@lru_cache(maxsize=4096)
def _word_coproduct(word: Word, n: int, opposite: bool) -> TensorPoly:
    if not word:
        return TensorPoly._raw(n, {((),) * n: ONE})
    prefix = _word_coproduct(word[:-1], n, opposite)
    last = _letter_coproduct(word[-1], n, opposite)
    out: Dict[Slots, RatFunc] = {}
    for key, c in prefix.terms.items():
        for k2, d in last:
            _add(out, tuple(a + b for a, b in zip(key, k2)), c * d)
    return TensorPoly._raw(n, out)


def coproduct_n(a: NcPoly, n: int = 2, opposite: bool = False) -> TensorPoly:
    """Iterated coproduct into n slots; ``opposite`` uses the flipped coproduct."""
    if n < 1:
        raise ValueError("arity must be at least 1")
    out: Dict[Slots, RatFunc] = {}
    for w, c in a.terms.items():
        for key, d in _word_coproduct(w, n, opposite).terms.items():
            _add(out, key, c * d)
    return TensorPoly._raw(n, out)


def coproduct_left_fold(a: NcPoly, n: int) -> TensorPoly:
    """(D (x) id ... ) o ... o D, applied one slot at a time."""
    t = coproduct_n(a, 2)
    for _ in range(n - 2):
        t = t.map_slot(0, lambda w: coproduct_n(NcPoly.word(w), 2))
    return t


# ---------------------------------------------------------------------------
# counit and antipode
# ---------------------------------------------------------------------------

def counit_word(w: Word) -> RatFunc:
    return ONE if all(x in GROUPLIKE for x in w) else ZERO


def counit(a: NcPoly) -> RatFunc:
    total = ZERO
    for w, c in a.terms.items():
        if all(x in GROUPLIKE for x in w):
            total = total + c
    return total


@lru_cache(maxsize=None)
def _letter_antipode(x: int) -> NcPoly:
    if x in GROUPLIKE:
        return NcPoly.word((INVERSE[x],))
    i = index_of(x)
    if x in E_LETTERS:
        return NcPoly.word((OMEGA_INV[i], x), -ONE)
    return NcPoly.word((x, OMEGAP_INV[i]), -ONE)


@lru_cache(maxsize=4096)
def _word_antipode(w: Word) -> NcPoly:
    out = NcPoly.one()
    for x in reversed(w):
        out = out * _letter_antipode(x)
    return out


def antipode(a: NcPoly) -> NcPoly:
    out = NcPoly.zero()
    for w, c in a.terms.items():
        out = out + _word_antipode(w).scale(c)
    return out


# ---------------------------------------------------------------------------
# adjoint actions
# ---------------------------------------------------------------------------

def adjoint_free(side: str, a: NcPoly, b: NcPoly) -> NcPoly:
    """ad_l a (b) = sum a1 b S(a2) or ad_r a (b) = sum S(a1) b a2, unreduced."""
    out: Dict[Word, RatFunc] = {}
    for (w1, w2), c in coproduct_n(a, 2).terms.items():
        if side == "left":
            piece = NcPoly.word(w1) * b * _word_antipode(w2)
        elif side == "right":
            piece = _word_antipode(w1) * b * NcPoly.word(w2)
        else:
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        for w, d in piece.terms.items():
            _add(out, w, c * d)
    return NcPoly._raw(out)


def adjoint(side: str, a: NcPoly, b: NcPoly, rules=None) -> NcPoly:
    """Adjoint action, straightened."""
    if rules is None:
        from .rewrite import standard_rules
        rules = standard_rules()
    return rules.straighten(adjoint_free(side, a, b))


def iterated_adjoint(side: str, a: NcPoly, b: NcPoly, k: int, rules=None) -> NcPoly:
    for _ in range(k):
        b = adjoint(side, a, b, rules)
    return b


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------

def check_coassociative(a: NcPoly) -> bool:
    left = coproduct_n(a, 2).map_slot(0, lambda w: coproduct_n(NcPoly.word(w), 2))
    right = coproduct_n(a, 2).map_slot(1, lambda w: coproduct_n(NcPoly.word(w), 2))
    return left == right == coproduct_n(a, 3)


def check_counit(a: NcPoly) -> bool:
    t = coproduct_n(a, 2)
    left: Dict[Word, RatFunc] = {}
    right: Dict[Word, RatFunc] = {}
    for (w1, w2), c in t.terms.items():
        _add(left, w2, c * counit_word(w1))
        _add(right, w1, c * counit_word(w2))
    return NcPoly._raw(left) == a == NcPoly._raw(right)


def check_antipode(a: NcPoly, rules) -> bool:
    t = coproduct_n(a, 2)
    left: Dict[Word, RatFunc] = {}
    right: Dict[Word, RatFunc] = {}
    for (w1, w2), c in t.terms.items():
        for w, d in (_word_antipode(w1) * NcPoly.word(w2)).terms.items():
            _add(left, w, c * d)
        for w, d in (NcPoly.word(w1) * _word_antipode(w2)).terms.items():
            _add(right, w, c * d)
    expected = NcPoly.scalar(counit(a))
    return (rules.straighten(NcPoly._raw(left)) == expected
            and rules.straighten(NcPoly._raw(right)) == expected)


def check_multiplicative(a: NcPoly, b: NcPoly) -> bool:
    return coproduct_n(a * b, 2) == coproduct_n(a, 2) * coproduct_n(b, 2)


def serre_adjoint_scalar(i: int, j: int, side: str, params=None) -> Optional[RatFunc]:
    """Scalar c with (ad e_i)^{1-a_ij}(e_j) = c * Serre element, modulo (G1)-(G4).

    Uses e-letters for side='left' and f-letters (ad_r) for side='right'.
    Returns None when the adjoint image is not a multiple of the Serre element.
    """
    from .params import SOURCE
    from .rewrite import standard_rules
    from .free import G2
    p = params or SOURCE
    rules = standard_rules(p, serre=False)
    letters = E_LETTERS if side == "left" else F_LETTERS
    k = 1 - G2.cartan_matrix[i][j]
    x = NcPoly.word((letters[i],))
    img = iterated_adjoint(side, x, NcPoly.word((letters[j],)), k, rules)
    serre = (p.serre_e if side == "left" else p.serre_f)[0 if k == 2 else 1]
    if not img:
        return None
    lead = serre.leading_word()
    c = img.coeff(lead) / serre.coeff(lead)
    if img != serre.scale(c):
        return None
    return c
