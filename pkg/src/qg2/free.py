"""Words and noncommutative polynomials in the generators of U_{r,s}(G2).

Letters are small integers so that words are plain tuples (cheap to hash).
Their numeric order is the monomial letter order used by the rewriter::

    f1 < f2 < w1' < w1'^-1 < w2' < w2'^-1 < w1 < w1^-1 < w2 < w2^-1 < e1 < e2

At this layer the group-like inverses are ordinary letters: nothing is
simplified until the rewrite module straightens an element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from .scalars import ONE, RatFunc, ZERO

F1, F2, W1P, W1P_INV, W2P, W2P_INV, W1, W1_INV, W2, W2_INV, E1, E2 = range(12)

LETTER_NAMES = ("f1", "f2", "w1'", "w1'^-1", "w2'", "w2'^-1",
                "w1", "w1^-1", "w2", "w2^-1", "e1", "e2")
LETTER_IDS = {name: i for i, name in enumerate(LETTER_NAMES)}

E_LETTERS = (E1, E2)
F_LETTERS = (F1, F2)
OMEGA = (W1, W2)
OMEGA_INV = (W1_INV, W2_INV)
OMEGAP = (W1P, W2P)
OMEGAP_INV = (W1P_INV, W2P_INV)
GROUPLIKE = frozenset((W1P, W1P_INV, W2P, W2P_INV, W1, W1_INV, W2, W2_INV))
B_LETTERS = frozenset((E1, E2, W1, W1_INV, W2, W2_INV))
BPRIME_LETTERS = frozenset((F1, F2, W1P, W1P_INV, W2P, W2P_INV))

INVERSE = {W1P: W1P_INV, W1P_INV: W1P, W2P: W2P_INV, W2P_INV: W2P,
           W1: W1_INV, W1_INV: W1, W2: W2_INV, W2_INV: W2}

# group-like letter -> (slot in the Laurent 4-vector (w1', w2', w1, w2), sign)
GROUPLIKE_SLOT = {W1P: (0, 1), W1P_INV: (0, -1), W2P: (1, 1), W2P_INV: (1, -1),
                  W1: (2, 1), W1_INV: (2, -1), W2: (3, 1), W2_INV: (3, -1)}

Word = Tuple[int, ...]


def index_of(letter: int) -> int:
    """Simple-root index (0 or 1) of a letter."""
    if letter in (E1, F1, W1, W1_INV, W1P, W1P_INV):
        return 0
    return 1


def word_str(word: Word) -> str:
    """Canonical text for a word, with runs compressed as powers."""
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        name = LETTER_NAMES[word[i]]
        if name.endswith("^-1"):
            base = name[:-3]
            parts.append(f"{base}^-{run}")
        elif run == 1:
            parts.append(name)
        else:
            parts.append(f"{name}^{run}")
        i = j
    return "*".join(parts)


def word_key(word: Word):
    """Deglex sort key under the letter order."""
    return (len(word), word)


def print_key(word: Word):
    """Display order: longer words first, then lexicographic."""
    return (-len(word), word)


# ---------------------------------------------------------------------------
# Cartan data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CartanData:
    """Root datum of G2 in the epsilon basis of R^3."""

    simple_roots: Tuple[Tuple[int, ...], ...] = ((1, -1, 0), (-2, 1, 1))
    positive_roots: Tuple[Tuple[int, int], ...] = field(
        default=((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)))

    def inner(self, i: int, j: int) -> int:
        a, b = self.simple_roots[i], self.simple_roots[j]
        return sum(x * y for x, y in zip(a, b))

    @property
    def d(self) -> Tuple[int, int]:
        return tuple(self.inner(i, i) // 2 for i in range(2))

    @property
    def cartan_matrix(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return tuple(tuple(2 * self.inner(i, j) // self.inner(i, i) for j in range(2))
                     for i in range(2))

    def reflect(self, i: int, weight: Tuple[int, int]) -> Tuple[int, int]:
        """Simple reflection s_i acting on a weight written in simple roots."""
        a = self.cartan_matrix
        m = list(weight)
        # s_i(alpha_j) = alpha_j - a_ij alpha_i
        coeff = sum(m[j] * a[i][j] for j in range(2))
        m[i] -= coeff
        return (m[0], m[1])


G2 = CartanData()


# ---------------------------------------------------------------------------
# NcPoly
# ---------------------------------------------------------------------------

Scalar = Union[RatFunc, int, Fraction]


def _as_rf(c: Scalar) -> RatFunc:
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, int):
        return RatFunc.from_int(c)
    return RatFunc.from_fraction(c)


class NcPoly:
    """Finite linear combination of words with coefficients in Q(r, s)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Dict[Word, RatFunc]] = None):
        self.terms: Dict[Word, RatFunc] = {}
        for w, c in (terms or {}).items():
            c = _as_rf(c)
            if c:
                self.terms[tuple(w)] = c
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Word, RatFunc]) -> "NcPoly":
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def scalar(cls, c: Scalar) -> "NcPoly":
        c = _as_rf(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def word(cls, word: Iterable[int], coeff: Scalar = 1) -> "NcPoly":
        c = _as_rf(coeff)
        return cls._raw({tuple(word): c} if c else {})

    @classmethod
    def gen(cls, name: str) -> "NcPoly":
        return cls.word((LETTER_IDS[name],))

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "NcPoly":
        return cls._raw({(): ONE})

    # container protocol ---------------------------------------------------
    def __iter__(self) -> Iterator[Tuple[Word, RatFunc]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, word: Iterable[int]) -> RatFunc:
        return self.terms.get(tuple(word), ZERO)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def letters(self) -> set:
        return {x for w in self.terms for x in w}

    def as_scalar(self) -> Optional[RatFunc]:
        if not self.terms:
            return ZERO
        if list(self.terms) == [()]:
            return self.terms[()]
        return None

    def leading_word(self) -> Word:
        return max(self.terms, key=word_key)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            return other
        if isinstance(other, (RatFunc, int, Fraction)):
            return NcPoly.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            if prev is None:
                out[w] = c
            else:
                c2 = prev + c
                if c2:
                    out[w] = c2
                else:
                    del out[w]
        return NcPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> "NcPoly":
        c = _as_rf(c)
        if not c:
            return NcPoly._raw({})
        if c.is_one():
            return self
        return NcPoly._raw({w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        out: Dict[Word, RatFunc] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                c = a * b
                prev = out.get(w)
                if prev is None:
                    out[w] = c
                else:
                    out[w] = prev + c
        return NcPoly._raw({w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(ONE / _as_rf(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a noncommutative polynomial")
        out = NcPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def map_coeffs(self, fn) -> "NcPoly":
        return NcPoly({w: fn(c) for w, c in self.terms.items()})

    # equality -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, RatFunc, Fraction)):
            other = NcPoly.scalar(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # text -----------------------------------------------------------------
    def __repr__(self):
        return f"NcPoly({self})"

    def __str__(self):
        return format_ncpoly(self)


def format_ncpoly(p: NcPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for w in sorted(p.terms, key=print_key):
        c = p.terms[w]
        text, negative = _format_term(c, w)
        if not out:
            out.append(("-" if negative else "") + text)
        else:
            out.append((" - " if negative else " + ") + text)
    return "".join(out)


def _format_term(c: RatFunc, w: Word):
    negative = False
    mono = c.as_laurent_monomial()
    if mono is not None and mono[0] < 0:
        negative = True
        c = -c
    elif mono is None and len(c.num.terms) == 1 and c.num.leading()[1] < 0:
        negative = True
        c = -c
    ws = word_str(w) if w else ""
    if c.is_one():
        return (ws or "1"), negative
    cs = str(c)
    if not c.is_atomic_text() or (" " in cs):
        cs = f"({cs})"
    if not ws:
        return cs, negative
    return f"{cs}*{ws}", negative


def gens():
    """Dictionary of generator polynomials keyed by text name."""
    return {name: NcPoly.gen(name) for name in LETTER_NAMES}


def commutator(a: NcPoly, b: NcPoly) -> NcPoly:
    """ab - ba in the free algebra (no reduction)."""
    return a * b - b * a


def poly_mul(a: NcPoly, b: NcPoly) -> NcPoly:
    return a * b


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

Weight = Tuple[int, int]


def word_weight(word: Word) -> Weight:
    m1 = m2 = 0
    for x in word:
        if x == E1:
            m1 += 1
        elif x == E2:
            m2 += 1
        elif x == F1:
            m1 -= 1
        elif x == F2:
            m2 -= 1
    return (m1, m2)


class Inhomogeneous(ValueError):
    """The polynomial mixes words of different weights."""


def weight_of(a: NcPoly) -> Optional[Weight]:
    """Common weight of all words, or None when the element is inhomogeneous.

    The zero polynomial has weight (0, 0) by convention.
    """
    weights = {word_weight(w) for w in a.terms}
    if not weights:
        return (0, 0)
    if len(weights) > 1:
        return None
    return weights.pop()
