"""Straightening modulo (G1)-(G6).

Normal words have the triangular shape::

    (f-word) (w1'^a w2'^b) (w1^c w2^d) (e-word)

where the f- and e-words are irreducible for the Serre subsystems completed up
to a degree bound D.  The group-like block is a Laurent 4-vector, the
commutation rules (G2)-(G4) are applied in bulk while multiplying letters in
from the right, and the one-sided Serre parts are reduced with the completed
rule sets.  :func:`rewrite_with_rules` applies the same oriented rules one
occurrence at a time and exists to cross-check the fast path.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .free import (E1, E2, E_LETTERS, F1, F2, F_LETTERS, GROUPLIKE, GROUPLIKE_SLOT, INVERSE,
                   LETTER_NAMES, NcPoly, OMEGA, OMEGA_INV, OMEGAP, OMEGAP_INV, Word,
                   format_ncpoly, index_of, word_key, word_str)
from .params import Params, SOURCE, TARGET, params_by_name
from .scalars import ONE, RatFunc

DEFAULT_DEGREE_BOUND = 8

KVec = Tuple[int, int, int, int]
_K_LETTERS = ((OMEGAP[0], OMEGAP_INV[0]), (OMEGAP[1], OMEGAP_INV[1]),
              (OMEGA[0], OMEGA_INV[0]), (OMEGA[1], OMEGA_INV[1]))
_K_ZERO: KVec = (0, 0, 0, 0)


class DegreeBoundError(ValueError):
    """A one-sided word exceeds the completion bound of the rule set."""


def degree_bound_from_env(default: int = DEFAULT_DEGREE_BOUND) -> int:
    value = os.environ.get("QG2_DEGREE_BOUND")
    return int(value) if value else default


@dataclass(frozen=True)
class Rule:
    lead: Word
    replacement: NcPoly
    provenance: str

    def as_dict(self) -> dict:
        return {"lead": word_str(self.lead),
                "replacement": format_ncpoly(self.replacement),
                "provenance": self.provenance}


@dataclass
class CriticalPair:
    word: Word
    left: int
    right: int
    overlap: int
    normal_form: Optional[NcPoly] = None


def _add(out: dict, key, c: RatFunc):
    prev = out.get(key)
    if prev is None:
        out[key] = c
    else:
        s = prev + c
        if s:
            out[key] = s
        else:
            del out[key]


# ---------------------------------------------------------------------------
# one-sided rewriting
# ---------------------------------------------------------------------------

class _Reducer:
    """Word-rewriting normal forms for a list of rules, memoised per word."""

    def __init__(self, bound: Optional[int] = None):
        self.rules: Dict[Word, Dict[Word, RatFunc]] = {}
        self.lengths: List[int] = []
        self.bound = bound
        self._memo: Dict[Word, Dict[Word, RatFunc]] = {}

    def add(self, lead: Word, replacement: Dict[Word, RatFunc]):
        self.rules[lead] = replacement
        self.lengths = sorted({len(w) for w in self.rules})
        self._memo.clear()

    def find(self, word: Word):
        n = len(word)
        rules = self.rules
        for start in range(n):
            for L in self.lengths:
                if start + L > n:
                    break
                piece = word[start:start + L]
                if piece in rules:
                    return start, piece
        return None

    def nf_word(self, word: Word) -> Dict[Word, RatFunc]:
        hit = self._memo.get(word)
        if hit is not None:
            return hit
        if self.bound is not None and len(word) > self.bound:
            raise DegreeBoundError(
                f"word {word_str(word)} has degree {len(word)} > bound {self.bound}; "
                "recomplete with a larger degree bound (QG2_DEGREE_BOUND)")
        found = self.find(word)
        if found is None:
            out = {word: ONE}
        else:
            start, lead = found
            pre, post = word[:start], word[start + len(lead):]
            out: Dict[Word, RatFunc] = {}
            for w, c in self.rules[lead].items():
                for w2, c2 in self.nf_word(pre + w + post).items():
                    _add(out, w2, c * c2)
        self._memo[word] = out
        return out

    def nf(self, terms: Dict[Word, RatFunc]) -> Dict[Word, RatFunc]:
        out: Dict[Word, RatFunc] = {}
        for w, c in terms.items():
            for w2, c2 in self.nf_word(w).items():
                _add(out, w2, c * c2)
        return out


def _overlaps(a: Word, b: Word):
    """k such that the last k letters of a equal the first k letters of b."""
    for k in range(1, min(len(a), len(b))):
        if a[-k:] == b[:k]:
            yield k


def serre_complete(generators: Sequence[NcPoly], D: int,
                   names: Optional[Sequence[str]] = None) -> "RuleSet":
    """Degree-bounded critical-pair completion of a homogeneous one-sided ideal.

    Leading words are taken in deglex order.  Generators and overlap
    ambiguities are processed degree by degree, so every ambiguity of total
    length <= D is resolved when this returns.
    """
    names = list(names) if names else [f"g{k}" for k in range(len(generators))]
    red = _Reducer()
    rules: List[Rule] = []
    pairs: List[CriticalPair] = []
    by_degree: Dict[int, List[Tuple[NcPoly, str]]] = {}
    for g, name in zip(generators, names):
        if g:
            by_degree.setdefault(g.degree(), []).append((g, name))

    def install(h: Dict[Word, RatFunc], tag: str):
        lead = max(h, key=word_key)
        inv = ONE / h[lead]
        repl = {w: -c * inv for w, c in h.items() if w != lead}
        red.add(lead, repl)
        rules.append(Rule(lead, NcPoly._raw(dict(repl)), tag))

    for d in range(1, D + 1):
        candidates: List[Tuple[Dict[Word, RatFunc], str, Optional[CriticalPair]]] = []
        for g, name in by_degree.get(d, []):
            candidates.append((dict(g.terms), name, None))
        for i, ri in enumerate(rules):
            for j, rj in enumerate(rules):
                for k in _overlaps(ri.lead, rj.lead):
                    if len(ri.lead) + len(rj.lead) - k != d:
                        continue
                    word = ri.lead + rj.lead[k:]
                    left = {w + rj.lead[k:]: c for w, c in ri.replacement.terms.items()}
                    right = {ri.lead[:-k] + w: c for w, c in rj.replacement.terms.items()}
                    diff = dict(left)
                    for w, c in right.items():
                        _add(diff, w, -c)
                    cp = CriticalPair(word, i, j, k)
                    pairs.append(cp)
                    candidates.append((diff, f"overlap({rules[i].provenance},{rules[j].provenance})", cp))
        for poly, tag, cp in candidates:
            h = red.nf(poly)
            if h:
                install(h, tag)

    # tail-reduce so every replacement is itself in normal form
    final = _Reducer()
    for rule in rules:
        final.add(rule.lead, dict(rule.replacement.terms))
    tidy: List[Rule] = []
    for rule in rules:
        others = _Reducer()
        for other in rules:
            if other.lead != rule.lead:
                others.add(other.lead, dict(other.replacement.terms))
        tail = others.nf(dict(rule.replacement.terms))
        tidy.append(Rule(rule.lead, NcPoly._raw(tail), rule.provenance))
    system = RuleSet(rules=tuple(tidy), degree_bound=D, critical_pairs=pairs)
    system.recheck_confluence()
    return system


# ---------------------------------------------------------------------------
# RuleSet
# ---------------------------------------------------------------------------

class RuleSet:
    """Oriented rewriting system, confluent on words up to the degree bound.

    A one-sided RuleSet (from :func:`serre_complete`) only knows its own
    rules.  The full system for U_{rho,sigma}(G2) (from :func:`standard_rules`)
    also carries the parameter pair and the structural rules (G1)-(G4).
    """

    def __init__(self, rules: Tuple[Rule, ...], degree_bound: int,
                 critical_pairs: Optional[List[CriticalPair]] = None,
                 params: Optional[Params] = None,
                 e_side: Optional["RuleSet"] = None, f_side: Optional["RuleSet"] = None,
                 structural: Tuple[Rule, ...] = ()):
        self.rules = rules
        self.degree_bound = degree_bound
        self.critical_pairs = critical_pairs or []
        self.params = params
        self.e_side = e_side
        self.f_side = f_side
        self.structural = structural
        self._reducer = _Reducer(bound=degree_bound)
        for rule in rules:
            self._reducer.add(rule.lead, dict(rule.replacement.terms))
        self._e_past: Dict[Tuple[Word, int], RatFunc] = {}
        self._k_past: Dict[Tuple[KVec, int], RatFunc] = {}
        self._comm: Dict[Tuple[Word, int], Dict[Tuple[int, Word], RatFunc]] = {}

    # -- one-sided ----------------------------------------------------------
    def reduce_terms(self, terms: Dict[Word, RatFunc]) -> Dict[Word, RatFunc]:
        return self._reducer.nf(terms)

    def reduce_word(self, word: Word) -> Dict[Word, RatFunc]:
        return self._reducer.nf_word(word)

    def recheck_confluence(self) -> bool:
        """Re-reduce both sides of every stored critical pair; store the witness."""
        ok = True
        for cp in self.critical_pairs:
            left_rule, right_rule = self.rules[cp.left], self.rules[cp.right]
            k = cp.overlap
            left = {w + right_rule.lead[k:]: c for w, c in left_rule.replacement.terms.items()}
            right = {left_rule.lead[:-k] + w: c for w, c in right_rule.replacement.terms.items()}
            a = NcPoly._raw(self._reducer.nf(left))
            b = NcPoly._raw(self._reducer.nf(right))
            if a != b:
                ok = False
            cp.normal_form = a
        if not ok:
            raise AssertionError("completed rule set is not confluent on its critical pairs")
        return ok

    # -- full straightening -------------------------------------------------
    def _reduce_e(self, word: Word) -> Dict[Word, RatFunc]:
        if self.e_side is None:
            if len(word) > self.degree_bound:
                raise DegreeBoundError(f"e-word of degree {len(word)} > bound {self.degree_bound}")
            return {word: ONE}
        return self.e_side.reduce_word(word)

    def _reduce_f(self, word: Word) -> Dict[Word, RatFunc]:
        if self.f_side is None:
            if len(word) > self.degree_bound:
                raise DegreeBoundError(f"f-word of degree {len(word)} > bound {self.degree_bound}")
            return {word: ONE}
        return self.f_side.reduce_word(word)

    def _e_word_past(self, E: Word, g: int) -> RatFunc:
        key = (E, g)
        hit = self._e_past.get(key)
        if hit is None:
            hit = ONE
            for x in E:
                hit = hit * self.params.e_past(index_of(x), g)
            self._e_past[key] = hit
        return hit

    def _k_past_f(self, K: KVec, j: int) -> RatFunc:
        key = (K, j)
        hit = self._k_past.get(key)
        if hit is None:
            hit = ONE
            for slot, k in enumerate(K):
                if k:
                    hit = hit * self.params.past_f(_K_LETTERS[slot][0], j) ** k
            self._k_past[key] = hit
        return hit

    def _comm_e_f(self, E: Word, j: int) -> Dict[Tuple[int, Word], RatFunc]:
        """Terms of [E, f_j] as {(K-slot, reduced e-word): coeff}, group-like moved left."""
        key = (E, j)
        hit = self._comm.get(key)
        if hit is not None:
            return hit
        p = self.params
        e_j = E_LETTERS[j]
        scale = ONE / (p.ri[j] - p.si[j])
        out: Dict[Tuple[int, Word], RatFunc] = {}
        for pos, x in enumerate(E):
            if x != e_j:
                continue
            prefix, rest = E[:pos], E[:pos] + E[pos + 1:]
            reduced = self._reduce_e(rest)
            for slot, g, sign in ((2 + j, OMEGA[j], 1), (j, OMEGAP[j], -1)):
                c = scale * self._e_word_past(prefix, g)
                if sign < 0:
                    c = -c
                for w, cw in reduced.items():
                    _add(out, (slot, w), c * cw)
        self._comm[key] = out
        return out

    def _rmul_letter(self, state: Dict, x: int) -> Dict:
        out: Dict = {}
        if x in E_LETTERS:
            for (F, K, E), c in state.items():
                for E2_, c2 in self._reduce_e(E + (x,)).items():
                    _add(out, (F, K, E2_), c * c2)
        elif x in GROUPLIKE:
            slot, sign = GROUPLIKE_SLOT[x]
            for (F, K, E), c in state.items():
                K2 = list(K)
                K2[slot] += sign
                _add(out, (F, tuple(K2), E), c * self._e_word_past(E, x))
        else:
            j = index_of(x)
            for (F, K, E), c in state.items():
                chi = self._k_past_f(K, j)
                for F2_, c2 in self._reduce_f(F + (x,)).items():
                    _add(out, (F2_, K, E), c * chi * c2)
                for (slot, E3), c3 in self._comm_e_f(E, j).items():
                    K2 = list(K)
                    K2[slot] += 1
                    _add(out, (F, tuple(K2), E3), c * c3)
        return out

    def _straighten_terms(self, terms: Dict[Word, RatFunc], start: Optional[Dict] = None) -> Dict:
        """Normal-form state of sum c*w, sharing work along common prefixes."""
        trie: dict = {}
        for w, c in terms.items():
            node = trie
            for x in w:
                node = node.setdefault(x, {})
            node[None] = c
        result: Dict = {}
        init = start if start is not None else {((), _K_ZERO, ()): ONE}

        def walk(node, state):
            c = node.get(None)
            if c is not None:
                for key, v in state.items():
                    _add(result, key, v * c)
            for x, child in node.items():
                if x is None:
                    continue
                walk(child, self._rmul_letter(state, x))

        walk(trie, init)
        return result

    def straighten(self, a: NcPoly) -> NcPoly:
        if self.params is None:
            return NcPoly._raw(self._reducer.nf(a.terms))
        state = self._straighten_terms(a.terms)
        return NcPoly._raw({_state_word(k): c for k, c in state.items()})

    def multiply(self, a: NcPoly, b: NcPoly) -> NcPoly:
        """Normal form of a*b for a already in normal form."""
        start = {}
        for w, c in a.terms.items():
            _add(start, _word_state(w), c)
        if not start:
            return NcPoly.zero()
        state = self._straighten_terms(b.terms, start=start)
        return NcPoly._raw({_state_word(k): c for k, c in state.items()})

    def is_zero(self, a: NcPoly) -> bool:
        return self.straighten(a).is_zero()

    # -- audit --------------------------------------------------------------
    def all_rules(self) -> List[Rule]:
        out = list(self.structural)
        if self.e_side is not None:
            out.extend(self.e_side.rules)
        if self.f_side is not None:
            out.extend(self.f_side.rules)
        if self.params is None:
            out.extend(self.rules)
        return out

    def to_json(self) -> str:
        doc = {
            "params": self.params.name if self.params else None,
            "degree_bound": self.degree_bound,
            "rules": [r.as_dict() for r in self.all_rules()],
            "critical_pairs": sum(len(s.critical_pairs) for s in (self.e_side, self.f_side, self)
                                  if s is not None),
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def stabilization(self) -> Dict[str, Dict[int, int]]:
        """Number of completed rules per degree, for each one-sided part."""
        out = {}
        for name, side in (("e", self.e_side), ("f", self.f_side)):
            if side is None:
                continue
            counts: Dict[int, int] = {}
            for rule in side.rules:
                counts[len(rule.lead)] = counts.get(len(rule.lead), 0) + 1
            out[name] = dict(sorted(counts.items()))
        return out


def _state_word(key) -> Word:
    F, K, E = key
    mid: List[int] = []
    for slot, k in enumerate(K):
        if k > 0:
            mid.extend([_K_LETTERS[slot][0]] * k)
        elif k < 0:
            mid.extend([_K_LETTERS[slot][1]] * (-k))
    return F + tuple(mid) + E


def _word_state(word: Word):
    """Inverse of _state_word for a normal word."""
    F = []
    K = [0, 0, 0, 0]
    E = []
    for x in word:
        if x in F_LETTERS:
            if K != [0, 0, 0, 0] or E:
                raise ValueError(f"{word_str(word)} is not a normal word")
            F.append(x)
        elif x in GROUPLIKE:
            if E:
                raise ValueError(f"{word_str(word)} is not a normal word")
            slot, sign = GROUPLIKE_SLOT[x]
            K[slot] += sign
        else:
            E.append(x)
    return (tuple(F), tuple(K), tuple(E))


def structural_rules(p: Params) -> Tuple[Rule, ...]:
    """Oriented (G1)-(G4) rules; the straightener applies exactly these in bulk."""
    W = NcPoly.word
    out: List[Rule] = []
    gl = sorted(GROUPLIKE)
    for a in gl:
        for b in gl:
            if a <= b:
                continue
            sa, sb = GROUPLIKE_SLOT[a][0], GROUPLIKE_SLOT[b][0]
            if sa == sb:
                out.append(Rule((a, b), NcPoly.one(), "G1"))
            else:
                out.append(Rule((a, b), W((b, a)), "G1"))
    for a in gl:
        if INVERSE[a] < a:
            continue
        out.append(Rule((a, INVERSE[a]), NcPoly.one(), "G1"))
    for i, e in enumerate(E_LETTERS):
        for g in gl:
            tag = "G2" if g in OMEGA or g in OMEGA_INV else "G3"
            out.append(Rule((e, g), W((g, e), p.e_past(i, g)), tag))
    for g in gl:
        for i, f in enumerate(F_LETTERS):
            tag = "G2" if g in OMEGA or g in OMEGA_INV else "G3"
            out.append(Rule((g, f), W((f, g), p.past_f(g, i)), tag))
    for i, e in enumerate(E_LETTERS):
        for j, f in enumerate(F_LETTERS):
            repl = W((f, e))
            if i == j:
                repl = repl + p.cartan_h[i]
            out.append(Rule((e, f), repl, "G4"))
    return tuple(out)


@lru_cache(maxsize=None)
def _standard_rules_cached(name: str, D: int, serre: bool) -> RuleSet:
    p = params_by_name(name)
    e_side = f_side = None
    if serre:
        e_side = serre_complete(list(p.serre_e), D, names=["G5_1", "G5_2"])
        f_side = serre_complete(list(p.serre_f), D, names=["G6_1", "G6_2"])
    return RuleSet(rules=(), degree_bound=D, params=p, e_side=e_side, f_side=f_side,
                   structural=structural_rules(p))


def standard_rules(params: Params | str = SOURCE, D: Optional[int] = None,
                   serre: bool = True) -> RuleSet:
    """Rule set for U_{rho,sigma}(G2); ``serre=False`` keeps only (G1)-(G4)."""
    name = params if isinstance(params, str) else params.name
    if D is None:
        D = degree_bound_from_env()
    return _standard_rules_cached(params_by_name(name).name, D, serre)


def straighten(a: NcPoly, rules: Optional[RuleSet] = None) -> NcPoly:
    return (rules or standard_rules()).straighten(a)


def is_zero(a: NcPoly, rules: Optional[RuleSet] = None) -> bool:
    return straighten(a, rules).is_zero()


def rewrite_with_rules(a: NcPoly, rules: RuleSet, max_steps: int = 1_000_000) -> NcPoly:
    """Reference rewriting: apply the leftmost applicable rule until irreducible."""
    red = _Reducer(bound=None)
    for rule in rules.all_rules():
        red.add(rule.lead, dict(rule.replacement.terms))
    return NcPoly._raw(red.nf(a.terms))
