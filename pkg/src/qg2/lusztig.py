"""Divided powers, the Lusztig maps T_1, T_2 and the quantum root vectors.

T_i sends U_{r,s}(G2) to the associated algebra U_{s^-1,r^-1}(G2).  It is
Q-linear, acts on scalars by r -> 1/s, s -> 1/r and on generators by fixed
images whose coefficients are written in the letters r, s as they stand.

The associated algebra is the ring U_{r,s}(G2) with scalars acting through
that substitution, so images are straightened with the (r, s) relations.
Straightening with the relations of the swapped presentation instead breaks
already at the group-like level; see :func:`presentation_comparison`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Optional, Tuple

from .free import (E1, E2, E_LETTERS, F1, F2, F_LETTERS, G2, INVERSE, NcPoly, OMEGA, OMEGAP,
                   OMEGA_INV, OMEGAP_INV, CartanData, Word, weight_of)
from .hopf import iterated_adjoint
from .params import SOURCE, TARGET, Params
from .rewrite import RuleSet, standard_rules
from .scalars import ONE, R, RatFunc, S

DELTA = R * R + R * S + S * S


# ---------------------------------------------------------------------------
# divided powers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DividedPowerCtx:
    """Two-parameter integers <k>_i at the parameters of ``params``.

    With the swapped pair (1/s, 1/r) this is (s_i^-k - r_i^-k)/(s_i^-1 - r_i^-1).
    """

    i: int
    params: Params = TARGET

    def __post_init__(self):
        if self.i not in (1, 2):
            raise ValueError("index must be 1 or 2")

    def bracket(self, k: int) -> RatFunc:
        if k < 0:
            raise ValueError("k must be nonnegative")
        a, b = self.params.ri[self.i - 1], self.params.si[self.i - 1]
        # geometric sum, avoids a rational-function division
        total = RatFunc.from_int(0)
        for m in range(k):
            total = total + a ** (k - 1 - m) * b ** m
        return total

    def factorial(self, k: int) -> RatFunc:
        out = ONE
        for m in range(1, k + 1):
            out = out * self.bracket(m)
        return out


def divided_power(x: int, k: int, ctx: Optional[DividedPowerCtx] = None) -> NcPoly:
    """x^k / <k>_i! for x in {e_i, f_i}."""
    if x in E_LETTERS:
        i = E_LETTERS.index(x) + 1
    elif x in F_LETTERS:
        i = F_LETTERS.index(x) + 1
    else:
        raise ValueError("divided powers are defined for e_i and f_i only")
    if k < 0:
        raise ValueError("k must be nonnegative")
    ctx = ctx or DividedPowerCtx(i)
    if ctx.i != i:
        raise ValueError("context index does not match the generator")
    return NcPoly.word((x,) * k, ONE / ctx.factorial(k))


# ---------------------------------------------------------------------------
# root vectors
# ---------------------------------------------------------------------------

def _w(*letters: int) -> NcPoly:
    return NcPoly.word(letters)


def _root_vector_formulas() -> Dict[str, NcPoly]:
    r, s, d = R, S, DELTA
    e1, e2, f1, f2 = _w(E1), _w(E2), _w(F1), _w(F2)
    E12 = e1 * e2 - (e2 * e1).scale(s ** 3)
    F12 = f2 * f1 - (f1 * f2).scale(r ** 3)
    E112 = e1 * E12 - (E12 * e1).scale(r * s ** 2)
    F112 = F12 * f1 - (f1 * F12).scale(r ** 2 * s)
    E1112 = (_w(E1, E1, E1, E2) - _w(E1, E1, E2, E1).scale(s * d)
             + _w(E1, E2, E1, E1).scale(r * s ** 3 * d) - _w(E2, E1, E1, E1).scale((r * s ** 2) ** 3))
    F1112 = (_w(F2, F1, F1, F1) - _w(F1, F2, F1, F1).scale(r * d)
             + _w(F1, F1, F2, F1).scale(s * r ** 3 * d) - _w(F1, F1, F1, F2).scale((r ** 2 * s) ** 3))
    E21 = e2 * e1 - (e1 * e2).scale(r ** -3)
    return {"E12": E12, "F12": F12, "E112": E112, "F112": F112,
            "E1112": E1112, "F1112": F1112, "E21": E21}


# (side, acting generator, target generator, power) for each named vector
ADJOINT_DATA = {
    "E12": ("left", E1, E2, 1), "E112": ("left", E1, E2, 2), "E1112": ("left", E1, E2, 3),
    "F12": ("right", F1, F2, 1), "F112": ("right", F1, F2, 2), "F1112": ("right", F1, F2, 3),
    "E21": ("left", E2, E1, 1),
}


@dataclass(frozen=True)
class RootVectorRegistry:
    """Named root vectors over the source parameters, checked against ad."""

    vectors: Dict[str, NcPoly] = field(default_factory=_root_vector_formulas)
    delta: RatFunc = DELTA

    def __post_init__(self):
        bad = self.mismatches()
        if bad:
            raise AssertionError(f"root vectors disagree with iterated adjoint: {bad}")

    def mismatches(self, rules: Optional[RuleSet] = None):
        rules = rules or standard_rules(SOURCE)
        bad = []
        for name, (side, a, b, k) in ADJOINT_DATA.items():
            expected = iterated_adjoint(side, _w(a), _w(b), k, rules)
            if rules.straighten(self.vectors[name]) != expected:
                bad.append(name)
        return bad

    def __getitem__(self, name: str) -> NcPoly:
        return self.vectors[name]


@lru_cache(maxsize=None)
def _registry() -> RootVectorRegistry:
    return RootVectorRegistry()


def root_vectors() -> Dict[str, NcPoly]:
    return dict(_registry().vectors)


# ---------------------------------------------------------------------------
# Lusztig maps
# ---------------------------------------------------------------------------

def delta_plus(i: int, j: int, cartan=None) -> int:
    """1-based exponent table for the (r_j s_j) prefactor of T_i(f_j), i != j."""
    if i == j:
        raise ValueError("delta_plus is defined for i != j")
    a = (cartan or G2.cartan_matrix)[i - 1][j - 1]
    return 2 if i < j and a != 0 else 1


def _int_exp(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"non-integral exponent {x}")
    return int(x)


def _omega_power(letter_pos: int, letter_neg: int, k: int) -> Word:
    return (letter_pos,) * k if k >= 0 else (letter_neg,) * (-k)


@dataclass(frozen=True)
class LusztigMap:
    """T_i with literal generator images; coefficients of inputs go through swap."""

    i: int
    source: Params = SOURCE
    target: Params = TARGET
    cartan: CartanData = G2

    def __post_init__(self):
        if self.i not in (1, 2):
            raise ValueError("index must be 1 or 2")
        if self.cartan != G2:
            raise ValueError("only the G2 root datum is supported")
        assert delta_plus(1, 2) == 2 and delta_plus(2, 1) == 1

    @property
    def a(self):
        return self.cartan.cartan_matrix

    def _pairing(self, prime: int, plain: int) -> RatFunc:
        """<w'_prime, w_plain> over the source letters, 1-based indices."""
        return self.source.omega_pairing[prime - 1][plain - 1]

    def _group_image(self, j: int, primed: bool, sign: int) -> NcPoly:
        i = self.i
        k = -self.a[i - 1][j - 1]
        pos, neg = (OMEGAP, OMEGAP_INV) if primed else (OMEGA, OMEGA_INV)
        word = _omega_power(pos[j - 1], neg[j - 1], sign) + _omega_power(pos[i - 1], neg[i - 1], sign * k)
        if i == j:
            word = _omega_power(pos[i - 1], neg[i - 1], sign * (1 + k))
        return NcPoly.word(word)

    def _e_image(self, j: int) -> NcPoly:
        i = self.i
        p = self.source
        if i == j:
            return NcPoly.word((OMEGAP_INV[i - 1], F_LETTERS[i - 1]), -ONE)
        m = -self.a[i - 1][j - 1]
        ctx = DividedPowerCtx(i, self.target)
        ei, ej = E_LETTERS[i - 1], E_LETTERS[j - 1]
        total = NcPoly.zero()
        for nu in range(m + 1):
            c = (-ONE) ** nu
            c = c * (R * S) ** _int_exp(Fraction(nu * (m - nu), 2))
            c = c * self._pairing(j, i) ** (-nu)
            c = c * self._pairing(i, i) ** _int_exp(Fraction(nu * (1 - m), 2))
            total = total + (divided_power(ei, nu, ctx) * NcPoly.word((ej,))
                             * divided_power(ei, m - nu, ctx)).scale(c)
        return total

    def _f_image(self, j: int) -> NcPoly:
        i = self.i
        p = self.source
        if i == j:
            return NcPoly.word((E_LETTERS[i - 1], OMEGA_INV[i - 1]), -(p.ri[i - 1] * p.si[i - 1]))
        m = -self.a[i - 1][j - 1]
        ctx = DividedPowerCtx(i, self.target)
        fi, fj = F_LETTERS[i - 1], F_LETTERS[j - 1]
        total = NcPoly.zero()
        for nu in range(m + 1):
            c = (-ONE) ** nu
            c = c * (R * S) ** _int_exp(Fraction(nu * (m - nu), 2))
            c = c * self._pairing(i, j) ** nu
            c = c * self._pairing(i, i) ** (-_int_exp(Fraction(nu * (1 - m), 2)))
            total = total + (divided_power(fi, m - nu, ctx) * NcPoly.word((fj,))
                             * divided_power(fi, nu, ctx)).scale(c)
        return total.scale((p.ri[j - 1] * p.si[j - 1]) ** delta_plus(i, j))

    @cached_property
    def images(self) -> Dict[int, NcPoly]:
        out = {}
        for j in (1, 2):
            out[E_LETTERS[j - 1]] = self._e_image(j)
            out[F_LETTERS[j - 1]] = self._f_image(j)
            out[OMEGA[j - 1]] = self._group_image(j, False, 1)
            out[OMEGA_INV[j - 1]] = self._group_image(j, False, -1)
            out[OMEGAP[j - 1]] = self._group_image(j, True, 1)
            out[OMEGAP_INV[j - 1]] = self._group_image(j, True, -1)
        return out

    def apply_free(self, x: NcPoly) -> NcPoly:
        """Image in the free algebra, before straightening."""
        images = self.images
        out: Dict[Word, RatFunc] = {}
        for word, c in x.terms.items():
            piece = NcPoly.scalar(c.swap())
            for letter in word:
                piece = piece * images[letter]
            for w, d in piece.terms.items():
                v = out.get(w)
                out[w] = d if v is None else v + d
        return NcPoly({w: c for w, c in out.items() if c})

    def __call__(self, x: NcPoly, rules: Optional[RuleSet] = None) -> NcPoly:
        rules = rules or standard_rules(self.source)
        return rules.straighten(self.apply_free(x))


@lru_cache(maxsize=None)
def lusztig_map(i: int) -> LusztigMap:
    return LusztigMap(i)


def lusztig_T(i: int, x: NcPoly) -> NcPoly:
    """T_i(x), straightened in the associated algebra."""
    return lusztig_map(i)(x)


# ---------------------------------------------------------------------------
# identity catalogue
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    """``lhs = rhs`` in the grammar of :mod:`qg2.parser`.

    ``serre=False`` checks modulo the commutation relations only.
    """

    id: str
    topic: str
    lhs: str
    rhs: str = "0"
    serre: bool = True

    @property
    def text(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass
class IdentityResult:
    id: str
    topic: str
    identity_text: str
    method: str
    status: str
    millis: int
    detail: str = ""

    def as_dict(self) -> dict:
        return {"lemma_id": self.id, "topic": self.topic, "identity_text": self.identity_text,
                "method": self.method, "status": self.status, "millis": self.millis,
                "detail": self.detail}


def lusztig_env() -> Dict[str, NcPoly]:
    """Root vectors, ad4 = (ad_l e1)^4(e2), and T1e1, T1f2, T2e1, ... (unstraightened)."""
    env = root_vectors()
    env["ad4"] = _ad4()
    for i in (1, 2):
        images = lusztig_map(i).images
        for j in (1, 2):
            env[f"T{i}e{j}"] = images[E_LETTERS[j - 1]]
            env[f"T{i}f{j}"] = images[F_LETTERS[j - 1]]
    return env


@lru_cache(maxsize=None)
def _ad4() -> NcPoly:
    """(ad_l e1)^4 (e2) modulo the commutation relations only."""
    return iterated_adjoint("left", _w(E1), _w(E2), 4, standard_rules(SOURCE, serre=False))


def _one_sided(a: NcPoly) -> Optional[str]:
    letters = a.letters()
    if letters and letters <= set(E_LETTERS):
        return "plus"
    if letters and letters <= set(F_LETTERS):
        return "minus"
    return None


def check_identity(ident: Identity) -> IdentityResult:
    """Straighten lhs - rhs; one-sided differences also go through the pairing oracle."""
    import time
    from .pairing import zero_oracle
    from .parser import parse_poly

    t0 = time.perf_counter()
    env = lusztig_env()
    diff = parse_poly(ident.lhs, env) - parse_poly(ident.rhs, env)
    rules = standard_rules(SOURCE, serre=ident.serre)
    residue = rules.straighten(diff)
    by_rewriter = residue.is_zero()
    side = _one_sided(diff) if ident.serre else None
    method, detail = "rewriter", ""
    ok = by_rewriter
    if side is not None and weight_of(diff) is not None:
        method = "both"
        by_oracle = zero_oracle(diff, side)
        ok = by_rewriter and by_oracle
        if by_rewriter != by_oracle:
            detail = f"methods disagree: rewriter={by_rewriter} oracle={by_oracle}"
    if not by_rewriter and not detail:
        detail = f"residue: {residue}"
    millis = int((time.perf_counter() - t0) * 1000)
    return IdentityResult(ident.id, ident.topic, ident.text, method,
                          "pass" if ok else "fail", millis, detail)


_TOPIC_BRACKETS = "root-vector brackets"
_TOPIC_E21 = "E21 commutation lists"

BRACKET_IDENTITIES: Tuple[Identity, ...] = (
    Identity("bracket-e1-F12", _TOPIC_BRACKETS, "[e1, F12]", "-Delta*w1*f2"),
    Identity("bracket-e2-F12", _TOPIC_BRACKETS, "[e2, F12]", "f1*w2'"),
    Identity("bracket-E12-f1", _TOPIC_BRACKETS, "[E12, f1]", "-Delta*e2*w1'"),
    Identity("bracket-E12-f2", _TOPIC_BRACKETS, "[E12, f2]", "w2*e1"),
    Identity("bracket-E12-F12", _TOPIC_BRACKETS, "[E12, F12]", "(w1*w2 - w1'*w2')/(r - s)"),
    Identity("bracket-e1-F112", _TOPIC_BRACKETS, "[e1, F112]", "-(r + s)^2*w1*F12"),
    Identity("bracket-e2-F112", _TOPIC_BRACKETS, "[e2, F112]", "s*(s^2 - r^2)*f1^2*w2'"),
    Identity("bracket-E112-f1", _TOPIC_BRACKETS, "[E112, f1]", "-(r + s)^2*E12*w1'"),
    Identity("bracket-E112-f2", _TOPIC_BRACKETS, "[E112, f2]", "r*(r^2 - s^2)*w2*e1^2"),
    Identity("bracket-E112-F12", _TOPIC_BRACKETS, "[E112, F12]", "(r + s)^2*w1*w2*e1"),
    Identity("bracket-E12-F112", _TOPIC_BRACKETS, "[E12, F112]", "(r + s)^2*f1*w1'*w2'"),
    Identity("bracket-E112-F112", _TOPIC_BRACKETS, "[E112, F112]",
             "(r + s)^2*(w1^2*w2 - w1'^2*w2')/(r - s)"),
    Identity("bracket-e1-F1112", _TOPIC_BRACKETS, "[e1, F1112]", "-Delta*w1*F112"),
    Identity("bracket-E112-F1112", _TOPIC_BRACKETS, "[E112, F1112]",
             "Delta*(r + s)^2*f1*w1'^2*w2'"),
    Identity("bracket-E1112-F1112", _TOPIC_BRACKETS, "[E1112, F1112]",
             "Delta*(r + s)^2*(w2*w1^3 - w2'*w1'^3)/(r - s)"),
    Identity("E1112-recursive", _TOPIC_BRACKETS, "E1112", "e1*E112 - r^2*s*E112*e1"),
    Identity("F1112-recursive", _TOPIC_BRACKETS, "F1112", "F112*f1 - r*s^2*f1*F112"),
    # commutation of E21 powers with f1
    Identity("E21-f1", _TOPIC_E21, "[E21, f1]", "r^-3*Delta*e2*w1"),
    Identity("w1-E21", _TOPIC_E21, "w1*E21", "r*s^2*E21*w1"),
    Identity("E21sq-f1", _TOPIC_E21, "[E21^2, f1]", "r^-3*s^-1*(r + s)*Delta*E21*e2*w1"),
    Identity("w1p-E21", _TOPIC_E21, "w1'*E21", "r^2*s*E21*w1'"),
    Identity("E21cube-f1", _TOPIC_E21, "[E21^3, f1]", "r^-3*s^-2*Delta^2*E21^2*e2*w1"),
    # and with f2
    Identity("E21-f2", _TOPIC_E21, "[E21, f2]", "-r^-3*w2'*e1"),
    Identity("E21-w2p", _TOPIC_E21, "E21*w2'", "r^3*w2'*E21"),
    Identity("E21sq-f2", _TOPIC_E21, "[E21^2, f2]", "-r^-3*w2'*(e1*E21 + r^3*E21*e1)"),
    Identity("E21cube-f2", _TOPIC_E21, "[E21^3, f2]",
             "-r^-3*w2'*(e1*E21^2 + r^3*E21*e1*E21 + r^6*E21^2*e1)"),
)

# recurring elements, spelled out once
_Q = "E1112*E112 - r^3*E112*E1112"
_P = "e1*E21^3 - s*Delta*E21*e1*E21^2 + r*s^3*Delta*E21^2*e1*E21 - (r*s^2)^3*E21^3*e1"
_S = ("(r*s)^2*(r^3 - s^3)*(e1*E21^2*e1 + E21*e1^2*E21) + s^2*(2*r^2 + r*s + s^2)*(e1*E21)^2"
      " - r^5*s^3*(2*s^2 + r*s + r^2)*(E21*e1)^2 - (r + s)*(e1^2*E21^2 - (r*s)^6*E21^2*e1^2)")
_SIGMA2 = ("e1*E21^2*e2 - s^2*(r + s)*E21*e1*E21*e2 - (r*s^2)^3*e2*e1*E21^2"
           " + r*s^5*E21^2*e1*e2 + r^3*s^5*(r + s)*E21*e2*e1*E21 - r^4*s^5*E21^2*e2*e1")
_E1CUBE = "e1^3*E21 - s*Delta*e1^2*E21*e1 + r*s^3*Delta*e1*E21*e1^2 - (r*s^2)^3*E21*e1^3"
_A_DEF = ("(r*s)^2*Delta*(w1 - w1')*E21^2*e1"
          " - r^5*s^3*(2*s^2 + r*s + r^2)*E21*(w1 - w1')/(r - s)*E21*e1"
          " + (r*s)^5*(r + s)^2/(r - s)*E21^2*(s*w1 - r*w1')*e1")
_A = "-r^5*s^4*(r^3 - s^3)*E21^2*e1*w1"
_B_DEF = ("r*s*(r + s)*Delta*E21*(s*w1 - r*w1')*e1*E21"
          " + s^2*(2*r^2 + r*s + s^2)*(w1 - w1')/(r - s)*E21*e1*E21"
          " - r^5*s^3*(2*s^2 + r*s + r^2)*E21*e1*E21*(w1 - w1')/(r - s)")
_C_DEF = ("(r*s)^2*Delta*e1*E21^2*(w1 - w1')"
          " + s^2*(2*r^2 + r*s + s^2)*e1*E21*(w1 - w1')/(r - s)*E21"
          " - (r + s)^2/(r*s)*(s*w1 - r*w1')/(r - s)*e1*E21^2")
_C = "r*s^2*(r^3 - s^3)*e1*E21^2*w1"
_D_DEF = ("r^-3*Delta*((r*s)^2*(r^3 - s^3)*(s^-1*(r + s)*e1*E21*e2*w1*e1 + e2*w1*e1^2*E21"
          " + E21*e1^2*e2*w1) + s^2*(2*r^2 + r*s + s^2)*(e1*e2*w1*e1*E21 + e1*E21*e1*e2*w1)"
          " - r^5*s^3*(2*s^2 + r*s + r^2)*(e2*w1*e1*E21*e1 + E21*e1*e2*w1*e1)"
          " - (r + s)^2*s^-1*(e1^2*E21*e2*w1 - (r*s)^6*E21*e2*w1*e1^2))")
_D = "(r^3 - s^3)*(r^5*s^4*E21^2*e1 - r*s^2*e1*E21^2)*w1"
_T1E1 = "T1e1"
_TEN = ("E112*T1e1^3 - r*Delta*T1e1*E112*T1e1^2 + r^3*s*Delta*T1e1^2*E112*T1e1"
        " - (r^2*s)^3*T1e1^3*E112")
_ELEVEN = "E12*T1e1^2 - r^2*(r + s)*T1e1*E12*T1e1 + r^5*s*T1e1^2*E12"

_T_E1112 = "E1112 cross relations"
_T_E21 = "E21 quartic relation"
_T_T = "commutation of T-images"

LEMMA_IDENTITIES: Tuple[Identity, ...] = (
    Identity("E1112-f2", _T_E1112, "[E1112, f2]", "r^3*(r - s)*(r^2 - s^2)*w2*e1^3"),
    Identity("Q-f2", _T_E1112, f"[{_Q}, f2]"),
    Identity("serre-quartic-E112-form", _T_E1112,
             "e1^2*E112 - r^2*(r + s)*e1*E112*e1 + r^5*s*E112*e1^2"),
    Identity("E1112-f1", _T_E1112, "[E1112, f1]", "-Delta*E112*w1'"),
    Identity("Q-f1", _T_E1112, f"[{_Q}, f1]"),
    Identity("serre-cubic-E12-form", _T_E1112, "E12*e2", "r^3*e2*E12"),
    Identity("E112-e2", _T_E1112, "E112*e2", "r*(r^2 - s^2)*E12^2 + (r*s)^3*e2*E112"),
    Identity("E1112-e2", _T_E1112, "E1112*e2",
             "(r*s^2)^3*e2*E1112 - r*(r*s - r^2 + s^2)*E112*E12"
             " + (r*s)^2*(r^2 + r*s - s^2)*E12*E112"),
    Identity("E1112-E12-exchange", _T_E1112, "E1112*E12",
             "(r*s)^3*E12*E1112 + r*(r - s)*(r + s)^-1*Delta*E112^2"),
    Identity("E1112-E112-q-commute", _T_E1112, _Q),
    Identity("serre-cubic-E21-form", _T_E21, "E21*e2", "s^3*e2*E21"),
    Identity("P-f1", _T_E21, f"[{_P}, f1]"),
    Identity("sigma2-vanishes", _T_E21, _SIGMA2),
    Identity("P-f2", _T_E21, f"[{_P}, f2]"),
    Identity("P-f2-factor", _T_E21, f"[{_P}, f2]", f"-r^-2*s*w2'*({_S})"),
    Identity("S-vanishes", _T_E21, _S),
    Identity("S-f2", _T_E21, f"[{_S}, f2]"),
    Identity("e1sq-f1", _T_E21, "[e1^2, f1]", "(r + s)/(r*s)*(s*w1 - r*w1')/(r - s)*e1"),
    Identity("S1-part-A", _T_E21, _A_DEF, _A),
    Identity("S1-part-B", _T_E21, _B_DEF),
    Identity("S1-part-C", _T_E21, _C_DEF, _C),
    Identity("S1-part-D", _T_E21, _D_DEF, _D),
    Identity("S1-decomposition", _T_E21, f"[{_S}, f1]",
             f"({_A_DEF}) + ({_B_DEF}) + ({_C_DEF}) + ({_D_DEF})"),
    Identity("S1-closed-parts-cancel", _T_E21, f"{_A} + {_C} + {_D}"),
    Identity("e1-cubic-E21", _T_E21, _E1CUBE),
    Identity("e1-cubic-E21-is-ad4", _T_E21, _E1CUBE, "-r^-3*ad4", serre=False),
    Identity("E21-quartic", _T_E21, _P),
    Identity("T2-exchange", _T_T, "T2e1*T2e2", "r^-3*T2e2*T2e1 - r^-3*e1"),
    Identity("T2e2-e1", _T_T, "T2e2*e1", "s^3*e1*T2e2"),
    Identity("T2e1-root", _T_T, "T2e1", "-r^3*E21"),
    Identity("T2-serre-quartic-reduced", _T_T,
             "e1*T2e1^3 - s*Delta*T2e1*e1*T2e1^2 + r*s^3*Delta*T2e1^2*e1*T2e1"
             " - (r*s^2)^3*T2e1^3*e1"),
    Identity("T1e2-root", _T_T, "T1e2", "-1/(s^3*(r + s)*Delta)*E1112"),
    Identity("T1f2-root", _T_T, "T1f2", "-r^3*s^6/((r + s)*Delta)*F1112"),
    Identity("T2f1-root", _T_T, "T2f1", "r*s*(f2*f1 - s^3*f1*f2)"),
    Identity("T2-e1f1-bracket", _T_T, "[T2e1, T2f1]", "(w2*w1 - w2'*w1')/(s^-1 - r^-1)"),
    Identity("T1-exchange", _T_T, "T1e2*T1e1",
             "s^3*T1e1*T1e2 - 1/(r*s^2*(r + s))*E112"),
    Identity("T1-serre-cubic-reduced", _T_T, "T1e2*E112 - r^3*E112*T1e2"),
    Identity("T1-quartic-chain-10", _T_T, _TEN),
    Identity("T1-quartic-chain-11", _T_T, _ELEVEN),
    Identity("E112-T1e1", _T_T, "E112*T1e1", "r*s^2*T1e1*E112 + r^-1*s*(r + s)^2*E12"),
    Identity("w1p-E112", _T_T, "w1'*E112", "r*s^2*E112*w1'"),
    Identity("E12-T1e1", _T_T, "E12*T1e1", "r^2*s*T1e1*E12 + r^-1*s*Delta*e2"),
    Identity("e2-T1e1", _T_T, "e2*T1e1", "r^3*T1e1*e2"),
)


def _run_identities(idents, jobs: int = 1):
    if jobs <= 1:
        return [check_identity(x) for x in idents]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(check_identity, idents))


def bracket_catalogue(jobs: int = 1):
    return _run_identities(BRACKET_IDENTITIES, jobs)


def random_e_elements(count: int = 50, seed: int = 20240601, max_weight=(5, 2)):
    """Homogeneous e-polynomials of weight <= max_weight, half of them in the Serre ideal."""
    import random
    rng = random.Random(seed)
    serre = [(SOURCE.serre_e[0], (1, 2)), (SOURCE.serre_e[1], (4, 1))]
    out = []
    while len(out) < count:
        if len(out) % 2 == 0:
            rel, (a, b) = serre[rng.randrange(2)]
            extra1, extra2 = max_weight[0] - a, max_weight[1] - b
            if extra1 < 0 or extra2 < 0:
                continue
            k1, k2 = rng.randint(0, extra1), rng.randint(0, extra2)
            letters = [E1] * k1 + [E2] * k2
            rng.shuffle(letters)
            cut = rng.randint(0, len(letters))
            left, right = tuple(letters[:cut]), tuple(letters[cut:])
            coeff = RatFunc.monomial(rng.randint(-2, 2), rng.randint(-2, 2), rng.choice((1, -1, 2)))
            elem = (NcPoly.word(left) * rel * NcPoly.word(right)).scale(coeff)
        else:
            k1, k2 = rng.randint(1, max_weight[0]), rng.randint(0, max_weight[1])
            elem = NcPoly.zero()
            for _ in range(rng.randint(1, 3)):
                letters = [E1] * k1 + [E2] * k2
                rng.shuffle(letters)
                elem = elem + NcPoly.word(tuple(letters), RatFunc.monomial(
                    rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(-3, 3) or 1))
        if elem:
            out.append(elem)
    return out


def oracle_rewriter_agreement(count: int = 50) -> IdentityResult:
    """Rewriter and pairing oracle must agree on random homogeneous elements."""
    import time
    from .pairing import zero_oracle
    t0 = time.perf_counter()
    rules = standard_rules(SOURCE)
    disagreements, zeros = [], 0
    for k, elem in enumerate(random_e_elements(count)):
        a = rules.straighten(elem).is_zero()
        b = zero_oracle(elem, "plus")
        zeros += a
        if a != b:
            disagreements.append(k)
    detail = f"{count} elements, {zeros} in the Serre ideal"
    if disagreements:
        detail += f"; disagreement at {disagreements}"
    return IdentityResult("oracle-rewriter-agreement", "random e-elements up to weight (5,2)",
                          f"zero_oracle(x) == is_zero(x) for {count} random x", "both",
                          "fail" if disagreements else "pass",
                          int((time.perf_counter() - t0) * 1000), detail)


def lemma_suite(jobs: int = 1):
    results = _run_identities(LEMMA_IDENTITIES, jobs)
    results.append(oracle_rewriter_agreement())
    return results


def identity_report_json(results) -> str:
    import json
    return json.dumps([r.as_dict() for r in results], indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# relation preservation
# ---------------------------------------------------------------------------

def verify_T_preserves(i: int, relation_id: str, detail: Optional[dict] = None) -> bool:
    """T_i maps every relation of the given id to zero in the associated algebra.

    One-sided images are cross-checked with the pairing oracle as well.
    """
    from .pairing import zero_oracle
    T = lusztig_map(i)
    ok = True
    oracle_used = False
    for rel in SOURCE.relations()[relation_id]:
        free_image = T.apply_free(rel)
        if not T(rel).is_zero():
            ok = False
        side = _one_sided(free_image)
        if side is not None and weight_of(free_image) is not None:
            oracle_used = True
            ok = ok and zero_oracle(free_image, side)
    if detail is not None:
        detail["method"] = "both" if oracle_used else "rewriter"
    return ok


def t_preservation_matrix():
    """{(i, relation_id): bool} over both maps and all relation ids."""
    from .params import RELATION_IDS
    return {(i, rid): verify_T_preserves(i, rid) for i in (1, 2) for rid in RELATION_IDS}


def presentation_comparison():
    """Which relation ids survive when images are straightened in each presentation.

    Returns {presentation name: {(i, relation_id): bool}}.  Only the (r, s)
    presentation is consistent with the swap on scalars.
    """
    from .params import RELATION_IDS
    out = {}
    for params in (SOURCE, TARGET):
        rules = standard_rules(params)
        out[params.name] = {
            (i, rid): all(lusztig_map(i)(rel, rules).is_zero() for rel in SOURCE.relations()[rid])
            for i in (1, 2) for rid in RELATION_IDS}
    return out
