"""Parameter pairs and the defining relations (G1)-(G6) as free-algebra elements.

Every algebra in this package is U_{rho,sigma}(G2) for a parameter pair
(rho, sigma) of elements of Q(r, s).  The source algebra uses (r, s); the
associated object reached by the Lusztig maps uses (1/s, 1/r).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

from .free import (E1, E2, F1, F2, NcPoly, OMEGA, OMEGA_INV, OMEGAP, OMEGAP_INV,
                   GROUPLIKE, INVERSE)
from .scalars import ONE, R, RatFunc, S

RELATION_IDS = ("G1", "G1inv", "G2", "G3", "G4diag", "G4off",
                "G5_1", "G5_2", "G6_1", "G6_2")


@dataclass(frozen=True)
class Params:
    name: str
    rho: RatFunc
    sigma: RatFunc

    @cached_property
    def ri(self) -> Tuple[RatFunc, RatFunc]:
        return (self.rho, self.rho ** 3)

    @cached_property
    def si(self) -> Tuple[RatFunc, RatFunc]:
        return (self.sigma, self.sigma ** 3)

    @cached_property
    def omega_pairing(self) -> Tuple[Tuple[RatFunc, RatFunc], Tuple[RatFunc, RatFunc]]:
        """Matrix P with P[i][j] = <w_{i+1}', w_{j+1}>."""
        rho, sig = self.rho, self.sigma
        return ((rho / sig, rho ** -3), (sig ** 3, rho ** 3 / sig ** 3))

    @cached_property
    def cartan_h(self) -> Tuple[NcPoly, NcPoly]:
        """(w_i - w_i') / (r_i - s_i), the right side of [e_i, f_i]."""
        out = []
        for i in range(2):
            h = NcPoly.word((OMEGA[i],)) - NcPoly.word((OMEGAP[i],))
            out.append(h.scale(ONE / (self.ri[i] - self.si[i])))
        return tuple(out)

    @cached_property
    def delta(self) -> RatFunc:
        return self.rho ** 2 + self.rho * self.sigma + self.sigma ** 2

    # conjugation scalars --------------------------------------------------
    def e_past(self, e_index: int, gl: int) -> RatFunc:
        """c with e_i * g = c * g * e_i for a group-like letter g."""
        P = self.omega_pairing
        i = e_index
        if gl in OMEGA:
            return ONE / P[i][OMEGA.index(gl)]
        if gl in OMEGA_INV:
            return P[i][OMEGA_INV.index(gl)]
        if gl in OMEGAP:
            return P[OMEGAP.index(gl)][i]
        return ONE / P[OMEGAP_INV.index(gl)][i]

    def past_f(self, gl: int, f_index: int) -> RatFunc:
        """c with g * f_i = c * f_i * g for a group-like letter g."""
        P = self.omega_pairing
        i = f_index
        if gl in OMEGA:
            return ONE / P[i][OMEGA.index(gl)]
        if gl in OMEGA_INV:
            return P[i][OMEGA_INV.index(gl)]
        if gl in OMEGAP:
            return P[OMEGAP.index(gl)][i]
        return ONE / P[OMEGAP_INV.index(gl)][i]

    # Serre elements -------------------------------------------------------
    @cached_property
    def serre_e(self) -> Tuple[NcPoly, NcPoly]:
        return (_serre_deg2(self, E1, E2, reverse=False), _serre_deg4(self, E1, E2, reverse=False))

    @cached_property
    def serre_f(self) -> Tuple[NcPoly, NcPoly]:
        return (_serre_deg2(self, F1, F2, reverse=True), _serre_deg4(self, F1, F2, reverse=True))

    def relations(self) -> Dict[str, List[NcPoly]]:
        """All defining relations, grouped by relation id, as elements that must vanish."""
        return build_relations(self)


def _serre_deg2(p: Params, x1: int, x2: int, reverse: bool) -> NcPoly:
    rho, sig = p.rho, p.sigma
    c1 = rho ** -3 + sig ** -3
    c2 = (rho * sig) ** -3
    words = [((x2, x2, x1), ONE), ((x2, x1, x2), -c1), ((x1, x2, x2), c2)]
    if reverse:
        words = [(w[::-1], c) for w, c in words]
    return NcPoly(dict(words))


def _serre_deg4(p: Params, x1: int, x2: int, reverse: bool) -> NcPoly:
    rho, sig = p.rho, p.sigma
    a = (rho + sig) * (rho ** 2 + sig ** 2)
    b = rho * sig * (rho ** 2 + sig ** 2) * p.delta
    c = (rho * sig) ** 3 * (rho + sig) * (rho ** 2 + sig ** 2)
    d = (rho * sig) ** 6
    words = [((x1, x1, x1, x1, x2), ONE), ((x1, x1, x1, x2, x1), -a),
             ((x1, x1, x2, x1, x1), b), ((x1, x2, x1, x1, x1), -c), ((x2, x1, x1, x1, x1), d)]
    if reverse:
        words = [(w[::-1], c_) for w, c_ in words]
    return NcPoly(dict(words))


def build_relations(p: Params) -> Dict[str, List[NcPoly]]:
    P = p.omega_pairing
    W = lambda *letters: NcPoly.word(letters)  # noqa: E731
    rel: Dict[str, List[NcPoly]] = {k: [] for k in RELATION_IDS}
    gl = sorted(GROUPLIKE)
    for a in gl:
        for b in gl:
            if a < b and INVERSE[a] != b:
                rel["G1"].append(W(a, b) - W(b, a))
    for a in gl:
        rel["G1inv"].append(W(a, INVERSE[a]) - 1)
    for j in range(2):
        for i in range(2):
            e, f = (E1, E2)[i], (F1, F2)[i]
            w, wi = OMEGA[j], OMEGA_INV[j]
            rel["G2"].append(W(w, e, wi) - W(e).scale(P[i][j]))
            rel["G2"].append(W(w, f, wi) - W(f).scale(ONE / P[i][j]))
            w, wi = OMEGAP[j], OMEGAP_INV[j]
            rel["G3"].append(W(w, e, wi) - W(e).scale(ONE / P[j][i]))
            rel["G3"].append(W(w, f, wi) - W(f).scale(P[j][i]))
    for i in range(2):
        for j in range(2):
            e, f = (E1, E2)[i], (F1, F2)[j]
            comm = W(e, f) - W(f, e)
            if i == j:
                rel["G4diag"].append(comm - p.cartan_h[i])
            else:
                rel["G4off"].append(comm)
    rel["G5_1"].append(p.serre_e[0])
    rel["G5_2"].append(p.serre_e[1])
    rel["G6_1"].append(p.serre_f[0])
    rel["G6_2"].append(p.serre_f[1])
    return rel


SOURCE = Params("rs", R, S)
TARGET = Params("swapped", ONE / S, ONE / R)


def params_by_name(name: str) -> Params:
    if name in ("rs", "source"):
        return SOURCE
    if name in ("swapped", "target", "sr"):
        return TARGET
    raise KeyError(f"unknown parameter set {name!r}")
