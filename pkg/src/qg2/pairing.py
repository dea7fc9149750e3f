"""The skew-dual pairing < , > : B' x B -> Q(r, s) and what is built on it.

B is generated by e_j, w_j^{+-1} and B' by f_j, w_j'^{+-1}.  The form is a Hopf
pairing of B'^cop with B::

    <f, a1 a2> = sum <f_(2), a1> <f_(1), a2>      (opposite coproduct on f)
    <f1 f2, a> = sum <f1, a_(1)> <f2, a_(2)>

Generator values: <f_i, e_j> = delta_ij / (s_i - r_i); <w_i', w_j> = P[i][j]
with inverses giving inverse values; every other generator pair is 0.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .free import (E1, E2, E_LETTERS, F1, F2, F_LETTERS, GROUPLIKE, INVERSE, NcPoly,
                   OMEGA, OMEGA_INV, OMEGAP, OMEGAP_INV, Word, B_LETTERS, BPRIME_LETTERS,
                   index_of, weight_of, word_str)
from .hopf import antipode, coproduct_n, counit_word
from .params import Params, SOURCE
from .scalars import ONE, R, S, RatFunc, ZERO


class PairingError(ValueError):
    pass


@dataclass(frozen=True)
class PairingTable:
    """Generator-level structure constants for a parameter pair."""

    params: Params = SOURCE

    def f_e(self, i: int, j: int) -> RatFunc:
        if i != j:
            return ZERO
        p = self.params
        return ONE / (p.si[i] - p.ri[i])

    def omega(self, i: int, j: int) -> RatFunc:
        """<w_i', w_j> for 0-based indices."""
        return self.params.omega_pairing[i][j]

    def letters(self, u: int, v: int) -> RatFunc:
        """Pairing of a single B'-letter with a single B-letter."""
        if u in F_LETTERS:
            return self.f_e(index_of(u), index_of(v)) if v in E_LETTERS else ZERO
        if v in E_LETTERS:
            return ZERO
        # both group-like
        sign_u = 1 if u in OMEGAP else -1
        sign_v = 1 if v in OMEGA else -1
        base = self.omega(index_of(u), index_of(v))
        return base ** (sign_u * sign_v)

    @cached_property
    def _memo(self) -> Dict[Tuple[Word, Word], RatFunc]:
        return {}

    def word_with_letter(self, u: Word, x: int) -> RatFunc:
        """<u, x> for a B'-word u and a single B-letter x."""
        if x in E_LETTERS:
            # <u_a f u_b, e_j> = <u_a, w_j> <f, e_j> eps(u_b); exactly one f allowed
            j = index_of(x)
            fs = [k for k, y in enumerate(u) if y in F_LETTERS]
            if len(fs) != 1:
                return ZERO
            k = fs[0]
            val = self.letters(u[k], x)
            if not val:
                return ZERO
            for y in u[:k]:
                val = val * self.letters(y, OMEGA[j])
            return val
        val = ONE
        for y in u:
            if y in F_LETTERS:
                return ZERO
            val = val * self.letters(y, x)
        return val

    def words(self, u: Word, v: Word) -> RatFunc:
        """<u, v> by peeling the last letter of v (memoised)."""
        key = (u, v)
        memo = self._memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        if not v:
            val = counit_word(u)
        elif not u:
            val = counit_word(v)
        elif len(v) == 1:
            val = self.word_with_letter(u, v[0])
        elif sum(1 for y in u if y in F_LETTERS) != sum(1 for y in v if y in E_LETTERS):
            val = ZERO
        else:
            head, last = v[:-1], v[-1]
            # <u, v' x> = sum <u_(2), v'> <u_(1), x> over D(u) = sum u_(1) (x) u_(2)
            val = ZERO
            for (u1, u2), c in coproduct_n(NcPoly.word(u), 2).terms.items():
                a = self.word_with_letter(u1, last)
                if not a:
                    continue
                b = self.words(u2, head)
                if b:
                    val = val + c * a * b
        memo[key] = val
        return val

    def words_left_peel(self, u: Word, v: Word) -> RatFunc:
        """<u, v> by peeling the last letter of u instead (second pairing law)."""
        if not u:
            return counit_word(v)
        if not v:
            return counit_word(u)
        head, y = u[:-1], u[-1]
        val = ZERO
        for (v1, v2), c in coproduct_n(NcPoly.word(v), 2).terms.items():
            b = self.words((y,), v2)
            if not b:
                continue
            a = self.words_left_peel(head, v1)
            if a:
                val = val + c * a * b
        return val


    @cached_property
    def _fe_memo(self) -> Dict[Tuple[Word, Word], RatFunc]:
        return {}

    def words_f_e(self, u: Word, v: Word) -> RatFunc:
        """<u, v> for an f-word u and an e-word v, peeling the first letter of u.

        <y u', v> = sum <y, v_(1)> <u', v_(2)>, and only the terms of D(v) with a
        single e-letter in the first slot pair nontrivially with y.
        """
        if len(u) != len(v):
            return ZERO
        if not u:
            return ONE
        key = (u, v)
        memo = self._fe_memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        y, rest = u[0], u[1:]
        i = index_of(y)
        val = ZERO
        for k, x in enumerate(v):
            if index_of(x) != i:
                continue
            first = (tuple(OMEGA[index_of(z)] for z in v[:k]) + (x,)
                     + tuple(OMEGA[index_of(z)] for z in v[k + 1:]))
            c = self.words((y,), first)
            if c:
                sub = self.words_f_e(rest, v[:k] + v[k + 1:])
                if sub:
                    val = val + c * sub
        memo[key] = val
        return val


DEFAULT_TABLE = PairingTable(SOURCE)


def _check_sides(u: NcPoly, v: NcPoly):
    for w in u.terms:
        bad = [x for x in w if x not in BPRIME_LETTERS]
        if bad:
            raise PairingError(f"left argument contains {word_str(tuple(bad[:1]))}, not in B'")
    for w in v.terms:
        bad = [x for x in w if x not in B_LETTERS]
        if bad:
            raise PairingError(f"right argument contains {word_str(tuple(bad[:1]))}, not in B")


def pair(u: NcPoly, v: NcPoly, table: PairingTable = DEFAULT_TABLE) -> RatFunc:
    """Bilinear pairing of u in B' with v in B."""
    _check_sides(u, v)
    total = ZERO
    for wu, cu in u.terms.items():
        for wv, cv in v.terms.items():
            val = table.words(wu, wv)
            if val:
                total = total + cu * cv * val
    return total


def pair_left_peel(u: NcPoly, v: NcPoly, table: PairingTable = DEFAULT_TABLE) -> RatFunc:
    _check_sides(u, v)
    total = ZERO
    for wu, cu in u.terms.items():
        for wv, cv in v.terms.items():
            val = table.words_left_peel(wu, wv)
            if val:
                total = total + cu * cv * val
    return total


def pair_antipode_check(u: NcPoly, v: NcPoly, table: PairingTable = DEFAULT_TABLE) -> bool:
    return pair(antipode(u), antipode(v), table) == pair(u, v, table)


def opposite_words(weight: Tuple[int, int], letters: Tuple[int, int]) -> List[Word]:
    """All words with m1 copies of letters[0] and m2 of letters[1], sorted."""
    m1, m2 = weight
    out = []
    for pos in itertools.combinations(range(m1 + m2), m2):
        w = [letters[0]] * (m1 + m2)
        for k in pos:
            w[k] = letters[1]
        out.append(tuple(w))
    return sorted(out)


def zero_oracle(v: NcPoly, side: str = "plus", table: PairingTable = DEFAULT_TABLE) -> bool:
    """True iff v pairs to zero with every opposite-side word of its weight.

    side='plus': v is a polynomial in e1, e2; side='minus': v is in f1, f2.
    """
    wt = weight_of(v)
    if wt is None:
        raise PairingError("zero_oracle needs a weight-homogeneous element")
    allowed = set(E_LETTERS) if side == "plus" else set(F_LETTERS)
    if side not in ("plus", "minus"):
        raise PairingError(f"side must be 'plus' or 'minus', not {side!r}")
    for w in v.terms:
        if any(x not in allowed for x in w):
            raise PairingError(f"zero_oracle({side}) needs a polynomial in "
                               + ("e1, e2" if side == "plus" else "f1, f2"))
    if not v:
        return True
    m = (abs(wt[0]), abs(wt[1]))
    if side == "plus":
        for w in opposite_words(m, (F1, F2)):
            if _sum_pairs(((w, ONE),), v.terms.items(), table):
                return False
    else:
        for w in opposite_words(m, (E1, E2)):
            if _sum_pairs(v.terms.items(), ((w, ONE),), table):
                return False
    return True


def _sum_pairs(fs, es, table: PairingTable) -> RatFunc:
    total = ZERO
    es = list(es)
    for wf, cf in fs:
        for we, ce in es:
            val = table.words_f_e(wf, we)
            if val:
                total = total + cf * ce * val
    return total


# ---------------------------------------------------------------------------
# the five-slot expansions behind the degree-4 Serre relation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TabularConstants:
    a: RatFunc
    x: RatFunc
    xbar: RatFunc
    y: RatFunc

    @classmethod
    def from_table(cls, table: PairingTable = DEFAULT_TABLE) -> "TabularConstants":
        a = table.f_e(0, 0) ** 4 * table.f_e(1, 1)
        return cls(a=a, x=table.omega(0, 0), xbar=table.omega(0, 1), y=table.omega(1, 0))

    def value(self, ex: Tuple[int, int, int]) -> RatFunc:
        return self.a * self.x ** ex[0] * self.xbar ** ex[1] * self.y ** ex[2]


# the five e-patterns of the expansion, in column order
COLUMN_PATTERNS: Tuple[Word, ...] = (
    (E1, E1, E1, E1, E2), (E1, E1, E1, E2, E1), (E1, E1, E2, E1, E1),
    (E1, E2, E1, E1, E1), (E2, E1, E1, E1, E1))

TABLE_WORDS: Tuple[Word, ...] = (
    (F1, F1, F1, F1, F2), (F2, F1, F1, F1, F1), (F1, F1, F2, F1, F1),
    (F1, F1, F1, F2, F1), (F1, F2, F1, F1, F1))


def column_weights(params: Params = SOURCE) -> Tuple[RatFunc, ...]:
    """Coefficients of the degree-4 Serre element, in column order."""
    serre = params.serre_e[1]
    return tuple(serre.coeff(w) for w in COLUMN_PATTERNS)


def slot_key(word: Word) -> str:
    """Slot text with w'-letters collected on each side of the single f."""
    k = next(i for i, x in enumerate(word) if x in F_LETTERS)

    def collect(part: Word) -> List[str]:
        out = []
        for letter in (OMEGAP[0], OMEGAP[1]):
            n = sum(1 for x in part if x == letter)
            if n:
                out.append(word_str((letter,) * n))
        return out
    return "*".join(collect(word[:k]) + [word_str((word[k],))] + collect(word[k + 1:]))


def _exponents(slots: Sequence[Word], pattern: Word) -> Tuple[int, int, int]:
    """Exponents of (x, xbar, y) from the w'-letters left of each f."""
    ex = [0, 0, 0]
    for word, e in zip(slots, pattern):
        k = next(i for i, x in enumerate(word) if x in F_LETTERS)
        for y in word[:k]:
            if y not in (OMEGAP[0], OMEGAP[1]):
                raise PairingError("unexpected letter in a slot")
            if e == E1:
                ex[0 if y == OMEGAP[0] else 2] += 1
            elif y == OMEGAP[0]:
                ex[1] += 1
            else:
                raise PairingError("<w2', w2> does not arise in these expansions")
    return tuple(ex)


@dataclass
class TabularRow:
    column: int
    slots: Tuple[str, ...]
    exponents: Tuple[int, int, int]
    value: RatFunc

    def monomial(self) -> str:
        parts = []
        for name, k in zip(("x", "xbar", "y"), self.exponents):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts + ["a"])


@dataclass
class TabularReport:
    word: Word
    rows: List[TabularRow]
    column_sums: Dict[int, Dict[Tuple[int, int, int], int]]
    column_values: Dict[int, RatFunc]
    weights: Tuple[RatFunc, ...]
    total: RatFunc
    constants: TabularConstants

    def sorted_rows(self) -> List[TabularRow]:
        return sorted(self.rows, key=lambda r: (r.column, r.slots))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["column", "slot1", "slot2", "slot3", "slot4", "slot5", "value"])
        for row in self.sorted_rows():
            w.writerow([row.column, *row.slots, row.monomial()])
        for c in sorted(self.column_sums):
            w.writerow([f"sum{c}", "", "", "", "", "", format_column_sum(self.column_sums[c])])
        w.writerow(["total", "", "", "", "", "", str(self.total)])
        return buf.getvalue()

    def summary(self) -> dict:
        return {
            "word": word_str(self.word),
            "rows": len(self.rows),
            "rows_per_column": {str(c): sum(1 for r in self.rows if r.column == c)
                                for c in sorted(self.column_sums)},
            "column_sums": {str(c): format_column_sum(s) for c, s in sorted(self.column_sums.items())},
            "column_weights": [str(w) for w in self.weights],
            "weighted_total_symbolic": self.symbolic_total(),
            "total": str(self.total),
        }

    def to_json(self) -> str:
        return json.dumps(self.summary(), indent=2, sort_keys=True)

    def symbolic_total(self) -> str:
        parts = []
        for c, wgt in zip(sorted(self.column_sums), self.weights):
            parts.append(f"({wgt})*[{format_column_sum(self.column_sums[c])}]")
        return " + ".join(parts)

    def to_text(self) -> str:
        lines = [f"{word_str(self.word)}: relevant summands of the 5-fold coproduct"]
        for c in sorted(self.column_sums):
            lines.append("")
            lines.append(f"SUMMANDS | {c}")
            for row in self.sorted_rows():
                if row.column == c:
                    lines.append(" ⊗ ".join(row.slots) + " | " + row.monomial())
            lines.append(f"column {c} sum: {format_column_sum(self.column_sums[c])}")
        lines.append("")
        lines.append(f"weighted total: {self.total}")
        return "\n".join(lines)


def format_column_sum(poly: Dict[Tuple[int, int, int], int]) -> str:
    if not poly:
        return "0"
    terms = []
    for ex in sorted(poly, key=lambda e: (e[1], e[2], e[0])):
        c = poly[ex]
        mono = []
        for name, k in zip(("x", "xbar", "y"), ex):
            if k == 1:
                mono.append(name)
            elif k:
                mono.append(f"{name}^{k}")
        body = "*".join(mono)
        if not body:
            terms.append(str(c))
        elif c == 1:
            terms.append(body)
        else:
            terms.append(f"{c}*{body}")
    return "a*(" + " + ".join(terms) + ")"


def tabular_report(word: Sequence[int], table: PairingTable = DEFAULT_TABLE) -> TabularReport:
    """Expand the 5-fold opposite coproduct of an f-word of weight (-4,-1).

    Keeps the terms with exactly one f in every slot, assigns each to the
    column whose pattern matches its f2 slot, and checks every row value two
    ways: via the pairing recursion and via the (x, xbar, y) exponent count.
    """
    word = tuple(word)
    if sorted(word) != [F1, F1, F1, F1, F2]:
        raise PairingError("tabular_report needs four f1 and one f2")
    consts = TabularConstants.from_table(table)
    expansion = coproduct_n(NcPoly.word(word), 5, opposite=True)
    rows: List[TabularRow] = []
    sums: Dict[int, Dict[Tuple[int, int, int], int]] = {c: {} for c in range(1, 6)}
    values: Dict[int, RatFunc] = {c: ZERO for c in range(1, 6)}
    for slots, coeff in expansion.terms.items():
        if any(sum(1 for x in s if x in F_LETTERS) != 1 for s in slots):
            continue
        f2_slot = next(k for k, s in enumerate(slots) if F2 in s)
        column = 5 - f2_slot
        pattern = COLUMN_PATTERNS[column - 1]
        val = coeff
        for s, e in zip(slots, pattern):
            val = val * table.word_with_letter(s, e)
        ex = _exponents(slots, pattern)
        if val != coeff * consts.value(ex):
            raise AssertionError(f"row value mismatch in {word_str(word)}")
        if not val:
            continue
        rows.append(TabularRow(column, tuple(slot_key(s) for s in slots), ex, val))
        sums[column][ex] = sums[column].get(ex, 0) + 1
        values[column] = values[column] + val
    weights = column_weights(table.params)
    total = ZERO
    for c in range(1, 6):
        total = total + weights[c - 1] * values[c]
    return TabularReport(word, rows, sums, values, weights, total, consts)


def load_fixture(n: int) -> List[Tuple[int, Tuple[str, ...], Tuple[int, int, int]]]:
    """Checked-in reference rows for table n (1..5)."""
    text = resources.files("qg2").joinpath("data", f"tabular{n}.csv").read_text()
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        out.append((int(rec["column"]), tuple(rec[f"slot{k}"] for k in range(1, 6)),
                    (int(rec["x"]), int(rec["xbar"]), int(rec["y"]))))
    return out


def fixture_diff(report: TabularReport, n: int, corrected: bool = False) -> List[str]:
    """Unified diff of fixture rows against computed rows (empty when equal)."""
    import difflib

    def fmt(col, slots, ex):
        return f"{col} | " + " ⊗ ".join(slots) + f" | x^{ex[0]} xbar^{ex[1]} y^{ex[2]}"
    source = corrected_fixture(n) if corrected else load_fixture(n)
    want = sorted(fmt(*r) for r in source)
    got = sorted(fmt(r.column, r.slots, r.exponents) for r in report.rows)
    label = f"fixture/tabular{n}" + ("+errata" if corrected else "")
    return list(difflib.unified_diff(want, got, label, "computed", lineterm=""))


@dataclass(frozen=True)
class Erratum:
    table: int
    column: int
    printed: Tuple[str, ...]
    printed_exponents: Tuple[int, int, int]
    corrected: Tuple[str, ...]
    corrected_exponents: Tuple[int, int, int]
    kind: str  # 'slot': printed summand cannot occur; 'value': printed value is wrong


def load_errata(n: Optional[int] = None) -> List[Erratum]:
    text = resources.files("qg2").joinpath("data", "tabular_errata.csv").read_text()
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        e = Erratum(int(rec["table"]), int(rec["column"]),
                    tuple(s.strip() for s in rec["printed_slots"].split("|")),
                    tuple(int(k) for k in rec["printed_exponents"].split()),
                    tuple(s.strip() for s in rec["corrected_slots"].split("|")),
                    tuple(int(k) for k in rec["corrected_exponents"].split()),
                    rec["kind"])
        if n is None or e.table == n:
            out.append(e)
    return out


def check_errata(report: TabularReport, n: int) -> List[str]:
    """Problems with the errata of table n; empty when every erratum is justified.

    A 'slot' erratum must name a printed summand that is not a term of the
    expansion at all; a 'value' erratum must name a real term whose computed
    value is the corrected one.  Either way the corrected row must be computed.
    """
    computed = {(r.column, r.slots): r.exponents for r in report.rows}
    problems = []
    for e in load_errata(n):
        got = computed.get((e.column, e.printed))
        if e.kind == "slot" and got is not None:
            problems.append(f"printed row {e.printed} is a genuine term")
        if e.kind == "value" and got != e.corrected_exponents:
            problems.append(f"printed row {e.printed} does not have the corrected value")
        if computed.get((e.column, e.corrected)) != e.corrected_exponents:
            problems.append(f"corrected row {e.corrected} is not computed")
    return problems


def corrected_fixture(n: int):
    """Fixture rows of table n with the errata applied."""
    rows = list(load_fixture(n))
    for e in load_errata(n):
        rows.remove((e.column, e.printed, e.printed_exponents))
        rows.append((e.column, e.corrected, e.corrected_exponents))
    return rows
