"""Registry of every verification the package performs, and the suite runner.

A check is (id, topic, closure).  The closure returns an :class:`Outcome`;
exceptions are caught and reported as failures.  Reports are sorted by id and
keep timings in their own field so that two runs compare equal once
``duration_ms`` is dropped.
"""

from __future__ import annotations

import fnmatch
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .free import (E_LETTERS, F_LETTERS, GROUPLIKE, LETTER_NAMES, NcPoly, OMEGA, OMEGA_INV,
                   OMEGAP, OMEGAP_INV, Word, word_str)
from .params import RELATION_IDS, SOURCE
from .scalars import ONE, QRatFunc


@dataclass
class Outcome:
    ok: bool
    method: str
    detail: str = ""


@dataclass(frozen=True)
class Check:
    id: str
    topic: str
    run: Callable[[], Outcome]


@dataclass
class CheckResult:
    check_id: str
    topic: str
    status: str
    method: str
    detail: str
    duration_ms: int


@dataclass
class SuiteReport:
    results: List[CheckResult] = field(default_factory=list)

    @property
    def counts(self) -> Dict[str, int]:
        passed = sum(r.status == "pass" for r in self.results)
        return {"total": len(self.results), "pass": passed, "fail": len(self.results) - passed}

    @property
    def ok(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def as_dict(self, timing: bool = True) -> dict:
        rows = []
        for r in self.results:
            d = asdict(r)
            if not timing:
                del d["duration_ms"]
            rows.append(d)
        return {"checks": rows, "summary": self.counts}

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

HOPF_SAMPLE_SEED = 20240517
ALL_LETTERS = tuple(range(len(LETTER_NAMES)))


def hopf_sample(count: int = 50, max_len: int = 4, seed: int = HOPF_SAMPLE_SEED) -> List[Word]:
    rng = random.Random(seed)
    return [tuple(rng.choice(ALL_LETTERS) for _ in range(rng.randint(1, max_len)))
            for _ in range(count)]


def _hopf_axioms() -> Outcome:
    from .hopf import check_antipode, check_coassociative, check_counit, check_multiplicative
    from .rewrite import standard_rules
    rules = standard_rules(SOURCE)
    words = [(x,) for x in ALL_LETTERS] + hopf_sample()
    bad = []
    for w in words:
        a = NcPoly.word(w)
        for name, ok in (("coassociativity", check_coassociative(a)),
                         ("counit", check_counit(a)),
                         ("antipode", check_antipode(a, rules))):
            if not ok:
                bad.append(f"{name} fails on {word_str(w)}")
    sample = hopf_sample(20, 2, HOPF_SAMPLE_SEED + 1)
    for u, v in zip(sample[::2], sample[1::2]):
        if not check_multiplicative(NcPoly.word(u), NcPoly.word(v)):
            bad.append(f"coproduct not multiplicative on {word_str(u)}, {word_str(v)}")
    return Outcome(not bad, "exact", "; ".join(bad) or f"{len(words)} elements")


def _pairing_constants() -> Outcome:
    from .pairing import DEFAULT_TABLE
    from .scalars import R, S
    t = DEFAULT_TABLE
    bad = []

    def expect(label, got, want):
        if got != want:
            bad.append(f"{label}: got {got}, want {want}")

    ri, si = (R, R ** 3), (S, S ** 3)
    for i in range(2):
        for j in range(2):
            want = ONE / (si[i] - ri[i]) if i == j else ONE * 0
            expect(f"<f{i+1},e{j+1}>", t.letters(F_LETTERS[i], E_LETTERS[j]), want)
    table = {(0, 0): R / S, (0, 1): R ** -3, (1, 0): S ** 3, (1, 1): R ** 3 / S ** 3}
    for (i, j), want in table.items():
        expect(f"<w{i+1}',w{j+1}>", t.letters(OMEGAP[i], OMEGA[j]), want)
        # inverse law: <w'^{+-1}, w^{-1}> = <w'^{+-1}, w>^{-1} = <w', w>^{-+1}
        expect(f"<w{i+1}',w{j+1}^-1>", t.letters(OMEGAP[i], OMEGA_INV[j]), want ** -1)
        expect(f"<w{i+1}'^-1,w{j+1}>", t.letters(OMEGAP_INV[i], OMEGA[j]), want ** -1)
        expect(f"<w{i+1}'^-1,w{j+1}^-1>", t.letters(OMEGAP_INV[i], OMEGA_INV[j]), want)
    # the word-level pairing agrees with the generator values
    for (i, j), want in table.items():
        expect(f"<w{i+1}'w{i+1}'^-1,w{j+1}>", t.words((OMEGAP[i], OMEGAP_INV[i]), (OMEGA[j],)), ONE)
    # everything else vanishes
    for u in F_LETTERS:
        for v in GROUPLIKE:
            if v in OMEGA or v in OMEGA_INV:
                expect(f"<{LETTER_NAMES[u]},{LETTER_NAMES[v]}>", t.letters(u, v), ONE * 0)
    for u in GROUPLIKE:
        if u in OMEGAP or u in OMEGAP_INV:
            for v in E_LETTERS:
                expect(f"<{LETTER_NAMES[u]},{LETTER_NAMES[v]}>", t.letters(u, v), ONE * 0)
    return Outcome(not bad, "exact", "; ".join(bad))


SERRE_SAMPLE_SEED = 20240518


def _serre_radical() -> Outcome:
    from .pairing import pair_antipode_check, zero_oracle
    bad = []
    for k, elem in enumerate(SOURCE.serre_e):
        if not zero_oracle(elem, "plus"):
            bad.append(f"e-side Serre element {k + 1} pairs nontrivially")
    for k, elem in enumerate(SOURCE.serre_f):
        if not zero_oracle(elem, "minus"):
            bad.append(f"f-side Serre element {k + 1} pairs nontrivially")
    rng = random.Random(SERRE_SAMPLE_SEED)
    b_letters = E_LETTERS + OMEGA + OMEGA_INV
    bp_letters = F_LETTERS + OMEGAP + OMEGAP_INV
    for _ in range(20):
        n_e = rng.randint(0, 3)
        es = [rng.choice(E_LETTERS) for _ in range(n_e)]
        fs = [F_LETTERS[E_LETTERS.index(x)] for x in es]
        rng.shuffle(fs)
        # sprinkle group-likes so the pairs are not trivially zero
        a = list(es)
        f = list(fs)
        for _ in range(rng.randint(0, 2)):
            a.insert(rng.randint(0, len(a)), rng.choice(b_letters[2:]))
            f.insert(rng.randint(0, len(f)), rng.choice(bp_letters[2:]))
        u, v = NcPoly.word(tuple(f)), NcPoly.word(tuple(a))
        if not pair_antipode_check(u, v):
            bad.append(f"<S u, S v> != <u, v> for u={u}, v={v}")
    return Outcome(not bad, "pairing", "; ".join(bad) or "4 Serre elements, 20 antipode pairs")


TABULAR_WORDS: Tuple[Tuple[int, Word], ...] = tuple(
    (n, tuple(F_LETTERS[int(c) - 1] for c in digits))
    for n, digits in ((1, "11112"), (2, "21111"), (3, "11211"), (4, "11121"), (5, "12111")))


def tabular_check_id(word: Word) -> str:
    return "tabular-" + "".join(LETTER_NAMES[x] for x in word)


def _tabular(n: int, word: Word) -> Callable[[], Outcome]:
    def run() -> Outcome:
        from .pairing import check_errata, fixture_diff, tabular_report
        rep = tabular_report(word)
        bad = []
        if len(rep.rows) != 120:
            bad.append(f"{len(rep.rows)} rows, want 120")
        if rep.total:
            bad.append(f"weighted total {rep.total}")
        bad += check_errata(rep, n)
        diff = fixture_diff(rep, n, corrected=True)
        if diff:
            bad.append(f"{len(diff)} diff lines against the corrected fixture")
        return Outcome(not bad, "expansion+fixture", "; ".join(bad))
    return run


def _double_presentation() -> Outcome:
    from .double import verify_double_presentation
    rows = verify_double_presentation()
    bad = [f"{r['pair']} ({r['relation_id']})" for r in rows if r["status"] != "pass"]
    return Outcome(not bad, "cross-product", "failing pairs: " + ", ".join(bad) if bad else
                   f"{len(rows)} generator pairs")


def _identity(ident) -> Callable[[], Outcome]:
    def run() -> Outcome:
        from .lusztig import check_identity
        res = check_identity(ident)
        return Outcome(res.status == "pass", res.method, res.detail)
    return run


def _agreement() -> Outcome:
    from .lusztig import oracle_rewriter_agreement
    res = oracle_rewriter_agreement()
    return Outcome(res.status == "pass", res.method, res.detail)


def _preserves(i: int, rid: str) -> Callable[[], Outcome]:
    def run() -> Outcome:
        from .lusztig import verify_T_preserves
        info: dict = {}
        ok = verify_T_preserves(i, rid, info)
        return Outcome(ok, info.get("method", "rewriter"))
    return run


def specialized_cartan(i: int) -> Tuple[QRatFunc, QRatFunc]:
    """Coefficients of w_i and w_i' in the straightened [e_i, f_i] at r = q, s = 1/q."""
    from .rewrite import standard_rules
    e, f = NcPoly.word((E_LETTERS[i],)), NcPoly.word((F_LETTERS[i],))
    rhs = standard_rules(SOURCE).straighten(e * f - f * e)
    if set(rhs.terms) - {(OMEGA[i],), (OMEGAP[i],)}:
        raise AssertionError(f"unexpected words in [e{i+1}, f{i+1}]: {rhs}")
    return rhs.coeff((OMEGA[i],)).specialize(), rhs.coeff((OMEGAP[i],)).specialize()


def _specialization() -> Outcome:
    bad = []
    for i, d in enumerate((1, 3)):
        # 1 / (q^d - q^-d) = q^d / (q^2d - 1)
        want = QRatFunc.from_laurent({d: 1}, {2 * d: 1, 0: -1})
        neg = QRatFunc.from_laurent({d: -1}, {2 * d: 1, 0: -1})
        got_w, got_wp = specialized_cartan(i)
        if got_w != want or got_wp != neg:
            bad.append(f"i={i+1}: got ({got_w}, {got_wp})")
    return Outcome(not bad, "exact", "; ".join(bad))


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

def build_registry() -> List[Check]:
    from .lusztig import BRACKET_IDENTITIES, LEMMA_IDENTITIES
    reg = [
        Check("hopf-axioms", "coproduct, counit and antipode axioms", _hopf_axioms),
        Check("pairing-constants", "generator values of the skew pairing", _pairing_constants),
        Check("serre-radical", "Serre elements lie in the pairing radical", _serre_radical),
    ]
    for n, word in TABULAR_WORDS:
        reg.append(Check(tabular_check_id(word), f"5-fold coproduct table of {word_str(word)}",
                         _tabular(n, word)))
    reg.append(Check("double-presentation", "cross relations of the quantum double",
                     _double_presentation))
    for ident in BRACKET_IDENTITIES:
        reg.append(Check(f"bracket/{ident.id}", ident.topic, _identity(ident)))
    for ident in LEMMA_IDENTITIES:
        reg.append(Check(f"lemma/{ident.id}", ident.topic, _identity(ident)))
    reg.append(Check("lemma/oracle-rewriter-agreement", "random e-elements up to weight (5,2)",
                     _agreement))
    for i in (1, 2):
        for rid in RELATION_IDS:
            reg.append(Check(f"T{i}-preserves-{rid}", f"T{i} maps the {rid} relations to zero",
                             _preserves(i, rid)))
    reg.append(Check("specialization", "[e_i, f_i] at r = q, s = 1/q", _specialization))
    ids = [c.id for c in reg]
    if len(set(ids)) != len(ids):
        raise AssertionError("duplicate check ids")
    return reg


def select(registry: List[Check], pattern: Optional[str]) -> List[Check]:
    if not pattern:
        return list(registry)
    return [c for c in registry if fnmatch.fnmatchcase(c.id, pattern)]


def _execute(check: Check) -> CheckResult:
    t0 = time.perf_counter()
    try:
        out = check.run()
    except Exception as exc:  # a crashing check is a failing check
        out = Outcome(False, "error", f"{type(exc).__name__}: {exc}")
    ms = int((time.perf_counter() - t0) * 1000)
    return CheckResult(check.id, check.topic, "pass" if out.ok else "fail", out.method,
                       out.detail, ms)


def run_suite(pattern: Optional[str] = None, jobs: int = 1,
              progress: Optional[Callable[[CheckResult], None]] = None) -> SuiteReport:
    """Run every check whose id matches the glob ``pattern``."""
    chosen = select(build_registry(), pattern)
    if jobs <= 1:
        results = []
        for c in chosen:
            results.append(_execute(c))
            if progress:
                progress(results[-1])
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = []
            for res in pool.map(_execute, chosen):
                results.append(res)
                if progress:
                    progress(res)
    return SuiteReport(sorted(results, key=lambda r: r.check_id))
