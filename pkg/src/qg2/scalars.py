"""Exact arithmetic in the rational function field Q(r, s).

Polynomials in Z[r, s] are stored sparsely as ``{(i, j): c}`` meaning
``c * r**i * s**j``.  GCDs are computed by content/primitive-part recursion
over Z[r][s] with primitive pseudo-remainder sequences, so everything stays
exact and integral.  A heuristic GCD (evaluate s at a large integer, recover
the gcd digit by digit, verify by exact division) is tried first; the PRS path
is the fallback.  A :class:`RatFunc` is always kept in canonical form: coprime
numerator and denominator, and the denominator's leading coefficient
(graded-lex, r > s) positive.  Negative powers of r and s never appear as
exponents; they live in the denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, Iterable, List, Optional, Tuple

Exp = Tuple[int, int]


class ZeroDivision(ZeroDivisionError):
    """Raised on division by the zero rational function."""


# ---------------------------------------------------------------------------
# dense univariate helpers over Z (lists, low degree first)
# ---------------------------------------------------------------------------

def _u_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _u_sub(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] -= c
    return _u_trim(out)


def _u_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _u_scale(a, c):
    if c == 0:
        return []
    return [x * c for x in a]


def _u_content(a) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _u_divexact(a, b):
    """a / b in Z[x]; returns None if the division is not exact."""
    if not b:
        raise ZeroDivision("division by zero polynomial")
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return [] if not a else None
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        if c:
            qc, rem = divmod(c, lb)
            if rem:
                return None
            q[k] = qc
            for i, y in enumerate(b):
                a[k + i] -= qc * y
    if any(a[:db]):
        return None
    return q


def _u_prem(a, b):
    """Pseudo-remainder of a by b over Z."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        _u_trim(a)
    return a


def _u_primitive(a):
    c = _u_content(a)
    if c == 0:
        return []
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def _u_gcd(a, b):
    """GCD in Z[x], normalised with positive leading coefficient."""
    if not a:
        return _u_primitive_sign(b)
    if not b:
        return _u_primitive_sign(a)
    c = gcd(_u_content(a), _u_content(b))
    if len(a) == 1 or len(b) == 1:
        return [c]
    p, q = _u_primitive(a), _u_primitive(b)
    if len(p) < len(q):
        p, q = q, p
    while q:
        rem = _u_prem(p, q)
        p, q = q, _u_primitive(rem)
    p = _u_primitive(p)
    return [x * c for x in p]


def _u_primitive_sign(a):
    if not a:
        return []
    if a[-1] < 0:
        return [-x for x in a]
    return list(a)


# ---------------------------------------------------------------------------
# recursive Z[r][s] helpers: list over s-degree of Z[r] lists
# ---------------------------------------------------------------------------

def _r_content(A) -> List[int]:
    g: List[int] = []
    for c in A:
        if c:
            g = _u_gcd(g, c)
            if len(g) == 1 and g[0] == 1:
                break
    return g


def _r_divexact_coeffs(A, c):
    out = []
    for x in A:
        q = _u_divexact(x, c) if x else []
        if q is None:
            raise ArithmeticError("inexact content division")
        out.append(q)
    return out


def _r_primitive(A):
    c = _r_content(A)
    if not c:
        return []
    A = _r_divexact_coeffs(A, c)
    if A[-1][-1] < 0:
        A = [[-y for y in x] for x in A]
    return A


def _r_prem(A, B):
    A = [list(x) for x in A]
    db = len(B) - 1
    lb = B[-1]
    while A and len(A) - 1 >= db:
        c = A[-1]
        shift = len(A) - 1 - db
        A = [_u_mul(x, lb) for x in A]
        for i, y in enumerate(B):
            A[shift + i] = _u_sub(A[shift + i], _u_mul(c, y))
        while A and not A[-1]:
            A.pop()
    return A


def _r_gcd(A, B):
    """GCD in Z[r][s] by content/primitive-part recursion."""
    ca, cb = _r_content(A), _r_content(B)
    c = _u_gcd(ca, cb)
    if len(A) == 1 or len(B) == 1:
        return [c]
    P, Q = _r_divexact_coeffs(A, ca), _r_divexact_coeffs(B, cb)
    if len(P) < len(Q):
        P, Q = Q, P
    while Q:
        R = _r_prem(P, Q)
        if not R:
            P, Q = Q, []
            break
        P, Q = Q, _r_primitive(R)
    P = _r_primitive(P)
    return [_u_mul(x, c) for x in P]


def _to_nested(terms: Dict[Exp, int]):
    ds = max(j for _, j in terms)
    out: List[List[int]] = [[] for _ in range(ds + 1)]
    for (i, j), c in terms.items():
        row = out[j]
        if len(row) <= i:
            row.extend([0] * (i + 1 - len(row)))
        row[i] = c
    return out


def _from_nested(A) -> Dict[Exp, int]:
    return {(i, j): c for j, row in enumerate(A) for i, c in enumerate(row) if c}


# ---------------------------------------------------------------------------
# BiPoly
# ---------------------------------------------------------------------------

def _glex_key(e: Exp):
    return (e[0] + e[1], e[0])


class BiPoly:
    """Immutable sparse polynomial in Z[r, s]."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Dict[Exp, int]] = None):
        self.terms: Dict[Exp, int] = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exp, int]) -> "BiPoly":
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiPoly":
        return cls._raw({(i, j): c} if c else {})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        return _format_poly(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_one(self) -> bool:
        return self.terms == {(0, 0): 1}

    def leading(self) -> Tuple[Exp, int]:
        e = max(self.terms, key=_glex_key)
        return e, self.terms[e]

    def degree(self) -> Tuple[int, int]:
        return (max(i for i, _ in self.terms), max(j for _, j in self.terms))

    def min_exponents(self) -> Exp:
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def __neg__(self):
        return BiPoly._raw({k: -v for k, v in self.terms.items()})

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            c = out.get(k, 0) + v
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            c = out.get(k, 0) - v
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((i0, j0), c0), = b.items()
            return BiPoly._raw({(i + i0, j + j0): c * c0 for (i, j), c in a.items()})
        out: Dict[Exp, int] = {}
        for (i, j), c in a.items():
            for (k, l), d in b.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + c * d
        return BiPoly._raw({k: v for k, v in out.items() if v})

    def scale(self, c: int) -> "BiPoly":
        if c == 0:
            return BiPoly._raw({})
        return BiPoly._raw({k: v * c for k, v in self.terms.items()})

    def shift(self, di: int, dj: int) -> "BiPoly":
        return BiPoly._raw({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def exquo(self, other: "BiPoly") -> "BiPoly":
        """Exact quotient; raises ArithmeticError if other does not divide self."""
        if not other:
            raise ZeroDivision("division by zero polynomial")
        if not self:
            return self
        if len(other.terms) == 1:
            ((i0, j0), c0), = other.terms.items()
            out = {}
            for (i, j), c in self.terms.items():
                q, rem = divmod(c, c0)
                if rem or i < i0 or j < j0:
                    raise ArithmeticError("inexact division")
                out[(i - i0, j - j0)] = q
            return BiPoly._raw(out)
        # strip common monomial factor of the divisor
        mi, mj = other.min_exponents()
        num_mi, num_mj = self.min_exponents()
        if num_mi < mi or num_mj < mj:
            raise ArithmeticError("inexact division")
        A = _to_nested(self.shift(-mi, -mj).terms)
        B = _to_nested(other.shift(-mi, -mj).terms)
        db = len(B) - 1
        lb = B[-1]
        Q = [[] for _ in range(max(len(A) - db, 1))]
        while A and len(A) - 1 >= db:
            c = A[-1]
            q = _u_divexact(c, lb)
            if q is None:
                raise ArithmeticError("inexact division")
            k = len(A) - 1 - db
            Q[k] = q
            for i, y in enumerate(B):
                A[k + i] = _u_sub(A[k + i], _u_mul(q, y))
            while A and not A[-1]:
                A.pop()
        if A:
            raise ArithmeticError("inexact division")
        return BiPoly._raw(_from_nested(Q))

    def evaluate(self, r, s):
        total = 0
        for (i, j), c in self.terms.items():
            total += c * r ** i * s ** j
        return total

    def swapped_exps(self) -> "BiPoly":
        return BiPoly._raw({(j, i): c for (i, j), c in self.terms.items()})


# ---------------------------------------------------------------------------
# heuristic GCD (evaluate at a large integer, take the integer gcd, read the
# result back in symmetric x-adic digits, accept it only if it divides both)
# ---------------------------------------------------------------------------

_HEU_TRIES = 6


def _sym_digits(h: int, x: int) -> List[int]:
    out = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return out


def _heu_start(norm_a: int, norm_b: int, lead_a: int, lead_b: int) -> int:
    bound = 2 * min(norm_a, norm_b) + 29
    return max(min(bound, 99 * isqrt(bound)),
               2 * min(norm_a // abs(lead_a), norm_b // abs(lead_b)) + 2)


def _heu_next(x: int) -> int:
    return 73794 * x * isqrt(isqrt(x)) // 27011


def _u_eval(a: List[int], x: int) -> int:
    total = 0
    for c in reversed(a):
        total = total * x + c
    return total


def _u_heu_gcd(a: List[int], b: List[int]) -> List[int]:
    """GCD in Z[x] (content included, positive leading coefficient)."""
    if len(a) == 1 or len(b) == 1:
        return [gcd(_u_content(a), _u_content(b))]
    c = gcd(_u_content(a), _u_content(b))
    A = [v // c for v in a]
    B = [v // c for v in b]
    x = _heu_start(max(map(abs, A)), max(map(abs, B)), A[-1], B[-1])
    for _ in range(_HEU_TRIES):
        ha, hb = _u_eval(A, x), _u_eval(B, x)
        if ha and hb:
            H = _u_primitive(_sym_digits(gcd(ha, hb), x))
            if H and _u_divexact(A, H) is not None and _u_divexact(B, H) is not None:
                return [v * c for v in H]
        x = _heu_next(x)
    return _u_gcd(a, b)


def _heu_gcd(a: BiPoly, b: BiPoly) -> Optional[BiPoly]:
    """GCD in Z[r, s] by evaluating s; None when the heuristic gives up."""
    ca, cb = a.content(), b.content()
    c = gcd(ca, cb)
    A = {k: v // c for k, v in a.terms.items()}
    B = {k: v // c for k, v in b.terms.items()}

    def lead_s(p):
        top = max(j for _, j in p)
        return max((i, v) for (i, j), v in p.items() if j == top)[1]

    x = _heu_start(max(map(abs, A.values())), max(map(abs, B.values())), lead_s(A), lead_s(B))
    pa, pb = BiPoly._raw(A), BiPoly._raw(B)
    for _ in range(_HEU_TRIES):
        ua = _u_trim(_eval_s(A, x))
        ub = _u_trim(_eval_s(B, x))
        if ua and ub:
            h = _u_heu_gcd(ua, ub)
            terms: Dict[Exp, int] = {}
            for i, coeff in enumerate(h):
                for j, d in enumerate(_sym_digits(coeff, x)):
                    if d:
                        terms[(i, j)] = d
            if terms:
                H = BiPoly._raw(terms)
                cont = H.content()
                if cont != 1:
                    H = BiPoly._raw({k: v // cont for k, v in terms.items()})
                try:
                    pa.exquo(H)
                    pb.exquo(H)
                except ArithmeticError:
                    pass
                else:
                    return H.scale(c)
        x = _heu_next(x)
    return None


def _eval_s(terms: Dict[Exp, int], x: int) -> List[int]:
    n = max(i for i, _ in terms) + 1
    out = [0] * n
    for (i, j), c in terms.items():
        out[i] += c * x ** j
    return out


def bipoly_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """GCD in Z[r, s] with positive leading coefficient (graded-lex, r > s)."""
    if not a:
        return _positive(b)
    if not b:
        return _positive(a)
    ai, aj = a.min_exponents()
    bi, bj = b.min_exponents()
    mi, mj = min(ai, bi), min(aj, bj)
    if len(a.terms) == 1 or len(b.terms) == 1:
        return BiPoly.monomial(mi, mj, gcd(a.content(), b.content()))
    a = a.shift(-ai, -aj)
    b = b.shift(-bi, -bj)
    if a == b:
        g = a
    else:
        g = _heu_gcd(a, b)
        if g is None:
            g = BiPoly._raw(_from_nested(_r_gcd(_to_nested(a.terms), _to_nested(b.terms))))
    return _positive(g.shift(mi, mj))


def _positive(p: BiPoly) -> BiPoly:
    if p and p.leading()[1] < 0:
        return -p
    return p


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

_ONE = BiPoly.const(1)
_ZERO = BiPoly.const(0)


class RatFunc:
    """Element of Q(r, s) in canonical reduced form.  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: BiPoly, den: BiPoly = _ONE):
        if not den:
            raise ZeroDivision("zero denominator")
        n, d = _canonical(num, den)
        self.num, self.den = n, d
        self._hash = None

    @classmethod
    def _raw(cls, num: BiPoly, den: BiPoly) -> "RatFunc":
        x = object.__new__(cls)
        x.num, x.den, x._hash = num, den, None
        return x

    # constructors ---------------------------------------------------------
    @classmethod
    def from_int(cls, c: int) -> "RatFunc":
        return cls._raw(BiPoly.const(c), _ONE)

    @classmethod
    def from_fraction(cls, q) -> "RatFunc":
        q = Fraction(q)
        return cls(BiPoly.const(q.numerator), BiPoly.const(q.denominator))

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "RatFunc":
        """c * r**i * s**j with possibly negative exponents."""
        q = Fraction(c)
        return cls(BiPoly.monomial(max(i, 0), max(j, 0), q.numerator),
                   BiPoly.monomial(max(-i, 0), max(-j, 0), q.denominator))

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_integer(self) -> bool:
        return self.den.is_one() and (not self.num or list(self.num.terms) == [(0, 0)])

    def as_laurent_monomial(self):
        """(c, i, j) if self == c r^i s^j with c a Fraction, else None."""
        if len(self.num.terms) != 1 or len(self.den.terms) != 1:
            return None
        ((a, b), c), = self.num.terms.items()
        ((x, y), d), = self.den.terms.items()
        return Fraction(c, d), a - x, b - y

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, int):
            return RatFunc.from_int(other)
        if isinstance(other, Fraction):
            return RatFunc.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            if b.is_one():
                return RatFunc._raw(a + c, b)
            return RatFunc._reduce(a + c, b)
        if b.is_one():
            return RatFunc._raw(a * d + c, d)
        if d.is_one():
            return RatFunc._raw(a + c * b, b)
        g = bipoly_gcd(b, d)
        if g.is_one():
            return RatFunc._reduce(a * d + c * b, b * d)
        bg, dg = b.exquo(g), d.exquo(g)
        return RatFunc._reduce(a * dg + c * bg, bg * d)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

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

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RatFunc._raw(_ZERO, _ONE)
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one() and d.is_one():
            return RatFunc._raw(a * c, _ONE)
        g1 = bipoly_gcd(a, d)
        g2 = bipoly_gcd(c, b)
        if not g1.is_one():
            a, d = a.exquo(g1), d.exquo(g1)
        if not g2.is_one():
            c, b = c.exquo(g2), b.exquo(g2)
        return RatFunc._signed(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivision("division by zero in Q(r,s)")
        return RatFunc._signed(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc.from_int(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    @staticmethod
    def _signed(num: BiPoly, den: BiPoly) -> "RatFunc":
        if den.leading()[1] < 0:
            return RatFunc._raw(-num, -den)
        return RatFunc._raw(num, den)

    @staticmethod
    def _reduce(num: BiPoly, den: BiPoly) -> "RatFunc":
        n, d = _canonical(num, den)
        return RatFunc._raw(n, d)

    # equality / hashing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # substitutions --------------------------------------------------------
    def swap(self) -> "RatFunc":
        """Apply r -> 1/s, s -> 1/r (a field automorphism and an involution)."""
        return _swap_poly(self.num) / _swap_poly(self.den)

    def evaluate(self, r, s) -> Fraction:
        den = self.den.evaluate(Fraction(r), Fraction(s))
        if den == 0:
            raise ZeroDivision(f"denominator vanishes at r={r}, s={s}")
        return Fraction(self.num.evaluate(Fraction(r), Fraction(s))) / den

    def specialize(self) -> "QRatFunc":
        """Substitute r -> q, s -> 1/q."""
        return QRatFunc.from_laurent(_to_q(self.num), _to_q(self.den))

    # printing -------------------------------------------------------------
    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        return format_ratfunc(self)

    def is_atomic_text(self) -> bool:
        """True if the printed form needs no parentheses inside a product."""
        if not self.num:
            return True
        if len(self.num.terms) == 1 and len(self.den.terms) == 1:
            return True
        return False


def _canonical(num: BiPoly, den: BiPoly):
    if not num:
        return _ZERO, _ONE
    g = bipoly_gcd(num, den)
    if not g.is_one():
        num, den = num.exquo(g), den.exquo(g)
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den


def _swap_poly(p: BiPoly) -> RatFunc:
    # c r^i s^j  ->  c s^-i r^-j  =  c / (r^j s^i)
    if not p:
        return RatFunc.from_int(0)
    di = max(j for _, j in p.terms)
    dj = max(i for i, _ in p.terms)
    # multiply through by r^di s^dj
    terms = {(di - j, dj - i): c for (i, j), c in p.terms.items()}
    return RatFunc(BiPoly._raw(terms), BiPoly.monomial(di, dj))


def _to_q(p: BiPoly) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for (i, j), c in p.terms.items():
        out[i - j] = out.get(i - j, 0) + c
    return {k: v for k, v in out.items() if v}


R = RatFunc(BiPoly.monomial(1, 0))
S = RatFunc(BiPoly.monomial(0, 1))
ONE = RatFunc.from_int(1)
ZERO = RatFunc.from_int(0)


# ---------------------------------------------------------------------------
# univariate specialisation target
# ---------------------------------------------------------------------------

class QRatFunc:
    """Canonical element of Q(q): coprime integer polynomials, positive leading den."""

    __slots__ = ("num", "den")

    def __init__(self, num: List[int], den: List[int]):
        self.num, self.den = num, den

    @classmethod
    def from_laurent(cls, num: Dict[int, int], den: Dict[int, int]) -> "QRatFunc":
        if not den:
            raise ZeroDivision("denominator vanishes identically under r=q, s=1/q")
        if not num:
            return cls([], [1])
        lo = min(min(num), min(den))
        n = [0] * (max(num) - lo + 1)
        for k, c in num.items():
            n[k - lo] = c
        d = [0] * (max(den) - lo + 1)
        for k, c in den.items():
            d[k - lo] = c
        _u_trim(n)
        _u_trim(d)
        g = _u_gcd(n, d)
        n, d = _u_divexact(n, g), _u_divexact(d, g)
        if d[-1] < 0:
            n, d = [-x for x in n], [-x for x in d]
        return cls(_u_trim(n), _u_trim(d))

    @classmethod
    def parse_laurent(cls, num: Dict[int, int], den: Dict[int, int] = None) -> "QRatFunc":
        return cls.from_laurent(num, den or {0: 1})

    def __eq__(self, other):
        return isinstance(other, QRatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den)))

    def evaluate(self, q) -> Fraction:
        q = Fraction(q)
        n = sum(c * q ** k for k, c in enumerate(self.num))
        d = sum(c * q ** k for k, c in enumerate(self.den))
        return Fraction(n) / d

    def __repr__(self):
        return f"QRatFunc({self})"

    def __str__(self):
        def fmt(p):
            terms = {(k, 0): c for k, c in enumerate(p) if c}
            return _format_poly(terms, names=("q", "_"))
        if self.den == [1]:
            return fmt(self.num)
        return f"({fmt(self.num)})/({fmt(self.den)})"


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def _format_monomial(i: int, j: int, names=("r", "s")) -> str:
    parts = []
    for name, e in zip(names, (i, j)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _format_poly(terms: Dict[Exp, int], names=("r", "s")) -> str:
    if not terms:
        return "0"
    out = []
    for k in sorted(terms, key=_glex_key, reverse=True):
        c = terms[k]
        mono = _format_monomial(k[0], k[1], names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _format_laurent_term(c: Fraction, i: int, j: int) -> str:
    mono = _format_monomial(i, j)
    mag = abs(c)
    if not mono:
        body = str(mag)
    elif mag == 1:
        body = mono
    elif mag.denominator == 1:
        body = f"{mag.numerator}*{mono}"
    else:
        body = f"{mag.numerator}/{mag.denominator}*{mono}"
    return body


def format_ratfunc(x: RatFunc) -> str:
    if not x.num:
        return "0"
    if len(x.den.terms) == 1:
        ((a, b), d), = x.den.terms.items()
        out = []
        for k in sorted(x.num.terms, key=_glex_key, reverse=True):
            c = Fraction(x.num.terms[k], d)
            body = _format_laurent_term(c, k[0] - a, k[1] - b)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)
    num = str(x.num)
    if len(x.num.terms) > 1:
        num = f"({num})"
    return f"{num}/({x.den})"


def rf(text: str) -> RatFunc:
    """Parse a scalar in the text syntax (integers, r, s, + - * / ^, parentheses)."""
    from .parser import parse_scalar
    return parse_scalar(text)


def product(xs: Iterable[RatFunc]) -> RatFunc:
    out = ONE
    for x in xs:
        out = out * x
    return out
