"""Text syntax for scalars and algebra elements.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' ['-'] INT)?
    atom    := INT | NAME | '(' expr ')' | '[' expr ',' expr ']'

NAME is a scalar variable (r, s), a generator (e1, e2, f1, f2, w1, w2, w1',
w2'), or a named constant (E12, E112, E1112, E21, F12, F112, F1112, Delta).
Negative exponents are allowed on scalars and on w-letters only; division is
by scalars only.  Errors carry the byte offset into the input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Optional, Union

from .free import GROUPLIKE, INVERSE, NcPoly, format_ncpoly
from .scalars import ONE, R, RatFunc, S


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.offset = len(text[:pos].encode("utf-8"))
        self.text = text
        super().__init__(f"{message} at byte {self.offset}")


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Comm:
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Name, Neg, BinOp, Pow, Comm]

SCALAR_NAMES = ("r", "s")
GEN_NAMES = ("e1", "e2", "f1", "f2", "w1", "w2", "w1'", "w2'")
CONST_NAMES = ("E12", "E112", "E1112", "E21", "F12", "F112", "F1112", "Delta")
_OMEGA_NAMES = ("w1", "w2", "w1'", "w2'")

_TOKEN = re.compile(r"(\d+)|([A-Za-z][A-Za-z0-9]*'?)|(\S)")


def _tokenize(text: str):
    toks = []
    for m in _TOKEN.finditer(text):
        start = m.start()
        if m.group(1):
            toks.append(("int", m.group(1), start))
        elif m.group(2):
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            toks.append((ch, ch, start))
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, extra_names=()):
        self.text = text
        self.extra = frozenset(extra_names)
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek()[0] == "^":
            pos = self.take()[2]
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.take("int")
            exp = sign * int(tok[1])
            if exp < 0 and isinstance(base, Name) and base.name in GEN_NAMES \
                    and base.name not in _OMEGA_NAMES:
                raise ParseError(f"negative power of generator {base.name}", self.text, pos)
            if exp < 0 and isinstance(base, Name) and base.name not in SCALAR_NAMES \
                    and base.name not in _OMEGA_NAMES and base.name != "Delta":
                raise ParseError(f"negative power of {base.name}", self.text, pos)
            return Pow(base, exp, pos)
        return base

    def atom(self) -> Expr:
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return Num(int(val))
        if kind == "name":
            self.take()
            if (val not in SCALAR_NAMES and val not in GEN_NAMES and val not in CONST_NAMES
                    and val not in self.extra):
                raise ParseError(f"unknown identifier {val!r}", self.text, pos)
            return Name(val, pos)
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if kind == "[":
            self.take()
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take("]")
            return Comm(a, b)
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", self.text, pos)


def parse_expr(text: str, extra_names=()) -> Expr:
    """Parse ``text``; ``extra_names`` admits further named constants."""
    p = _Parser(text, extra_names)
    node = p.expr()
    p.take("end")
    return node


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def print_expr(node: Expr) -> str:
    return _print(node, 0)


def _print(node: Expr, ctx: int) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Comm):
        return f"[{_print(node.left, 0)}, {_print(node.right, 0)}]"
    if isinstance(node, Neg):
        text = "-" + _print(node.arg, 3)
        return f"({text})" if ctx > 1 else text
    if isinstance(node, Pow):
        text = f"{_print(node.base, 5)}^{node.exp}"
        return f"({text})" if ctx > 4 else text
    prec = _PREC[node.op]
    left = _print(node.left, prec)
    right = _print(node.right, prec + 1)
    text = f"{left} {node.op} {right}" if prec == 1 else f"{left}{node.op}{right}"
    return f"({text})" if prec < ctx else text


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

class EvalError(ValueError):
    pass


def default_env() -> Dict[str, NcPoly]:
    from .lusztig import root_vectors
    env = dict(root_vectors())
    return env


def evaluate(node: Expr, env: Optional[Dict[str, NcPoly]] = None,
             text: str = "") -> NcPoly:
    """Evaluate an AST to a free-algebra element (no straightening)."""
    def const(name: str, pos: int) -> NcPoly:
        if name == "Delta":
            return NcPoly.scalar(R * R + R * S + S * S)
        if env is not None and name in env:
            return env[name]
        return default_env()[name]

    def ev(n: Expr) -> NcPoly:
        if isinstance(n, Num):
            return NcPoly.scalar(n.value)
        if isinstance(n, Name):
            if n.name == "r":
                return NcPoly.scalar(R)
            if n.name == "s":
                return NcPoly.scalar(S)
            if n.name in GEN_NAMES:
                return NcPoly.gen(n.name)
            return const(n.name, n.pos)
        if isinstance(n, Neg):
            return -ev(n.arg)
        if isinstance(n, Comm):
            a, b = ev(n.left), ev(n.right)
            return a * b - b * a
        if isinstance(n, Pow):
            base = ev(n.base)
            if n.exp >= 0:
                return base ** n.exp
            sc = base.as_scalar()
            if sc is not None:
                if not sc:
                    raise EvalError("negative power of zero")
                return NcPoly.scalar(sc ** n.exp)
            if len(base.terms) == 1:
                (w, c), = base.terms.items()
                if len(w) == 1 and w[0] in GROUPLIKE:
                    return NcPoly.word((INVERSE[w[0]],) * (-n.exp), c ** n.exp)
            raise EvalError("negative power of a non-invertible element")
        a, b = ev(n.left), ev(n.right)
        if n.op == "+":
            return a + b
        if n.op == "-":
            return a - b
        if n.op == "*":
            return a * b
        sc = b.as_scalar()
        if sc is None:
            raise EvalError("division by a non-scalar")
        if not sc:
            raise EvalError("division by zero")
        return a.scale(ONE / sc)

    return ev(node)


def parse_poly(text: str, env: Optional[Dict[str, NcPoly]] = None) -> NcPoly:
    """Parse and evaluate; named constants come from ``env`` or the root-vector registry."""
    extra = tuple(k for k in (env or {}) if k not in CONST_NAMES)
    return evaluate(parse_expr(text, extra), env, text)


def parse_scalar(text: str) -> RatFunc:
    node = parse_expr(text)
    _scalar_only(node, text)
    value = evaluate(node, {}, text).as_scalar()
    if value is None:
        raise EvalError(f"{text!r} is not a scalar")
    return value


def _scalar_only(node: Expr, text: str):
    if isinstance(node, Name):
        if node.name not in SCALAR_NAMES and node.name != "Delta":
            raise ParseError(f"{node.name} is not a scalar", text, node.pos)
    elif isinstance(node, (Neg,)):
        _scalar_only(node.arg, text)
    elif isinstance(node, Pow):
        _scalar_only(node.base, text)
    elif isinstance(node, (BinOp, Comm)):
        _scalar_only(node.left, text)
        _scalar_only(node.right, text)


def canonical_text(a: NcPoly) -> str:
    return format_ncpoly(a)
