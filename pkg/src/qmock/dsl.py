"""A small expression language for q-series: parser, formatter and evaluator.

Grammar (EBNF)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ["^" (int | "-" int | ident | "(" expr ")")]
    atom   := int | "q" | "inf" | "zeta" "(" int ")" | call | ident | "(" expr ")"
    call   := ident "(" arg (("," | ";") arg)* ")"
    arg    := expr | "[" [expr ("," expr)*] "]"

Calls are ``sum(n, lo, hi, body)``, ``phi([uppers], [lowers]; base; z)``, the block
functions listed in ``FUNCTIONS`` and named q-series from the zoo, optionally applied
to a monomial argument as in ``phi0_5(-q)``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from . import blocks, conversion, hypergeom, thetafn
from ._lazy import inverse_factor, product_to_order
from .algebra import (INF, Monomial, Series, _floor_units, _units, canon, scalar_inverse,
                      series_mul, substitute_monomial, zeta_power)
from .errors import DSLSyntaxError, EvaluationError, NonTruncatable, PoleError, QMockError

# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


class Node:
    __slots__ = ()


@dataclass(frozen=True)
class Num(Node):
    value: int


@dataclass(frozen=True)
class QSym(Node):
    pass


@dataclass(frozen=True)
class Inf(Node):
    pass


@dataclass(frozen=True)
class Zeta(Node):
    n: int


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class Neg(Node):
    arg: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str  # + - * /
    left: Node
    right: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exp: Node


@dataclass(frozen=True)
class Call(Node):
    fn: str
    args: Tuple[Node, ...]


@dataclass(frozen=True)
class Sum(Node):
    var: str
    lo: Node
    hi: Node
    body: Node


@dataclass(frozen=True)
class Phi(Node):
    uppers: Tuple[Node, ...]
    lowers: Tuple[Node, ...]
    base: Node
    arg: Node


@dataclass(frozen=True)
class Named(Node):
    name: str
    arg: Optional[Node] = None


Expr = Node

# argument kinds: m = monomial, r = rational, i = integer, c = count (integer or inf)
FUNCTIONS: Dict[str, Tuple[str, str]] = {
    # name: (kinds, canonical separators between consecutive args)
    "aqprod": ("mmc", ";;"),
    "pochdual": ("mmc", ";;"),
    "j": ("mm", ";"),
    "J": ("rr", ","),
    "Jbar": ("rr", ","),
    "Jm": ("r", ""),
    "m": ("mmm", ",,"),
    "mbar": ("mmm", ",,"),
    "f": ("iiimmm", ",,,,,"),
    "fbar": ("iiimmm", ",,,,,"),
    "g": ("iiimmmmm", ",,,,,,,"),
    "PhiNP": ("iimmm", ",,,,"),
    "ThetaN2": ("immm", ",,,"),
    "h": ("mm", ","),
    "k": ("mm", ","),
    "ug": ("mm", ","),
}

RESERVED = set(FUNCTIONS) | {"sum", "phi", "zeta", "q", "inf"}


def _named_ids():
    from . import zoo
    return zoo.DEFINITIONS


# ---------------------------------------------------------------------------
# tokenizer and parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9.]*)|(.))")


@dataclass
class Tok:
    kind: str  # int, ident, op, end
    text: str
    line: int
    col: int


def _tokenize(text: str) -> List[Tok]:
    toks = []
    line, col0 = 1, 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col0 = i + 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            continue
        col = i - col0 + 1
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(Tok("int", text[i:j], line, col))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] in "_."):
                j += 1
            word = text[i:j].rstrip(".")
            j = i + len(word)
            toks.append(Tok("ident", word, line, col))
            i = j
        elif ch in "+-*/^(),;[]":
            toks.append(Tok("op", ch, line, col))
            i += 1
        else:
            raise DSLSyntaxError("unexpected character %r" % ch, line, col,
                                 ("number", "identifier", "operator"))
    toks.append(Tok("end", "", line, len(text) - col0 + 1))
    return toks


_ATOM_START = ("number", "q", "zeta", "identifier", "(", "-")


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> Tok:
        return self.toks[self.i]

    def next(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, expected):
        t = self.peek()
        raise DSLSyntaxError(msg + (" near %r" % t.text if t.text else " at end of input"),
                             t.line, t.col, expected)

    def expect(self, text):
        t = self.peek()
        if t.kind == "op" and t.text == text:
            return self.next()
        self.fail("expected %r" % text, (text,))

    def at(self, text) -> bool:
        t = self.peek()
        return t.kind == "op" and t.text == text

    def parse(self) -> Node:
        e = self.expr()
        if self.peek().kind != "end":
            self.fail("unexpected token", ("+", "-", "*", "/", "^", "end of input"))
        return e

    def expr(self) -> Node:
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.next().text
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Node:
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.next().text
            left = BinOp(op, left, self.unary())
        return left

    def unary(self) -> Node:
        if self.at("-"):
            self.next()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.at("^"):
            self.next()
            t = self.peek()
            if t.kind == "int":
                self.next()
                return Pow(base, Num(int(t.text)))
            following = self.toks[self.i + 1] if self.i + 1 < len(self.toks) else None
            callish = following is not None and following.kind == "op" and following.text == "("
            if t.kind == "ident" and t.text not in ("q", "inf", "zeta") and not callish:
                # a bare name is a summation index even if it also names a function (j)
                self.next()
                return Pow(base, Var(t.text))
            if self.at("-"):
                self.next()
                t = self.peek()
                if t.kind != "int":
                    self.fail("expected integer exponent", ("integer",))
                self.next()
                return Pow(base, Neg(Num(int(t.text))))
            if self.at("("):
                self.next()
                e = self.expr()
                self.expect(")")
                return Pow(base, e)
            self.fail("expected exponent", ("integer", "-", "("))
        return base

    def atom(self) -> Node:
        t = self.peek()
        if t.kind == "int":
            self.next()
            return Num(int(t.text))
        if t.kind == "op" and t.text == "(":
            self.next()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind == "ident":
            self.next()
            name = t.text
            if name == "q":
                return QSym()
            if name == "inf":
                return Inf()
            if name == "zeta":
                self.expect("(")
                n = self.peek()
                if n.kind != "int":
                    self.fail("zeta needs an integer order", ("integer",))
                self.next()
                self.expect(")")
                if 24 % int(n.text):
                    raise DSLSyntaxError("zeta(n) needs n dividing 24", n.line, n.col, ("1", "2", "3", "4", "6", "8", "12", "24"))
                return Zeta(int(n.text))
            if self.at("("):
                return self.call(name, t)
            return Var(name)
        self.fail("unexpected token", _ATOM_START)

    def arglist(self):
        self.expect("(")
        args, seps = [], []
        while True:
            if self.at("["):
                self.next()
                items = []
                if not self.at("]"):
                    items.append(self.expr())
                    while self.at(","):
                        self.next()
                        items.append(self.expr())
                self.expect("]")
                args.append(tuple(items))
            else:
                args.append(self.expr())
            if self.at(",") or self.at(";"):
                seps.append(self.next().text)
                continue
            self.expect(")")
            return args, seps

    def call(self, name, tok) -> Node:
        args, seps = self.arglist()

        def bad(msg):
            raise DSLSyntaxError(msg, tok.line, tok.col, ())

        if any(isinstance(a, tuple) for a in args) and name != "phi":
            bad("list arguments are only allowed in phi")
        if name == "sum":
            if len(args) != 4 or not isinstance(args[0], Var):
                bad("sum takes (variable, lo, hi, body)")
            return Sum(args[0].name, args[1], args[2], args[3])
        if name == "phi":
            if len(args) != 4 or not isinstance(args[0], tuple) or not isinstance(args[1], tuple):
                bad("phi takes ([uppers], [lowers]; base; argument)")
            if any(isinstance(a, tuple) for a in args[2:]):
                bad("phi base and argument must be expressions")
            return Phi(args[0], args[1], args[2], args[3])
        if name in FUNCTIONS:
            kinds, _ = FUNCTIONS[name]
            if len(args) != len(kinds):
                bad("%s takes %d arguments, got %d" % (name, len(kinds), len(args)))
            return Call(name, tuple(args))
        if name in RESERVED:
            bad("%s cannot be called" % name)
        if name not in _named_ids():
            bad("unknown function %s" % name)
        if len(args) != 1:
            bad("named series %s takes at most one argument" % name)
        return Named(name, args[0])


def parse(text: str) -> Node:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# formatter
# ---------------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def format_expr(e: Node) -> str:
    return _fmt(e, 0)


def _fmt(e: Node, ctx: int) -> str:
    # ctx: 0 top, 1 additive operand, 2 multiplicative operand, 3 unary, 4 power base
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, QSym):
        return "q"
    if isinstance(e, Inf):
        return "inf"
    if isinstance(e, Zeta):
        return "zeta(%d)" % e.n
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        s = "-" + _fmt(e.arg, 3)
        return "(" + s + ")" if ctx >= 3 else s
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        if e.op == "/" and isinstance(e.right, Num) and (
                isinstance(e.left, Num) or (isinstance(e.left, Neg) and isinstance(e.left.arg, Num))):
            s = "%s/%d" % (_fmt(e.left, 2), e.right.value)
            return "(" + s + ")" if ctx > 2 else s
        left = _fmt(e.left, p)
        right = _fmt(e.right, p + 0.5)
        s = "%s %s %s" % (left, e.op, right) if p == 1 else "%s%s%s" % (left, e.op, right)
        if p == 2:
            s = "%s %s %s" % (left, e.op, right)
        return "(" + s + ")" if ctx > p else s
    if isinstance(e, Pow):
        base = _fmt(e.base, 4)
        ex = e.exp
        if isinstance(ex, Num):
            s = "%s^%d" % (base, ex.value)
        elif isinstance(ex, Neg) and isinstance(ex.arg, Num):
            s = "%s^-%d" % (base, ex.arg.value)
        elif isinstance(ex, Var):
            s = "%s^%s" % (base, ex.name)
        else:
            s = "%s^(%s)" % (base, _fmt(ex, 0))
        # ^ is right associative, so a power used as a base needs parentheses
        return "(" + s + ")" if ctx >= 4 else s
    if isinstance(e, Call):
        _, seps = FUNCTIONS[e.fn]
        out = []
        for i, a in enumerate(e.args):
            out.append(_fmt(a, 0))
            if i < len(seps):
                out.append(seps[i] + " ")
        return "%s(%s)" % (e.fn, "".join(out))
    if isinstance(e, Sum):
        return "sum(%s, %s, %s, %s)" % (e.var, _fmt(e.lo, 0), _fmt(e.hi, 0), _fmt(e.body, 0))
    if isinstance(e, Phi):
        return "phi([%s], [%s]; %s; %s)" % (", ".join(_fmt(u, 0) for u in e.uppers),
                                            ", ".join(_fmt(u, 0) for u in e.lowers),
                                            _fmt(e.base, 0), _fmt(e.arg, 0))
    if isinstance(e, Named):
        return e.name if e.arg is None else "%s(%s)" % (e.name, _fmt(e.arg, 0))
    raise TypeError("not an expression node: %r" % (e,))


def rational_node(v) -> Node:
    v = Fraction(v)
    num = Num(abs(v.numerator))
    if v < 0:
        num = Neg(num)
    return num if v.denominator == 1 else BinOp("/", num, Num(v.denominator))


def monomial_node(m: Monomial) -> Node:
    """Expression node whose value is the monomial ``m``."""
    if m.is_zero:
        return Num(0)
    e = m.exponent
    node = None
    if e != 0:
        node = QSym() if e == 1 else Pow(QSym(), rational_node(e))
    if m.root_power:
        z = Pow(Zeta(24), Num(m.root_power))
        node = z if node is None else BinOp("*", z, node)
    if node is None:
        node = Num(1)
    return Neg(node) if m.sign < 0 else node


# ---------------------------------------------------------------------------
# substitution (used for parameterized templates)
# ---------------------------------------------------------------------------

def substitute(e: Node, mapping: Dict[str, Node]) -> Node:
    """Replace free variables by expressions (bound sum variables are respected)."""
    if isinstance(e, Var):
        return mapping.get(e.name, e)
    if isinstance(e, (Num, QSym, Inf, Zeta)):
        return e
    if isinstance(e, Neg):
        return Neg(substitute(e.arg, mapping))
    if isinstance(e, BinOp):
        return BinOp(e.op, substitute(e.left, mapping), substitute(e.right, mapping))
    if isinstance(e, Pow):
        return Pow(substitute(e.base, mapping), substitute(e.exp, mapping))
    if isinstance(e, Call):
        return Call(e.fn, tuple(substitute(a, mapping) for a in e.args))
    if isinstance(e, Sum):
        inner = {k: v for k, v in mapping.items() if k != e.var}
        return Sum(e.var, substitute(e.lo, mapping), substitute(e.hi, mapping), substitute(e.body, inner))
    if isinstance(e, Phi):
        return Phi(tuple(substitute(u, mapping) for u in e.uppers), tuple(substitute(u, mapping) for u in e.lowers),
                   substitute(e.base, mapping), substitute(e.arg, mapping))
    if isinstance(e, Named):
        return Named(e.name, None if e.arg is None else substitute(e.arg, mapping))
    raise TypeError("not an expression node: %r" % (e,))


def _qpow(e: Node) -> Node:
    return Pow(QSym(), e)


# the theta shorthands depend on q implicitly; spell them out before substituting
_IMPLICIT_Q = {
    "J": lambda a, m: Call("j", (_qpow(a), _qpow(m))),
    "Jbar": lambda a, m: Call("j", (Neg(_qpow(a)), _qpow(m))),
    "Jm": lambda m: Call("aqprod", (_qpow(m), _qpow(m), Inf())),
}


def replace_q(e: Node, new_q: Node) -> Node:
    """Replace the series variable q everywhere by ``new_q`` (e.g. q^2 or -q)."""
    if isinstance(e, QSym):
        return new_q
    if isinstance(e, Var) and e.name in _named_ids():
        return Named(e.name, new_q)
    if isinstance(e, (Num, Inf, Zeta, Var)):
        return e
    if isinstance(e, Neg):
        return Neg(replace_q(e.arg, new_q))
    if isinstance(e, BinOp):
        return BinOp(e.op, replace_q(e.left, new_q), replace_q(e.right, new_q))
    if isinstance(e, Pow):
        return Pow(replace_q(e.base, new_q), e.exp)
    if isinstance(e, Call) and e.fn in _IMPLICIT_Q:
        return replace_q(_IMPLICIT_Q[e.fn](*e.args), new_q)
    if isinstance(e, Call):
        return Call(e.fn, tuple(replace_q(a, new_q) if k == "m" else a
                                for a, k in zip(e.args, FUNCTIONS[e.fn][0])))
    if isinstance(e, Sum):
        return Sum(e.var, e.lo, e.hi, replace_q(e.body, new_q))
    if isinstance(e, Phi):
        return Phi(tuple(replace_q(u, new_q) for u in e.uppers), tuple(replace_q(u, new_q) for u in e.lowers),
                   replace_q(e.base, new_q), replace_q(e.arg, new_q))
    if isinstance(e, Named):
        return Named(e.name, replace_q(e.arg if e.arg is not None else QSym(), new_q))
    raise TypeError("not an expression node: %r" % (e,))


def free_vars(e: Node, bound=frozenset()) -> set:
    if isinstance(e, Var):
        return set() if e.name in bound else {e.name}
    if isinstance(e, (Num, QSym, Inf, Zeta)):
        return set()
    if isinstance(e, Neg):
        return free_vars(e.arg, bound)
    if isinstance(e, BinOp):
        return free_vars(e.left, bound) | free_vars(e.right, bound)
    if isinstance(e, Pow):
        return free_vars(e.base, bound) | free_vars(e.exp, bound)
    if isinstance(e, Call):
        out = set()
        for a in e.args:
            out |= free_vars(a, bound)
        return out
    if isinstance(e, Sum):
        return free_vars(e.lo, bound) | free_vars(e.hi, bound) | free_vars(e.body, bound | {e.var})
    if isinstance(e, Phi):
        out = free_vars(e.base, bound) | free_vars(e.arg, bound)
        for u in e.uppers + e.lowers:
            out |= free_vars(u, bound)
        return out
    if isinstance(e, Named):
        return set() if e.arg is None else free_vars(e.arg, bound)
    return set()


# ---------------------------------------------------------------------------
# evaluator
# ---------------------------------------------------------------------------

class _NotMonomial(Exception):
    pass


class _NotRational(Exception):
    pass


Env = Tuple[Tuple[str, Fraction], ...]

# consecutive negligible summands that end an infinite sum
SUM_WINDOW = 4


class Evaluator:
    """Order-driven evaluation: ``series(node, N)`` is exact at least through q^N."""

    def __init__(self, window: int = SUM_WINDOW):
        self.memo: Dict[tuple, Series] = {}
        self.window = window

    # -- scalar views -----------------------------------------------------
    def rational(self, e: Node, env: dict) -> Fraction:
        if isinstance(e, Num):
            return Fraction(e.value)
        if isinstance(e, Var):
            if e.name not in env:
                raise EvaluationError(NameError("unbound variable %s" % e.name), e.name)
            return env[e.name]
        if isinstance(e, Neg):
            return -self.rational(e.arg, env)
        if isinstance(e, BinOp):
            a, b = self.rational(e.left, env), self.rational(e.right, env)
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            if e.op == "*":
                return a * b
            if b == 0:
                raise EvaluationError(ZeroDivisionError("division by zero"), format_expr(e))
            return a / b
        if isinstance(e, Pow):
            b, x = self.rational(e.base, env), self.rational(e.exp, env)
            if x.denominator != 1:
                raise _NotRational()
            return b ** int(x)
        raise _NotRational()

    def integer(self, e: Node, env: dict) -> int:
        try:
            v = self.rational(e, env)
        except _NotRational:
            raise EvaluationError(TypeError("expected an integer"), format_expr(e))
        if v.denominator != 1:
            raise EvaluationError(TypeError("expected an integer, got %s" % v), format_expr(e))
        return int(v)

    def monomial(self, e: Node, env: dict) -> Monomial:
        if isinstance(e, QSym):
            return Monomial.q(1)
        if isinstance(e, Num):
            if e.value == 0:
                return Monomial.zero()
            if e.value == 1:
                return Monomial.q(0)
            raise _NotMonomial()
        if isinstance(e, Zeta):
            return Monomial.q(0, root_power=24 // e.n)
        if isinstance(e, Var):
            if e.name not in env:
                raise _NotMonomial()
            v = self.rational(e, env)
            if v in (0, 1, -1):
                return Monomial.zero() if v == 0 else Monomial.q(0, sign=int(v))
            raise _NotMonomial()
        if isinstance(e, Neg):
            return -self.monomial(e.arg, env)
        if isinstance(e, BinOp) and e.op in "*/":
            a, b = self.monomial(e.left, env), self.monomial(e.right, env)
            if e.op == "*":
                return a * b
            if b.is_zero:
                raise EvaluationError(PoleError("division by zero monomial"), format_expr(e))
            return a / b
        if isinstance(e, Pow):
            b = self.monomial(e.base, env)
            try:
                x = self.rational(e.exp, env)
            except _NotRational:
                raise _NotMonomial()
            if b.is_zero:
                if x > 0:
                    return b
                if x == 0:
                    return Monomial.q(0)
                raise EvaluationError(PoleError("0 to a negative power"), format_expr(e))
            return b ** x if x >= 0 else b.inverse() ** (-x)
        raise _NotMonomial()

    def mono_arg(self, e: Node, env: dict) -> Monomial:
        try:
            return self.monomial(e, env)
        except _NotMonomial:
            raise EvaluationError(TypeError("argument must be a monomial"), format_expr(e))

    def count(self, e: Node, env: dict):
        if isinstance(e, Inf):
            return INF
        return self.integer(e, env)

    # -- series -----------------------------------------------------------
    def series(self, e: Node, order, env: Optional[dict] = None) -> Series:
        env = env or {}
        order = Fraction(order)
        key = (e, tuple(sorted(env.items())), order)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        try:
            out = self._series(e, order, env)
        except EvaluationError:
            raise
        except QMockError as exc:
            raise EvaluationError(exc, format_expr(e)[:120])
        out = out.truncate(order)
        self.memo[key] = out
        return out

    def factor(self, e: Node, env: dict):
        return lambda o: self.series(e, o, env)

    def _series(self, e: Node, N: Fraction, env: dict) -> Series:
        if isinstance(e, Var) and e.name not in env:
            return self.series(Named(e.name), N, env)
        try:
            m = self.monomial(e, env)
            D = thetafn.lcm_den(m)
            return m.to_series(D).truncate(N) if not m.is_zero else Series.zero(1, INF).truncate(N)
        except _NotMonomial:
            pass
        if isinstance(e, Num):
            return Series.const(e.value, 1, N)
        if isinstance(e, Var):
            return Series.const(self.rational(e, env), 1, N)
        if isinstance(e, Neg):
            return -self.series(e.arg, N, env)
        if isinstance(e, BinOp):
            if e.op in "+-":
                a, b = self.series(e.left, N, env), self.series(e.right, N, env)
                return a + b if e.op == "+" else a - b
            return self._product(e, N, env)
        if isinstance(e, Pow):
            try:
                k = self.rational(e.exp, env)
            except _NotRational:
                raise EvaluationError(TypeError("exponent must be rational"), format_expr(e))
            if k.denominator != 1:
                raise EvaluationError(TypeError("fractional power of a series"), format_expr(e))
            return self._product(e, N, env)
        if isinstance(e, Call):
            return self._call(e, N, env)
        if isinstance(e, Sum):
            return self._sum(e, N, env)
        if isinstance(e, Phi):
            spec = hypergeom.PhiSpec(tuple(self.mono_arg(u, env) for u in e.uppers),
                                     tuple(self.mono_arg(u, env) for u in e.lowers),
                                     self.mono_arg(e.base, env), self.mono_arg(e.arg, env))
            return hypergeom.phi_eval(spec, N)
        if isinstance(e, Named):
            from . import zoo
            if e.arg is None:
                return zoo.eulerian(e.name, N)
            m = self.mono_arg(e.arg, env)
            if m.is_zero or m.exponent <= 0:
                raise EvaluationError(ValueError("named series argument must be a positive q-power"), format_expr(e))
            inner = zoo.eulerian(e.name, N / m.exponent)
            return substitute_monomial(inner, m)
        if isinstance(e, (Inf, QSym, Zeta)):
            raise EvaluationError(TypeError("not a series"), format_expr(e))
        raise TypeError("unknown node %r" % (e,))

    # products and quotients -----------------------------------------------
    def _flatten(self, e: Node, env: dict, sign: int, out: list):
        """Collect (node, power) pairs of a product/quotient chain."""
        if isinstance(e, BinOp) and e.op in "*/":
            self._flatten(e.left, env, sign, out)
            self._flatten(e.right, env, sign if e.op == "*" else -sign, out)
            return
        if isinstance(e, Pow):
            try:
                self.monomial(e, env)
            except _NotMonomial:
                k = self.integer(e.exp, env)
                if k == 0:
                    return
                for _ in range(abs(k)):
                    self._flatten(e.base, env, sign * (1 if k > 0 else -1), out)
                return
        out.append((e, sign))

    def _binomials(self, e: Node, env: dict, N: Fraction):
        """Monomial prefactor and list of u with e == prefactor * prod(1 - u), or None."""
        if isinstance(e, Call) and e.fn in ("aqprod", "pochdual"):
            x = self.mono_arg(e.args[0], env)
            base = self.mono_arg(e.args[1], env)
            n = self.count(e.args[2], env)
            if e.fn == "aqprod":
                if x.is_zero:
                    return Monomial.q(0), []
                if n == INF:
                    if base.is_zero or base.exponent <= 0:
                        return None
                    # expanded lazily once the needed order is known
                    return Monomial.q(0), (x, base), True
                if n < 0:
                    return None
                return Monomial.q(0), [x * base ** k for k in range(n)]
            if n == INF or n < 0:
                return None
            # prod_{k=1}^{n} (a - base^k)
            if x.is_zero:
                pre = Monomial.q(0)
                for k in range(1, n + 1):
                    pre = pre * -(base ** k)
                return pre, []
            pre, bins = Monomial.q(0), []
            for k in range(1, n + 1):
                pre = pre * -(base ** k)
                bins.append(x * base.inverse() ** k)
            return pre, bins
        if isinstance(e, BinOp) and e.op in "+-":
            # 1 - u or 1 + u with u monomial (either order)
            for one, other, sgn in ((e.left, e.right, 1), (e.right, e.left, 0)):
                if isinstance(one, Num) and one.value == 1:
                    try:
                        u = self.monomial(other, env)
                    except _NotMonomial:
                        continue
                    if sgn == 1:
                        return Monomial.q(0), [u if e.op == "-" else -u]
                    if e.op == "+":
                        return Monomial.q(0), [-u]
            return None
        return None

    def _product(self, e: Node, N: Fraction, env: dict) -> Series:
        items: list = []
        self._flatten(e, env, 1, items)
        mono = Monomial.q(0)
        num_bins: List[Monomial] = []
        den_bins: List[Monomial] = []
        general = []
        inf_dens = []
        for node, sgn in items:
            try:
                m = self.monomial(node, env)
                if m.is_zero:
                    if sgn > 0:
                        return Series.zero(1, INF).truncate(N)
                    raise EvaluationError(PoleError("division by zero"), format_expr(node))
                mono = mono * m if sgn > 0 else mono / m
                continue
            except _NotMonomial:
                pass
            b = self._binomials(node, env, N)
            if b is not None:
                pre, bins = b[0], b[1]
                if len(b) == 3:
                    if sgn > 0:
                        # an infinite product in a numerator goes through the general path
                        general.append((node, sgn))
                    else:
                        inf_dens.append(bins)
                    continue
                mono = mono * pre if sgn > 0 else mono / pre
                (num_bins if sgn > 0 else den_bins).extend(bins)
                continue
            general.append((node, sgn))
        # exact cancellation of equal binomials
        pool: Dict[tuple, int] = {}
        for u in num_bins:
            if not u.is_zero:
                pool[(u.exponent, u.zeta_index)] = pool.get((u.exponent, u.zeta_index), 0) + 1
        dens = []
        for u in den_bins:
            if u.is_zero:
                continue
            k = (u.exponent, u.zeta_index)
            if pool.get(k, 0):
                pool[k] -= 1
            else:
                dens.append(u)
        if inf_dens:
            horizon = N - mono.exponent + sum(-u.exponent for u in num_bins if u.exponent < 0) + 2
            for x, base in inf_dens:
                k = 0
                while True:
                    u = x * base ** k
                    if u.exponent > horizon and u.exponent > 0:
                        break
                    dens.append(u)
                    k += 1
        nums = []
        for (ex, zi), c in pool.items():
            nums += [(ex, zi)] * c
        for ex, zi in nums:
            if ex == 0 and zi % 24 == 0:
                return Series.zero(1, INF).truncate(N)
        for u in dens:
            if u.exponent == 0 and u.zeta_index % 24 == 0:
                raise EvaluationError(PoleError("vanishing factor 1 - %s in a denominator" % u), format_expr(e)[:120])
        # required order of the general part
        target = N - mono.exponent
        target += sum(-ex for ex, _ in nums if ex < 0)
        target -= sum(-u.exponent for u in dens if u.exponent < 0)
        D = thetafn.lcm_den(mono, *[Fraction(ex) for ex, _ in nums], *dens)
        if general:
            factors = []
            for node, sgn in general:
                f = self.factor(node, env)
                factors.append(f if sgn > 0 else inverse_factor(f, format_expr(node)[:60]))
            # one unit of slack: the factors' grids need not line up with the monomial's
            g = product_to_order(factors, target + 1, D)
        else:
            g = Series.one(D)
        s = g
        if s.D % D:
            s = s.lift(s.D * D // math.gcd(s.D, D))
        D = s.D
        for ex, zi in nums:
            s = thetafn.mul_binomial(s, zi, _units(ex, D))
        cap = _floor_units(N - mono.exponent, D)
        for u in sorted(dens, key=lambda u: u.exponent):
            s = thetafn.div_binomial(s, zeta_power(u.zeta_index), _units(u.exponent, D), cap)
        s = s.mul_monomial(mono) if not mono.is_one() else s
        if s.valid_to < N and s.valid_to + Fraction(1, s.D) <= N:
            raise EvaluationError(NonTruncatable("could not reach order %s (got %s)" % (N, s.valid_to)),
                                  format_expr(e)[:120])
        return s.truncate(N)

    # calls -------------------------------------------------------------------
    def _call(self, e: Call, N: Fraction, env: dict) -> Series:
        fn, a = e.fn, e.args
        M = lambda i: self.mono_arg(a[i], env)
        I = lambda i: self.integer(a[i], env)
        R = lambda i: self.rational(a[i], env)
        if fn in ("aqprod", "pochdual"):
            return self._product(e, N, env) if self._binomials(e, env, N) is not None and self.count(a[2], env) != INF \
                else self._aq_inf(e, N, env)
        if fn == "j":
            return thetafn.jacobi_j(M(0), M(1), N)
        if fn in ("J", "Jbar", "Jm"):
            ref = thetafn.ThetaRef(fn, R(0), R(1)) if fn != "Jm" else thetafn.ThetaRef("Jm", 0, R(0))
            return thetafn.theta_shorthand(ref, N)
        if fn == "m":
            return blocks.appell_m(M(0), M(1), M(2), N)
        if fn == "mbar":
            return blocks.false_m(M(0), M(1), M(2), N)
        if fn == "f":
            return blocks.hecke_f(I(0), I(1), I(2), M(3), M(4), M(5), N)
        if fn == "fbar":
            return blocks.false_f(I(0), I(1), I(2), M(3), M(4), M(5), N)
        if fn == "g":
            return conversion.g_abc(I(0), I(1), I(2), M(3), M(4), M(5), M(6), M(7), N)
        if fn == "PhiNP":
            return conversion.phi_np(conversion.ConversionParams(I(0), I(1)), M(2), M(3), M(4), N)
        if fn == "ThetaN2":
            return conversion.theta_n2(I(0), M(1), M(2), M(3), N)
        if fn == "h":
            return blocks.h_block(M(0), M(1), N)
        if fn == "k":
            return blocks.k_block(M(0), M(1), N)
        if fn == "ug":
            from . import zoo
            return zoo.universal_g(M(0), M(1), N)
        raise TypeError("unknown function %s" % fn)

    def _aq_inf(self, e: Call, N, env):
        x, base = self.mono_arg(e.args[0], env), self.mono_arg(e.args[1], env)
        if e.fn == "pochdual":
            raise EvaluationError(ValueError("pochdual needs a finite count"), format_expr(e))
        n = self.count(e.args[2], env)
        if n != INF:
            raise EvaluationError(ValueError("negative Pochhammer length"), format_expr(e))
        return thetafn.pochhammer_infinite(x, base, N)

    # sums ----------------------------------------------------------------------
    def _sum(self, e: Sum, N: Fraction, env: dict) -> Series:
        lo = self.count(e.lo, env) if not (isinstance(e.lo, Neg) and isinstance(e.lo.arg, Inf)) else -INF
        hi = self.count(e.hi, env)
        total = Series.zero(1, INF).truncate(N)

        def term(n):
            inner = dict(env)
            inner[e.var] = Fraction(n)
            return self.series(e.body, N, inner)

        if lo != -INF and hi != INF:
            for n in range(lo, hi + 1):
                total = total + term(n)
            return total.truncate(N)
        ranges = []
        if lo == -INF and hi == INF:
            ranges = [(0, 1), (-1, -1)]
        elif lo == -INF:
            ranges = [(hi, -1)]
        else:
            ranges = [(lo, 1)]
        for start, step in ranges:
            n, quiet, count = start, 0, 0
            while True:
                if (step > 0 and hi != INF and n > hi) or (step < 0 and lo != -INF and n < lo):
                    break
                t = term(n)
                total = total + t
                quiet = quiet + 1 if not t.t else 0
                if quiet >= self.window:
                    break
                n += step
                count += 1
                if count > 20000:
                    raise EvaluationError(NonTruncatable("sum does not settle"), format_expr(e)[:120])
        return total.truncate(N)


def evaluate(e: Union[Node, str], order, D: int = 1, window: int = SUM_WINDOW) -> Series:
    """Series of an expression exact through q^order (D is accepted for interface parity;
    denominators are inferred from the expression)."""
    if isinstance(e, str):
        e = parse(e)
    s = Evaluator(window).series(e, Fraction(order))
    if D > 1 and D % s.D == 0:
        s = s.lift(D)
    return s


# conventional public names
eval = evaluate  # noqa: A001
format = format_expr  # noqa: A001
