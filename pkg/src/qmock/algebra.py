"""Exact coefficients in Q(zeta_24) and truncated Laurent-Puiseux series in q^(1/D).

Coefficients inside a series are stored as plain ``int``/``Fraction`` whenever they
are rational, and as :class:`CycRat` only when a root of unity is actually involved.
All public accessors hand out :class:`CycRat` values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from .errors import (DenominatorMismatch, DivisionByZero, FractionalExponentNegation,
                     InsufficientValidity, ZeroSeries)

INF = math.inf
QExp = Fraction

# ---------------------------------------------------------------------------
# Q(zeta_24)
# ---------------------------------------------------------------------------

_DEG = 8


def _reduce_poly(c):
    # x^8 = x^4 - 1 (24th cyclotomic polynomial x^8 - x^4 + 1)
    c = list(c)
    for k in range(len(c) - 1, _DEG - 1, -1):
        v = c[k]
        if v:
            c[k - 4] += v
            c[k - 8] -= v
        c[k] = 0
    return c[:_DEG]


def _norm_q(v):
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


def _trusted(coords) -> "CycRat":
    """CycRat from exactly 8 int/Fraction coordinates produced by our own arithmetic."""
    obj = object.__new__(CycRat)
    obj.coords = tuple(v.numerator if type(v) is Fraction and v.denominator == 1 else v for v in coords)
    obj._hash = None
    return obj


class CycRat:
    """An element of Q(zeta_24) in the power basis 1, zeta, ..., zeta^7."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Iterable = (0,)):
        c = list(coords)
        if len(c) > _DEG:
            c = _reduce_poly(c)
        c = c + [0] * (_DEG - len(c))
        self.coords: Tuple = tuple(_norm_q(Fraction(v) if not isinstance(v, int) else v) for v in c)
        self._hash = None

    # construction helpers
    @classmethod
    def zeta(cls, k: int) -> "CycRat":
        return ZETA24[k % 24]

    @classmethod
    def of(cls, value) -> "CycRat":
        if isinstance(value, CycRat):
            return value
        return cls((value,))

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.coords[0]

    def canon(self):
        """Collapse to a plain rational when possible."""
        if self.is_rational():
            return self.coords[0]
        return self

    # arithmetic
    def _binop_coords(self, other):
        if isinstance(other, CycRat):
            return other.coords
        if isinstance(other, (int, Fraction)):
            return (other,) + (0,) * (_DEG - 1)
        return None

    def __add__(self, other):
        oc = self._binop_coords(other)
        if oc is None:
            return NotImplemented
        return _trusted([a + b for a, b in zip(self.coords, oc)])

    __radd__ = __add__

    def __neg__(self):
        return _trusted([-a for a in self.coords])

    def __sub__(self, other):
        oc = self._binop_coords(other)
        if oc is None:
            return NotImplemented
        return _trusted([a - b for a, b in zip(self.coords, oc)])

    def __rsub__(self, other):
        oc = self._binop_coords(other)
        if oc is None:
            return NotImplemented
        return _trusted([b - a for a, b in zip(self.coords, oc)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CycRat()
            return _trusted([a * other for a in self.coords])
        if not isinstance(other, CycRat):
            return NotImplemented
        a, b = self.coords, other.coords
        out = [0] * (2 * _DEG - 1)
        bj = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                for j, y in bj:
                    out[i + j] += x * y
        # x^8 = x^4 - 1, applied from the top down
        for k in range(2 * _DEG - 2, _DEG - 1, -1):
            v = out[k]
            if v:
                out[k - 4] += v
                out[k - 8] -= v
        return _trusted(out[:_DEG])

    __rmul__ = __mul__

    def inverse(self) -> "CycRat":
        if not any(self.coords):
            raise DivisionByZero("inverse of zero in Q(zeta_24)")
        if self.is_rational():
            return CycRat((Fraction(1) / self.coords[0],))
        # column k of the multiplication matrix is self * zeta^k
        cols = []
        for k in range(_DEG):
            cols.append((self * ZETA24[k]).coords if k else self.coords)
        m = [[Fraction(cols[k][i]) for k in range(_DEG)] + [Fraction(1 if i == 0 else 0)]
             for i in range(_DEG)]
        for col in range(_DEG):
            piv = next(r for r in range(col, _DEG) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            pv = m[col][col]
            m[col] = [v / pv for v in m[col]]
            for r in range(_DEG):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return CycRat([m[i][_DEG] for i in range(_DEG)])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return CycRat([Fraction(a) / other for a in self.coords])
        if not isinstance(other, CycRat):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE_CYC
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        oc = self._binop_coords(other)
        if oc is None:
            return NotImplemented
        return self.coords == tuple(oc)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords[0]) if self.is_rational() else hash(self.coords)
        return self._hash

    def __bool__(self):
        return any(self.coords)

    def to_complex(self) -> complex:
        w = complex(math.cos(math.pi / 12), math.sin(math.pi / 12))
        return sum(complex(float(c)) * w ** k for k, c in enumerate(self.coords))

    def __repr__(self):
        return "CycRat(%s)" % (format_coeff(self),)

    def __str__(self):
        return format_coeff(self)


ONE_CYC = CycRat((1,))


def _build_zeta():
    table = []
    for k in range(24):
        c = [0] * (k + 1)
        c[k] = 1
        table.append(CycRat(c))
    return table


ZETA24 = _build_zeta()

Scalar = Union[int, Fraction, CycRat]


def canon(x: Scalar) -> Scalar:
    if type(x) is CycRat:
        return x.canon()
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def as_cycrat(x: Scalar) -> CycRat:
    return x if isinstance(x, CycRat) else CycRat((x,))


def scalar_inverse(x: Scalar) -> Scalar:
    if isinstance(x, CycRat):
        return canon(x.inverse())
    if x == 0:
        raise DivisionByZero("division by zero")
    return canon(Fraction(1) / x)


def zeta_power(k: int) -> Scalar:
    """zeta_24^k as a canonical scalar (plain +-1 when rational)."""
    k %= 24
    if k == 0:
        return 1
    if k == 12:
        return -1
    return ZETA24[k]


def coeff_arith(a: Scalar, b: Scalar, op: str) -> CycRat:
    a, b = as_cycrat(a), as_cycrat(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError("unknown op %r" % op)


def format_coeff(x: Scalar) -> str:
    """Exact text form: a rational, or a sum 'a+b*zeta24^k+...'."""
    x = canon(x)
    if not isinstance(x, CycRat):
        return str(x)
    parts = []
    for k, c in enumerate(x.coords):
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append("zeta24^%d" % k)
        elif c == -1:
            parts.append("-zeta24^%d" % k)
        else:
            parts.append("%s*zeta24^%d" % (c, k))
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def parse_coeff(text: str) -> CycRat:
    """Inverse of :func:`format_coeff`."""
    text = text.strip().replace(" ", "")
    coords = [Fraction(0)] * _DEG
    i = 0
    terms = []
    start = 0
    for i in range(1, len(text)):
        if text[i] in "+-" and text[i - 1] not in "^*/":
            terms.append(text[start:i])
            start = i
    terms.append(text[start:])
    for t in terms:
        if "zeta24^" in t:
            head, k = t.split("zeta24^")
            k = int(k)
            if head in ("", "+"):
                c = Fraction(1)
            elif head == "-":
                c = Fraction(-1)
            else:
                c = Fraction(head.rstrip("*"))
            coords[k] += c
        else:
            coords[0] += Fraction(t)
    return CycRat(coords)


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Monomial:
    """sign * zeta_24^root_power * q^exponent, or the constant 0."""

    root_power: int = 0
    sign: int = 1
    exponent: Fraction = Fraction(0)
    is_zero: bool = False

    def __post_init__(self):
        k = self.root_power % 24
        s = self.sign
        if k >= 12:
            k -= 12
            s = -s
        object.__setattr__(self, "root_power", 0 if self.is_zero else k)
        object.__setattr__(self, "sign", 1 if self.is_zero else s)
        object.__setattr__(self, "exponent", Fraction(0) if self.is_zero else Fraction(self.exponent))

    @classmethod
    def zero(cls) -> "Monomial":
        return cls(is_zero=True)

    @classmethod
    def q(cls, e=1, sign: int = 1, root_power: int = 0) -> "Monomial":
        return cls(root_power=root_power, sign=sign, exponent=Fraction(e))

    @property
    def zeta_index(self) -> int:
        """Coefficient as a single power of zeta_24 (sign folded in)."""
        return (self.root_power + (12 if self.sign < 0 else 0)) % 24

    @property
    def coefficient(self) -> Scalar:
        if self.is_zero:
            return 0
        return zeta_power(self.zeta_index)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.is_zero or other.is_zero:
            return Monomial.zero()
        return Monomial(self.root_power + other.root_power, self.sign * other.sign,
                        self.exponent + other.exponent)

    def inverse(self) -> "Monomial":
        if self.is_zero:
            raise DivisionByZero("inverse of the zero monomial")
        return Monomial(-self.root_power, self.sign, -self.exponent)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inverse()

    def __neg__(self) -> "Monomial":
        if self.is_zero:
            return self
        return Monomial(self.root_power, -self.sign, self.exponent)

    def __pow__(self, p) -> "Monomial":
        p = Fraction(p)
        if self.is_zero:
            if p <= 0:
                raise DivisionByZero("zero monomial to a nonpositive power")
            return self
        if p.denominator == 1:
            n = p.numerator
            return Monomial(self.zeta_index * n, 1, self.exponent * n)
        k = self.zeta_index * p
        if k.denominator != 1:
            raise FractionalExponentNegation(
                "fractional power of a monomial with coefficient zeta24^%d" % self.zeta_index)
        return Monomial(int(k), 1, self.exponent * p)

    def is_one(self) -> bool:
        return not self.is_zero and self.zeta_index == 0 and self.exponent == 0

    def to_series(self, D: int, order=INF) -> "Series":
        return make_monomial_series(self, D, order)

    def __str__(self):
        if self.is_zero:
            return "0"
        c = format_coeff(self.coefficient)
        if self.exponent == 0:
            return c
        qpart = "q" if self.exponent == 1 else "q^(%s)" % self.exponent
        if c == "1":
            return qpart
        if c == "-1":
            return "-" + qpart
        return "(%s)*%s" % (c, qpart)


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------

def _units(e, D: int):
    """Exponent (Fraction or INF) in units of 1/D."""
    if e == INF or e == -INF:
        return e
    v = Fraction(e) * D
    if v.denominator != 1:
        raise DenominatorMismatch("exponent %s not a multiple of 1/%d" % (e, D))
    return v.numerator


def _floor_units(e, D: int):
    if e == INF:
        return INF
    return math.floor(Fraction(e) * D)


@dataclass(frozen=True)
class FirstMismatch:
    exponent: Fraction
    lhs: CycRat
    rhs: CycRat


class Series:
    """Truncated Laurent-Puiseux series sum c_e q^(e/D), exact for exponents <= valid_to."""

    __slots__ = ("D", "t", "v")

    def __init__(self, D: int, terms: Optional[Dict] = None, valid_to=INF, *, _raw=False):
        self.D = D
        if _raw:
            self.t = terms
            self.v = valid_to
            return
        v = _floor_units(valid_to, D)
        self.v = v
        t = {}
        if terms:
            for e, c in terms.items():
                u = _units(e, D)
                c = canon(c)
                if c != 0 and u <= v:
                    t[u] = c
        self.t = t

    @staticmethod
    def raw(D: int, t: Dict[int, Scalar], v) -> "Series":
        return Series(D, t, v, _raw=True)

    # basic constructors
    @staticmethod
    def zero(D: int = 1, valid_to=INF) -> "Series":
        return Series.raw(D, {}, _floor_units(valid_to, D))

    @staticmethod
    def const(c: Scalar, D: int = 1, valid_to=INF) -> "Series":
        c = canon(c)
        v = _floor_units(valid_to, D)
        return Series.raw(D, {0: c} if (c != 0 and v >= 0) else {}, v)

    @staticmethod
    def one(D: int = 1, valid_to=INF) -> "Series":
        return Series.const(1, D, valid_to)

    # properties
    @property
    def valid_to(self):
        return self.v if self.v == INF else Fraction(self.v, self.D)

    @property
    def min_exp(self):
        if not self.t:
            return INF
        return Fraction(min(self.t), self.D)

    @property
    def min_units(self):
        return min(self.t) if self.t else INF

    def is_zero(self) -> bool:
        return not self.t

    def coeff(self, e) -> CycRat:
        u = _units(e, self.D)
        if u > self.v:
            raise InsufficientValidity("coefficient at %s beyond validity %s" % (e, self.valid_to))
        return as_cycrat(self.t.get(u, 0))

    def items(self) -> Iterator[Tuple[Fraction, Scalar]]:
        for u in sorted(self.t):
            yield Fraction(u, self.D), self.t[u]

    def __len__(self):
        return len(self.t)

    def __repr__(self):
        return "Series(D=%d, valid_to=%s, %s)" % (self.D, self.valid_to, format_series(self, limit=8))

    # denominators
    def lift(self, D: int) -> "Series":
        if D == self.D:
            return self
        if D % self.D:
            raise DenominatorMismatch("cannot lift denominator %d to %d" % (self.D, D))
        f = D // self.D
        # exponents strictly between two points of the coarse grid are known to vanish
        v = self.v if self.v == INF else self.v * f + f - 1
        return Series.raw(D, {u * f: c for u, c in self.t.items()}, v)

    def truncate(self, order) -> "Series":
        v = min(self.v, _floor_units(order, self.D))
        if v == self.v:
            return self
        return Series.raw(self.D, {u: c for u, c in self.t.items() if u <= v}, v)

    def with_valid(self, valid_units) -> "Series":
        v = min(self.v, valid_units)
        if v == self.v:
            return self
        return Series.raw(self.D, {u: c for u, c in self.t.items() if u <= v}, v)

    # ring operations
    def __add__(self, other) -> "Series":
        if not isinstance(other, Series):
            other = Series.const(other, self.D)
        a, b = _common(self, other)
        v = min(a.v, b.v)
        t = {u: c for u, c in a.t.items() if u <= v}
        for u, c in b.t.items():
            if u <= v:
                s = t.get(u)
                if s is None:
                    t[u] = c
                else:
                    s = s + c
                    if s == 0:
                        del t[u]
                    else:
                        t[u] = s
        return Series.raw(a.D, _canon_values(t), v)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series.raw(self.D, {u: -c for u, c in self.t.items()}, self.v)

    def __sub__(self, other) -> "Series":
        if not isinstance(other, Series):
            other = Series.const(other, self.D)
        return self + (-other)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def scale(self, c: Scalar) -> "Series":
        c = canon(c)
        if c == 0:
            return Series.raw(self.D, {}, self.v)
        if c == 1:
            return self
        return Series.raw(self.D, _canon_values({u: x * c for u, x in self.t.items()}), self.v)

    def shift(self, e) -> "Series":
        """Multiply by q^e."""
        return self.shift_units(_units(e, self.D))

    def shift_units(self, u: int) -> "Series":
        if u == 0:
            return self
        return Series.raw(self.D, {k + u: c for k, c in self.t.items()}, self.v + u)

    def mul_monomial(self, m: Monomial) -> "Series":
        if m.is_zero:
            return Series.zero(self.D, INF)
        return self.shift(m.exponent).scale(m.coefficient)

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return self.scale(other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            return series_invert(self) ** (-n)
        result = Series.one(self.D)
        base = self
        while n:
            if n & 1:
                result = series_mul(result, base)
            n >>= 1
            if n:
                base = series_mul(base, base)
        return result

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        a, b = _common(self, other)
        return a.v == b.v and a.t == b.t

    def __hash__(self):
        return hash((self.D, self.v, frozenset(self.t.items())))


def _canon_values(t):
    for u, c in list(t.items()):
        if type(c) is not int:
            c2 = canon(c)
            if c2 == 0:
                del t[u]
            elif c2 is not c:
                t[u] = c2
    return t


def _common(a: Series, b: Series):
    if a.D == b.D:
        return a, b
    D = a.D * b.D // math.gcd(a.D, b.D)
    return a.lift(D), b.lift(D)


def make_monomial_series(m: Monomial, D: int, order=INF) -> Series:
    if m.is_zero:
        return Series.zero(D, order)
    u = _units(m.exponent, D)
    v = _floor_units(order, D)
    return Series.raw(D, {u: m.coefficient} if u <= v else {}, v)


def series_add(s1: Series, s2: Series) -> Series:
    return s1 + s2


def series_neg(s: Series) -> Series:
    return -s


def series_mul(s1: Series, s2: Series) -> Series:
    a, b = _common(s1, s2)
    ma, mb = a.min_units, b.min_units
    v = min(a.v + mb, b.v + ma)
    if not a.t or not b.t:
        return Series.raw(a.D, {}, v)
    if len(a.t) > len(b.t):
        a, b = b, a
    bitems = sorted(b.t.items())
    out: Dict[int, Scalar] = {}
    get = out.get
    for ea, ca in a.t.items():
        lim = v - ea
        for eb, cb in bitems:
            if eb > lim:
                break
            k = ea + eb
            out[k] = get(k, 0) + ca * cb
    return Series.raw(a.D, _canon_values({k: c for k, c in out.items() if c != 0}), v)


def series_invert(s: Series, order=INF) -> Series:
    """Multiplicative inverse; validity is valid_to - 2*min_exp, optionally capped at ``order``."""
    if not s.t:
        raise ZeroSeries("cannot invert a series with no nonzero coefficient up to its validity")
    D = s.D
    m = s.min_units
    c0 = s.t[m]
    inv0 = scalar_inverse(c0)
    v = s.v - 2 * m
    cap = _floor_units(order, D)
    v = min(v, cap)
    if v == INF and len(s.t) > 1:
        raise ValueError("inverse of an exact non-monomial series needs an order cap")
    if len(s.t) == 1:
        return Series.raw(D, {-m: inv0} if -m <= v else {}, v)
    n_max = v + m  # result exponent n - m <= v
    tail = sorted((u - m, c) for u, c in s.t.items() if u != m)
    neg0 = canon(-inv0)
    r = [0] * (n_max + 1) if n_max >= 0 else []
    if n_max >= 0:
        r[0] = inv0
    for n in range(1, n_max + 1):
        acc = 0
        for k, c in tail:
            if k > n:
                break
            x = r[n - k]
            if x != 0:
                acc = acc + c * x
        if acc != 0:
            r[n] = canon(acc * neg0)
    out = {n - m: c for n, c in enumerate(r) if c != 0}
    return Series.raw(D, out, v)


def series_substitute(s: Series, mode: str, k: int = 1) -> Series:
    if mode == "q_to_minus_q":
        return substitute_monomial(s, Monomial.q(1, sign=-1))
    if mode == "q_to_q_pow_k":
        if k < 1:
            raise ValueError("q -> q^k requires k >= 1")
        return substitute_monomial(s, Monomial.q(k))
    raise ValueError("unknown substitution mode %r" % mode)


def substitute_monomial(s: Series, m: Monomial) -> Series:
    """Replace q by zeta*q^k (k a positive rational)."""
    if m.is_zero or m.exponent <= 0:
        raise ValueError("substitution needs a positive q-power")
    k = m.exponent
    zi = m.zeta_index
    D2 = s.D * k.denominator
    p = k.numerator
    t = {}
    for u, c in s.t.items():
        if zi:
            e = Fraction(u, s.D)
            if e.denominator != 1:
                if zi == 12:
                    raise FractionalExponentNegation("q -> -q applied to exponent %s" % e)
                raise FractionalExponentNegation("q -> zeta*q applied to exponent %s" % e)
            c = canon(c * zeta_power(zi * e.numerator)) if (zi * e.numerator) % 24 else c
        t[u * p] = c
    # only multiples of p can appear, so the first unknown unit is (v + 1) * p
    v = (s.v + 1) * p - 1 if s.v != INF else INF
    out = Series.raw(D2, t, v)
    return _reduce_den(out)


def _reduce_den(s: Series) -> Series:
    if s.D == 1:
        return s
    g = s.D
    for u in s.t:
        g = math.gcd(g, u)
        if g == 1:
            return s
    if g == 1:
        return s
    v = s.v if s.v == INF else s.v // g
    return Series.raw(s.D // g, {u // g: c for u, c in s.t.items()}, v)


def series_equal_up_to(s1: Series, s2: Series, order) -> Optional[FirstMismatch]:
    """None when equal through ``order``; otherwise the first differing coefficient."""
    a, b = _common(s1, s2)
    lim = _floor_units(order, a.D)
    if a.v < lim:
        raise InsufficientValidity("lhs valid only to %s < %s" % (a.valid_to, order))
    if b.v < lim:
        raise InsufficientValidity("rhs valid only to %s < %s" % (b.valid_to, order))
    keys = sorted(u for u in set(a.t) | set(b.t) if u <= lim)
    for u in keys:
        ca, cb = a.t.get(u, 0), b.t.get(u, 0)
        if ca != cb:
            return FirstMismatch(Fraction(u, a.D), as_cycrat(ca), as_cycrat(cb))
    return None


def format_exponent(e: Fraction) -> str:
    e = Fraction(e)
    if e.denominator == 1:
        return str(e.numerator)
    return "(%d/%d)" % (e.numerator, e.denominator)


def format_series(s: Series, limit: Optional[int] = None) -> str:
    """Deterministic text: terms by increasing exponent, exact coefficients."""
    parts = []
    for i, (e, c) in enumerate(s.items()):
        if limit is not None and i >= limit:
            parts.append("...")
            break
        cs = format_coeff(c)
        if e == 0:
            parts.append(cs)
            continue
        qs = "q" if e == 1 else "q^" + format_exponent(e)
        if cs == "1":
            parts.append(qs)
        elif cs == "-1":
            parts.append("-" + qs)
        elif isinstance(canon(c), CycRat):
            parts.append("(%s)*%s" % (cs, qs))
        else:
            parts.append("%s*%s" % (cs, qs))
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out
