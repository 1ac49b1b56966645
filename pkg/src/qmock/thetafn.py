"""q-Pochhammer symbols, Jacobi theta products and the J-shorthand."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Optional

from ._lazy import inverse_factor, product_to_order
from .algebra import (INF, Monomial, Series, _floor_units, _units, canon, scalar_inverse,
                      series_mul, zeta_power)
from .errors import NonConvergentProduct, PoleError


def lcm_den(*vals) -> int:
    """Least common denominator of monomial exponents / rationals given."""
    d = 1
    for v in vals:
        if v is None:
            continue
        if isinstance(v, Monomial):
            if v.is_zero:
                continue
            v = v.exponent
        den = Fraction(v).denominator
        d = d * den // math.gcd(d, den)
    return d


@dataclass(frozen=True)
class ThetaRef:
    kind: str  # "J", "Jbar" or "Jm"
    a: Fraction = Fraction(0)
    m: Fraction = Fraction(1)

    def __post_init__(self):
        if self.kind not in ("J", "Jbar", "Jm"):
            raise ValueError("kind must be J, Jbar or Jm")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "m", Fraction(self.m))
        if self.m <= 0:
            raise ValueError("theta modulus must be positive")


# ---------------------------------------------------------------------------
# binomial kernels: multiply or divide by (1 - c q^e) in place of full products
# ---------------------------------------------------------------------------

def mul_binomial(s: Series, zeta_idx: int, eu: int, cap=INF) -> Series:
    """s * (1 - zeta^k q^(eu/D))."""
    c = zeta_power(zeta_idx)
    v = s.v + min(0, eu)
    v = min(v, cap)
    t = {u: x for u, x in s.t.items() if u <= v}
    for u, x in s.t.items():
        k = u + eu
        if k <= v:
            y = t.get(k, 0) - x * c
            if y == 0:
                t.pop(k, None)
            else:
                t[k] = canon(y)
    return Series.raw(s.D, t, v)


def div_binomial(s: Series, c, eu: int, cap=INF) -> Series:
    """s / (1 - c q^(eu/D)) with the |q| < 1 expansion; c any nonzero scalar."""
    c = canon(c)
    if eu == 0:
        if c == 1:
            raise PoleError("division by 1 - q^0")
        return s.scale(scalar_inverse(1 - c))
    if eu < 0:
        # 1/(1 - c w) = -c^-1 w^-1 / (1 - c^-1 w^-1)
        ci = scalar_inverse(c)
        return div_binomial(s.scale(-ci).shift_units(-eu), ci, -eu, cap)
    v = min(s.v, cap)
    if v == INF:
        raise ValueError("dividing an exact series by a binomial needs an order cap")
    if not s.t:
        return Series.raw(s.D, {}, v)
    lo = min(s.t)
    r = {}
    get = s.t.get
    for n in range(lo, v + 1):
        x = get(n, 0)
        p = r.get(n - eu)
        if p is not None:
            x = x + c * p
        if x != 0:
            r[n] = canon(x)
    return Series.raw(s.D, r, v)


def geometric_expand(c, e, order, D: Optional[int] = None) -> Series:
    """1/(1 - c q^e) expanded for |q| < 1, truncated at ``order``."""
    e = Fraction(e)
    D = D or lcm_den(e)
    return div_binomial(Series.one(D), c, _units(e, D), _floor_units(order, D))


# ---------------------------------------------------------------------------
# Pochhammer symbols
# ---------------------------------------------------------------------------

def _default_D(D, *monos):
    return D or lcm_den(*monos)


def pochhammer_finite(x: Monomial, n: int, base: Monomial, order=INF, D: Optional[int] = None) -> Series:
    """(x; base)_n = prod_{k<n} (1 - x base^k)."""
    D = _default_D(D, x, base)
    if n < 0:
        raise ValueError("pochhammer_finite needs n >= 0")
    if x.is_zero or n == 0:
        return Series.one(D, order)
    xe, be = _units(x.exponent, D), _units(base.exponent, D)
    xk, bk = x.zeta_index, base.zeta_index
    exps = [xe + k * be for k in range(n)]
    neg_after = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        neg_after[k] = neg_after[k + 1] + min(0, exps[k])
    cap_total = _floor_units(order, D)
    s = Series.one(D)
    for k in range(n):
        cap = cap_total - neg_after[k + 1] if cap_total != INF else INF
        if exps[k] == 0 and (xk + k * bk) % 24 == 0:
            return Series.zero(D, INF).truncate(order)
        s = mul_binomial(s, xk + k * bk, exps[k], cap)
    return s.with_valid(cap_total) if cap_total != INF else s


def pochdual(a: Monomial, n: int, base: Monomial, order=INF, D: Optional[int] = None) -> Series:
    """prod_{k=1}^{n} (a - base^k), i.e. (base/a; base)_n * a^n, total at a = 0."""
    D = _default_D(D, a, base)
    if n < 0:
        raise ValueError("pochdual needs n >= 0")
    be, bk = _units(base.exponent, D), base.zeta_index
    # (a - b^k) = -b^k (1 - a b^-k)
    shift = be * n * (n + 1) // 2
    lead = (bk * n * (n + 1) // 2 + 12 * n) % 24
    if a.is_zero:
        s = Series.raw(D, {shift: zeta_power(lead)}, INF)
        return s.truncate(order)
    inner_cap = _floor_units(order, D)
    if inner_cap != INF:
        inner_cap -= shift
    ae, ak = _units(a.exponent, D), a.zeta_index
    s = Series.one(D)
    exps = [ae - k * be for k in range(1, n + 1)]
    neg_after = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        neg_after[i] = neg_after[i + 1] + min(0, exps[i])
    for i, k in enumerate(range(1, n + 1)):
        cap = inner_cap - neg_after[i + 1] if inner_cap != INF else INF
        s = mul_binomial(s, ak - k * bk, exps[i], cap)
    s = s.shift_units(shift).scale(zeta_power(lead))
    return s.truncate(order)


@lru_cache(maxsize=4096)
def pochhammer_infinite(x: Monomial, base: Monomial, order, D: Optional[int] = None) -> Series:
    """(x; base)_inf truncated at ``order``."""
    D = _default_D(D, x, base)
    if x.is_zero:
        return Series.one(D, order)
    be = _units(base.exponent, D)
    if be <= 0:
        raise NonConvergentProduct("base %s does not have positive q-exponent" % base)
    if order == INF:
        raise NonConvergentProduct("infinite product needs a finite order")
    xe = _units(x.exponent, D)
    xk, bk = x.zeta_index, base.zeta_index
    N = _floor_units(order, D)
    neg = 0
    k = 0
    while xe + k * be < 0:
        neg += xe + k * be
        k += 1
    kmax = 0
    while xe + kmax * be <= N - neg:
        kmax += 1
    s = Series.one(D)
    neg_rem = neg
    for k in range(kmax):
        e = xe + k * be
        if e == 0 and (xk + k * bk) % 24 == 0:
            return Series.zero(D, INF).truncate(order)
        if e < 0:
            neg_rem -= e
        s = mul_binomial(s, xk + k * bk, e, N - neg_rem)
    return s.with_valid(N)


def _neg_sum(x: Monomial, base: Monomial, D: int) -> int:
    xe, be = _units(x.exponent, D), _units(base.exponent, D)
    tot, k = 0, 0
    while xe + k * be < 0:
        tot += xe + k * be
        k += 1
    return tot


def _quad_range(A2: int, B: int, bound: int, slack: int = 2):
    """Integer n with A2*n*(n-1)/2 + B*n <= bound (A2 > 0), padded by ``slack``."""
    a = Fraction(A2, 2)
    b = B - Fraction(A2, 2)
    disc = b * b + 4 * a * bound
    if disc < 0:
        vert = -b / (2 * a)
        return range(math.floor(vert) - slack, math.floor(vert) + slack + 1)
    r = math.isqrt(max(0, math.floor(disc))) + 1
    lo = math.floor((-b - r) / (2 * a)) - slack
    hi = math.ceil((-b + r) / (2 * a)) + slack
    return range(lo, hi + 1)


@lru_cache(maxsize=4096)
def _jacobi_sum(x: Monomial, base: Monomial, order, D: int) -> Series:
    be = _units(base.exponent, D)
    if be <= 0:
        raise NonConvergentProduct("theta base must have positive q-exponent")
    xe = _units(x.exponent, D)
    xk, bk = x.zeta_index, base.zeta_index
    N = _floor_units(order, D)
    acc = {}
    for n in _quad_range(be, xe, N):
        c2 = n * (n - 1) // 2
        e = be * c2 + xe * n
        if e > N:
            continue
        k = (bk * c2 + xk * n + 12 * n) % 24
        acc.setdefault(e, []).append(k)
    t = {}
    for e, ks in acc.items():
        val = _zeta_sum(ks)
        if val != 0:
            t[e] = val
    return Series.raw(D, t, N)


def _zeta_sum(ks):
    if all(k in (0, 12) for k in ks):
        return sum(1 if k == 0 else -1 for k in ks)
    tot = 0
    for k in ks:
        tot = tot + zeta_power(k)
    return canon(tot)


def jacobi_j(x: Monomial, base: Monomial, order, form: str = "sum", D: Optional[int] = None) -> Series:
    """j(x; base) = (x)_inf (base/x)_inf (base)_inf, as a bilateral sum or as the product."""
    D = _default_D(D, x, base)
    if x.is_zero:
        raise ValueError("j(x;q) needs x nonzero")
    if order == INF:
        raise NonConvergentProduct("theta function needs a finite order")
    order = Fraction(order)
    if form == "sum":
        return _jacobi_sum(x, base, order, D)
    if form != "product":
        raise ValueError("form must be 'sum' or 'product'")
    y = base / x
    n1, n2 = Fraction(_neg_sum(x, base, D), D), Fraction(_neg_sum(y, base, D), D)
    a = pochhammer_infinite(x, base, order - n2, D)
    b = pochhammer_infinite(y, base, order - n1, D)
    c = pochhammer_infinite(base, base, order - n1 - n2, D)
    return series_mul(series_mul(a, b), c).truncate(order)


@lru_cache(maxsize=4096)
def euler_product(m: Fraction, order, D: int) -> Series:
    """(q^m; q^m)_inf via the pentagonal number expansion."""
    mu = _units(m, D)
    N = _floor_units(order, D)
    t = {}
    n = 0
    while True:
        hit = False
        for k in ((n, -n) if n else (0,)):
            e = mu * k * (3 * k - 1) // 2
            if e <= N:
                t[e] = -1 if k % 2 else 1
                hit = True
        if not hit and n > 0:
            break
        n += 1
    return Series.raw(D, t, N)


def theta_shorthand(ref: ThetaRef, order, D: Optional[int] = None) -> Series:
    D = D or lcm_den(ref.a, ref.m)
    if ref.kind == "Jm":
        return euler_product(ref.m, Fraction(order), D)
    x = Monomial.q(ref.a, sign=-1 if ref.kind == "Jbar" else 1)
    return jacobi_j(x, Monomial.q(ref.m), order, "sum", D)


def theta_factor(x: Monomial, base: Monomial, D: int):
    """j(x; base) as a lazy factor."""
    return lambda order: jacobi_j(x, base, order, "sum", D)


def reciprocal_theta(z: Monomial, order, base: Optional[Monomial] = None, D: Optional[int] = None) -> Series:
    """sum_n (-1)^n base^(n(n+1)/2) / (1 - base^n z)."""
    base = base or Monomial.q(1)
    D = _default_D(D, z, base)
    be, ze = _units(base.exponent, D), _units(z.exponent, D)
    if be <= 0:
        raise NonConvergentProduct("base must have positive q-exponent")
    bk, zk = base.zeta_index, z.zeta_index
    N = _floor_units(order, D)
    acc = _Acc(D)

    def tmin(n):
        e = ze + n * be
        return be * n * (n + 1) // 2 + max(0, -e)

    for n in _convex_walk(tmin, N):
        e = ze + n * be
        ck = (zk + n * bk) % 24
        if e == 0 and ck == 0:
            raise PoleError("z is an integral power of the base")
        acc.add_geometric(be * n * (n + 1) // 2, (bk * n * (n + 1) // 2 + 12 * n) % 24, ck, e, N)
    return acc.series(N)


def _convex_walk(tmin, N: int, slack: int = 2, start: int = 0):
    """Integers n (both directions from ``start``) that can contribute below N for convex tmin."""
    out = []
    for step in (1, -1):
        n = start if step == 1 else start - 1
        prev = None
        extra = 0
        guard = 0
        while True:
            t = tmin(n)
            if t <= N:
                out.append(n)
                extra = 0
            elif prev is not None and t >= prev:
                extra += 1
                if extra > slack:
                    break
            prev = t
            n += step
            guard += 1
            if guard > 1_000_000:
                raise NonConvergentProduct("bilateral enumeration does not terminate")
    return out


class _Acc:
    """Accumulates sums of signed zeta_24 powers per exponent, plus generic scalars."""

    def __init__(self, D: int):
        self.D = D
        self.z = {}
        self.other = {}

    def add(self, u: int, k: int, mult: int = 1):
        row = self.z.get(u)
        if row is None:
            row = self.z[u] = [0] * 24
        row[k % 24] += mult

    def add_scalar(self, u: int, c):
        self.other[u] = self.other.get(u, 0) + c

    def add_geometric(self, shift: int, k0: int, ck: int, e: int, N: int, mult: int = 1):
        """mult * zeta^k0 q^shift / (1 - zeta^ck q^e), expanded for |q| < 1."""
        if e == 0:
            if ck % 24 == 0:
                raise PoleError("vanishing denominator 1 - q^0")
            c = scalar_inverse(1 - zeta_power(ck))
            if shift <= N:
                self.add_scalar(shift, c * zeta_power(k0) * mult)
            return
        if e < 0:
            # 1/(1 - c w) = -c^-1 w^-1 / (1 - c^-1 w^-1)
            shift, k0, ck, e = shift - e, (k0 + 12 - ck) % 24, (-ck) % 24, -e
        j = 0
        u = shift
        while u <= N:
            self.add(u, k0 + j * ck, mult)
            j += 1
            u += e

    def series(self, N: int) -> Series:
        t = {}
        for u, row in self.z.items():
            if u > N:
                continue
            if not any(row[k] for k in range(24) if k not in (0, 12)):
                val = row[0] - row[12]
            else:
                val = 0
                for k, n in enumerate(row):
                    if n:
                        val = val + n * zeta_power(k)
                val = canon(val)
            if val != 0:
                t[u] = val
        for u, c in self.other.items():
            if u > N:
                continue
            val = canon(t.get(u, 0) + c)
            if val == 0:
                t.pop(u, None)
            else:
                t[u] = val
        return Series.raw(self.D, t, N)


def theta_quotient(num, den, order, D: int, prefactor: Optional[Series] = None) -> Series:
    """Product of j(x;base) over ``num`` divided by those over ``den`` (pairs of monomials)."""
    factors = [theta_factor(x, b, D) for x, b in num]
    factors += [inverse_factor(theta_factor(x, b, D), "j(%s;%s)" % (x, b)) for x, b in den]
    if prefactor is not None:
        factors.append(lambda o, p=prefactor: p.truncate(o))
    return product_to_order(factors, order, D)
