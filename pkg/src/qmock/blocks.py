"""Appell-Lerch sums, Hecke-type double sums and the h/k building blocks."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ._lazy import inverse_factor, product_to_order
from .algebra import INF, Monomial, Series, _floor_units, _units
from .errors import NonConvergentProduct, PoleError, UnboundedEnumeration
from .thetafn import _Acc, _convex_walk, geometric_expand, jacobi_j, lcm_den

__all__ = ["geometric_expand", "appell_m", "false_m", "hecke_f", "false_f", "h_block", "k_block",
           "appell_sum"]


def _check_base(base: Monomial, D: int) -> int:
    be = _units(base.exponent, D)
    if base.is_zero or be <= 0:
        raise NonConvergentProduct("base %s must have positive q-exponent" % base)
    return be


def appell_sum(x: Monomial, base: Monomial, z: Monomial, order, D: int, signed: bool, slack: int = 2) -> Series:
    """sum_r w(r) (-1)^r base^C(r,2) z^r / (1 - base^(r-1) x z), w = sg(r) when ``signed``."""
    be = _check_base(base, D)
    xe, ze = _units(x.exponent, D), _units(z.exponent, D)
    bk, xk, zk = base.zeta_index, x.zeta_index, z.zeta_index
    N = _floor_units(order, D)

    def tmin(r):
        e = be * (r - 1) + xe + ze
        return be * (r * (r - 1) // 2) + ze * r + max(0, -e)

    acc = _Acc(D)
    for r in _convex_walk(tmin, N, slack):
        c2 = r * (r - 1) // 2
        e = be * (r - 1) + xe + ze
        ck = (bk * (r - 1) + xk + zk) % 24
        if e == 0 and ck == 0:
            raise PoleError("x z is an integral power of the base")
        mult = -1 if (signed and r < 0) else 1
        acc.add_geometric(be * c2 + ze * r, (bk * c2 + zk * r + 12 * r) % 24, ck, e, N, mult)
    return acc.series(N)


def appell_m(x: Monomial, base: Monomial, z: Monomial, order, D: Optional[int] = None, margin: int = 0) -> Series:
    """m(x, base, z) = j(z; base)^-1 sum_r (-1)^r base^C(r,2) z^r / (1 - base^(r-1) x z)."""
    D = D or lcm_den(x, base, z)
    _check_base(base, D)
    if x.is_zero or z.is_zero:
        raise PoleError("m(x,q,z) needs x and z nonzero")
    jz = lambda o: jacobi_j(z, base, o, "sum", D)
    probe = jz(Fraction(abs(z.exponent)) + 4 * base.exponent + 1)
    if not probe.t:
        raise PoleError("j(z; base) vanishes: z is an integral power of the base")
    slack = 2 + margin
    body = lambda o: appell_sum(x, base, z, o, D, False, slack)
    return product_to_order([body, inverse_factor(jz, "j(z)")], order, D)


def false_m(x: Monomial, base: Monomial, z: Monomial, order, D: Optional[int] = None, margin: int = 0) -> Series:
    """sum_r sg(r) (-1)^r base^C(r,2) z^r / (1 - base^(r-1) x z) (no theta normalisation)."""
    D = D or lcm_den(x, base, z)
    if x.is_zero or z.is_zero:
        raise PoleError("false Appell sum needs x and z nonzero")
    return appell_sum(x, base, z, order, D, True, 2 + margin)


def _min_half_line(A: int, B: int, lo: Optional[int], hi: Optional[int]):
    """Minimum of A*C(s,2) + B*s over integers s in [lo, hi] (one side may be None)."""
    if A == 0:
        if lo is not None and hi is None:
            if B <= 0 and A == 0:
                return None
            return B * lo
        if hi is not None and lo is None:
            if B >= 0:
                return None
            return B * hi
    if A < 0:
        return None
    # vertex of A s(s-1)/2 + B s is at s = 1/2 - B/A
    v = Fraction(1, 2) - Fraction(B, A)
    cands = [int(v) - 1, int(v), int(v) + 1]
    if lo is not None:
        cands = [max(c, lo) for c in cands]
    if hi is not None:
        cands = [min(c, hi) for c in cands]
    return min(A * (s * (s - 1) // 2) + B * s for s in cands)


def _hecke(a, b, c, x, y, base, order, D, signed, margin):
    if min(a, b, c) < 0:
        raise UnboundedEnumeration("negative quadratic-form coefficients are not supported")
    be = _check_base(base, D)
    xe, ye = _units(x.exponent, D), _units(y.exponent, D)
    bk, xk, yk = base.zeta_index, x.zeta_index, y.zeta_index
    N = _floor_units(order, D)
    slack = 2 + margin
    acc = _Acc(D)
    integral = all(k % 12 == 0 for k in (bk, xk, yk))

    def E(r, s):
        return be * (a * (r * (r - 1) // 2) + b * r * s + c * (s * (s - 1) // 2)) + xe * r + ye * s

    for sign, lo, hi, step in ((1, 0, None, 1), (-1, None, -1, -1)):
        def row_min(r):
            # min over s in the quadrant of E(r, s); quadratic in s with A = be*c, B = be*b*r + ye
            m = _min_half_line(be * c, be * b * r + ye, lo, hi)
            if m is None:
                raise UnboundedEnumeration("Hecke sum row r=%d does not terminate" % r)
            return m + be * a * (r * (r - 1) // 2) + xe * r

        r = 0 if step == 1 else -1
        prev, extra, guard = None, 0, 0
        while True:
            g = row_min(r)
            if g <= N:
                extra = 0
                _hecke_row(acc, r, lo, hi, step, E, N, slack, sign if signed else 1,
                           bk, xk, yk, a, b, c, integral)
            elif prev is not None and g >= prev:
                extra += 1
                if extra > slack:
                    break
            prev = g
            r += step
            guard += 1
            if guard > 200_000:
                raise UnboundedEnumeration("Hecke sum does not terminate in r")
    return acc.series(N)


def _hecke_row(acc, r, lo, hi, step, E, N, slack, mult, bk, xk, yk, a, b, c, integral):
    s = 0 if step == 1 else -1
    prev, extra, guard = None, 0, 0
    while True:
        e = E(r, s)
        if e <= N:
            extra = 0
            parity = (r + s) % 2
            if integral:
                k = (bk * (a * (r * (r - 1) // 2) + b * r * s + c * (s * (s - 1) // 2)) + xk * r + yk * s) % 24
                m = mult * (-1 if parity else 1) * (-1 if k == 12 else 1)
                acc.add(e, 0, m)
            else:
                k = bk * (a * (r * (r - 1) // 2) + b * r * s + c * (s * (s - 1) // 2)) + xk * r + yk * s + 12 * parity
                acc.add(e, k, mult)
        elif prev is not None and e >= prev:
            extra += 1
            if extra > slack:
                return
        prev = e
        s += step
        guard += 1
        if guard > 1_000_000:
            raise UnboundedEnumeration("Hecke sum row does not terminate in s")


def hecke_f(a: int, b: int, c: int, x: Monomial, y: Monomial, base: Monomial, order,
            D: Optional[int] = None, margin: int = 0) -> Series:
    """f_{a,b,c}(x,y,base) = sum_{sg r = sg s} sg(r) (-1)^(r+s) x^r y^s base^(a C(r,2) + b r s + c C(s,2))."""
    D = D or lcm_den(x, y, base)
    return _hecke(a, b, c, x, y, base, order, D, True, margin)


def false_f(a: int, b: int, c: int, x: Monomial, y: Monomial, base: Monomial, order,
            D: Optional[int] = None, margin: int = 0) -> Series:
    """Same double sum as :func:`hecke_f` without the sg(r) weight."""
    D = D or lcm_den(x, y, base)
    return _hecke(a, b, c, x, y, base, order, D, False, margin)


def h_block(x: Monomial, base: Monomial, order, D: Optional[int] = None) -> Series:
    """h(x, base) = j(base; base^2)^-1 sum_n (-1)^n base^(n(n+1)) / (1 - base^n x)."""
    D = D or lcm_den(x, base)
    be = _check_base(base, D)
    xe, bk, xk = _units(x.exponent, D), base.zeta_index, x.zeta_index

    def body(o):
        N = _floor_units(o, D)
        acc = _Acc(D)
        tmin = lambda n: be * n * (n + 1) + max(0, -(xe + be * n))
        for n in _convex_walk(tmin, N):
            e, ck = xe + be * n, (xk + bk * n) % 24
            if e == 0 and ck == 0:
                raise PoleError("x is an integral power of the base")
            acc.add_geometric(be * n * (n + 1), (bk * n * (n + 1) + 12 * n) % 24, ck, e, N)
        return acc.series(N)

    theta = lambda o: jacobi_j(base, base ** 2, o, "sum", D)
    return product_to_order([body, inverse_factor(theta, "j(q;q^2)")], order, D)


def k_block(x: Monomial, base: Monomial, order, D: Optional[int] = None) -> Series:
    """k(x, base) = (x j(-base; base^4))^-1 sum_n base^(n(2n+1)) / (1 - base^(2n) x^2)."""
    D = D or lcm_den(x, base)
    be = _check_base(base, D)
    if x.is_zero:
        raise PoleError("k(x,q) needs x nonzero")
    x2 = x * x
    xe, bk, xk = _units(x2.exponent, D), base.zeta_index, x2.zeta_index

    def body(o):
        N = _floor_units(o, D)
        acc = _Acc(D)
        tmin = lambda n: be * n * (2 * n + 1) + max(0, -(xe + 2 * be * n))
        for n in _convex_walk(tmin, N):
            e, ck = xe + 2 * be * n, (xk + 2 * bk * n) % 24
            if e == 0 and ck == 0:
                raise PoleError("x^2 is an even power of the base")
            acc.add_geometric(be * n * (2 * n + 1), (bk * n * (2 * n + 1)) % 24, ck, e, N)
        return acc.series(N)

    theta = lambda o: jacobi_j(-base, base ** 4, o, "sum", D)
    xinv = x.inverse().to_series(D)
    return product_to_order([body, inverse_factor(theta, "j(-q;q^4)"), lambda o: xinv.truncate(o)], order, D)
