"""Slow, independent reference implementations used to cross-check the fast engine.

Nothing here calls into ``blocks``, ``thetafn``, ``hypergeom``, ``zoo`` or ``dsl``.
Parameters are restricted to monomials ``±q^e`` (rational coefficients), which is all
the cross-checks need.  Internally a series is a plain ``{units: Fraction}`` dict with
exponents counted in units of ``1/D`` and an integer bound ``W``: every coefficient of
exponent ``<= W`` is exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, lcm
from typing import Callable, Dict, List, Sequence, Tuple

from .algebra import Monomial, Series
from .errors import NonConvergentProduct, PoleError

__all__ = ["oracle_m", "oracle_mbar", "oracle_hecke", "oracle_fbar", "oracle_eulerian",
           "EULERIAN_NAMES"]

Poly = Dict[int, Fraction]


def _sign_of(mono: Monomial) -> int:
    if mono.is_zero:
        raise PoleError("oracle parameters must be nonzero")
    k = mono.zeta_index
    if k == 0:
        return 1
    if k == 12:
        return -1
    raise ValueError("oracle handles coefficients +1 and -1 only, got %s" % mono)


def _to_units(e: Fraction, D: int) -> int:
    v = Fraction(e) * D
    assert v.denominator == 1
    return v.numerator


def _common_denominator(*monos: Monomial) -> int:
    D = 1
    for m in monos:
        D = lcm(D, Fraction(m.exponent).denominator)
    return D


def _finish(poly: Poly, D: int, W: int) -> Series:
    return Series(D, {Fraction(u, D): c for u, c in poly.items() if u <= W}, Fraction(W, D))


def _beyond(f: Callable[[int], int], thr: int, start: int) -> int:
    """Smallest R >= start with f(r) > thr and f(-r) > thr for all |r| >= R (f convex)."""
    R = start
    while f(R) <= thr or f(-R) <= thr:
        R += 1
    return R


def _convex_min(f: Callable[[int], int], reach: int) -> int:
    return min(f(r) for r in range(-reach, reach + 1))


# ---------------------------------------------------------------------------
# Appell-Lerch sums
# ---------------------------------------------------------------------------

def _appell_numerator(sx, xe, sb, be, sz, ze, W, signed):
    """sum_r w(r) (-1)^r base^C(r,2) z^r / (1 - base^(r-1) x z) through exponent W."""
    def low(r):  # a lower bound on every exponent contributed by term r
        return be * (r * (r - 1) // 2) + ze * r

    vertex = abs(ze) // be + 2
    R = 2 * _beyond(low, W, vertex)
    out: Poly = {}
    for r in range(-R, R + 1):
        c2 = r * (r - 1) // 2
        t = be * c2 + ze * r
        sgn = (-1) ** (r % 2) * sb ** (c2 % 2) * sz ** (r % 2)
        if signed and r < 0:
            sgn = -sgn
        # ratio w = cw q^e of the geometric series
        e = be * (r - 1) + xe + ze
        cw = sb ** ((r - 1) % 2) * sx * sz
        if e == 0:
            if cw == 1:
                raise PoleError("term r=%d has a vanishing denominator" % r)
            out[t] = out.get(t, 0) + Fraction(sgn, 2)
        elif e > 0:
            k = 0
            while t + k * e <= W:
                out[t + k * e] = out.get(t + k * e, 0) + sgn * cw ** k
                k += 1
        else:
            # 1/(1-w) = -sum_{k>=1} w^-k
            k = 1
            while t - k * e <= W:
                out[t - k * e] = out.get(t - k * e, 0) - sgn * cw ** k
                k += 1
    return out


def _theta(sb, be, sz, ze, W) -> Poly:
    """j(z; base) = sum_n (-1)^n base^C(n,2) z^n through exponent W."""
    def expo(n):
        return be * (n * (n - 1) // 2) + ze * n

    R = 2 * _beyond(expo, W, abs(ze) // be + 2)
    out: Poly = {}
    for n in range(-R, R + 1):
        c2 = n * (n - 1) // 2
        e = expo(n)
        if e <= W:
            out[e] = out.get(e, 0) + (-1) ** (n % 2) * sb ** (c2 % 2) * sz ** (n % 2)
    return {e: c for e, c in out.items() if c}


def _divide(num: Poly, Wn: int, den: Poly, Wd: int) -> Tuple[Poly, int]:
    """num/den and the bound through which the quotient is exact."""
    den = {e: c for e, c in den.items() if c}
    if not den:
        return {}, -10 ** 9
    v = min(den)
    num = {e: c for e, c in num.items() if c}
    rel_bound = Wd - v                 # den q^-v is exact through this
    if num:
        bound = min(Wn, min(num) + rel_bound)
    else:
        return {}, Wn - v
    c0 = den[v]
    # power series inverse of den q^-v, long division style
    inv = [Fraction(0)] * (rel_bound + 1)
    inv[0] = 1 / Fraction(c0)
    for k in range(1, rel_bound + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            d = den.get(v + i)
            if d:
                acc += d * inv[k - i]
        inv[k] = -acc / c0
    out: Poly = {}
    for e, c in num.items():
        for k in range(0, bound - e + 1):
            if inv[k]:
                out[e + k] = out.get(e + k, 0) + c * inv[k]
    return {e - v: c for e, c in out.items() if c}, bound - v


def _appell_params(x, base, z, order):
    if base.is_zero or base.exponent <= 0:
        raise NonConvergentProduct("base must have positive q-exponent")
    D = _common_denominator(x, base, z, Monomial.q(Fraction(order)))
    return (D, _sign_of(x), _to_units(x.exponent, D), _sign_of(base), _to_units(base.exponent, D),
            _sign_of(z), _to_units(z.exponent, D), floor(Fraction(order) * D))


def _power_of_base(sm, em, sb, be) -> bool:
    return em % be == 0 and sm == sb ** ((em // be) % 2)


def oracle_m(x: Monomial, base: Monomial, z: Monomial, order) -> Series:
    """m(x, base, z) by bilateral enumeration and exact long division by j(z; base)."""
    D, sx, xe, sb, be, sz, ze, N = _appell_params(x, base, z, order)
    if _power_of_base(sz, ze, sb, be):
        raise PoleError("j(z; base) vanishes")
    if _power_of_base(sx * sz, xe + ze, sb, be):
        raise PoleError("x z is an integral power of the base")
    W = N
    while True:
        num = _appell_numerator(sx, xe, sb, be, sz, ze, W, False)
        q, exact = _divide(num, W, _theta(sb, be, sz, ze, W), W)
        if exact >= N:
            return _finish(q, D, N)
        W += max(1, N - exact)


def oracle_mbar(x: Monomial, base: Monomial, z: Monomial, order) -> Series:
    """The false Appell-Lerch sum: sg(r) weights and no theta prefactor."""
    D, sx, xe, sb, be, sz, ze, N = _appell_params(x, base, z, order)
    if _power_of_base(sx * sz, xe + ze, sb, be):
        raise PoleError("x z is an integral power of the base")
    return _finish(_appell_numerator(sx, xe, sb, be, sz, ze, N, True), D, N)


# ---------------------------------------------------------------------------
# Hecke-type double sums
# ---------------------------------------------------------------------------

def _hecke(p: Sequence[int], x, y, base, order, signed: bool) -> Series:
    a, b, c = p
    if a <= 0 or c <= 0 or b < 0:
        raise ValueError("oracle handles a, c > 0 and b >= 0 only")
    if base.is_zero or base.exponent <= 0:
        raise NonConvergentProduct("base must have positive q-exponent")
    D = _common_denominator(x, y, base, Monomial.q(Fraction(order)))
    sx, sy, sb = _sign_of(x), _sign_of(y), _sign_of(base)
    xe, ye, be = (_to_units(m.exponent, D) for m in (x, y, base))
    N = floor(Fraction(order) * D)

    # on sg(r) = sg(s) the cross term b r s is >= 0, so the exponent is at least
    # P(r) + Q(s) with both one-variable quadratics convex
    P = lambda r: be * a * (r * (r - 1) // 2) + xe * r
    Q = lambda s: be * c * (s * (s - 1) // 2) + ye * s
    reach_r = abs(xe) // (be * a) + 2
    reach_s = abs(ye) // (be * c) + 2
    minP, minQ = _convex_min(P, reach_r), _convex_min(Q, reach_s)
    R = 2 * _beyond(P, N - minQ, reach_r)
    S = 2 * _beyond(Q, N - minP, reach_s)

    out: Poly = {}
    for s in range(-S, S + 1):
        for r in range(-R, R + 1):
            if (r >= 0) != (s >= 0):
                continue
            k = a * (r * (r - 1) // 2) + b * r * s + c * (s * (s - 1) // 2)
            e = be * k + xe * r + ye * s
            if e > N:
                continue
            sgn = (-1) ** ((r + s) % 2) * sx ** (r % 2) * sy ** (s % 2) * sb ** (k % 2)
            if signed and r < 0:
                sgn = -sgn
            out[e] = out.get(e, 0) + sgn
    return _finish({e: Fraction(v) for e, v in out.items() if v}, D, N)


def oracle_hecke(p: Sequence[int], x: Monomial, y: Monomial, base: Monomial, order) -> Series:
    """f_{a,b,c}(x, y, base) by brute-force enumeration of a doubled box."""
    return _hecke(p, x, y, base, order, True)


def oracle_fbar(p: Sequence[int], x: Monomial, y: Monomial, base: Monomial, order) -> Series:
    """The false Hecke sum: the same region without the sg(r) weight."""
    return _hecke(p, x, y, base, order, False)


# ---------------------------------------------------------------------------
# Eulerian sums
# ---------------------------------------------------------------------------

def _times_factor(poly: List[Fraction], c: int, e: int, N: int) -> None:
    """poly *= (1 - c q^e) in place, truncated at q^N (e >= 0)."""
    if e == 0:
        for k in range(N + 1):
            poly[k] *= 1 - c
        return
    for k in range(N, e - 1, -1):
        poly[k] -= c * poly[k - e]


def _pochhammer(c: int, start: int, step: int, n: int, N: int) -> List[Fraction]:
    """(c q^start; q^step)_n as a coefficient list through q^N."""
    poly = [Fraction(0)] * (N + 1)
    poly[0] = Fraction(1)
    for i in range(n):
        _times_factor(poly, c, start + i * step, N)
    return poly


def _product(u: List[Fraction], v: List[Fraction], N: int) -> List[Fraction]:
    out = [Fraction(0)] * (N + 1)
    for i, a in enumerate(u):
        if a:
            for j in range(N + 1 - i):
                if v[j]:
                    out[i + j] += a * v[j]
    return out


def _reciprocal(u: List[Fraction], N: int) -> List[Fraction]:
    assert u[0] == 1
    out = [Fraction(0)] * (N + 1)
    out[0] = Fraction(1)
    for k in range(1, N + 1):
        out[k] = -sum(u[i] * out[k - i] for i in range(1, k + 1) if u[i])
    return out


# A summand is sign * q^expo * prod(num) / prod(den); each factor (c, start, step, length)
# stands for (c q^start; q^step)_length.
Factor = Tuple[int, int, int, int]
Summand = Tuple[int, int, List[Factor], List[Factor]]

_PLUS, _MINUS = 1, -1  # (q..) and (-q..)


def _defs() -> Dict[str, Tuple[int, Callable[[int], Summand], Fraction, Fraction]]:
    """name -> (first n, summand(n), constant, multiplier): value = constant + multiplier * sum."""
    one, zero = Fraction(1), Fraction(0)
    d = {}

    def add(name, first, summand, const=zero, mult=one):
        d[name] = (first, summand, const, mult)

    # order 2
    add("A2", 0, lambda n: (1, n + 1, [(_MINUS, 2, 2, n)], [(_PLUS, 1, 2, n + 1)]))
    add("B2", 0, lambda n: (1, n, [(_MINUS, 1, 2, n)], [(_PLUS, 1, 2, n + 1)]))
    add("mu2", 0, lambda n: ((-1) ** n, n * n, [(_PLUS, 1, 2, n)], [(_MINUS, 2, 2, n)] * 2))
    # order 3
    add("f3", 0, lambda n: (1, n * n, [], [(_MINUS, 1, 1, n)] * 2))
    add("phi3", 0, lambda n: (1, n * n, [], [(_MINUS, 2, 2, n)]))
    add("psi3", 1, lambda n: (1, n * n, [], [(_PLUS, 1, 2, n)]))
    add("chi3", 0, lambda n: (1, n * n, [(_MINUS, 1, 1, n)], [(_MINUS, 3, 3, n)]))
    add("omega3", 0, lambda n: (1, 2 * n * (n + 1), [], [(_PLUS, 1, 2, n + 1)] * 2))
    add("nu3", 0, lambda n: (1, n * (n + 1), [], [(_MINUS, 1, 2, n + 1)]))
    add("rho3", 0, lambda n: (1, 2 * n * (n + 1), [(_PLUS, 1, 2, n + 1)], [(_PLUS, 3, 6, n + 1)]))
    # order 5
    add("f0_5", 0, lambda n: (1, n * n, [], [(_MINUS, 1, 1, n)]))
    add("phi0_5", 0, lambda n: (1, n * n, [(_MINUS, 1, 2, n)], []))
    add("psi0_5", 0, lambda n: (1, (n + 2) * (n + 1) // 2, [(_MINUS, 1, 1, n)], []))
    add("F0_5", 0, lambda n: (1, 2 * n * n, [], [(_PLUS, 1, 2, n)]))
    add("f1_5", 0, lambda n: (1, n * (n + 1), [], [(_MINUS, 1, 1, n)]))
    add("phi1_5", 0, lambda n: (1, (n + 1) ** 2, [(_MINUS, 1, 2, n)], []))
    add("psi1_5", 0, lambda n: (1, n * (n + 1) // 2, [(_MINUS, 1, 1, n)], []))
    add("F1_5", 0, lambda n: (1, 2 * n * (n + 1), [], [(_PLUS, 1, 2, n + 1)]))
    add("chi0_5", 0, lambda n: (1, n, [], [(_PLUS, n + 1, 1, n)]))
    add("chi1_5", 0, lambda n: (1, n, [], [(_PLUS, n + 1, 1, n + 1)]))
    # order 6
    add("phi6", 0, lambda n: ((-1) ** n, n * n, [(_PLUS, 1, 2, n)], [(_MINUS, 1, 1, 2 * n)]))
    add("psi6", 0, lambda n: ((-1) ** n, (n + 1) ** 2, [(_PLUS, 1, 2, n)], [(_MINUS, 1, 1, 2 * n + 1)]))
    add("rho6", 0, lambda n: (1, n * (n + 1) // 2, [(_MINUS, 1, 1, n)], [(_PLUS, 1, 2, n + 1)]))
    add("sigma6", 0, lambda n: (1, (n + 1) * (n + 2) // 2, [(_MINUS, 1, 1, n)], [(_PLUS, 1, 2, n + 1)]))
    add("lambda6", 0, lambda n: ((-1) ** n, n, [(_PLUS, 1, 2, n)], [(_MINUS, 1, 1, n)]))
    add("mu6", 0, lambda n: ((-1) ** n, n + 1, [(_MINUS, n, 1, 1), (_PLUS, 1, 2, n)],
                             [(_MINUS, 1, 1, n + 1)]), Fraction(1, 2), Fraction(1, 2))
    add("gamma6", 0, lambda n: (1, n * n, [(_PLUS, 1, 1, n)], [(_PLUS, 3, 3, n)]))
    add("phiminus6", 1, lambda n: (1, n, [(_MINUS, 1, 1, 2 * n - 1)], [(_PLUS, 1, 2, n)]))
    add("psiminus6", 1, lambda n: (1, n, [(_MINUS, 1, 1, 2 * n - 2)], [(_PLUS, 1, 2, n)]))
    # order 8
    add("S0_8", 0, lambda n: (1, n * n, [(_MINUS, 1, 2, n)], [(_MINUS, 2, 2, n)]))
    add("S1_8", 0, lambda n: (1, n * (n + 2), [(_MINUS, 1, 2, n)], [(_MINUS, 2, 2, n)]))
    add("T0_8", 0, lambda n: (1, (n + 1) * (n + 2), [(_MINUS, 2, 2, n)], [(_MINUS, 1, 2, n + 1)]))
    add("T1_8", 0, lambda n: (1, n * (n + 1), [(_MINUS, 2, 2, n)], [(_MINUS, 1, 2, n + 1)]))
    add("U0_8", 0, lambda n: (1, n * n, [(_MINUS, 1, 2, n)], [(_MINUS, 4, 4, n)]))
    add("U1_8", 0, lambda n: (1, (n + 1) ** 2, [(_MINUS, 1, 2, n)], [(_MINUS, 2, 4, n + 1)]))
    add("V0_8", 0, lambda n: (1, n * n, [(_MINUS, 1, 2, n)], [(_PLUS, 1, 2, n)]), Fraction(-1), Fraction(2))
    add("V1_8", 0, lambda n: (1, (n + 1) ** 2, [(_MINUS, 1, 2, n)], [(_PLUS, 1, 2, n + 1)]))
    # order 7
    add("F0_7", 0, lambda n: (1, n * n, [], [(_PLUS, n + 1, 1, n)]))
    add("F1_7", 1, lambda n: (1, n * n, [], [(_PLUS, n, 1, n)]))
    add("F2_7", 0, lambda n: (1, n * n + n, [], [(_PLUS, n + 1, 1, n + 1)]))
    # order 10
    add("phi10", 0, lambda n: (1, n * (n + 1) // 2, [], [(_PLUS, 1, 2, n + 1)]))
    add("psi10", 1, lambda n: (1, n * (n + 1) // 2, [], [(_PLUS, 1, 2, n)]))
    add("X10", 0, lambda n: ((-1) ** n, n * n, [], [(_MINUS, 1, 1, 2 * n)]))
    add("chi10", 1, lambda n: ((-1) ** (n - 1), n * n, [], [(_MINUS, 1, 1, 2 * n - 1)]))
    # sigma(q) of Andrews, Dyson and Hickerson, and the sum that collapses to 2
    add("sigmaADH", 0, lambda n: (1, n * (n + 1) // 2, [], [(_MINUS, 1, 1, n)]))
    add("curious2", 0, lambda n: (1, n * (n - 1) // 2, [], [(_MINUS, 1, 1, n)]))
    return d


_DEFS = _defs()
EULERIAN_NAMES = tuple(_DEFS)


def oracle_eulerian(name: str, order) -> Series:
    """The named q-hypergeometric sum, term by term, through q^order."""
    first, summand, const, mult = _DEFS[name]
    N = floor(Fraction(order))
    if N < 0:
        return Series(1, {}, Fraction(order))
    total = [Fraction(0)] * (N + 1)
    # every summand is q^expo times a power series with constant term 1 and expo >= n - 1,
    # so n = N + 2 is already past the truncation
    for n in range(first, N + 2):
        sign, expo, num, den = summand(n)
        if expo > N:
            continue
        term = [Fraction(0)] * (N + 1)
        term[0] = Fraction(1)
        for fac in num:
            term = _product(term, _pochhammer(*fac, N), N)
        for fac in den:
            term = _product(term, _reciprocal(_pochhammer(*fac, N), N), N)
        for k in range(N + 1 - expo):
            total[k + expo] += sign * term[k]
    poly = {k: const * (k == 0) + mult * c for k, c in enumerate(total)}
    if 0 not in poly:
        poly[0] = const
    return Series(1, {Fraction(k): c for k, c in poly.items()}, Fraction(N))
