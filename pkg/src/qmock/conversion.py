"""Rewriting Hecke-type sums f_{n,n+p,n} as Appell-Lerch sums plus theta quotients."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from ._lazy import inverse_factor, product_to_order
from .algebra import Monomial, Series
from .blocks import appell_m, hecke_f
from .errors import PoleError
from .report import VerificationReport, compare
from .thetafn import euler_product, jacobi_j, lcm_den


@dataclass(frozen=True)
class ConversionParams:
    n: int
    p: int = 2

    def check_coprime(self):
        if self.n < 1 or self.p < 1 or math.gcd(self.n, self.p) != 1:
            raise ValueError("coprime variant needs positive n, p with gcd 1")

    def check_odd(self):
        if self.n < 1 or self.n % 2 == 0:
            raise ValueError("odd variant needs a positive odd n")


def _one() -> Monomial:
    return Monomial.q(0)


def _neg(m: Monomial) -> Monomial:
    return -m


def _pw(m: Monomial, k) -> Monomial:
    return m ** k if k >= 0 else m.inverse() ** (-k)


def _theta(x: Monomial, base: Monomial, D: int):
    return lambda o: jacobi_j(x, base, o, "sum", D)


def _euler(base: Monomial, m: int, D: int):
    """(base^m; base^m)_inf; for a signed base fall back to the theta sum."""
    bm = base ** m
    if bm.zeta_index == 0:
        e = bm.exponent
        return lambda o: euler_product(e, Fraction(o), D)
    return lambda o: jacobi_j(bm, bm ** 3, o, "sum", D)


def _term(mono: Monomial, num, den, D: int, extra=None):
    """mono * prod(num j-factors) / prod(den j-factors) [* extra factor] as a lazy factor."""
    def f(order):
        fs = [lambda o: mono.to_series(D).truncate(o)]
        fs += [_theta(x, b, D) for x, b in num]
        fs += [inverse_factor(_theta(x, b, D), "j(%s;%s)" % (x, b)) for x, b in den]
        if extra is not None:
            fs += extra
        return product_to_order(fs, order, D)
    return f


def _sum(parts, order, D):
    total = Series.zero(D).truncate(order)
    for p in parts:
        total = total + p(order)
    return total.truncate(order)


def _dims(*ms, D=None):
    return D or lcm_den(*ms)


def g_abc(a: int, b: int, c: int, x: Monomial, y: Monomial, base: Monomial, z1: Monomial, z0: Monomial,
          order, D: Optional[int] = None, _parts: bool = False):
    """The Appell-Lerch side g_{a,b,c}(x, y, base, z1, z0)."""
    disc = b * b - a * c
    if disc == 0:
        raise ValueError("g_{a,b,c} needs b^2 != ac")
    D = _dims(x, y, base, z1, z0, D=D)
    parts = []
    for (A, C, X, Y, Z) in ((a, c, x, y, z0), (c, a, y, x, z1)):
        for t in range(A):
            mono = _pw(-Y, t) * base ** (C * (t * (t - 1) // 2))
            arg = -(base ** (A * (b * (b + 1) // 2) - C * (A * (A + 1) // 2) - t * disc)) \
                * _pw(-Y, A) * _pw(-X, -b)
            mbase = base ** (A * disc)
            mfac = (lambda arg=arg, mbase=mbase, Z=Z: (lambda o: appell_m(arg, mbase, Z, o, D)))()
            parts.append(_term(mono, [(base ** (b * t) * X, base ** A)], [], D, [mfac]))
    if _parts:
        return parts
    return _sum(parts, Fraction(order), D)


def _frac_part(v: Fraction) -> Fraction:
    return v - math.floor(v)


def phi_np(params: ConversionParams, x: Monomial, y: Monomial, base: Monomial, order,
           D: Optional[int] = None) -> Series:
    """Theta-quotient correction Phi_{n,p}(x, y, base)."""
    params.check_coprime()
    n, p = params.n, params.p
    D = _dims(x, y, base, base ** Fraction(1, 2) if n % 2 == 0 else None, D=D)
    big = p * p * (2 * n + p)
    half = Fraction(n - 1, 2)
    shift = _frac_part(half)
    parts = []
    for rs in range(p):
        for ss in range(p):
            r, s = rs + shift, ss + shift
            R, S = r - half, s + Fraction(n + 1, 2)
            assert R.denominator == 1 and S.denominator == 1
            R, S = int(R), int(S)
            e = n * (R * (R - 1) // 2) + (n + p) * R * S + n * (S * (S - 1) // 2)
            mono = base ** e * _pw(-x, R) * _pw(-y, S)
            num = [(-(base ** (n * p * (s - r))) * _pw(x, n) * _pw(y, -n), base ** (n * p * p)),
                   (base ** (p * (2 * n + p) * (r + s) + p * (n + p)) * _pw(x, p) * _pw(y, p), base ** big)]
            den = [(base ** (p * (2 * n + p) * r + Fraction(p * (n + p), 2)) * _pw(-y, n + p) * _pw(-x, -n), base ** big),
                   (base ** (p * (2 * n + p) * s + Fraction(p * (n + p), 2)) * _pw(-x, n + p) * _pw(-y, -n), base ** big)]
            parts.append(_term(mono, num, den, D))
    cube = _euler(base, big, D)
    pre = [lambda o: product_to_order([cube, cube, cube], o, D),
           inverse_factor(_theta(Monomial.q(0, sign=-1), base ** (n * p * (2 * n + p)), D), "Jbar")]
    inner = lambda o: _sum(parts, o, D)
    return product_to_order(pre + [inner], Fraction(order), D)


def theta_n2(n: int, x: Monomial, y: Monomial, base: Monomial, order, D: Optional[int] = None) -> Series:
    """Theta-quotient correction Theta_{n,2}(x, y, base) for odd n."""
    ConversionParams(n).check_odd()
    D = _dims(x, y, base, D=D)
    N4, N8 = base ** (4 * (n + 1)), base ** (8 * (n + 1))
    mono = _pw(y, (n + 1) // 2) * _pw(base, -((n * n - 3) // 2)) * _pw(x, -((n - 3) // 2))
    num = [(base ** (2 * n), base ** (4 * n)), (base ** (4 * (n + 1)), N8),
           (y / x, N4), (base ** (n + 2) * x * y, N4), (base ** (2 * n) * _pw(x * y, -2), N8)]
    den = [(_pw(y, n) * _pw(x, -n), base ** (4 * n * (n + 1))),
           (-(base ** (n + 2)) * x * x, N4), (-(base ** (n + 2)) * y * y, N4)]
    return _term(mono, num, den, D)(Fraction(order))


def fm_identity_coprime(params: ConversionParams, x: Monomial, y: Monomial, base: Monomial, order,
                        D: Optional[int] = None) -> VerificationReport:
    params.check_coprime()
    n, p = params.n, params.p
    D = _dims(x, y, base, base ** Fraction(1, 2) if n % 2 == 0 else None, D=D)
    m1 = Monomial.q(0, sign=-1)
    lhs = lambda o: hecke_f(n, n + p, n, x, y, base, o, D)
    rhs = lambda o: g_abc(n, n + p, n, x, y, base, m1, m1, o, D) + phi_np(params, x, y, base, o, D)
    label = "f_{%d,%d,%d}(%s,%s,%s) coprime" % (n, n + p, n, x, y, base)
    return compare(label, lhs, rhs, order)


def fm_identity_odd(n: int, x: Monomial, y: Monomial, base: Monomial, order,
                    D: Optional[int] = None) -> VerificationReport:
    ConversionParams(n).check_odd()
    D = _dims(x, y, base, D=D)
    z1 = _pw(y, n) * _pw(x, -n)
    z0 = z1.inverse()
    lhs = lambda o: hecke_f(n, n + 2, n, x, y, base, o, D)
    rhs = lambda o: g_abc(n, n + 2, n, x, y, base, z1, z0, o, D) - theta_n2(n, x, y, base, o, D)
    label = "f_{%d,%d,%d}(%s,%s,%s) odd" % (n, n + 2, n, x, y, base)
    return compare(label, lhs, rhs, order)
