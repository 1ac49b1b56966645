"""Order bookkeeping for products and quotients of series-valued factors.

A factor is a callable ``order -> Series`` returning a series valid at least to ``order``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Sequence

from .algebra import INF, Series, series_invert, series_mul
from .errors import PoleError, ZeroSeries

Factor = Callable[[Fraction], Series]


def _lower_min(s: Series):
    # least exponent if known, else a lower bound just above the validity window
    if s.t:
        return s.min_exp
    return s.valid_to + Fraction(1, s.D) if s.valid_to != INF else INF


def product_to_order(factors: Sequence[Factor], order, D: int) -> Series:
    order = Fraction(order)
    if not factors:
        return Series.one(D, order)
    series: List[Series] = [f(order) for f in factors]
    for _ in range(4):
        mins = [_lower_min(s) for s in series]
        if any(m == INF for m in mins):
            # an exactly-zero factor makes the whole product exactly zero
            return Series.zero(D, INF).truncate(order)
        total = sum(mins)
        need = [order - (total - m) for m in mins]
        if all(s.valid_to >= n for s, n in zip(series, need)):
            break
        series = [s if s.valid_to >= n else f(n) for s, f, n in zip(series, factors, need)]
    out = series[0].lift(D) if series[0].D != D and D % series[0].D == 0 else series[0]
    for s in series[1:]:
        out = series_mul(out, s)
    return out.truncate(order)


def inverse_factor(f: Factor, label: str = "factor") -> Factor:
    def inv(order):
        order = Fraction(order)
        s = f(order)
        if not s.t:
            # look a little further before giving up (the requested order may be negative)
            s = f(max(order, 0) + 10)
            if not s.t:
                raise PoleError("%s vanishes to order %s; cannot divide" % (label, s.valid_to))
        m = s.min_exp
        need = order + 2 * m
        if s.valid_to < need:
            s = f(need)
        try:
            return series_invert(s, order)
        except ZeroSeries as exc:
            raise PoleError(str(exc))
    return inv


def const_factor(s: Series) -> Factor:
    return lambda order: s.truncate(order)


def quotient_to_order(num: Sequence[Factor], den: Sequence[Factor], order, D: int) -> Series:
    return product_to_order(list(num) + [inverse_factor(f) for f in den], order, D)
