"""Eulerian (q-hypergeometric single sum) definitions of the named mock theta functions.

Every definition is stored as expression text and evaluated by the dsl evaluator, so
the same code path that verifies catalog identities also builds the named series.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional

from .algebra import INF, Monomial, Series
from .errors import PoleError

# name -> (expression, human readable label)
DEFINITIONS: Dict[str, str] = {
    # order 2
    "A2": "sum(n, 0, inf, q^(n+1)*aqprod(-q^2; q^2; n) / aqprod(q; q^2; n+1))",
    "B2": "sum(n, 0, inf, q^n*aqprod(-q; q^2; n) / aqprod(q; q^2; n+1))",
    "mu2": "sum(n, 0, inf, (-1)^n*aqprod(q; q^2; n)*q^(n^2) / aqprod(-q^2; q^2; n)^2)",
    # order 3
    "f3": "sum(n, 0, inf, q^(n^2) / aqprod(-q; q; n)^2)",
    "phi3": "sum(n, 0, inf, q^(n^2) / aqprod(-q^2; q^2; n))",
    "psi3": "sum(n, 1, inf, q^(n^2) / aqprod(q; q^2; n))",
    "chi3": "sum(n, 0, inf, q^(n^2)*aqprod(-q; q; n) / aqprod(-q^3; q^3; n))",
    "omega3": "sum(n, 0, inf, q^(2*n*(n+1)) / aqprod(q; q^2; n+1)^2)",
    "nu3": "sum(n, 0, inf, q^(n*(n+1)) / aqprod(-q; q^2; n+1))",
    "rho3": "sum(n, 0, inf, q^(2*n*(n+1))*aqprod(q; q^2; n+1) / aqprod(q^3; q^6; n+1))",
    # order 5
    "f0_5": "sum(n, 0, inf, q^(n^2) / aqprod(-q; q; n))",
    "phi0_5": "sum(n, 0, inf, q^(n^2)*aqprod(-q; q^2; n))",
    "psi0_5": "sum(n, 0, inf, q^((n+2)*(n+1)/2)*aqprod(-q; q; n))",
    "F0_5": "sum(n, 0, inf, q^(2*n^2) / aqprod(q; q^2; n))",
    "f1_5": "sum(n, 0, inf, q^(n*(n+1)) / aqprod(-q; q; n))",
    "phi1_5": "sum(n, 0, inf, q^((n+1)^2)*aqprod(-q; q^2; n))",
    "psi1_5": "sum(n, 0, inf, q^(n*(n+1)/2)*aqprod(-q; q; n))",
    "F1_5": "sum(n, 0, inf, q^(2*n*(n+1)) / aqprod(q; q^2; n+1))",
    "chi0_5": "sum(n, 0, inf, q^n / aqprod(q^(n+1); q; n))",
    "chi1_5": "sum(n, 0, inf, q^n / aqprod(q^(n+1); q; n+1))",
    # order 6
    "phi6": "sum(n, 0, inf, (-1)^n*aqprod(q; q^2; n)*q^(n^2) / aqprod(-q; q; 2*n))",
    "psi6": "sum(n, 0, inf, (-1)^n*q^((n+1)^2)*aqprod(q; q^2; n) / aqprod(-q; q; 2*n+1))",
    "rho6": "sum(n, 0, inf, q^(n*(n+1)/2)*aqprod(-q; q; n) / aqprod(q; q^2; n+1))",
    "sigma6": "sum(n, 0, inf, q^((n+1)*(n+2)/2)*aqprod(-q; q; n) / aqprod(q; q^2; n+1))",
    "lambda6": "sum(n, 0, inf, (-1)^n*q^n*aqprod(q; q^2; n) / aqprod(-q; q; n))",
    "mu6": "1/2 + 1/2*sum(n, 0, inf, (-1)^n*q^(n+1)*(1+q^n)*aqprod(q; q^2; n) / aqprod(-q; q; n+1))",
    "gamma6": "sum(n, 0, inf, q^(n^2)*aqprod(q; q; n) / aqprod(q^3; q^3; n))",
    "phiminus6": "sum(n, 1, inf, q^n*aqprod(-q; q; 2*n-1) / aqprod(q; q^2; n))",
    "psiminus6": "sum(n, 1, inf, q^n*aqprod(-q; q; 2*n-2) / aqprod(q; q^2; n))",
    # order 8
    "S0_8": "sum(n, 0, inf, q^(n^2)*aqprod(-q; q^2; n) / aqprod(-q^2; q^2; n))",
    "S1_8": "sum(n, 0, inf, q^(n*(n+2))*aqprod(-q; q^2; n) / aqprod(-q^2; q^2; n))",
    "T0_8": "sum(n, 0, inf, q^((n+1)*(n+2))*aqprod(-q^2; q^2; n) / aqprod(-q; q^2; n+1))",
    "T1_8": "sum(n, 0, inf, q^(n*(n+1))*aqprod(-q^2; q^2; n) / aqprod(-q; q^2; n+1))",
    "U0_8": "sum(n, 0, inf, q^(n^2)*aqprod(-q; q^2; n) / aqprod(-q^4; q^4; n))",
    "U1_8": "sum(n, 0, inf, q^((n+1)^2)*aqprod(-q; q^2; n) / aqprod(-q^2; q^4; n+1))",
    "V0_8": "-1 + 2*sum(n, 0, inf, q^(n^2)*aqprod(-q; q^2; n) / aqprod(q; q^2; n))",
    "V1_8": "sum(n, 0, inf, q^((n+1)^2)*aqprod(-q; q^2; n) / aqprod(q; q^2; n+1))",
    # order 7
    "F0_7": "sum(n, 0, inf, q^(n^2) / aqprod(q^(n+1); q; n))",
    "F1_7": "sum(n, 1, inf, q^(n^2) / aqprod(q^n; q; n))",
    "F2_7": "sum(n, 0, inf, q^(n^2+n) / aqprod(q^(n+1); q; n+1))",
    # order 10
    "phi10": "sum(n, 0, inf, q^(n*(n+1)/2) / aqprod(q; q^2; n+1))",
    "psi10": "sum(n, 1, inf, q^(n*(n+1)/2) / aqprod(q; q^2; n))",
    "X10": "sum(n, 0, inf, (-1)^n*q^(n^2) / aqprod(-q; q; 2*n))",
    "chi10": "sum(n, 1, inf, (-1)^(n-1)*q^(n^2) / aqprod(-q; q; 2*n-1))",
    # the Andrews-Dyson-Hickerson series
    "sigmaADH": "sum(n, 0, inf, q^(n*(n+1)/2) / aqprod(-q; q; n))",
}

# second (and third) displayed Eulerian forms, used only as cross-checks
ALTERNATES: Dict[str, tuple] = {
    "A2": ("sum(n, 0, inf, q^((n+1)^2)*aqprod(-q; q^2; n) / aqprod(q; q^2; n+1)^2)",),
    "B2": ("sum(n, 0, inf, q^(n^2+n)*aqprod(-q^2; q^2; n) / aqprod(q; q^2; n+1)^2)",),
    "U0_8": ("S0_8(q^2) + q*S1_8(q^2)",),
    "U1_8": ("T0_8(q^2) + q*T1_8(q^2)",),
    "V0_8": ("-1 + 2*sum(n, 0, inf, q^(2*n^2)*aqprod(-q^2; q^4; n) / aqprod(q; q^2; 2*n+1))",),
    "V1_8": ("sum(n, 0, inf, q^(2*n^2+2*n+1)*aqprod(-q^4; q^4; n) / aqprod(q; q^2; 2*n+2))",
             "sum(n, 0, inf, q^(n+1)*aqprod(-q; q; 2*n) / aqprod(-q^2; q^4; n+1))"),
}

ORDER_OF = {}
for _name in DEFINITIONS:
    if _name.endswith(("_5", "_7", "_8")):
        ORDER_OF[_name] = int(_name[-1])
    elif _name.endswith("10"):
        ORDER_OF[_name] = 10
    elif _name[-1].isdigit():
        ORDER_OF[_name] = int(_name[-1])
    else:
        ORDER_OF[_name] = None


class UnknownFunction(KeyError):
    pass


@lru_cache(maxsize=None)
def _parsed(text: str):
    from .dsl import parse
    return parse(text)


@lru_cache(maxsize=2048)
def _eval_text(text: str, order: Fraction, window: int) -> Series:
    from .dsl import Evaluator
    return Evaluator(window).series(_parsed(text), order)


def eulerian(name: str, order, window: int = 4) -> Series:
    """The named series truncated exactly at q^order.

    Infinite sums stop after ``window`` consecutive summands that vanish to this order.
    """
    if name not in DEFINITIONS:
        raise UnknownFunction(name)
    order = Fraction(order)
    if order < 0:
        return Series.zero(1, INF).truncate(order)
    return _eval_text(DEFINITIONS[name], order, window)


def alternate(name: str, index: int, order, window: int = 4) -> Series:
    return _eval_text(ALTERNATES[name][index], Fraction(order), window)


def universal_g(x: Monomial, base: Monomial, order) -> Series:
    """g(x, base) = sum_{n>=0} base^{n(n+1)} / ((x; base)_{n+1} (base/x; base)_{n+1})."""
    from .dsl import Evaluator, monomial_node, parse, substitute
    if x.is_zero:
        raise PoleError("g(x, q) needs x != 0")
    if base.is_zero or base.exponent <= 0:
        raise PoleError("g(x, q) needs a base with positive q-exponent")
    ratio = x.exponent / base.exponent
    if ratio.denominator == 1 and (x / base ** ratio).is_one():
        raise PoleError("g(x, q) has a pole at x = %s" % x)
    template = parse("sum(n, 0, inf, b^(n*(n+1)) / (aqprod(x; b; n+1)*aqprod(b/x; b; n+1)))")
    expr = substitute(template, {"x": monomial_node(x), "b": monomial_node(base)})
    return Evaluator().series(expr, Fraction(order))
