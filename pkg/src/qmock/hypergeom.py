"""Basic hypergeometric series and closed-form evaluations of terminating 3phi2 sums.

Every quantity here is a finite sum of "binomial ratio" terms

    scalar * monomial * prod(1 - u) / prod(1 - v)

over monomials u, v, which keeps pole detection exact and makes expansion cheap.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import INF, Monomial, Series, _floor_units, _units, canon, zeta_power
from .errors import NonTruncatable, PoleError
from .thetafn import div_binomial, lcm_den, mul_binomial

Q = Monomial.q(1)
ZERO = Monomial.zero()


@dataclass
class BinTerm:
    scalar: object = 1
    mono: Monomial = field(default_factory=lambda: Monomial.q(0))
    num: List[Monomial] = field(default_factory=list)
    den: List[Monomial] = field(default_factory=list)

    def monomials(self):
        return [self.mono] + self.num + self.den

    def times(self, other: "BinTerm") -> "BinTerm":
        return BinTerm(canon(self.scalar * other.scalar), self.mono * other.mono,
                       self.num + other.num, self.den + other.den)


def poch_bins(x: Monomial, n: int, base: Monomial = Q) -> List[Monomial]:
    """Binomials making up (x; base)_n."""
    if n < 0:
        raise ValueError("negative Pochhammer length")
    if x.is_zero:
        return []
    return [x * base ** k for k in range(n)]


def poch(xs: Sequence[Monomial], n: int, base: Monomial = Q) -> List[Monomial]:
    out = []
    for x in xs:
        out += poch_bins(x, n, base)
    return out


def _key(m: Monomial):
    return (m.exponent, m.zeta_index)


def eval_term(t: BinTerm, order, D: int) -> Series:
    if t.scalar == 0 or t.mono.is_zero:
        return Series.zero(D, order)
    N = _floor_units(order, D)
    # a vanishing denominator is a pole even when a numerator factor vanishes too
    for m in t.den:
        if not m.is_zero and m.exponent == 0 and m.zeta_index == 0:
            raise PoleError("vanishing denominator factor 1 - %s" % m)
    # cancel common binomials first
    pool: Dict[tuple, int] = {}
    for m in t.num:
        if not m.is_zero:
            pool[_key(m)] = pool.get(_key(m), 0) + 1
    dens = []
    for m in t.den:
        if m.is_zero:
            continue
        k = _key(m)
        if pool.get(k, 0) > 0:
            pool[k] -= 1
        else:
            dens.append(m)
    s = t.mono.to_series(D).scale(t.scalar)
    for (e, k), cnt in pool.items():
        for _ in range(cnt):
            if e == 0 and k % 24 == 0:
                return Series.zero(D, INF).truncate(order)
            s = mul_binomial(s, k, _units(e, D))
    for m in dens:
        eu = _units(m.exponent, D)
        if eu == 0 and m.zeta_index % 24 == 0:
            raise PoleError("vanishing denominator factor 1 - %s" % m)
        s = div_binomial(s, zeta_power(m.zeta_index), eu, N)
    return s.truncate(order)


def eval_terms(terms: Sequence[BinTerm], order, D: Optional[int] = None) -> Series:
    D = D or lcm_den(*[m for t in terms for m in t.monomials()])
    out = Series.zero(D, INF).truncate(order) if order != INF else Series.zero(D)
    for t in terms:
        out = out + eval_term(t, order, D)
    return out.truncate(order)


# ---------------------------------------------------------------------------
# r phi s
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhiSpec:
    uppers: Tuple[Monomial, ...]
    lowers: Tuple[Monomial, ...]
    base: Monomial = Q
    argument: Monomial = Q
    n_terminate: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "uppers", tuple(self.uppers))
        object.__setattr__(self, "lowers", tuple(self.lowers))


def _termination(spec: PhiSpec) -> Optional[int]:
    if spec.n_terminate is not None:
        return spec.n_terminate
    best = None
    for u in spec.uppers:
        if u.is_zero or u.zeta_index % 24:
            continue
        ratio = -u.exponent / spec.base.exponent if spec.base.exponent else None
        if ratio is not None and ratio >= 0 and ratio.denominator == 1:
            best = int(ratio) if best is None else min(best, int(ratio))
    return best


def phi_term(spec: PhiSpec, n: int) -> BinTerm:
    r, s = len(spec.uppers), len(spec.lowers)
    power = 1 + s - r
    base = spec.base
    corr = (Monomial.q(0, sign=-1) ** n * base ** (n * (n - 1) // 2)) ** power if power >= 0 else \
        ((Monomial.q(0, sign=-1) ** n * base ** (n * (n - 1) // 2)).inverse()) ** (-power)
    mono = corr * spec.argument ** n if not spec.argument.is_zero else (Monomial.q(0) if n == 0 else ZERO)
    return BinTerm(1, mono, poch(spec.uppers, n, base), poch_bins(base, n, base) + poch(spec.lowers, n, base))


def phi_eval(spec: PhiSpec, order, D: Optional[int] = None) -> Series:
    """Sum of the series term by term; terminating or truncatable."""
    base = spec.base
    D = D or lcm_den(base, spec.argument, *spec.uppers, *spec.lowers)
    stop = _termination(spec)
    if stop is not None:
        return eval_terms([phi_term(spec, n) for n in range(stop + 1)], order, D)
    if order == INF:
        raise NonTruncatable("non-terminating series needs a finite order")
    r, s = len(spec.uppers), len(spec.lowers)
    power = 1 + s - r
    be = base.exponent
    if be <= 0 or spec.argument.is_zero:
        if spec.argument.is_zero:
            return Series.one(D, order)
        raise NonTruncatable("base must have positive exponent")
    # leading exponent of the term ratio once every binomial has positive exponent
    ze = spec.argument.exponent
    if power < 0 or (power == 0 and ze <= 0):
        raise NonTruncatable("term exponents do not increase")
    params = [m.exponent for m in spec.uppers + spec.lowers if not m.is_zero]
    n0 = 0
    while any(p + n0 * be <= 0 for p in params):
        n0 += 1
    total = Series.zero(D, INF).truncate(order)
    n, quiet = 0, 0
    while True:
        t = eval_term(phi_term(spec, n), order, D)
        total = total + t
        if n > n0 and not t.t:
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
        n += 1
        if n > 100000:
            raise NonTruncatable("series did not settle")
    return total.truncate(order)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def q(e=1, sign=1, root_power=0):
    return Monomial.q(e, sign, root_power)


def _phi32(uppers, lowers, arg, n, base=Q) -> List[BinTerm]:
    spec = PhiSpec(tuple(uppers), tuple(lowers), base, arg, n)
    return [phi_term(spec, k) for k in range(n + 1)]


def _scaled(terms: List[BinTerm], factor: BinTerm) -> List[BinTerm]:
    return [factor.times(t) for t in terms]


def _well_poised_sum(alpha, tops, bots, extra, n, j_start=0) -> List[BinTerm]:
    """sum_j (1 - alpha q^{2j})(alpha, tops)_j / ((1 - alpha)(q, bots)_j) * extra(j)."""
    out = []
    for j in range(j_start, n + 1):
        sc, mono = extra(j)
        out.append(BinTerm(sc, mono, [alpha * q(2 * j)] + poch_bins(alpha, j) + poch(tops, j),
                           [alpha] + poch_bins(Q, j) + poch(bots, j)))
    return out


def _neg(m: Monomial) -> Monomial:
    return -m


def _sears(p, n):
    al, be, c, d = p["alpha"], p["beta"], p["c"], p["d"]
    lhs = _phi32([q(-n), al * q(n), be], [c, d], Q, n)
    inner = _phi32([q(-n), al * q(n), d / be], [d, Q * al / c], Q * be / c, n)
    f = BinTerm(1, (-c) ** n * q(n * (n - 1) // 2), poch_bins(Q * al / c, n), poch_bins(c, n))
    return lhs, _scaled(inner, f)


def _hyper2(p, n):
    b, z, c = p["b"], p["z"], p["c"]
    lhs = _phi32([q(-n), b, b * z * q(-n) / c], [ZERO, b * q(1 - n) / c], Q, n)
    inner = _phi32([q(-n), b], [c], z, n)
    f = BinTerm(1, q(0), poch_bins(c, n), poch_bins(c / b, n))
    return lhs, _scaled(inner, f)


def _meq1(p, n):
    al, c, d = p["alpha"], p["c"], p["d"]
    lhs = _phi32([q(-n), al * q(n + 1), Q / c], [al * d, q(2) / c], d, n)
    f = BinTerm(1, (Q / c) ** n, poch([al * c, Q], n), poch([q(2) / c, al * Q], n))
    ex = lambda j: (1, q(0, sign=(-1) ** j) * (c * d / Q) ** j * q(Fraction(-j * (j + 1), 2)))
    return lhs, _scaled(_well_poised_sum(al, [Q / c, Q / d], [al * c, al * d], ex, n), f)


def _lem_limit(p, n):
    c, d = p["c"], p["d"]
    if n < 1:
        raise ValueError("lem-limit needs n >= 1")
    lhs = _phi32([q(-n), q(n), Q / c], [d / Q, q(2) / c], d, n)
    f = BinTerm(1, (Q / c) ** n, [q(n)] + poch_bins(c / Q, n), poch_bins(q(2) / c, n))
    den = [c / Q, d / Q, Q]
    # ((c+d)q + cd(q-2) - q^3) / ((c-q)(d-q)(1-q)), with (c-q)(d-q) = q^2 (1-c/q)(1-d/q)
    head = [BinTerm(sc, m * q(-2), [], list(den)) for sc, m in
            ((1, c * Q), (1, d * Q), (1, c * d * Q), (-2, c * d), (-1, q(3)))]
    tail = []
    for j in range(2, n + 1):
        tail.append(BinTerm(1, q(0, sign=(-1) ** j) * (c * d) ** j * q(Fraction(-j * (j + 3), 2)),
                            [q(2 * j - 1)] + poch([Q / c, Q / d], j),
                            [q(j), q(j - 1)] + poch([c / Q, d / Q], j)))
    return lhs, _scaled(head + tail, f)


def _eq1(p, n):
    al, c = p["alpha"], p["c"]
    lhs = _phi32([q(-n), al * q(n + 1)], [al * c], c, n)
    f = BinTerm(1, (-al) ** n * q(Fraction(n * (n + 1), 2)), poch_bins(Q, n), poch_bins(al * Q, n))
    ex = lambda j: (1, (c / al) ** j * q(-j * (j + 1)))
    return lhs, _scaled(_well_poised_sum(al, [Q / c], [al * c], ex, n), f)


def _meq2(p, n):
    al, c = p["alpha"], p["c"]
    lhs = _phi32([q(-n), al * q(n + 1), Q], [ZERO, q(2) / c], Q, n)
    f = BinTerm(1, (al / c) ** n * q(n * n + 2 * n), poch([al * c, Q], n), poch([q(2) / c, al * Q], n))
    ex = lambda j: (1, c ** j * al ** (-j) * q(-j * j - j))
    return lhs, _scaled(_well_poised_sum(al, [Q / c], [al * c], ex, n), f)


def _lem_limit_2(p, n):
    c = p["c"]
    if n < 1:
        raise ValueError("lem-limit-2 needs n >= 1")
    lhs = _phi32([q(-n), q(n), Q], [ZERO, q(2) / c], Q, n)
    f = BinTerm(1, c ** (-n) * q(n * n + n), [q(n)] + poch_bins(c / Q, n), poch_bins(q(2) / c, n))
    # (q - 2c + cq) / ((1-q)(c-q)), with c - q = -q (1 - c/q)
    den = [Q, c / Q]
    head = [BinTerm(sc, m * q(-1), [], list(den)) for sc, m in ((-1, Q), (2, c), (-1, c * Q))]
    tail = [BinTerm(1, c ** j * q(-j * j), [q(2 * j - 1)] + poch_bins(Q / c, j), [q(j - 1), q(j)] + poch_bins(c / Q, j))
            for j in range(2, n + 1)]
    return lhs, _scaled(head + tail, f)


def _pro25(p, n):
    al, c = p["alpha"], p["c"]
    inner = _phi32([q(-n), al * q(n + 1)], [al * c], q(0), n)
    f = BinTerm(1, q(0, sign=(-1) ** n) * q(Fraction(n * (n + 1), 2)), poch_bins(al * Q, n), poch_bins(Q, n))
    ex = lambda j: (1, q(j * j - j) * (al * c) ** j)
    return _scaled(inner, f), _well_poised_sum(al, [Q / c], [al * c], ex, n)


def _meq3(p, n):
    al, c = p["alpha"], p["c"]
    lhs = _phi32([q(-n), al * q(n + 1), Q / c], [ZERO, q(2) / c], Q, n)
    f = BinTerm(1, (Q / c) ** n, poch([al * c, Q], n), poch([q(2) / c, al * Q], n))
    ex = lambda j: (1, (al * c) ** j * q(j * j - j))
    return lhs, _scaled(_well_poised_sum(al, [Q / c], [al * c], ex, n), f)


def _pfaff(p, n):
    a, b, c = p["a"], p["b"], p["c"]
    lhs = _phi32([q(-n), a * q(n), a * Q / (b * c)], [a * Q / b, a * Q / c], Q, n)
    rhs = [BinTerm(1, (a * Q / (b * c)) ** n, poch([b, c], n), poch([a * Q / b, a * Q / c], n))]
    return lhs, rhs


def _liu313(p, n):
    al, c, d = p["alpha"], p["c"], p["d"]
    lhs = _phi32([q(-n), al * q(n + 1), al * c * d / Q], [al * c, al * d], Q, n)
    f = BinTerm(1, (-al) ** n * q(Fraction(n * (n + 1), 2)), poch_bins(Q, n), poch_bins(al * Q, n))
    ex = lambda j: (1, q(0, sign=(-1) ** j) * (c * d / Q) ** j * q(Fraction(-j * (j + 1), 2)))
    return lhs, _scaled(_well_poised_sum(al, [Q / c, Q / d], [al * c, al * d], ex, n), f)


def _andrews(p, n):
    # base q^2 instance; the first upper parameter is q^{-2n}
    b = q(2)
    inner = _phi32([q(-2 * n), q(2 * n + 2), q(2)], [q(2, -1), q(3, -1)], q(2), n, base=b)
    f = BinTerm(1, q(0), [q(2 * n + 1, -1)], [q(1, -1)])
    lhs = _scaled(inner, f)
    rhs = [BinTerm(1, q(0, sign=(-1) ** (n + j)) * q(n * n + 2 * n - j * j)) for j in range(-n, n + 1)]
    return lhs, rhs


def _revise52(p, n):
    lhs = [BinTerm(1, q(k), poch([q(-n), q(n)], k), []) for k in range(n + 1)]
    rhs = [BinTerm(1, q(n))]
    lead = q(Fraction(3 * n * n - n, 2), sign=(-1) ** (n - 1))
    for j in range(-n + 1, n):
        rhs.append(BinTerm(1, lead * q(Fraction(-j * (3 * j + 1), 2), sign=(-1) ** j), [q(n)], []))
    return lhs, rhs


def _liu41(p, n):
    a, c = p["a"], p["c"]
    lhs = [BinTerm(1, q(k), poch([q(-n), a * q(n)], k), poch_bins(c * Q, k)) for k in range(n + 1)]
    f = BinTerm(1, a ** n * q(n * n), poch_bins(Q, n), poch_bins(c * Q, n))
    rhs = [BinTerm(1, a ** (-j) * q(j * (1 - n)), poch_bins(c, j), poch_bins(Q, j)) for j in range(n + 1)]
    return lhs, _scaled(rhs, f)


FORMS = {
    "sears:32": (_sears, ("alpha", "beta", "c", "d")),
    "hyper2": (_hyper2, ("b", "z", "c")),
    "meq:1": (_meq1, ("alpha", "c", "d")),
    "lem-limit": (_lem_limit, ("c", "d")),
    "eq:1": (_eq1, ("alpha", "c")),
    "meq:2": (_meq2, ("alpha", "c")),
    "lem-limit-2": (_lem_limit_2, ("c",)),
    "eq:pro2.5": (_pro25, ("alpha", "c")),
    "meq:3": (_meq3, ("alpha", "c")),
    "Pfaff": (_pfaff, ("a", "b", "c")),
    "Liu-eq-313": (_liu313, ("alpha", "c", "d")),
    "proof-add-andrews": (_andrews, ()),
    "revise-5-2-proof-3": (_revise52, ()),
    "Liu-Lemma4.1": (_liu41, ("a", "c")),
}


def form_sides(form: str, params: Dict[str, Monomial], n: int):
    """(lhs_terms, rhs_terms) for a closed form; both are lists of BinTerm."""
    try:
        fn, names = FORMS[form]
    except KeyError:
        raise KeyError("unknown closed form %r" % form)
    missing = [k for k in names if k not in params]
    if missing:
        raise ValueError("closed form %s needs parameters %s" % (form, ", ".join(missing)))
    return fn(params, n)


def closed_form_3phi2(form: str, params: Dict[str, Monomial], n: int, order, D: Optional[int] = None) -> Series:
    """Right-hand side of a closed-form evaluation as a series."""
    lhs, rhs = form_sides(form, params, n)
    D = D or lcm_den(*[m for t in lhs + rhs for m in t.monomials()])
    return eval_terms(rhs, order, D)


def closed_form_lhs(form: str, params: Dict[str, Monomial], n: int, order, D: Optional[int] = None) -> Series:
    lhs, rhs = form_sides(form, params, n)
    D = D or lcm_den(*[m for t in lhs + rhs for m in t.monomials()])
    return eval_terms(lhs, order, D)


def watson_sides(alpha, a, b, c, d, n: int, order, D: Optional[int] = None):
    """The two sides of Watson's 4phi3 = 8phi7 transformation (terminating at n)."""
    pre = BinTerm(1, q(0), poch([alpha * Q, alpha * a * b / Q], n), poch([alpha * a, alpha * b], n))
    four = _phi32([q(-n), Q / a, Q / b, alpha * c * d / Q],
                  [alpha * c, alpha * d, q(2) / (alpha * a * b * q(n))], Q, n)
    lhs = _scaled(four, pre)
    # 8phi7 with sqrt(alpha) handled through the very-well-poised factor (1 - alpha q^{2k})/(1 - alpha)
    arg = alpha ** 2 * a * b * c * d * q(n - 2)
    rhs = []
    for k in range(n + 1):
        ups = poch([q(-n), alpha, Q / a, Q / b, Q / c, Q / d], k)
        lows = poch([Q, alpha * a, alpha * b, alpha * c, alpha * d, alpha * q(n + 1)], k)
        rhs.append(BinTerm(1, arg ** k, [alpha * q(2 * k)] + ups, [alpha] + lows))
    # the 8phi7 here is balanced with 1+s-r = 0, so no extra quadratic factor
    D = D or lcm_den(*[m for t in lhs + rhs for m in t.monomials()])
    return eval_terms(lhs, order, D), eval_terms(rhs, order, D)
