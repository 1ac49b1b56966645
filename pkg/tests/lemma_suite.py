"""Randomised sweep over the closed-form lemmas, Watson's transformation and the
catalog entries tagged "lemma".  Shared by the hypergeometric tests and the acceptance run."""
import random
from fractions import Fraction

from math import lcm

from qmock import dsl, hypergeom, registry
from qmock.algebra import Monomial, series_equal_up_to
from qmock.errors import QMockError

ROOTS = (3, 4, 6, 8)  # 24ths of a turn: cube, fourth, sixth and eighth roots of unity


def draw(rng, kind):
    """kind 0: a root of unity times ±q^k; kind 1: ±q^(k/2); otherwise ±q^k."""
    D = 2 if kind == 1 else 1
    e = Fraction(rng.randint(-3 * D, 3 * D), D)
    return Monomial.q(e, rng.choice((1, -1)), rng.choice(ROOTS) if kind == 0 else 0)


def _generic_draws(rng, names, n_draws, check):
    """Call ``check(params)`` on ``n_draws`` parameter sets where both sides are defined."""
    results, k, tries = [], 0, 0
    while k < n_draws:
        tries += 1
        if tries > 50 * n_draws:
            raise RuntimeError("could not find generic parameters for %s" % (names,))
        params = {nm: draw(rng, k) for nm in names}
        try:
            results.append((params, check(params)))
        except (QMockError, ZeroDivisionError):
            continue  # a pole at these parameters: draw again
        k += 1
        if not names:
            break
    return results


def closed_form_failures(order=40, n_max=12, n_draws=5, seed=5, forms=None):
    rng = random.Random(seed)
    bad = []
    for form, (_, names) in hypergeom.FORMS.items():
        if forms is not None and form not in forms:
            continue
        first = 1 if form in ("lem-limit", "lem-limit-2") else 0
        for n in range(first, n_max + 1):
            def check(p):
                lhs = hypergeom.closed_form_lhs(form, p, n, order)
                rhs = hypergeom.closed_form_3phi2(form, p, n, order)
                return series_equal_up_to(lhs, rhs, order)
            for p, mm in _generic_draws(rng, names, n_draws, check):
                if mm is not None:
                    bad.append((form, n, p, mm))
    return bad


def watson_failures(order=40, n_max=6, n_draws=5, seed=7):
    rng = random.Random(seed)
    names = ("alpha", "a", "b", "c", "d")
    bad = []
    for n in range(n_max + 1):
        def check(p):
            lhs, rhs = hypergeom.watson_sides(p["alpha"], p["a"], p["b"], p["c"], p["d"], n, order)
            return series_equal_up_to(lhs, rhs, order)
        for p, mm in _generic_draws(rng, names, n_draws, check):
            if mm is not None:
                bad.append(("watson", n, p, mm))
    return bad


# theta and block identities that the catalog files under other tags
BLOCK_ENTRIES = ("j-id-1", "j-id-2", "j-id-2/2", "reciprocal-Jacobi", "Kronecker")


def lemma_entry_reports(order=40):
    ids = [e.id for e in registry.list_identities(["lemma"])] + list(BLOCK_ENTRIES)
    return [registry.verify(i, order) for i in ids]


# ---------------------------------------------------------------------------
# property lemmas for the building blocks, sampled at random generic points
# ---------------------------------------------------------------------------

def _txt(m):
    return "(%s)" % dsl.format_expr(dsl.monomial_node(m))


def _den(*ms):
    D = 1
    for m in ms:
        D = lcm(D, m.exponent.denominator)
    return D


def _point(rng, lo=-2, hi=2, roots=True):
    """A monomial ±ζ q^(k/D) with D in {1,2,3}; a root of unity only when q^e would be integral."""
    D = rng.choice((1, 2, 3))
    e = Fraction(rng.randint(lo * D, hi * D), D)
    root = rng.choice(ROOTS) if roots and e.denominator == 1 else 0
    return Monomial.q(e, rng.choice((1, -1)), root)


def _m_prop(p):
    x, z, b = _txt(p["x"]), _txt(p["z"]), _txt(p["base"])
    return [("m(%s, %s, %s)" % (x, b, z), "m(%s, %s, %s*%s)" % (x, b, b, z)),
            ("m(%s, %s, %s)" % (x, b, z), "%s^-1*m(%s^-1, %s, %s^-1)" % (x, x, b, z)),
            ("m(%s*%s, %s, %s)" % (b, x, b, z), "1 - %s*m(%s, %s, %s)" % (x, x, b, z))]


def _m_minus(p):
    x, z0, z1 = _txt(p["x"]), _txt(p["z0"]), _txt(p["z1"])
    lhs = "m(%s, q, %s) - m(%s, q, %s)" % (x, z1, x, z0)
    rhs = ("%s*Jm(1)^3*j(%s/%s; q)*j(%s*%s*%s; q)/(j(%s; q)*j(%s; q)*j(%s*%s; q)*j(%s*%s; q))"
           % (z0, z1, z0, x, z0, z1, z0, z1, x, z0, x, z1))
    return [(lhs, rhs)]


def _m_decompose(n):
    def build(p):
        x, z, w = _txt(p["x"]), _txt(p["z"]), _txt(p["w"])
        c2 = n * (n - 1) // 2
        first = " + ".join("q^(%d)*(-%s)^%d*m(-q^(%d)*(-%s)^%d, q^%d, %s)"
                           % (-(r * (r + 1) // 2), x, r, c2 - n * r, x, n, n * n, w) for r in range(n))
        second = " + ".join(
            "q^(%d)*(-%s*%s)^%d*j(-q^(%d)*(-%s)^%d*%s*%s; q^%d)*j(q^(%d)*%s^%d/%s; q^%d)"
            "/(j(-q^(%d)*(-%s)^%d*%s; q^%d)*j(q^(%d)*%s; q^%d))"
            % (r * (r - 1) // 2, x, z, r, c2 + r, x, n, z, w, n, n * r, z, n, w, n * n,
               c2, x, n, w, n, r, z, n) for r in range(n))
        rhs = "%s + %s*Jm(%d)^3/(j(%s*%s; q)*j(%s; q^%d))*(%s)" % (first, w, n, x, z, w, n * n, second)
        return [("m(%s, q, %s)" % (x, z), rhs)]
    return build


def _m_add(p):
    x, z = _txt(p["x"]), _txt(p["z"])
    rhs = ("m(-q*%s^2, q^4, %s^4) - %s/q*m(-%s^2/q, q^4, %s^4) - Jm(2)*Jm(4)*j(-%s*%s^2; q)*j(-%s*%s^3; q)"
           "/(%s*j(%s*%s; q)*j(%s^4; q^4)*j(-q*%s^2*%s^4; q^2))" % (x, z, x, x, z, x, z, x, z, x, x, z, z, x, z))
    return [("m(%s, q, %s)" % (x, z), rhs)]


def _f_prop(fn, which):
    def build(p):
        a, b, c = p["abc"]
        x, y = _txt(p["x"]), _txt(p["y"])
        F = lambda u, v, base="q": "%s(%d, %d, %d, %s, %s, %s)" % (fn, a, b, c, u, v, base)
        lhs = F(x, y)
        out = []
        if 1 in which:
            out.append((lhs, "%s - %s*%s - %s*%s + %s*%s*q^%d*%s" % (
                F("-%s^2*q^%d" % (x, a), "-%s^2*q^%d" % (y, c), "q^4"),
                x, F("-%s^2*q^%d" % (x, 3 * a), "-%s^2*q^%d" % (y, c + 2 * b), "q^4"),
                y, F("-%s^2*q^%d" % (x, a + 2 * b), "-%s^2*q^%d" % (y, 3 * c), "q^4"),
                x, y, b, F("-%s^2*q^%d" % (x, 3 * a + 2 * b), "-%s^2*q^%d" % (y, 3 * c + 2 * b), "q^4"))))
        if 2 in which:
            # the sg(r) weight flips sign under (r, s) -> (-r-1, -s-1); the false sum has no such weight
            sign = "-" if fn == "f" else ""
            out.append((lhs, "%sq^%d/(%s*%s)*%s" % (sign, a + b + c, x, y,
                                                   F("q^%d/%s" % (2 * a + b, x), "q^%d/%s" % (2 * c + b, y)))))
        if 3 in which:
            out.append((lhs, "-%s*%s + j(%s; q^%d)" % (y, F("q^%d*%s" % (b, x), "q^%d*%s" % (c, y)), x, a)))
        if 4 in which:
            out.append((lhs, "-%s*%s + j(%s; q^%d)" % (x, F("q^%d*%s" % (a, x), "q^%d*%s" % (b, y)), y, c)))
        return out
    return build


def _kronecker(p):
    x, y = _txt(p["x"]), _txt(p["y"])
    return [("f(0, 1, 0, -%s, -%s, q)" % (x, y), "Jm(1)^3*j(%s*%s; q)/(j(%s; q)*j(%s; q))" % (x, y, x, y))]


def _h_m(p):
    x = _txt(p["x"])
    return [("h(%s, q)" % x, "-%s^-1*m(%s^-2*q, q^2, %s)" % (x, x, x))]


def _k_id(p):
    x = _txt(p["x"])
    return [("%s*k(%s, q)" % (x, x), "m(-%s^2, q, %s^-2) + Jm(1)^4/(2*Jm(2)^2*j(%s^2; q))" % (x, x, x))]


def _reciprocal(p):
    z = _txt(p["z"])
    return [("sum(n, -inf, inf, (-1)^n*q^(n*(n+1)/2)/(1-q^n*%s))" % z, "Jm(1)^3/j(%s; q)" % z)]


def _unit_interval(rng):
    """±q^e with 0 < e < 1, where the Kronecker double sum converges."""
    D = rng.choice((2, 3, 4, 5))
    return Monomial.q(Fraction(rng.randint(1, D - 1), D), rng.choice((1, -1)))


def _samplers():
    bases = (Monomial.q(1), Monomial.q(2), Monomial.q(1, -1))
    abc = lambda rng: (rng.randint(1, 3), rng.randint(0, 3), rng.randint(1, 3))
    return [
        ("m-prop", _m_prop, 15, 40, lambda r: {"x": _point(r), "z": _point(r), "base": r.choice(bases)}),
        ("m-minus", _m_minus, 10, 40, lambda r: {"x": _point(r), "z0": _point(r), "z1": _point(r)}),
        ("m-decompose-2", _m_decompose(2), 5, 30, lambda r: {"x": _point(r), "z": _point(r), "w": _point(r)}),
        ("m-decompose-3", _m_decompose(3), 5, 30, lambda r: {"x": _point(r), "z": _point(r), "w": _point(r)}),
        ("m-decompose-4", _m_decompose(4), 5, 30, lambda r: {"x": _point(r), "z": _point(r), "w": _point(r)}),
        ("m-add", _m_add, 5, 30, lambda r: {"x": _point(r), "z": _point(r)}),
        ("f-prop", _f_prop("f", (1, 2, 3, 4)), 10, 40,
         lambda r: {"abc": abc(r), "x": _point(r, roots=False), "y": _point(r, roots=False)}),
        ("barf-prop", _f_prop("fbar", (1, 2)), 10, 40,
         lambda r: {"abc": abc(r), "x": _point(r, roots=False), "y": _point(r, roots=False)}),
        ("Kronecker", _kronecker, 10, 40, lambda r: {"x": _unit_interval(r), "y": _unit_interval(r)}),
        ("h-m", _h_m, 5, 40, lambda r: {"x": _point(r)}),
        ("k-id", _k_id, 5, 40, lambda r: {"x": _point(r)}),
        ("reciprocal-Jacobi", _reciprocal, 5, 40, lambda r: {"z": _point(r)}),
    ]


PROPERTY_LEMMAS = tuple(name for name, *_ in _samplers())


def property_failures(names=None, seed=11):
    """(lemma, params, lhs, mismatch) for every failing sample; poles are redrawn."""
    rng = random.Random(seed)
    bad = []
    for name, build, count, order, sample in _samplers():
        if names is not None and name not in names:
            continue
        k, tries = 0, 0
        while k < count:
            tries += 1
            if tries > 40 * count:
                raise RuntimeError("no generic samples for %s" % name)
            p = sample(rng)
            D = _den(*[v for v in p.values() if isinstance(v, Monomial)])
            try:
                results = [(lhs, series_equal_up_to(dsl.evaluate(lhs, order, D), dsl.evaluate(rhs, order, D), order))
                           for lhs, rhs in build(p)]
            except (QMockError, ZeroDivisionError):
                continue
            k += 1
            bad += [(name, p, lhs, mm) for lhs, mm in results if mm is not None]
    return bad
