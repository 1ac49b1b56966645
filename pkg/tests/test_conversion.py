from fractions import Fraction
from math import comb, floor, lcm

import pytest

from qmock import blocks, conversion, dsl, registry
from qmock.algebra import Monomial, series_equal_up_to
from qmock.conversion import ConversionParams, fm_identity_coprime, fm_identity_odd

from conversion_suite import REQUIRED_ODD, REQUIRED_PAIRS, conversion_outcomes

q = Monomial.q
M1 = q(0, -1)


def t(m):
    return "(%s)" % dsl.format_expr(dsl.monomial_node(m))


def pw(m, k):
    k = Fraction(k)
    assert k.denominator == 1
    return m ** int(k) if k >= 0 else m.inverse() ** int(-k)


# --- second transcription of the conversion formulas, as expression text over j, m -------------

def g_text(a, b, c, x, y, base, z1, z0):
    d = b * b - a * c
    parts = []
    for t_ in range(a):
        arg = -base ** (a * comb(b + 1, 2) - c * comb(a + 1, 2) - t_ * d) * pw(-y, a) / pw(-x, b)
        parts.append("%s*j(%s; %s)*m(%s, %s, %s)" % (
            t(pw(-y, t_) * base ** (c * comb(t_, 2))), t(base ** (b * t_) * x), t(base ** a),
            t(arg), t(base ** (a * d)), t(z0)))
    for t_ in range(c):
        arg = -base ** (c * comb(b + 1, 2) - a * comb(c + 1, 2) - t_ * d) * pw(-x, c) / pw(-y, b)
        parts.append("%s*j(%s; %s)*m(%s, %s, %s)" % (
            t(pw(-x, t_) * base ** (a * comb(t_, 2))), t(base ** (b * t_) * y), t(base ** c),
            t(arg), t(base ** (c * d)), t(z1)))
    return " + ".join(parts)


def phi_text(n, p, x, y, base):
    frac = Fraction(n - 1, 2) - floor(Fraction(n - 1, 2))
    big = p * p * (2 * n + p)
    cube = "j(%s; %s)^3" % (t(base ** big), t(base ** (3 * big)))  # J_big = j(base^big; base^3big)
    jbar = "j(-1; %s)" % t(base ** (n * p * (2 * n + p)))
    terms = []
    for rs in range(p):
        for ss in range(p):
            r, s = rs + frac, ss + frac
            R, S = r - Fraction(n - 1, 2), s + Fraction(n + 1, 2)
            e = n * R * (R - 1) / 2 + (n + p) * R * S + n * S * (S - 1) / 2
            mono = base ** e * pw(-x, R) * pw(-y, S)
            num = "j(%s; %s)*j(%s; %s)" % (
                t(-base ** (n * p * (s - r)) * pw(x, n) / pw(y, n)), t(base ** (n * p * p)),
                t(base ** (p * (2 * n + p) * (r + s) + p * (n + p)) * pw(x, p) * pw(y, p)), t(base ** big))
            den = "j(%s; %s)*j(%s; %s)" % (
                t(base ** (p * (2 * n + p) * r + Fraction(p * (n + p), 2)) * pw(-y, n + p) / pw(-x, n)), t(base ** big),
                t(base ** (p * (2 * n + p) * s + Fraction(p * (n + p), 2)) * pw(-x, n + p) / pw(-y, n)), t(base ** big))
            terms.append("%s*%s/(%s)" % (t(mono), num, den))
    return "%s/%s*(%s)" % (cube, jbar, " + ".join(terms)), len(terms)


def theta_text(n, x, y, base):
    N4, N8 = base ** (4 * (n + 1)), base ** (8 * (n + 1))
    num = "j(%s; %s)*j(%s; %s)*j(%s; %s)*j(%s; %s)*j(%s; %s)" % (
        t(base ** (2 * n)), t(base ** (4 * n)), t(N4), t(N8), t(y / x), t(N4),
        t(base ** (n + 2) * x * y), t(N4), t(base ** (2 * n) / (x * x * y * y)), t(N8))
    den = "j(%s; %s)*j(%s; %s)*j(%s; %s)" % (
        t(pw(y, n) / pw(x, n)), t(base ** (4 * n * (n + 1))), t(-base ** (n + 2) * x * x), t(N4),
        t(-base ** (n + 2) * y * y), t(N4))
    pre = base ** Fraction(-(n * n - 3), 2) * y ** Fraction(n + 1, 2) * x ** Fraction(-(n - 3), 2)
    return "%s*%s/(%s)" % (t(pre), num, den)


def D_of(*ms):
    D = 1
    for m in ms:
        D = lcm(D, m.exponent.denominator)
    return D


# --- theorem instances -------------------------------------------------------------------------

@pytest.mark.parametrize("n, p, x, y, base", [
    (1, 1, q(4), q(4), q(4)),
    (3, 2, q(6), q(6), q(2)),
    (1, 4, q(2, -1), q(2, -1), q(1)),
    (1, 2, q(Fraction(3, 2)), q(Fraction(3, 2), -1), q(1, -1)),
])
def test_coprime_theorem_instances(n, p, x, y, base):
    rep = fm_identity_coprime(ConversionParams(n, p), x, y, base, 60)
    assert rep.ok, rep.line()


@pytest.mark.parametrize("n, x, y, base", [
    (1, q(1), q(1, -1), q(1, -1)),
    (3, q(3), q(4), q(1)),
])
def test_odd_theorem_instances(n, x, y, base):
    rep = fm_identity_odd(n, x, y, base, 60)
    assert rep.ok, rep.line()


def test_odd_theorem_at_x_equal_y_is_a_pole():
    rep = fm_identity_odd(1, q(2), q(2), q(1), 30)
    assert rep.status == "error" and "PoleError" in rep.message


@pytest.mark.parametrize("n, p", [(0, 1), (2, 4), (1, 0)])
def test_coprime_parameters_validated(n, p):
    with pytest.raises(ValueError):
        ConversionParams(n, p).check_coprime()


@pytest.mark.parametrize("n", [0, 2, -1])
def test_odd_parameter_validated(n):
    with pytest.raises(ValueError):
        fm_identity_odd(n, q(1), q(2), q(1), 10)


def test_g_needs_nonzero_discriminant():
    with pytest.raises(ValueError):
        conversion.g_abc(1, 1, 1, q(1), q(2), q(1), M1, M1, 10)


def test_g_with_unit_outer_coefficients_has_one_term_per_sum():
    assert len(conversion.g_abc(1, 2, 1, q(1), q(2), q(1), M1, M1, 10, _parts=True)) == 2
    assert len(conversion.g_abc(3, 5, 3, q(1), q(2), q(1), M1, M1, 10, _parts=True)) == 6


@pytest.mark.parametrize("abc, x, y, base, z1, z0", [
    ((1, 2, 1), q(4), q(4), q(4), M1, M1),
    ((3, 5, 3), q(6), q(6), q(2), M1, M1),
    ((1, 3, 1), q(Fraction(1, 2)), q(Fraction(3, 2), -1), q(1), q(1) / q(Fraction(1, 2)), q(Fraction(1, 2))),
    ((2, 3, 1), q(1, -1), q(Fraction(1, 3)), q(1), q(Fraction(1, 4)), M1),
])
def test_g_matches_transcription(abc, x, y, base, z1, z0):
    D = D_of(x, y, base, z1, z0)
    ref = dsl.evaluate(g_text(*abc, x, y, base, z1, z0), 40, D)
    got = conversion.g_abc(*abc, x, y, base, z1, z0, 40, D)
    assert series_equal_up_to(ref, got, 40) is None


@pytest.mark.parametrize("n, p, x, y, base, summands", [
    (1, 1, q(4), q(4), q(4), 1),
    (1, 2, q(1), q(Fraction(1, 2), -1), q(1), 4),
    (3, 2, q(Fraction(9, 4)), q(Fraction(9, 4), -1), q(Fraction(1, 2), -1), 4),
    (2, 1, q(Fraction(1, 3)), q(Fraction(2, 3)), q(1), 1),
])
def test_phi_matches_transcription(n, p, x, y, base, summands):
    D = D_of(x, y, base, base ** Fraction(1, 2))
    text, count = phi_text(n, p, x, y, base)
    assert count == summands == p * p
    ref = dsl.evaluate(text, 40, D)
    got = conversion.phi_np(ConversionParams(n, p), x, y, base, 40, D)
    assert series_equal_up_to(ref, got, 40) is None


@pytest.mark.parametrize("n, x, y, base", [
    (1, q(1), q(1, -1), q(1, -1)),
    (3, q(3), q(4), q(1)),
    (5, q(Fraction(1, 2)), q(2, -1), q(1)),
])
def test_theta_matches_transcription(n, x, y, base):
    D = D_of(x, y, base, x ** Fraction(1, 2), y ** Fraction(1, 2))
    ref = dsl.evaluate(theta_text(n, x, y, base), 40, D)
    got = conversion.theta_n2(n, x, y, base, 40, D)
    assert series_equal_up_to(ref, got, 40) is None


def test_negative_base_against_parity_split():
    # f_{1,2,1}(x, y, -q) via the four-term parity split, whose base (-q)^4 = q^4 is positive
    a, b, c = 1, 2, 1
    x, y, base = q(Fraction(3, 2)), q(Fraction(3, 2), -1), q(1, -1)
    lhs = blocks.hecke_f(a, b, c, x, y, base, 40)
    B4 = base ** 4
    F = lambda u, v: blocks.hecke_f(a, b, c, u, v, B4, 40, 2)
    rhs = (F(-x * x * base ** a, -y * y * base ** c)
           - F(-x * x * base ** (3 * a), -y * y * base ** (c + 2 * b)).mul_monomial(x)
           - F(-x * x * base ** (a + 2 * b), -y * y * base ** (3 * c)).mul_monomial(y)
           + F(-x * x * base ** (3 * a + 2 * b), -y * y * base ** (3 * c + 2 * b)).mul_monomial(x * y * base ** b))
    assert series_equal_up_to(lhs, rhs, 40) is None


@pytest.mark.parametrize("ident", ["T1-A", "T13-A", "5-5-cor-2-lambda-A", "5-1-cor-1-A", "2-2-cor-1-A"])
def test_cataloged_conversion_displays(ident):
    assert registry.verify(ident, 60).ok


def test_every_catalog_instance_converts():
    outcomes = conversion_outcomes(60)
    covered_pairs, covered_odd = set(), set()
    for key, runs in outcomes.items():
        assert any(r.ok for *_, r in runs), (key, [r.line() for *_, r in runs])
        for variant, n, p, r in runs:
            assert r.ok or (r.status == "error" and r.message.startswith("PoleError")), r.line()
            if r.ok:
                (covered_pairs if variant == "coprime" else covered_odd).add((n, p) if variant == "coprime" else n)
    assert set(REQUIRED_PAIRS) <= covered_pairs
    assert set(REQUIRED_ODD) <= covered_odd
