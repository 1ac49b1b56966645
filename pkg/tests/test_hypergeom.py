import random
from fractions import Fraction

import pytest

from qmock import hypergeom as H
from qmock.algebra import Monomial, Series, series_equal_up_to, series_invert
from qmock.errors import NonTruncatable, PoleError
from qmock.thetafn import pochhammer_finite

from lemma_suite import closed_form_failures, draw, watson_failures

q = Monomial.q
Q = q(1)


def poly(expr_terms, D=1):
    """Exact Laurent polynomial from {exponent: coefficient}."""
    s = Series.zero(D)
    for e, c in expr_terms.items():
        s = s + q(e).to_series(D).scale(c)
    return s


def test_terminating_at_zero_is_one():
    spec = H.PhiSpec((q(3), q(-1, -1)), (q(2),), n_terminate=0)
    assert series_equal_up_to(H.phi_eval(spec, 20), Series.one(1), 20) is None


def test_two_term_3phi2_closed_form():
    # 3phi2(q^-2, q^2, q; -q, -q; q, q) = 4 q^2 / (1 + q^2)^2
    spec = H.PhiSpec((q(-2), q(2), Q), (q(1, -1), q(1, -1)))
    lhs = H.phi_eval(spec, 30)
    rhs = poly({2: 4}) * series_invert(poly({0: 1, 2: 1}) ** 2, 30)
    assert series_equal_up_to(lhs, rhs, 30) is None


def test_termination_detected_from_upper_parameter():
    spec = H.PhiSpec((q(-3), q(5), q(7)), (q(2), q(9)))
    assert H._termination(spec) == 3


def test_nonterminating_phi_needs_finite_order():
    spec = H.PhiSpec((q(1, -1),), (), argument=q(1))
    with pytest.raises(NonTruncatable):
        H.phi_eval(spec, float("inf"))


def test_nonterminating_1phi0_is_q_binomial_theorem():
    # 1phi0(a; -; q, z) = (az; q)_inf / (z; q)_inf with a = -1, z = q: (-q; q)_inf / (q; q)_inf
    spec = H.PhiSpec((q(0, -1),), (), argument=Q)
    lhs = H.phi_eval(spec, 30)
    num = pochhammer_finite(q(1, -1), 31, Q, 30)
    den = pochhammer_finite(Q, 31, Q, 30)
    assert series_equal_up_to(lhs, num * series_invert(den, 30), 30) is None


def test_vanishing_lower_parameter_is_a_pole():
    spec = H.PhiSpec((q(-3), q(2), q(5)), (q(-1), q(7)))
    with pytest.raises(PoleError):
        H.phi_eval(spec, 20)


def test_zero_over_zero_is_still_a_pole():
    # (q^-1; q)_2 in both numerator and denominator: the term is undefined, not 1
    t = H.BinTerm(1, q(0), H.poch_bins(q(-1), 2), H.poch_bins(q(-1), 2))
    with pytest.raises(PoleError):
        H.eval_term(t, 10, 1)


def _reordered_3phi2(uppers, lowers, z, n, order, D):
    """Each term built from Pochhammer polynomials and one inversion, summed from k = n down."""
    total = Series.zero(D).truncate(order)
    for k in range(n, -1, -1):
        num = Series.one(D)
        for a in uppers:
            num = num * pochhammer_finite(a, k, Q, D=D)
        den = pochhammer_finite(Q, k, Q, D=D)
        for b in lowers:
            den = den * pochhammer_finite(b, k, Q, D=D)
        term = (num * series_invert(den, order + 100)).mul_monomial(z ** k)
        total = total + term.truncate(order)
    return total.truncate(order)


def test_random_terminating_3phi2_against_reordered_sum():
    rng = random.Random(17)
    done = 0
    while done < 15:
        n = rng.randint(0, 6)
        uppers = (q(-n), draw(rng, done % 3), draw(rng, 2))
        lowers = (draw(rng, 2), draw(rng, done % 3))
        z = draw(rng, 2)
        D = 2
        try:
            lhs = H.phi_eval(H.PhiSpec(uppers, lowers, argument=z), 30, D)
            ref = _reordered_3phi2(uppers, lowers, z, n, 30, D)
        except (PoleError, ZeroDivisionError):
            continue
        assert series_equal_up_to(lhs, ref, 30) is None, (n, uppers, lowers, z)
        done += 1


def test_pfaff_saalschutz_example():
    p = {"a": Q, "b": q(Fraction(1, 2)), "c": q(Fraction(1, 2), -1)}
    lhs = H.closed_form_lhs("Pfaff", p, 2, 30)
    rhs = H.closed_form_3phi2("Pfaff", p, 2, 30)
    assert series_equal_up_to(lhs, rhs, 30) is None


def test_meq2_at_zero_is_one():
    p = {"alpha": q(2, -1), "c": q(Fraction(1, 2))}
    assert series_equal_up_to(H.closed_form_lhs("meq:2", p, 0, 20), Series.one(2), 20) is None
    assert series_equal_up_to(H.closed_form_3phi2("meq:2", p, 0, 20), Series.one(2), 20) is None


def test_limit_forms_reject_zero():
    with pytest.raises(ValueError):
        H.form_sides("lem-limit", {"c": q(2), "d": q(3)}, 0)


def test_unknown_form_and_missing_parameter():
    with pytest.raises(KeyError):
        H.form_sides("no-such-form", {}, 1)
    with pytest.raises(ValueError):
        H.form_sides("Pfaff", {"a": Q}, 1)


def test_pentagonal_sum_against_direct_k_sum():
    n = 4
    order = 40
    # sum_k (q^-n, q^n; q)_k q^k, summed directly from Pochhammer polynomials
    direct = Series.zero(1)
    for k in range(n + 1):
        direct = direct + (pochhammer_finite(q(-n), k, Q) * pochhammer_finite(q(n), k, Q)).mul_monomial(q(k))
    # q^n + (-1)^(n-1) (1 - q^n) q^((3n^2-n)/2) sum_{|j|<n} (-1)^j q^(-j(3j+1)/2)
    inner = poly({Fraction(-j * (3 * j + 1), 2): (-1) ** j for j in range(-n + 1, n)})
    display = q(n).to_series(1) + (poly({0: 1, n: -1}) * inner).mul_monomial(q((3 * n * n - n) // 2, (-1) ** (n - 1)))
    assert series_equal_up_to(direct, display, order) is None
    assert series_equal_up_to(H.closed_form_lhs("revise-5-2-proof-3", {}, n, order), direct, order) is None
    assert series_equal_up_to(H.closed_form_3phi2("revise-5-2-proof-3", {}, n, order), display, order) is None


@pytest.mark.parametrize("n", range(0, 11))
def test_liu_lemma_small_n(n):
    rng = random.Random(100 + n)
    done = 0
    while done < 2:
        p = {"a": draw(rng, done), "c": draw(rng, 2)}
        try:
            lhs = H.closed_form_lhs("Liu-Lemma4.1", p, n, 30)
            rhs = H.closed_form_3phi2("Liu-Lemma4.1", p, n, 30)
        except (PoleError, ZeroDivisionError):
            continue
        assert series_equal_up_to(lhs, rhs, 30) is None, p
        done += 1


@pytest.mark.parametrize("form", sorted(H.FORMS))
def test_closed_form_light_sweep(form):
    # the full sweep (n <= 12, five draws each) runs in the acceptance suite
    assert closed_form_failures(order=20, n_max=4, n_draws=2, seed=3, forms=[form]) == []


def test_watson_light_sweep():
    assert watson_failures(order=20, n_max=3, n_draws=2) == []


def test_watson_with_wrong_side_is_detected():
    lhs, rhs = H.watson_sides(q(2), q(Fraction(1, 2)), q(3, -1), q(-1, -1), q(Fraction(5, 2)), 2, 20)
    assert series_equal_up_to(lhs, rhs, 20) is None
    assert series_equal_up_to(lhs, rhs + q(3).to_series(2), 20) is not None
