import random
from fractions import Fraction

import pytest

from qmock import dsl
from qmock.algebra import INF, CycRat, Monomial, Series, series_equal_up_to
from qmock.blocks import geometric_expand
from qmock.errors import NonConvergentProduct, PoleError
from qmock.thetafn import (ThetaRef, jacobi_j, pochdual, pochhammer_finite, pochhammer_infinite,
                           reciprocal_theta, theta_shorthand)

from conftest import random_monomial

q = Monomial.q


def same(a, b, order):
    return series_equal_up_to(a, b, order) is None


def ev(text, order):
    return dsl.evaluate(text, order)


def test_empty_pochhammer_is_one():
    assert same(pochhammer_finite(q(3, -1), 0, q(1)), Series.one(), 50)


def test_q_q_3_expanded():
    got = pochhammer_finite(q(1), 3, q(1))
    want = Series(1, {0: 1, 1: -1, 2: -1, 4: 1, 5: 1, 6: -1})
    assert same(got, want, 20)


def test_finite_product_against_factorwise_oracle():
    # (-q; q^2)_2 = (1 + q)(1 + q^3)
    want = {}
    for e1, c1 in ((0, 1), (1, 1)):
        for e2, c2 in ((0, 1), (3, 1)):
            want[e1 + e2] = want.get(e1 + e2, 0) + c1 * c2
    assert same(pochhammer_finite(q(1, -1), 2, q(2)), Series(1, want), 20)


def test_pochdual_at_zero():
    assert same(pochdual(Monomial.zero(), 3, q(1)), Series(1, {6: -1}), 20)


def test_pochdual_at_one():
    assert same(pochdual(q(0), 2, q(1)), pochhammer_finite(q(1), 2, q(1)), 20)


def test_pochdual_direct_substitution():
    # (q/a; q)_3 a^3 at a = -q is (-1;q)_3 * (-q)^3
    a = q(1, -1)
    direct = pochhammer_finite(q(0, -1), 3, q(1)) * Series(1, {3: -1})
    assert same(pochdual(a, 3, q(1)), direct, 30)


def test_euler_product_is_pentagonal():
    e = pochhammer_infinite(q(1), q(1), 15)
    pent = {}
    for k in range(-4, 5):
        pent[k * (3 * k - 1) // 2] = (-1) ** (k % 2)
    for n in range(16):
        assert e.coeff(n) == CycRat.of(pent.get(n, 0))


def test_zero_argument_product():
    assert same(pochhammer_infinite(Monomial.zero(), q(1), 10), Series.one(), 10)


def test_nonconvergent_product():
    with pytest.raises(NonConvergentProduct):
        pochhammer_infinite(q(1), q(0, -1), 10)


def test_j_at_one_vanishes():
    assert jacobi_j(q(0), q(1), 30).is_zero()


def test_j_minus_one_shorthand():
    assert same(jacobi_j(q(0, -1), q(1), 40), ev("2*Jm(2)^2/Jm(1)", 40), 40)


def test_sum_and_product_forms_agree():
    x, base = q(3, -1), q(8)
    assert same(jacobi_j(x, base, 50, "sum"), jacobi_j(x, base, 50, "product"), 50)


def test_random_triple_product():
    rng = random.Random(3)
    for _ in range(20):
        D = rng.choice([1, 2, 4])
        base = q(Fraction(rng.randint(1, 3 * D), D), rng.choice([1, -1]))
        x = random_monomial(rng, D, zeta=rng.random() < 0.3)
        assert same(jacobi_j(x, base, 40, "sum", D), jacobi_j(x, base, 40, "product", D), 40)


@pytest.mark.parametrize("lhs,rhs", [
    ("Jbar(0,1)", "2*Jbar(1,4)"),
    ("Jbar(1,4)", "Jm(2)^2/Jm(1)"),
    ("Jbar(1,2)", "Jm(2)^5/(Jm(1)^2*Jm(4)^2)"),
    ("J(1,2)", "Jm(1)^2/Jm(2)"),
    ("Jbar(1,3)", "Jm(2)*Jm(3)^2/(Jm(1)*Jm(6))"),
    ("J(1,4)", "Jm(1)*Jm(4)/Jm(2)"),
    ("J(1,6)", "Jm(1)*Jm(6)^2/(Jm(2)*Jm(3))"),
    ("Jbar(1,6)", "Jm(2)^2*Jm(3)*Jm(12)/(Jm(1)*Jm(4)*Jm(6))"),
])
def test_shorthand_table(lhs, rhs):
    assert same(ev(lhs, 60), ev(rhs, 60), 60)


def test_theta_ref():
    assert same(theta_shorthand(ThetaRef("Jm", 0, 3), 30), pochhammer_infinite(q(3), q(3), 30), 30)
    assert same(theta_shorthand(ThetaRef("J", 1, 2), 30), jacobi_j(q(1), q(2), 30), 30)
    with pytest.raises(ValueError):
        ThetaRef("J", 1, 0)


def test_shift_and_inversion_rules():
    rng = random.Random(11)
    for _ in range(10):
        x = random_monomial(rng, 2)
        base = q(1)
        jx = jacobi_j(x, base, 60, D=2)
        for n in range(-3, 4):
            shifted = jacobi_j(x * q(n), base, 40, D=2)
            pref = Monomial.q(Fraction(-n * (n - 1), 2), (-1) ** (n % 2)) * (x.inverse() ** n if n >= 0 else x ** (-n))
            assert same(shifted, pref.to_series(2) * jx, 40)
        assert same(jx, jacobi_j(base / x, base, 40, D=2), 40)
        assert same(jx, (-x).to_series(2) * jacobi_j(x.inverse(), base, 50, D=2), 40)


def test_reciprocal_theta_at_minus_one():
    assert same(reciprocal_theta(q(0, -1), 40), ev("Jm(1)^3/j(-1; q)", 40), 40)


def test_reciprocal_theta_in_q_squared():
    s = reciprocal_theta(q(1, -1), 40, base=q(2))
    assert same(s, ev("Jm(1)^2*Jm(4)^2/Jm(2)^2", 40), 40)


def test_reciprocal_theta_pole():
    with pytest.raises(PoleError):
        reciprocal_theta(q(1), 20)


def test_geometric_expansion_rules():
    assert same(geometric_expand(1, 1, 10), Series(1, {k: 1 for k in range(11)}), 10)
    assert same(geometric_expand(1, -1, 10), Series(1, {k: -1 for k in range(1, 11)}), 10)
    assert same(geometric_expand(-1, 0, 10), Series.const(Fraction(1, 2)), 10)
    with pytest.raises(PoleError):
        geometric_expand(1, 0, 10)
