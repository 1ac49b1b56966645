from fractions import Fraction

import pytest

from qmock import dsl, oracle, registry, zoo
from qmock.algebra import Monomial, Series, series_equal_up_to
from qmock.errors import PoleError

q = Monomial.q


def test_every_name_has_an_order():
    assert set(zoo.ORDER_OF) == set(zoo.DEFINITIONS)
    assert zoo.ORDER_OF["U1_8"] == 8 and zoo.ORDER_OF["chi10"] == 10 and zoo.ORDER_OF["sigmaADH"] is None


def test_unknown_name():
    with pytest.raises(zoo.UnknownFunction):
        zoo.eulerian("nope", 10)


def test_third_order_f_low_coefficients():
    # f(q) = 1 + q - 2q^2 + 3q^3 - 3q^4 + 3q^5 - 5q^6 + 7q^7 - 6q^8
    got = zoo.eulerian("f3", 8)
    assert [int(got.coeff(k).coords[0]) for k in range(9)] == [1, 1, -2, 3, -3, 3, -5, 7, -6]


def test_negative_order_is_empty():
    assert zoo.eulerian("f3", -1).is_zero()


@pytest.mark.parametrize("name, index", [(n, i) for n, alts in zoo.ALTERNATES.items() for i in range(len(alts))])
def test_alternate_definitions_agree(name, index):
    assert series_equal_up_to(zoo.eulerian(name, 40), zoo.alternate(name, index, 40), 40) is None


@pytest.mark.parametrize("ident", ["mock-5-chi0", "mock-5-chi1", "mu-lambda", "revise-relation-3",
                                   "revise-relation-1", "revise-sec8-new-1"])
def test_composite_relations(ident):
    assert registry.verify(ident, 40).ok


@pytest.mark.parametrize("name", sorted(zoo.DEFINITIONS))
def test_cutoff_window_is_sound(name):
    assert series_equal_up_to(zoo.eulerian(name, 30, window=4), zoo.eulerian(name, 30, window=8), 30) is None


@pytest.mark.parametrize("name", sorted(zoo.DEFINITIONS))
def test_matches_independent_eulerian_oracle(name):
    assert series_equal_up_to(zoo.eulerian(name, 30), oracle.oracle_eulerian(name, 30), 30) is None


def test_psi3_is_q_times_universal_g():
    rhs = zoo.universal_g(q(1), q(4), 40).mul_monomial(q(1))
    assert series_equal_up_to(zoo.eulerian("psi3", 40), rhs, 40) is None


def test_universal_g_bilateral_form():
    assert registry.verify("g-simple", 40).ok


@pytest.mark.parametrize("x", [q(2), q(0), q(-1)])
def test_universal_g_pole(x):
    with pytest.raises(PoleError):
        zoo.universal_g(x, q(1), 10)


def test_curious_companion_is_two():
    got = dsl.evaluate("sum(n, 0, inf, q^((n^2-n)/2)/aqprod(-q; q; n))", 100)
    assert series_equal_up_to(got, Series.const(2), 100) is None
