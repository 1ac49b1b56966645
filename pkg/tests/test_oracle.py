from fractions import Fraction

import pytest

from qmock import blocks, oracle, zoo
from qmock.algebra import Monomial, Series, series_equal_up_to
from qmock.errors import PoleError

from oracle_suite import KINDS, oracle_mismatches

q = Monomial.q


@pytest.mark.parametrize("kind", KINDS)
def test_oracle_agrees_with_blocks(kind):
    assert oracle_mismatches(kind, count=20, order=40, seed=3) == []


def test_hecke_oracle_vanishing_instance():
    assert oracle.oracle_hecke((1, 0, 1), q(4), q(4), q(4), 40).is_zero()


def test_hecke_oracle_order_zero_keeps_constant_term():
    got = oracle.oracle_hecke((1, 2, 1), q(1), q(1), q(1), 0)
    ref = blocks.hecke_f(1, 2, 1, q(1), q(1), q(1), 0)
    assert series_equal_up_to(got, ref, 0) is None
    assert got.coeff(0) == 1


def test_appell_oracle_special_value():
    assert series_equal_up_to(oracle.oracle_m(q(1), q(2), q(0, -1), 50), Series.const(Fraction(1, 2)), 50) is None


@pytest.mark.parametrize("x, base, z", [
    (q(Fraction(1, 2)), q(1), q(2)),                  # z a power of the base
    (q(Fraction(1, 2)), q(1), q(Fraction(-1, 2))),    # xz a power of the base
])
def test_pole_parity_with_blocks(x, base, z):
    with pytest.raises(PoleError):
        oracle.oracle_m(x, base, z, 20)
    with pytest.raises(PoleError):
        blocks.appell_m(x, base, z, 20)


def test_false_appell_small_order():
    x, base, z = q(1), q(4), q(3, -1)
    for order in (0, 1, 2):
        assert series_equal_up_to(oracle.oracle_mbar(x, base, z, order), blocks.false_m(x, base, z, order), order) is None


def test_eulerian_oracle_third_order_f():
    assert series_equal_up_to(oracle.oracle_eulerian("f3", 8), zoo.eulerian("f3", 8), 8) is None


def test_eulerian_oracle_curious_companion():
    assert series_equal_up_to(oracle.oracle_eulerian("curious2", 60), Series.const(2), 60) is None


@pytest.mark.parametrize("name", sorted(zoo.DEFINITIONS))
def test_eulerian_oracle_order_zero(name):
    assert series_equal_up_to(oracle.oracle_eulerian(name, 0), zoo.eulerian(name, 0), 0) is None


def test_oracle_rejects_non_sign_roots():
    with pytest.raises(ValueError):
        oracle.oracle_m(q(Fraction(1, 2), 1, 8), q(1), q(Fraction(1, 3)), 10)
