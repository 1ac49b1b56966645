import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qmock.algebra import (INF, CycRat, Monomial, Series, coeff_arith, format_series, make_monomial_series,
                           series_equal_up_to, series_invert, series_mul, series_substitute, zeta_power)
from qmock.errors import (DenominatorMismatch, DivisionByZero, FractionalExponentNegation, InsufficientValidity,
                          ZeroSeries)

Z24 = cmath.exp(2j * cmath.pi / 24)


def series(terms, D=1, valid=INF):
    return Series(D, {Fraction(e): c for e, c in terms.items()}, valid)


def geometric(n):
    return series({k: 1 for k in range(n + 1)}, valid=n)


# -- cyclotomic coefficients ------------------------------------------------

def test_i_squared_is_minus_one():
    i = CycRat.zeta(6)
    assert coeff_arith(i, i, "mul") == CycRat.of(-1)


def test_primitive_cube_roots_sum_to_minus_one():
    z3 = CycRat.zeta(8)
    assert coeff_arith(z3, z3 * z3, "add") == CycRat.of(-1)


def test_named_roots():
    z = CycRat.zeta(1)
    assert z ** 24 == CycRat.of(1)
    assert abs((z ** 6).to_complex() - 1j) < 1e-12
    assert abs((z ** 8).to_complex() - cmath.exp(2j * cmath.pi / 3)) < 1e-12
    assert abs((z ** 4).to_complex() - cmath.exp(1j * cmath.pi / 3)) < 1e-12
    assert abs((z ** 3).to_complex() - cmath.exp(1j * cmath.pi / 4)) < 1e-12


def test_quotient_matches_complex_embedding():
    z6 = CycRat.zeta(4)
    one = CycRat.of(1)
    got = coeff_arith(one - z6, one + z6, "div").to_complex()
    w = cmath.exp(1j * cmath.pi / 3)
    assert abs(got - (1 - w) / (1 + w)) < 1e-12


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        coeff_arith(CycRat.of(1), CycRat.of(0), "div")


def test_canonical_form_is_unique():
    # zeta^8 - zeta^4 + 1 = 0, so these two spellings must collapse to one vector
    z = CycRat.zeta(1)
    assert z ** 8 == z ** 4 - CycRat.of(1)
    assert hash(z ** 8) == hash(z ** 4 - CycRat.of(1))


def _random_expr(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        k = rng.randrange(24)
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        return CycRat.zeta(k) * CycRat.of(c), Z24 ** k * complex(c)
    a, av = _random_expr(rng, depth - 1)
    b, bv = _random_expr(rng, depth - 1)
    op = rng.choice("+-*/")
    if op == "/" and not b:
        op = "*"
    return {"+": (a + b, av + bv), "-": (a - b, av - bv), "*": (a * b, av * bv),
            "/": (a / b if op == "/" else None, av / bv if op == "/" else None)}[op]


def test_cycrat_agrees_with_complex_arithmetic():
    rng = random.Random(7)
    for _ in range(200):
        exact, approx = _random_expr(rng, 3)
        assert abs(exact.to_complex() - approx) < 1e-10 * max(1.0, abs(approx))


@given(st.integers(0, 23), st.integers(-6, 6).filter(bool))
def test_every_nonzero_element_has_an_inverse(k, c):
    x = CycRat.zeta(k) * CycRat.of(c) + CycRat.of(1)
    if x:
        assert x * x.inverse() == CycRat.of(1)


# -- monomials and construction --------------------------------------------

def test_half_power_monomial_series():
    s = make_monomial_series(Monomial.q(Fraction(1, 2)), 2, 10)
    assert dict(s.items()) == {Fraction(1, 2): 1}
    assert s.valid_to == 10


def test_zero_monomial_gives_zero_series():
    assert make_monomial_series(Monomial.zero(), 1, 5).is_zero()


def test_root_of_unity_monomial():
    m = -Monomial.q(3, root_power=4)  # -zeta6 q^3
    s = make_monomial_series(m, 1, 10)
    assert s.coeff(3) == -CycRat.zeta(4)


def test_denominator_mismatch():
    with pytest.raises(DenominatorMismatch):
        make_monomial_series(Monomial.q(Fraction(1, 3)), 2, 5)


# -- ring operations ---------------------------------------------------------

def test_telescoping_product():
    s = series_mul(series({0: 1, 1: -1}), geometric(20))
    assert series_equal_up_to(s, Series.one(), 20) is None


def test_add_negation_is_zero():
    s = series({0: 3, 2: Fraction(1, 2), 5: -1}, valid=9)
    assert (s + (-s)).is_zero()


def test_product_validity_rule():
    a = series({2: 1, 3: 1}, valid=10)
    b = series({-1: 1, 0: 1}, valid=6)
    # min(10 + (-1), 6 + 2)
    assert series_mul(a, b).valid_to == 8


def test_geometric_inverse():
    inv = series_invert(series({0: 1, 1: -1}), 15)
    assert series_equal_up_to(inv, geometric(15), 15) is None


def test_partition_numbers_from_euler_product():
    from qmock.thetafn import pochhammer_infinite
    inv = series_invert(pochhammer_infinite(Monomial.q(1), Monomial.q(1), 12))
    # brute-force partition counts
    def partitions(n, largest):
        if n == 0:
            return 1
        return sum(partitions(n - k, k) for k in range(1, min(n, largest) + 1))
    for n in range(12):
        assert inv.coeff(n) == CycRat.of(partitions(n, n))
    assert inv.coeff(5) == CycRat.of(7)


def test_euler_product_times_inverse_is_one():
    from qmock.thetafn import pochhammer_infinite
    e = pochhammer_infinite(Monomial.q(1), Monomial.q(1), 30)
    assert series_equal_up_to(e * series_invert(e), Series.one(), 30) is None


def test_inverse_with_laurent_shift():
    inv = series_invert(series({2: 1, 3: -1}, valid=20), 10)
    assert inv.min_exp == -2
    assert series_equal_up_to(inv, series({k - 2: 1 for k in range(13)}, valid=10), 10) is None


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroSeries):
        series_invert(Series.zero(1, 10))


def test_substitutions():
    s = series({0: 1, 1: 1, 2: 1}, valid=5)
    assert series_equal_up_to(series_substitute(s, "q_to_minus_q"), series({0: 1, 1: -1, 2: 1}), 5) is None
    t = series_substitute(series({0: 1, 1: 1}, valid=4), "q_to_q_pow_k", 3)
    assert series_equal_up_to(t, series({0: 1, 3: 1}), 14) is None
    with pytest.raises(FractionalExponentNegation):
        series_substitute(series({Fraction(1, 2): 1}, D=2), "q_to_minus_q")


def test_u8_parity_split():
    from qmock import zoo
    lhs = zoo.eulerian("U0_8", 40)
    rhs = (series_substitute(zoo.eulerian("S0_8", 20), "q_to_q_pow_k", 2)
           + series({1: 1}) * series_substitute(zoo.eulerian("S1_8", 20), "q_to_q_pow_k", 2))
    assert series_equal_up_to(lhs, rhs, 40) is None


def test_equality_window_and_refusal():
    s = series({0: 1, 4: 2}, valid=50)
    assert series_equal_up_to(s, s, 50) is None
    assert series_equal_up_to(Series.one(50), series({0: 1, 41: 1}, valid=50), 40) is None
    mm = series_equal_up_to(Series.one(50), series({0: 1, 7: 3}, valid=50), 40)
    assert mm.exponent == 7 and mm.lhs == CycRat.of(0) and mm.rhs == CycRat.of(3)
    with pytest.raises(InsufficientValidity):
        series_equal_up_to(series({0: 1}, valid=10), Series.one(), 11)


def test_format_series_is_ordered_and_exact():
    s = series({Fraction(1, 2): Fraction(-3, 2), 0: 1, 2: -1}, D=2, valid=5)
    assert format_series(s) == "1 - 3/2*q^(1/2) - q^2"


# -- randomized properties ----------------------------------------------------

sparse = st.dictionaries(st.integers(-3, 12), st.fractions(-4, 4, max_denominator=3), max_size=6)


def _naive_product(a, b, limit):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            if ea + eb <= limit:
                out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return out


@given(sparse, sparse)
def test_mul_matches_double_loop(a, b):
    sa, sb = series(a, valid=15), series(b, valid=15)
    prod = series_mul(sa, sb)
    ref = series(_naive_product(dict(sa.items()), dict(sb.items()), prod.valid_to), valid=prod.valid_to)
    assert series_equal_up_to(prod, ref, prod.valid_to) is None


@given(sparse, sparse, sparse)
def test_ring_axioms(a, b, c):
    x, y, z = series(a, valid=15), series(b, valid=15), series(c, valid=15)
    for lhs, rhs in (((x * y) * z, x * (y * z)), (x * (y + z), x * y + x * z), (x * y, y * x)):
        w = min(lhs.valid_to, rhs.valid_to)
        assert series_equal_up_to(lhs, rhs, w) is None


@given(sparse.filter(lambda d: any(d.values())))
def test_times_inverse_is_one(a):
    s = series(a, valid=15)
    if s.is_zero():
        return
    inv = series_invert(s, 30)
    p = s * inv
    assert series_equal_up_to(p, Series.one(), p.valid_to) is None


@given(sparse, st.integers(0, 10))
def test_validity_independent_of_margin(a, extra):
    # truncating the inputs later never changes a coefficient inside the window
    base = {e: c for e, c in a.items()}
    s1 = series(base, valid=12) * series(base, valid=12)
    s2 = series(base, valid=12 + extra) * series(base, valid=12 + extra)
    assert series_equal_up_to(s1, s2, s1.valid_to) is None


def test_zeta_power_table():
    assert zeta_power(0) == 1
    assert zeta_power(12) == -1


def test_comparison_at_an_order_between_grid_points():
    # a series in integral powers known through q^2 is also known through q^(5/2)
    a = series({1: Fraction(1, 2)}, 1, 2)
    b = series({Fraction(1, 2): 0, 2: 1}, 2, Fraction(5, 2))
    assert series_equal_up_to(a, a, Fraction(5, 2)) is None
    assert series_equal_up_to(a, b, Fraction(5, 2)).exponent == 1
    with pytest.raises(InsufficientValidity):
        series_equal_up_to(a, a, 3)


def test_lift_keeps_the_known_gap_above_validity():
    s = series({1: 1}, 1, 2).lift(4)
    assert s.valid_to == Fraction(11, 4)
