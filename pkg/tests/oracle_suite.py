"""Random comparisons between the production building blocks and the brute-force oracles."""
import random
from fractions import Fraction

from qmock import blocks, oracle
from qmock.algebra import Monomial, series_equal_up_to
from qmock.errors import QMockError

KINDS = ("m", "mbar", "f", "fbar")


def _mono(rng, D):
    return Monomial.q(Fraction(rng.randint(-3 * D, 3 * D), D), rng.choice((1, -1)))


def _instance(rng):
    D = rng.choice((1, 2, 4))
    e = Fraction(rng.randint(1, 2 * D), D) if rng.random() < 0.3 else Fraction(1)
    base = Monomial.q(e, rng.choice((1, 1, -1)))
    abc = (rng.randint(1, 3), rng.randint(0, 4), rng.randint(1, 3))
    return abc, _mono(rng, D), _mono(rng, D), base


def _pair(kind, abc, x, z, base, order, margin=0):
    if kind == "m":
        return oracle.oracle_m(x, base, z, order), blocks.appell_m(x, base, z, order, margin=margin)
    if kind == "mbar":
        return oracle.oracle_mbar(x, base, z, order), blocks.false_m(x, base, z, order, margin=margin)
    if kind == "f":
        return oracle.oracle_hecke(abc, x, z, base, order), blocks.hecke_f(*abc, x, z, base, order, margin=margin)
    return oracle.oracle_fbar(abc, x, z, base, order), blocks.false_f(*abc, x, z, base, order, margin=margin)


def oracle_mismatches(kind, count=20, order=40, seed=1):
    """Failing instances among ``count`` generic random ones; poles are redrawn."""
    rng = random.Random(seed)
    bad, done = [], 0
    while done < count:
        inst = _instance(rng)
        try:
            ref, got = _pair(kind, *inst, order)
        except QMockError:
            continue
        done += 1
        mm = series_equal_up_to(ref, got, order)
        if mm is not None:
            bad.append((inst, mm))
    return bad


def margin_mismatches(kind, count=10, order=40, seed=2):
    """Instances where enlarging the enumeration slack by 5 changes the result."""
    rng = random.Random(seed)
    bad, done = [], 0
    while done < count:
        abc, x, z, base = _instance(rng)
        fn = {"m": blocks.appell_m, "mbar": blocks.false_m}.get(kind)
        try:
            if fn is not None:
                a, b = fn(x, base, z, order), fn(x, base, z, order, margin=5)
            else:
                fn = blocks.hecke_f if kind == "f" else blocks.false_f
                a, b = fn(*abc, x, z, base, order), fn(*abc, x, z, base, order, margin=5)
        except QMockError:
            continue
        done += 1
        if series_equal_up_to(a, b, order) is not None:
            bad.append((abc, x, z, base))
    return bad
