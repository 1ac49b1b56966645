import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from qmock.algebra import Monomial

settings.register_profile("qmock", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qmock")

# acceptance criterion number -> (passed, description); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[k]
        terminalreporter.write_line("criterion %d: %s  %s" % (k, "PASS" if ok else "FAIL", text))


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_monomial(rng, D=1, spread=3, signed=True, zeta=False):
    """±q^(k/D), optionally times a random 24th root of unity."""
    e = Fraction(rng.randint(-spread * D, spread * D), D)
    root = rng.randrange(24) if zeta else 0
    sign = rng.choice((1, -1)) if signed else 1
    return Monomial.q(e, sign, root)
