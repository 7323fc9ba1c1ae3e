import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from catalan_halves.riordan import RiordanPair
from catalan_halves.series import Series

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# criterion number -> (description, passed); filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {desc}")


small = st.integers(min_value=-4, max_value=4)
unit = st.sampled_from([1, -1, 2, -2, 3])


@st.composite
def series(draw, prec=8, unit_constant=False, zero_constant=False):
    coeffs = draw(st.lists(small, min_size=prec, max_size=prec))
    if unit_constant:
        coeffs[0] = draw(unit)
    if zero_constant:
        coeffs[0] = 0
        coeffs[1] = draw(unit)
    return Series(coeffs)


@st.composite
def pairs(draw, prec=8):
    return RiordanPair(draw(series(prec, unit_constant=True)),
                       draw(series(prec, zero_constant=True)))


@pytest.fixture
def rng():
    return random.Random(20261016)
