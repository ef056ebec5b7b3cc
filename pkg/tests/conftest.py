import math

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from horoslab.profile import FamilyParams, Regime, super_one_a_min

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@st.composite
def families(draw, regimes=("h1", "sub", "super")):
    """In-domain (regime, H, a) draws, kept away from the excluded boundary values."""
    regime = Regime(draw(st.sampled_from(regimes)))
    if regime is Regime.EQUAL_ONE:
        H = 1.0
        a = draw(st.floats(-0.49, 2.0))
    elif regime is Regime.SUB_ONE:
        H = draw(st.floats(0.0, 0.98))
        a = draw(st.floats(-2.0, 2.0))
    else:
        H = draw(st.floats(1.02, 6.0))
        a = draw(st.floats(super_one_a_min(H) + 1e-3, 1.0))
    return FamilyParams(regime, H, a)


@st.composite
def tube_families(draw):
    """Families with a tube: -1/(4H) < a < 0, away from the ends of the interval."""
    regime = Regime(draw(st.sampled_from(("h1", "sub", "super"))))
    if regime is Regime.EQUAL_ONE:
        H = 1.0
    elif regime is Regime.SUB_ONE:
        H = draw(st.floats(0.2, 0.95))
    else:
        H = draw(st.floats(1.05, 4.0))
    lo = -1 / (4 * H)
    if regime is Regime.SUPER_ONE:
        lo = max(lo, super_one_a_min(H))
    a = draw(st.floats(0.9 * lo, 0.1 * lo))
    return FamilyParams(regime, H, a)


@pytest.fixture
def rng():
    import numpy as np
    return np.random.default_rng(20240611)


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# acceptance criteria register their outcome here; printed after the run
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, seconds in sorted(ACCEPTANCE):
        terminalreporter.write_line(
            f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({seconds:.2f} s)")
