import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import families
from horoslab.errors import DegenerateAxisError, InvalidParameterError
from horoslab.geometry import HalfSpacePoint, invert_through_unit_hemisphere
from horoslab.profile import (FamilyParams, Regime, family, lambda_dot, lambda_of_s,
                              metric_identity_residual, ode_residual, period, profile_point,
                              profile_polyline, super_one_a_min, u_dot_squared, u_squared,
                              u_squared_dot)
from oracles import gauss_lambda, mp_lambda, raw_w


def _s_range(fp):
    per = period(fp)
    return (-per, per) if per else (-3.0, 3.0)


def random_samples(rng, n):
    out = []
    for i in range(n):
        r = i % 3
        if r == 0:
            fp = FamilyParams(Regime.EQUAL_ONE, 1.0, rng.uniform(-0.49, 2.0))
        elif r == 1:
            fp = FamilyParams(Regime.SUB_ONE, rng.uniform(0, 0.98), rng.uniform(-2, 2))
        else:
            H = rng.uniform(1.02, 6)
            fp = FamilyParams(Regime.SUPER_ONE, H, rng.uniform(super_one_a_min(H) + 1e-3, 1.0))
        lo, hi = _s_range(fp)
        out.append((fp, rng.uniform(lo, hi)))
    return out


# ---------------------------------------------------------------------------
# closed forms


@pytest.mark.parametrize("H, a, s", [(1.0, -0.2, 0.7), (0.5, -0.25, 1.3), (3.0, -0.05, 0.2)])
def test_ode_residual_examples(H, a, s):
    assert ode_residual(family(H, a), s) <= 1e-10


def test_ode_and_metric_identity_on_random_samples(rng):
    worst_ode = worst_metric = 0.0
    for fp, s in random_samples(rng, 1000):
        worst_ode = max(worst_ode, ode_residual(fp, s))
        if u_squared(fp, s) > 1e-12:
            worst_metric = max(worst_metric, metric_identity_residual(fp, s))
    assert worst_ode <= 1e-9
    assert worst_metric <= 1e-9


@given(families(), st.floats(-1, 1))
def test_u_squared_matches_unsimplified_form(fp, t):
    lo, hi = _s_range(fp)
    s = lo + (hi - lo) * (t + 1) / 2
    want = float(raw_w(fp.H, fp.a, s))
    assert u_squared(fp, s) == pytest.approx(want, rel=1e-9, abs=1e-9)


@given(families())
def test_u_squared_is_nonnegative(fp):
    if fp.regime is Regime.SUB_ONE and fp.a != 0:
        assert fp.B - fp.A >= 0
    if fp.regime is Regime.SUPER_ONE:
        assert fp.A >= fp.B >= 0
    lo, hi = _s_range(fp)
    assert min(u_squared(fp, s) for s in np.linspace(lo, hi, 101)) >= 0.0


def test_u_squared_examples():
    assert u_squared(family(1, -0.2), 0.0) == pytest.approx(0.04 / 0.6, rel=1e-15)
    assert u_squared(family(1, 0.0), 0.0) == 0.0
    assert period(family(3, -0.05)) == pytest.approx(math.pi / math.sqrt(8), rel=1e-15)
    assert period(family(1, -0.2)) is None
    assert period(family(0.5, 1.0)) is None


def test_u_dot_squared_at_axis_raises():
    with pytest.raises(DegenerateAxisError):
        u_dot_squared(family(1, 0.0), 0.0)
    assert u_dot_squared(family(1, -0.2), 0.3) > 0


@given(families())
def test_lambda_dot_is_finite_everywhere(fp):
    lo, hi = _s_range(fp)
    vals = [lambda_dot(fp, s) for s in np.linspace(lo, hi, 401)]
    assert all(math.isfinite(v) for v in vals)


def test_lambda_dot_removable_points_have_limit_zero():
    # a = 0 profiles run through the axis, where the integrand is 0/0
    for fp, s0 in ((family(1, 0.0), 0.0), (family(0.5, 0.0), 0.0),
                   (family(3, 0.0), -0.25 * period(family(3, 0.0)))):
        assert abs(lambda_dot(fp, s0)) <= 1e-12
        assert abs(lambda_dot(fp, s0 + 1e-7)) < 1e-5


def test_lambda_dot_sign_at_zero_for_h1():
    # lambda increases at s = 0; magnitude from the lambda-free metric identity
    fp = family(1, -0.2)
    w = u_squared(fp, 0.0)
    assert lambda_dot(fp, 0.0) == pytest.approx(math.sqrt(1 / (1 + w)), rel=1e-13)
    assert lambda_dot(fp, 0.0) == pytest.approx(0.968245836551854, rel=1e-13)


# ---------------------------------------------------------------------------
# lambda


def test_lambda_gauss_oracle():
    assert lambda_of_s(family(1, -0.2), 1.0, tol=1e-12) == \
        pytest.approx(gauss_lambda(1.0, -0.2, 1.0), abs=1e-11)


@given(families(), st.floats(-1, 1))
def test_lambda_matches_mpmath(fp, t):
    lo, hi = _s_range(fp)
    s = (hi if t > 0 else -lo) * t
    want = mp_lambda(fp.H, fp.a, s)
    assert lambda_of_s(fp, s) == pytest.approx(want, abs=1e-9)


def test_lambda_at_zero():
    assert lambda_of_s(family(2, -0.1), 0.0) == 0.0


def test_lambda_extrema_h1_positive_a():
    a = 0.5
    fp = family(1, a)
    s_star = math.sqrt(a * (1 + a)) / (1 + 2 * a)
    assert lambda_dot(fp, -s_star) == pytest.approx(0.0, abs=1e-14)
    assert lambda_dot(fp, -s_star - 1e-3) > 0 > lambda_dot(fp, -s_star + 1e-3)
    assert lambda_dot(fp, s_star - 1e-3) < 0 < lambda_dot(fp, s_star + 1e-3)


# ---------------------------------------------------------------------------
# profile samples


def test_profile_point_examples():
    p = profile_point(family(1, 0.0), 0.0)
    assert (p.x, p.z) == (0.0, 1.0)
    p = profile_point(family(1, -0.2), 0.0)
    rho = math.asinh(0.2 / math.sqrt(0.6))
    assert p.x == pytest.approx(math.tanh(rho), rel=1e-15)
    assert p.z == pytest.approx(1 / math.cosh(rho), rel=1e-15)


@given(families(), st.floats(-1, 1))
def test_derivatives_match_finite_differences(fp, t):
    lo, hi = _s_range(fp)
    s = 0.5 * (lo + hi) + 0.45 * (hi - lo) * t
    if u_squared(fp, s) < 1e-6:
        return
    h = 1e-5
    p, pm, pp = (profile_point(fp, s + d, 1e-13) for d in (0.0, -h, h))
    assert p.dx_ds == pytest.approx((pp.x - pm.x) / (2 * h), rel=1e-5, abs=1e-6)
    assert p.dz_ds == pytest.approx((pp.z - pm.z) / (2 * h), rel=1e-5, abs=1e-6)


@given(families(), st.floats(-1, 1))
def test_unit_speed_in_the_hyperbolic_metric(fp, t):
    lo, hi = _s_range(fp)
    s = 0.5 * (lo + hi) + 0.45 * (hi - lo) * t
    if u_squared(fp, s) == 0.0:
        return
    p = profile_point(fp, s)
    assert math.hypot(p.dx_ds, p.dz_ds) / p.z == pytest.approx(1.0, abs=1e-9)


def test_h1_parity(rng):
    for a in rng.uniform(-0.49, 1.5, 20):
        fp = family(1, a)
        for s in rng.uniform(0, 3, 5):
            p, q = profile_point(fp, s), profile_point(fp, -s)
            assert p.rho == pytest.approx(q.rho, abs=1e-9)
            assert p.lam == pytest.approx(-q.lam, abs=1e-9)


def _inversion_gap(fp, s):
    p, q = profile_point(fp, s), profile_point(fp, -s)
    inv = invert_through_unit_hemisphere(HalfSpacePoint(p.x, 0.0, p.z))
    return max(abs(inv.x - q.x), abs(inv.z - q.z))


@pytest.mark.parametrize("H, a", [(1.0, -0.2), (1.0, 0.5), (0.5, -0.25), (0.3, 0.8), (0.0, -0.4)])
def test_inversion_symmetry(H, a):
    assert max(_inversion_gap(family(H, a), s) for s in np.linspace(0, 2.5, 26)) <= 1e-8


@pytest.mark.parametrize("H, a", [(3.0, -0.05), (2.0, -0.1), (1.2, -0.2), (1.5, 0.3)])
def test_super_one_periodicity(H, a):
    fp = family(H, a)
    per = period(fp)
    scale = math.exp(lambda_of_s(fp, per))
    for s in np.linspace(-per, per, 25):
        p, q = profile_point(fp, s), profile_point(fp, s + per)
        assert q.rho == pytest.approx(p.rho, abs=1e-9)
        assert abs(q.x - scale * p.x) <= 1e-8 * max(1, scale)
        assert abs(q.z - scale * p.z) <= 1e-8 * max(1, scale)


@pytest.mark.parametrize("H, a", [(0.5, -0.25), (0.5, 0.7), (0.2, -1.0), (0.0, -0.5)])
def test_sub_one_profile_approaches_the_boundary(H, a):
    fp = family(H, a)
    for s in (-50.0, 50.0):
        assert profile_point(fp, s).z < 1e-8


# ---------------------------------------------------------------------------
# polylines


def test_polyline_endpoints_match_profile_point():
    fp = family(0.5, -0.25)
    poly = profile_polyline(fp, -1.0, 0.7, 2)
    for smp, s in zip(poly, (-1.0, 0.7)):
        ref = profile_point(fp, s)
        assert (smp.x, smp.z) == pytest.approx((ref.x, ref.z), abs=1e-12)


def test_polyline_accumulation_agrees_with_direct_evaluation():
    fp = family(3, -0.05)
    poly = profile_polyline(fp, -0.3, 2.0, 50)
    for smp in poly[::7]:
        assert smp.lam == pytest.approx(lambda_of_s(fp, smp.s), abs=50 * 1e-10)


def test_h1_figure_curve_is_monotone_in_height():
    poly = profile_polyline(family(1, -0.2), -2, 2, 400)
    assert all(p.dz_ds > 0 for p in poly)
    assert all(q.z > p.z for p, q in zip(poly, poly[1:]))
    xs = [p.dx_ds for p in poly]
    sign_changes = sum(1 for u, v in zip(xs, xs[1:]) if u * v < 0)
    assert sign_changes == 2


def test_polyline_over_one_period_repeats_up_to_homothety():
    fp = family(3, -0.05)
    per = period(fp)
    poly = profile_polyline(fp, 0.0, per, 33)
    scale = math.exp(poly[-1].lam - poly[0].lam)
    assert poly[-1].x == pytest.approx(scale * poly[0].x, rel=1e-9)
    assert poly[-1].z == pytest.approx(scale * poly[0].z, rel=1e-9)


def test_polyline_rejects_bad_input():
    fp = family(1, -0.2)
    with pytest.raises(InvalidParameterError):
        profile_polyline(fp, 0, 1, 1)
    with pytest.raises(InvalidParameterError):
        profile_polyline(fp, 1, 1, 10)


# ---------------------------------------------------------------------------
# parameter domains


@pytest.mark.parametrize("regime, H, a", [
    ("h1", 1.0, -0.5), ("h1", 1.0, -0.7), ("h1", 0.9, 0.0), ("sub", 1.0, 0.0),
    ("sub", -0.1, 0.0), ("super", 0.9, 0.0), ("super", 2.0, super_one_a_min(2.0)),
    ("super", 2.0, -0.5), ("sub", float("nan"), 0.0), ("sub", 0.5, float("inf")),
])
def test_invalid_parameters(regime, H, a):
    with pytest.raises(InvalidParameterError):
        family(H, a, regime)


def test_regime_inference_refuses_near_one():
    with pytest.raises(InvalidParameterError):
        family(1 + 1e-10, 0.0)
    assert family(1.0, 0.0).regime is Regime.EQUAL_ONE
    assert family(0.5, 0.0).regime is Regime.SUB_ONE
    assert family(2.0, 0.0).regime is Regime.SUPER_ONE


def test_derived_constants_are_cached_and_consistent():
    fp = family(0.5, -0.25)
    assert fp.A == pytest.approx(0.75)
    assert fp.B == pytest.approx(math.sqrt(0.75))
    assert fp.alpha == pytest.approx(math.sqrt(0.75))
    assert u_squared_dot(fp, 0.0) == 0.0
