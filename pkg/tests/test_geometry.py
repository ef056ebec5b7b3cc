import math

import pytest
from hypothesis import given, strategies as st

from horoslab.errors import InvalidParameterError
from horoslab.geometry import (CylCoords, HalfSpacePoint, SlabSpec, apply_homothety,
                               cyl_to_cartesian, hyperbolic_distance,
                               invert_through_unit_hemisphere, translate_horizontal)
from oracles import mp_cyl_to_cartesian

coords = st.floats(-3, 3)
heights = st.floats(0.05, 20)
points = st.builds(HalfSpacePoint, coords, coords, heights)


def test_cyl_to_cartesian_matches_mpmath():
    p = cyl_to_cartesian(CylCoords(1.0, 0.0, 0.0))
    assert p.x == pytest.approx(0.7615941559557649, abs=1e-15)
    assert p.z == pytest.approx(0.6480542736638855, abs=1e-15)
    assert p.y == 0.0


@given(st.floats(0, 8), st.floats(-math.pi, math.pi), st.floats(-4, 4))
def test_cyl_to_cartesian_oracle(rho, theta, z):
    p = cyl_to_cartesian(CylCoords(rho, theta, z))
    for got, want in zip((p.x, p.y, p.z), mp_cyl_to_cartesian(rho, theta, z)):
        assert got == pytest.approx(want, rel=1e-13, abs=1e-300)


@given(st.floats(0, 5), st.floats(-math.pi, math.pi), st.floats(-3, 3))
def test_axis_distance_is_rho(rho, theta, z):
    # the point lies at hyperbolic distance rho from the axis point at the same height
    p = cyl_to_cartesian(CylCoords(rho, theta, z))
    foot = HalfSpacePoint(0.0, 0.0, math.exp(z))
    assert hyperbolic_distance(p, foot) == pytest.approx(rho, abs=1e-9)


def test_rejects_nonpositive_height():
    with pytest.raises(InvalidParameterError):
        HalfSpacePoint(0, 0, 0.0)
    with pytest.raises(InvalidParameterError):
        CylCoords(-1, 0, 0)


@given(points, points, st.floats(0.01, 100))
def test_homothety_is_an_isometry(p, q, r):
    d = hyperbolic_distance(p, q)
    assert hyperbolic_distance(apply_homothety(p, r), apply_homothety(q, r)) == \
        pytest.approx(d, rel=1e-9, abs=1e-9)


@given(points, points, coords, coords)
def test_horizontal_translation_is_an_isometry(p, q, dx, dy):
    d = hyperbolic_distance(p, q)
    assert hyperbolic_distance(translate_horizontal(p, dx, dy), translate_horizontal(q, dx, dy)) \
        == pytest.approx(d, rel=1e-9, abs=1e-9)


@given(points, points)
def test_inversion_is_an_isometric_involution(p, q):
    ip, iq = invert_through_unit_hemisphere(p), invert_through_unit_hemisphere(q)
    assert hyperbolic_distance(ip, iq) == pytest.approx(hyperbolic_distance(p, q), rel=1e-8, abs=1e-8)
    back = invert_through_unit_hemisphere(ip)
    assert (back.x, back.y, back.z) == pytest.approx((p.x, p.y, p.z), rel=1e-12, abs=1e-12)


@given(points)
def test_distance_to_self_is_zero(p):
    assert hyperbolic_distance(p, p) == 0.0


def test_distance_along_axis_is_log_ratio():
    assert hyperbolic_distance(HalfSpacePoint(0, 0, 1), HalfSpacePoint(0, 0, 2)) == \
        pytest.approx(math.log(2), abs=1e-15)


def test_homothety_rejects_nonpositive_factor():
    with pytest.raises(InvalidParameterError):
        apply_homothety(HalfSpacePoint(0, 0, 1), 0.0)


def test_slab():
    slab = SlabSpec(1, 2)
    assert slab.ratio == 2 and slab.width == pytest.approx(math.log(2))
    assert slab.scaled(3) == SlabSpec(3, 6)
    for c1, c2 in ((2, 1), (0, 1), (1, 1)):
        with pytest.raises(InvalidParameterError):
            SlabSpec(c1, c2)
