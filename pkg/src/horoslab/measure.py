"""Hyperbolic area, volume and mean curvature of regions of revolution.

A region is described by its meridian: a closed loop in the half-plane
{x >= 0, z > 0} made of profile arcs, horosphere caps, pieces of the axis and
circular arcs.  Revolving the loop about the z-axis gives the region.

Volume uses the line integral  V = pi * loop-integral of x^2 / z^3 dz,
which follows from the volume element 2 pi x / z^3 dx dz and Green's theorem.
Caps (dz = 0) and the axis (x = 0) drop out.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Union

from .errors import ContourError, InvalidParameterError, StepTooLargeError
from .profile import (DEFAULT_TOL, FamilyParams, lambda_between, lambda_dot, lambda_of_s,
                      sample_at, u_squared)
from .quadrature import integrate_adaptive

CLOSURE_TOL = 1e-8


@dataclass(frozen=True)
class ProfileArc:
    """Profile of ``fp`` between s_lo and s_hi, scaled by the homothety ``r``."""
    fp: FamilyParams
    s_lo: float
    s_hi: float
    r: float = 1.0
    reverse: bool = False

    def endpoints(self, tol=DEFAULT_TOL):
        a = sample_at(self.fp, self.s_lo, lambda_of_s(self.fp, self.s_lo, tol))
        b = sample_at(self.fp, self.s_hi, lambda_of_s(self.fp, self.s_hi, tol))
        pa, pb = (self.r * a.x, self.r * a.z), (self.r * b.x, self.r * b.z)
        return (pb, pa) if self.reverse else (pa, pb)

    def scaled(self, k):
        return replace(self, r=self.r * k)


@dataclass(frozen=True)
class CapArc:
    """Horizontal segment at height c from x_from to x_to (part of a horosphere)."""
    c: float
    x_from: float
    x_to: float

    def endpoints(self, tol=DEFAULT_TOL):
        return (self.x_from, self.c), (self.x_to, self.c)

    def scaled(self, k):
        return CapArc(k * self.c, k * self.x_from, k * self.x_to)


@dataclass(frozen=True)
class AxisArc:
    z_from: float
    z_to: float

    def endpoints(self, tol=DEFAULT_TOL):
        return (0.0, self.z_from), (0.0, self.z_to)

    def scaled(self, k):
        return AxisArc(k * self.z_from, k * self.z_to)


@dataclass(frozen=True)
class CircleArc:
    """Arc (R cos t, zc + R sin t) for t from t_from to t_to; centre on the axis."""
    zc: float
    radius: float
    t_from: float
    t_to: float

    def point(self, t):
        return self.radius * math.cos(t), self.zc + self.radius * math.sin(t)

    def endpoints(self, tol=DEFAULT_TOL):
        return self.point(self.t_from), self.point(self.t_to)

    def scaled(self, k):
        return CircleArc(k * self.zc, k * self.radius, self.t_from, self.t_to)


Arc = Union[ProfileArc, CapArc, AxisArc, CircleArc]


@dataclass(frozen=True)
class MeridianContour:
    arcs: tuple

    def scaled(self, k: float) -> "MeridianContour":
        return MeridianContour(tuple(a.scaled(k) for a in self.arcs))

    def check_closed(self, tol=DEFAULT_TOL):
        ends = [a.endpoints(tol) for a in self.arcs]
        for (_, end), (start, _) in zip(ends, ends[1:] + ends[:1]):
            scale = max(1.0, abs(end[0]), abs(end[1]))
            if math.hypot(end[0] - start[0], end[1] - start[1]) > CLOSURE_TOL * scale:
                raise ContourError(f"meridian contour is open: {end} does not meet {start}")


# ---------------------------------------------------------------------------
# area


def area_natural(fp: FamilyParams, s_lo: float, s_hi: float, tol: float = DEFAULT_TOL) -> float:
    """Area of the surface swept by the profile over [s_lo, s_hi]: 2 pi * integral of U ds."""
    if s_lo == s_hi:
        return 0.0
    return 2 * math.pi * integrate_adaptive(lambda s: math.sqrt(u_squared(fp, s)), s_lo, s_hi, tol)


def _profile_area_integrand(fp, s):
    # x |c'| / z^2 does not depend on lambda(s): set lambda = 0
    smp = sample_at(fp, s, 0.0)
    return smp.x * math.hypot(smp.dx_ds, smp.dz_ds) / smp.z ** 2


def area_cartesian(arc: Arc, tol: float = DEFAULT_TOL) -> float:
    """Hyperbolic area of the surface of revolution of one meridian arc.

    Computed as 2 pi * integral of x |dc| / z^2 in model coordinates.  Caps are
    horosphere pieces and are never part of a free-boundary area; their area is
    still returned here when asked for.
    """
    if isinstance(arc, ProfileArc):
        lo, hi = sorted((arc.s_lo, arc.s_hi))
        return 2 * math.pi * integrate_adaptive(lambda s: _profile_area_integrand(arc.fp, s),
                                                lo, hi, tol)
    if isinstance(arc, CapArc):
        return math.pi * abs(arc.x_to ** 2 - arc.x_from ** 2) / arc.c ** 2
    if isinstance(arc, AxisArc):
        return 0.0
    if isinstance(arc, CircleArc):
        R, zc = arc.radius, arc.zc
        lo, hi = sorted((arc.t_from, arc.t_to))
        f = lambda t: R * math.cos(t) * R / (zc + R * math.sin(t)) ** 2
        return 2 * math.pi * integrate_adaptive(f, lo, hi, tol)
    raise TypeError(f"unknown arc {arc!r}")


def free_area(contour: MeridianContour, tol: float = DEFAULT_TOL) -> float:
    """Area of the non-horosphere part of the boundary."""
    return sum(area_cartesian(a, tol) for a in contour.arcs
               if isinstance(a, (ProfileArc, CircleArc)))


# ---------------------------------------------------------------------------
# volume


def _profile_volume_integrand(fp, s):
    # x^2 z' / z^3 is also independent of lambda(s)
    smp = sample_at(fp, s, 0.0)
    return smp.x ** 2 * smp.dz_ds / smp.z ** 3


def _arc_volume(arc, tol):
    if isinstance(arc, ProfileArc):
        v = math.pi * integrate_adaptive(lambda s: _profile_volume_integrand(arc.fp, s),
                                         arc.s_lo, arc.s_hi, tol)
        return -v if arc.reverse else v
    if isinstance(arc, CircleArc):
        R, zc = arc.radius, arc.zc
        f = lambda t: (R * math.cos(t)) ** 2 * R * math.cos(t) / (zc + R * math.sin(t)) ** 3
        return math.pi * integrate_adaptive(f, arc.t_from, arc.t_to, tol)
    return 0.0


def volume_contour(contour: MeridianContour, tol: float = DEFAULT_TOL) -> float:
    """Hyperbolic volume enclosed by a counterclockwise meridian loop."""
    contour.check_closed(tol)
    v = sum(_arc_volume(a, tol) for a in contour.arcs)
    if v < -max(tol, 1e-12):
        raise ContourError(f"meridian contour is clockwise (signed volume {v:.6g})")
    return max(v, 0.0)


# ---------------------------------------------------------------------------
# standard contours


def tube_contour(fp: FamilyParams, s_lo: float, s_hi: float, r: float = 1.0,
                 tol: float = DEFAULT_TOL) -> MeridianContour:
    """Region between the axis and a profile arc whose ends are vertical tangencies."""
    arc = ProfileArc(fp, s_lo, s_hi, r)
    (x0, z0), (x1, z1) = arc.endpoints(tol)
    if not z1 > z0:
        arc = replace(arc, reverse=True)
        (x0, z0), (x1, z1) = (x1, z1), (x0, z0)
    return MeridianContour((arc, CapArc(z1, x1, 0.0), AxisArc(z1, z0), CapArc(z0, 0.0, x0)))


def dome_contour(center: float, radius: float, upper: bool) -> MeridianContour:
    """Half-ball of a Euclidean sphere centred on the horosphere z = center.

    ``upper=False`` is the half above the plane (dome resting on the lower horosphere),
    ``upper=True`` the half below it (hanging from the upper horosphere).
    """
    if upper:
        arc = CircleArc(center, radius, -math.pi / 2, 0.0)
        return MeridianContour((arc, CapArc(center, radius, 0.0), AxisArc(center, center - radius)))
    arc = CircleArc(center, radius, 0.0, math.pi / 2)
    return MeridianContour((CapArc(center, 0.0, radius), arc, AxisArc(center + radius, center)))


def sphere_contour(center: float, radius: float) -> MeridianContour:
    arc = CircleArc(center, radius, -math.pi / 2, math.pi / 2)
    return MeridianContour((arc, AxisArc(center + radius, center - radius)))


def geodesic_sphere_euclidean(center_height: float, rho: float) -> tuple[float, float]:
    """(Euclidean centre height, Euclidean radius) of the geodesic sphere of radius rho
    centred at (0, 0, center_height)."""
    return center_height * math.cosh(rho), center_height * math.sinh(rho)


# ---------------------------------------------------------------------------
# mean curvature


def _hyperbolic_h(x, z, dx, dz, ddx, ddz):
    """Mean curvature in the half-space metric of a surface of revolution.

    Uses the conformal change H_hyp = z H_euc + N_z, with N the left normal
    of the meridian direction and H_euc the Euclidean mean curvature along N.
    """
    v = math.hypot(dx, dz)
    k_meridian = (dx * ddz - dz * ddx) / v ** 3
    k_parallel = dz / (x * v)
    return z * 0.5 * (k_meridian + k_parallel) + dx / v


def _fd(points, h):
    (x0, z0), (x1, z1), (x2, z2) = points
    return (x1, z1, (x2 - x0) / (2 * h), (z2 - z0) / (2 * h),
            (x2 - 2 * x1 + x0) / h ** 2, (z2 - 2 * z1 + z0) / h ** 2)


def _profile_points(fp, s, h, tol):
    pts = []
    for t in (s - h, s, s + h):
        lam = lambda_between(fp, s, t, tol) if t != s else 0.0
        smp = sample_at(fp, t, lam)
        pts.append((smp.x, smp.z))
    return pts


def mean_curvature_fd(surface, t: float, h: float = 1e-4, tol: float = 1e-13,
                      richardson_tol: float = 1e-6) -> float:
    """Finite-difference mean curvature of a profile family or a circular dome at t.

    ``surface`` is a FamilyParams (t is the natural parameter s) or a CircleArc
    (t is the angle).  The orientation is chosen so that H >= 0.
    """
    if isinstance(surface, FamilyParams):
        pts = lambda step: _profile_points(surface, t, step, tol)
    elif isinstance(surface, CircleArc):
        pts = lambda step: [surface.point(t + d) for d in (-step, 0.0, step)]
    else:
        raise TypeError(f"cannot take the mean curvature of {surface!r}")

    def estimate(step):
        p = pts(step)
        if min(q[0] for q in p) <= 0:
            raise InvalidParameterError("sample too close to the rotation axis")
        return abs(_hyperbolic_h(*_fd(p, step)))

    h1, h2 = estimate(h), estimate(h / 2)
    if abs(h1 - h2) > richardson_tol * max(1.0, abs(h2)):
        raise StepTooLargeError(f"H({h}) = {h1} and H({h / 2}) = {h2} disagree")
    return h2
