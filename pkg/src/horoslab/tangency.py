"""Vertical tangencies of profile curves and family classification.

At a vertical tangency the meridian has tangent (0, b), so the surface of
revolution meets the horizontal horosphere through that point at a right
angle.  Away from the axis this forces U^2 = U'^2, which reduces to a
quadratic in s^2 (H = 1), cosh(2 alpha s) (H < 1) or sin(2 alpha s) (H > 1).
Half of those algebraic roots are spurious; they are removed by re-testing
the tangency condition itself.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NotATangencyError
from .profile import (DEFAULT_TOL, FamilyParams, Regime, lambda_of_s, sample_at, u_squared,
                      u_squared_ddot, u_squared_dot)

MERGE_TOL = 1e-9
TANGENCY_TOL = 1e-8
DIRECTION_TOL = 1e-6


class Direction(enum.Enum):
    UP = "up"
    DOWN = "down"


class FamilyKind(enum.Enum):
    CATENOID_COUSIN = "catenoid_cousin"
    UMBILICAL_H1 = "umbilical_h1"
    EQUIDISTANT_TYPE = "equidistant_type"
    UMBILICAL_SUB_ONE = "umbilical_sub_one"
    TOTALLY_GEODESIC = "totally_geodesic"
    ONDULOID_TYPE = "onduloid_type"
    UMBILICAL_SUPER_ONE = "umbilical_super_one"
    NODOID = "nodoid"
    OTHER_H1_POSITIVE = "other_h1_a_positive"
    OTHER_SUB_ONE_POSITIVE = "other_sub_one_a_positive"
    OTHER_SUPER_ONE_LOW = "other_super_one_a_below_onduloid"


@dataclass(frozen=True)
class TangencyPoint:
    s: float
    height: float
    x: float
    direction: Direction


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    reason: str = ""

    def __bool__(self):
        return self.admissible


def discriminant(fp: FamilyParams) -> float:
    """Discriminant of the quadratic whose roots locate U^2 = U'^2."""
    if fp.regime is Regime.EQUAL_ONE:
        return fp.k ** 6 * (4 * fp.a + 1)
    if fp.regime is Regime.SUB_ONE and fp.H == 0.0:
        return 1.0  # linear equation, always one root in cosh
    return 4 * fp.B ** 2 * (1 - fp.H ** 2) ** 2 * (1 + 4 * fp.a * fp.H)


def _merge(values):
    out = []
    for v in sorted(values):
        if out and abs(v - out[-1]) <= MERGE_TOL:
            continue
        out.append(v)
    return out


def _h1_roots(fp):
    a, k = fp.a, fp.k
    d = 1 + 4 * a
    if d < 0:
        return []
    sq = math.sqrt(d)
    s1 = (k + sq) / (2 * k)
    s3 = 2 * a * a / (k * (k + sq))  # (k - sq) / (2k) without cancellation
    if d == 0:
        return [-s1, s1]
    return [s1, -s1, s3, -s3]


def _half_angle_roots(fp, q):
    """Nonnegative roots of 4B^2H^2 v^2 + 4B q v + (A - B)^2 = 0.

    Substituting cosh(2 alpha s) = 1 + 2v (H < 1) or sin(2 alpha s) = 2v - 1
    (H > 1) turns the tangency quadratic into this form, whose small root
    carries the near-axis tangency and is computed without cancellation.
    """
    B, H = fp.B, fp.H
    c = (2 * fp.alpha ** 2 * fp.axis_offset) ** 2  # (A - B)^2, as |A - B| = 4 a^2 alpha^2 / (A + B)
    if H * H * B * B == 0.0:
        # H = 0 (or so small that the quadratic term underflows): linear equation
        return [c / (-4 * B * q)] if q < 0 else []
    disc = 1 + 4 * fp.a * H
    if disc < 0:
        return []
    root_d = 4 * B * fp.alpha ** 2 * math.sqrt(disc)
    b = 4 * B * q
    if b <= 0:
        big = (-b + root_d) / (8 * B * B * H * H)
        small = 2 * c / (-b + root_d) if (-b + root_d) > 0 else big
    else:
        small = (-b - root_d) / (8 * B * B * H * H)
        big = 2 * c / (-b - root_d) if (-b - root_d) != 0 else small
    return [v for v in (small, big) if v >= 0.0]


def _sub_roots(fp):
    al = fp.alpha
    out = []
    for u in _half_angle_roots(fp, fp.B * fp.H ** 2 - fp.A):
        s = math.asinh(math.sqrt(u)) / al
        out += [-s, s]
    return out


def _super_base_values(fp):
    """One representative s per root family of U^2 = U'^2, before adding k pi / alpha."""
    al = fp.alpha
    out = []
    for v in _half_angle_roots(fp, fp.A - fp.B * fp.H ** 2):
        if v > 1.0:
            if v - 1.0 > 1e-14:
                continue
            v = 1.0
        th = math.asin(math.sqrt(v))
        out += [(th - math.pi / 4) / al, (-th - math.pi / 4) / al]
    return out


def algebraic_roots(fp: FamilyParams, window: tuple[float, float] | None = None) -> list[float]:
    """Solutions of U(s)^2 = U'(s)^2 from the closed-form root formulas.

    For H <= 1 the full root set is finite and ``window`` only filters it.
    For H > 1 the roots repeat with period pi/alpha and ``window`` is required.
    Roots closer than 1e-9 are merged, so a double root is reported once.
    """
    if fp.regime is Regime.EQUAL_ONE:
        roots = _h1_roots(fp)
    elif fp.regime is Regime.SUB_ONE:
        roots = _sub_roots(fp)
    else:
        if window is None:
            raise ValueError("H > 1 root families are infinite; pass a window")
        lo, hi = window
        al = fp.alpha
        per = math.pi / al
        roots = []
        for base in _super_base_values(fp):
            k = math.floor((lo - base) / per) - 1
            while base + k * per <= hi + per:
                roots.append(base + k * per)
                k += 1
    if window is not None:
        lo, hi = window
        roots = [r for r in roots if lo <= r <= hi]
    if fp.regime is Regime.EQUAL_ONE:
        # the quartic can have a genuine double root at s = 0 (a = 0); keep both copies
        return sorted(roots)
    return _merge(roots)


def _polish(fp, s, steps=4):
    """Newton steps on 4 U^4 - (dU^2/ds)^2, whose zeros are the roots of U^2 = U'^2.

    The closed forms go through arccosh/arcsin of arguments near +-1 when a is
    small, which costs half the significant digits; a few Newton steps restore them.
    """
    def g(t):
        w, wd = u_squared(fp, t), u_squared_dot(fp, t)
        return 4 * w * w - wd * wd

    best, gbest = s, abs(g(s))
    for _ in range(steps):
        w, wd, wdd = u_squared(fp, s), u_squared_dot(fp, s), u_squared_ddot(fp, s)
        dg = 8 * w * wd - 2 * wd * wdd
        if dg == 0.0:
            break
        s = s - (4 * w * w - wd * wd) / dg
        gs = abs(g(s))
        if gs < gbest and abs(s - best) < 1e-4:
            best, gbest = s, gs
    return best


def tangency_residual(fp: FamilyParams, s: float) -> float:
    """tanh(rho) lambda' + sech^2(rho) rho' at s (independent of lambda(s) itself)."""
    return sample_at(fp, s, 0.0).dx_ds


def direction_of(fp: FamilyParams, s: float, tol: float = DEFAULT_TOL) -> Direction:
    """Sign of b = e^lambda sech(rho) (lambda' - tanh(rho) rho') at a vertical tangency."""
    smp = sample_at(fp, s, 0.0)
    if abs(smp.dx_ds) > DIRECTION_TOL or u_squared(fp, s) == 0.0:
        raise NotATangencyError(f"s = {s} is not a vertical tangency of {fp}")
    return Direction.UP if smp.dz_ds > 0 else Direction.DOWN


def default_window(fp: FamilyParams) -> tuple[float, float]:
    """A window holding every root for H <= 1, or one period plus margin for H > 1."""
    if fp.regime is Regime.SUPER_ONE:
        per = math.pi / fp.alpha
        return (-0.25 * per, 0.75 * per)
    roots = algebraic_roots(fp)
    m = max([abs(r) for r in roots] + [1.0])
    return (-m - 1.0, m + 1.0)


def tangency_parameters(fp: FamilyParams, window: tuple[float, float] | None = None
                        ) -> list[tuple[float, Direction]]:
    """(s, direction) of every genuine vertical tangency in ``window``.

    The direction is the sign of dz/ds, which does not depend on lambda(s),
    so no quadrature is needed here.
    """
    if window is None:
        window = default_window(fp)
    out = []
    for s in _merge(algebraic_roots(fp, window)):
        s = _polish(fp, s)
        if u_squared(fp, s) <= 0.0:
            continue
        smp = sample_at(fp, s, 0.0)
        if abs(smp.dx_ds) <= TANGENCY_TOL:
            out.append((s, Direction.UP if smp.dz_ds > 0 else Direction.DOWN))
    return out


def admissible_tangencies(fp: FamilyParams, window: tuple[float, float] | None = None,
                          tol: float = DEFAULT_TOL) -> list[TangencyPoint]:
    """Algebraic roots that are genuine vertical tangencies, sorted by s, with their heights."""
    out = []
    for s, direction in tangency_parameters(fp, window):
        smp = sample_at(fp, s, lambda_of_s(fp, s, tol))
        out.append(TangencyPoint(s=s, height=smp.z, x=smp.x, direction=direction))
    return out


def classify_family(fp: FamilyParams) -> FamilyKind:
    H, a = fp.H, fp.a
    if fp.regime is Regime.EQUAL_ONE:
        if a < 0:
            return FamilyKind.CATENOID_COUSIN
        if a == 0:
            return FamilyKind.UMBILICAL_H1
        return FamilyKind.OTHER_H1_POSITIVE
    if fp.regime is Regime.SUB_ONE:
        if a == 0:
            return FamilyKind.TOTALLY_GEODESIC if H == 0 else FamilyKind.UMBILICAL_SUB_ONE
        if a < 0:
            return FamilyKind.EQUIDISTANT_TYPE
        return FamilyKind.OTHER_SUB_ONE_POSITIVE
    if a == 0:
        return FamilyKind.UMBILICAL_SUPER_ONE
    if a > 0:
        return FamilyKind.NODOID
    if a > -1 / (4 * H):
        return FamilyKind.ONDULOID_TYPE
    return FamilyKind.OTHER_SUPER_ONE_LOW


def tube_tangencies(fp: FamilyParams, tol: float = DEFAULT_TOL):
    """The (lower, upper) pair of Up tangencies bounding a tube, or None.

    For H > 1 the pair is taken from consecutive tangencies within one period.
    """
    pts = admissible_tangencies(fp, tol=tol)
    if fp.regime is Regime.SUPER_ONE:
        per = math.pi / fp.alpha
        pts = [p for p in pts if -0.25 * per <= p.s < 0.75 * per]
    ups = [p for p in pts if p.direction is Direction.UP]
    if len(ups) != 2 or len(pts) != 2:
        return None
    lo, hi = sorted(ups, key=lambda p: p.height)
    return lo, hi


def slab_admissibility(fp: FamilyParams, tol: float = DEFAULT_TOL) -> Admissibility:
    """Whether the family can bound a tube meeting both horospheres at right angles."""
    kind = classify_family(fp)
    if kind is FamilyKind.NODOID:
        return Admissibility(False, "nodoid-not-embedded")
    if fp.regime is Regime.SUB_ONE and fp.H == 0.0:
        return Admissibility(False, "minimal-surface-unsuitable")
    pts = admissible_tangencies(fp, tol=tol)
    if fp.regime is Regime.SUPER_ONE:
        per = math.pi / fp.alpha
        pts = [p for p in pts if -0.25 * per <= p.s < 0.75 * per]
    if not pts:
        return Admissibility(False, "no-tangency")
    dirs = {p.direction for p in pts}
    if len(dirs) > 1:
        return Admissibility(False, "mixed-directions")
    if len(pts) == 1:
        return Admissibility(False, "single-tangency")
    if len(pts) > 2:
        return Admissibility(False, "too-many-tangencies")
    if dirs != {Direction.UP}:
        return Admissibility(False, "downward-tangencies")
    return Admissibility(True)
