"""Profile curves of rotational CMC surfaces in the half-space model.

A rotational H-surface is generated by a curve in cylindrical coordinates
(rho(s), lambda(s)) where s is hyperbolic arc length along the meridian and
U(s) = sinh(rho(s)).  The function w = U^2 solves

    w'^2 / 4 = (1 - H^2) w^2 + (1 + 2 a H) w - a^2

with closed-form solutions in the three regimes H = 1, 0 <= H < 1 and H > 1.
The meridian in the model plane y = 0 is e^lambda (tanh rho, sech rho).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DegenerateAxisError, InvalidParameterError
from .quadrature import DEFAULT_TOL, integrate_adaptive

NEAR_ONE = 1e-9


class Regime(enum.Enum):
    EQUAL_ONE = "h1"
    SUB_ONE = "sub"
    SUPER_ONE = "super"


@dataclass(frozen=True)
class FamilyParams:
    """Regime, mean curvature H and integration constant a of a rotational family."""
    regime: Regime
    H: float
    a: float

    def __post_init__(self):
        H, a = self.H, self.a
        if self.regime is Regime.EQUAL_ONE:
            if H != 1.0:
                raise InvalidParameterError(f"regime h1 requires H = 1, got {H}")
            if not a > -0.5:
                raise InvalidParameterError(f"H = 1 requires a > -1/2, got {a}")
        elif self.regime is Regime.SUB_ONE:
            if not 0.0 <= H < 1.0 or abs(H - 1.0) < NEAR_ONE:
                raise InvalidParameterError(f"regime sub requires 0 <= H < 1, got {H}")
        elif self.regime is Regime.SUPER_ONE:
            if not H > 1.0 or abs(H - 1.0) < NEAR_ONE:
                raise InvalidParameterError(f"regime super requires H > 1, got {H}")
            if not a > super_one_a_min(H):
                raise InvalidParameterError(
                    f"H = {H} requires a > {super_one_a_min(H)!r} (B > 0), got {a}")
        else:
            raise InvalidParameterError(f"unknown regime {self.regime!r}")
        if not (math.isfinite(H) and math.isfinite(a)):
            raise InvalidParameterError("H and a must be finite")

    @cached_property
    def A(self) -> float:
        return 1.0 + 2.0 * self.a * self.H

    @cached_property
    def B(self) -> float:
        return math.sqrt(1.0 + 4.0 * self.a * self.H + 4.0 * self.a ** 2)

    @cached_property
    def B_minus_one(self) -> float:
        """B - 1 without cancellation for small a."""
        return 4.0 * self.a * (self.H + self.a) / (self.B + 1.0)

    @cached_property
    def alpha(self) -> float:
        return math.sqrt(abs(1.0 - self.H ** 2))

    @cached_property
    def k(self) -> float:
        """1 + 2a, the scale constant of the H = 1 family."""
        return 1.0 + 2.0 * self.a

    @cached_property
    def axis_offset(self) -> float:
        """2a^2/(A+B): the constant part of U^2 written without cancellation."""
        if self.a == 0.0:
            return 0.0
        return 2.0 * self.a ** 2 / (self.A + self.B)


def super_one_a_min(H: float) -> float:
    """Smallest a for H > 1; B vanishes there and the value itself is excluded."""
    return (-H + math.sqrt(H * H - 1.0)) / 2.0


def family(H: float, a: float, regime: Regime | str | None = None) -> FamilyParams:
    """Build FamilyParams, inferring the regime from H when it is not given.

    Inference refuses H within 1e-9 of 1 unless H == 1 exactly.
    """
    if regime is not None:
        return FamilyParams(Regime(regime), float(H), float(a))
    if H == 1.0:
        return FamilyParams(Regime.EQUAL_ONE, 1.0, float(a))
    if abs(H - 1.0) < NEAR_ONE:
        raise InvalidParameterError(f"H = {H!r} is too close to 1; pass the regime explicitly")
    return FamilyParams(Regime.SUB_ONE if H < 1 else Regime.SUPER_ONE, float(H), float(a))


# ---------------------------------------------------------------------------
# closed forms


def u_squared(fp: FamilyParams, s: float) -> float:
    """U(s)^2 = sinh^2 rho(s)."""
    if fp.regime is Regime.EQUAL_ONE:
        k = fp.k
        return (fp.a ** 2 + (k * s) ** 2) / k
    al = fp.alpha
    if fp.regime is Regime.SUB_ONE:
        # (-A + B cosh 2 al s) / (2 al^2) with cosh - 1 = 2 sinh^2
        return fp.axis_offset + fp.B * math.sinh(al * s) ** 2 / al ** 2
    # (A + B sin 2 al s) / (2 al^2) with 1 + sin x = 2 sin^2(x/2 + pi/4)
    return fp.axis_offset + fp.B * math.sin(al * s + math.pi / 4) ** 2 / al ** 2


def u_squared_dot(fp: FamilyParams, s: float) -> float:
    """d(U^2)/ds."""
    if fp.regime is Regime.EQUAL_ONE:
        return 2.0 * fp.k * s
    al = fp.alpha
    if fp.regime is Regime.SUB_ONE:
        return fp.B * math.sinh(2 * al * s) / al
    return fp.B * math.cos(2 * al * s) / al


def u_squared_ddot(fp: FamilyParams, s: float) -> float:
    """d^2(U^2)/ds^2."""
    if fp.regime is Regime.EQUAL_ONE:
        return 2.0 * fp.k
    al = fp.alpha
    if fp.regime is Regime.SUB_ONE:
        return 2.0 * fp.B * math.cosh(2 * al * s)
    return -2.0 * fp.B * math.sin(2 * al * s)


def _u_dot_sq(fp: FamilyParams, s: float) -> float:
    w = u_squared(fp, s)
    if w == 0.0:
        # profile crosses the axis (a = 0); every regime has limit 1 there
        return 1.0
    wd = u_squared_dot(fp, s)
    return wd * wd / (4.0 * w)


def u_dot_squared(fp: FamilyParams, s: float) -> float:
    """(dU/ds)^2; undefined where the profile meets the axis."""
    if u_squared(fp, s) == 0.0:
        raise DegenerateAxisError(f"U(s) = 0 at s = {s} for {fp}")
    return _u_dot_sq(fp, s)


def u_dot(fp: FamilyParams, s: float) -> float:
    """Signed dU/ds; the sign follows d(U^2)/ds, with +1 taken at axis crossings."""
    mag = math.sqrt(_u_dot_sq(fp, s))
    return -mag if u_squared_dot(fp, s) < 0 else mag


def lambda_dot(fp: FamilyParams, s: float) -> float:
    """Integrand of lambda(s); removable 0/0 points (a = 0 on the axis) return their limit 0.

    Written as (q / r) (sqrt(m) / r) with r = hypot(q, d), which avoids squaring
    the hyperbolic functions and so keeps far-out samples finite.
    """
    H, a = fp.H, fp.a
    if fp.regime is Regime.EQUAL_ONE:
        k = fp.k
        p = -a * (1 + a) + (k * s) ** 2
        r = math.hypot(p, k * k * s)
        if r == 0.0:
            return 0.0
        return math.sqrt(k) * (p / r) * (math.hypot(a, k * s) / r)
    al, B = fp.alpha, fp.B
    m = 2 * al * al * u_squared(fp, s)  # = -A + B cosh(2 al s) or A + B sin(2 al s)
    if fp.regime is Regime.SUB_ONE:
        # H(-1 + B cosh 2 al s) = H (B - 1) + 2 H B sinh^2(al s)
        q = -2 * a + H * fp.B_minus_one + 2 * H * B * math.sinh(al * s) ** 2
        r = math.hypot(q, al * B * math.sinh(2 * al * s))
    else:
        # H(1 + B sin 2 al s) = -H (B - 1) + 2 H B sin^2(al s + pi/4)
        q = 2 * a - H * fp.B_minus_one + 2 * H * B * math.sin(al * s + math.pi / 4) ** 2
        r = math.hypot(q, al * B * math.cos(2 * al * s))
    if r == 0.0:
        return 0.0
    return math.sqrt(2.0) * al * (q / r) * (math.sqrt(m) / r)


def rho_dot(fp: FamilyParams, s: float) -> float:
    return u_dot(fp, s) / math.sqrt(1.0 + u_squared(fp, s))


def ode_residual(fp: FamilyParams, s: float) -> float:
    """|w'^2/4 - ((1-H^2) w^2 + (1+2aH) w - a^2)| for w = U^2."""
    w = u_squared(fp, s)
    wd = u_squared_dot(fp, s)
    H, a = fp.H, fp.a
    return abs(wd * wd / 4.0 - ((1 - H * H) * w * w + (1 + 2 * a * H) * w - a * a))


def metric_identity_residual(fp: FamilyParams, s: float) -> float:
    """|lambda'^2 (1+U^2)^2 - (1 + U^2 - U'^2)|."""
    w = u_squared(fp, s)
    ld = lambda_dot(fp, s)
    return abs(ld * ld * (1 + w) ** 2 - (1 + w - _u_dot_sq(fp, s)))


def period(fp: FamilyParams) -> float | None:
    if fp.regime is Regime.SUPER_ONE:
        return math.pi / fp.alpha
    return None


def kink_points(fp: FamilyParams, lo: float, hi: float) -> list[float]:
    """Axis crossings inside (lo, hi) where lambda_dot has a corner (only when a = 0)."""
    if fp.a != 0.0:
        return []
    if fp.regime is not Regime.SUPER_ONE:
        return [0.0] if lo < 0.0 < hi else []
    per = math.pi / fp.alpha
    first = -0.25 * per
    k0 = math.ceil((lo - first) / per)
    out = []
    s = first + k0 * per
    while s < hi:
        if s > lo:
            out.append(s)
        s += per
    return out


def lambda_between(fp: FamilyParams, s0: float, s1: float, tol: float = DEFAULT_TOL) -> float:
    """lambda(s1) - lambda(s0)."""
    lo, hi = min(s0, s1), max(s0, s1)
    return integrate_adaptive(lambda t: lambda_dot(fp, t), s0, s1, tol,
                              points=kink_points(fp, lo, hi))


def lambda_of_s(fp: FamilyParams, s: float, tol: float = DEFAULT_TOL) -> float:
    """lambda(s) = integral of lambda_dot from 0 to s."""
    return lambda_between(fp, 0.0, s, tol)


# ---------------------------------------------------------------------------
# sampled curve


@dataclass(frozen=True)
class ProfileSample:
    s: float
    rho: float
    lam: float
    x: float
    z: float
    dx_ds: float
    dz_ds: float

    @property
    def tangency_residual(self) -> float:
        """tanh(rho) lambda' + sech^2(rho) rho', which vanishes at vertical tangents."""
        return self.dx_ds * math.exp(-self.lam)


def sample_at(fp: FamilyParams, s: float, lam: float) -> ProfileSample:
    """Profile sample at ``s`` given an already computed lambda(s)."""
    w = u_squared(fp, s)
    c = math.sqrt(1.0 + w)
    th = math.sqrt(w) / c          # tanh rho
    sh = 1.0 / c                   # sech rho
    e = math.exp(lam)
    ld = lambda_dot(fp, s)
    rd = rho_dot(fp, s)
    return ProfileSample(
        s=s,
        rho=math.asinh(math.sqrt(w)),
        lam=lam,
        x=e * th,
        z=e * sh,
        dx_ds=e * (th * ld + sh * sh * rd),
        dz_ds=e * sh * (ld - th * rd),
    )


def profile_point(fp: FamilyParams, s: float, tol: float = DEFAULT_TOL) -> ProfileSample:
    return sample_at(fp, s, lambda_of_s(fp, s, tol))


def profile_polyline(fp: FamilyParams, s_min: float, s_max: float, n: int,
                     tol: float = DEFAULT_TOL) -> list[ProfileSample]:
    """``n`` samples uniform in s; lambda is accumulated segment by segment."""
    if n < 2:
        raise InvalidParameterError("polyline needs n >= 2")
    if not s_min < s_max:
        raise InvalidParameterError("polyline needs s_min < s_max")
    ss = [s_min + (s_max - s_min) * i / (n - 1) for i in range(n)]
    ss[-1] = s_max
    lam = lambda_of_s(fp, s_min, tol)
    out = [sample_at(fp, ss[0], lam)]
    for s0, s1 in zip(ss, ss[1:]):
        lam += lambda_between(fp, s0, s1, tol)
        out.append(sample_at(fp, s1, lam))
    return out
