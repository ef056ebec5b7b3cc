"""Upper half-space model of hyperbolic 3-space.

Points are (x, y, z) with z > 0 and metric (dx^2 + dy^2 + dz^2) / z^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError


@dataclass(frozen=True)
class HalfSpacePoint:
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not self.z > 0:
            raise InvalidParameterError(f"half-space point needs z > 0, got {self.z}")


@dataclass(frozen=True)
class CylCoords:
    """Hyperbolic cylindrical coordinates around the vertical geodesic through the origin.

    ``rho`` is the distance from the axis, ``theta`` the rotation angle and ``z``
    the signed arc length along the axis (z = 0 at model height 1).
    """
    rho: float
    theta: float
    z: float

    def __post_init__(self):
        if self.rho < 0:
            raise InvalidParameterError(f"rho must be >= 0, got {self.rho}")


@dataclass(frozen=True)
class SlabSpec:
    """Closed slab c1 <= z <= c2 between two horizontal horospheres."""
    c1: float
    c2: float

    def __post_init__(self):
        if not (0 < self.c1 < self.c2):
            raise InvalidParameterError(f"slab needs 0 < c1 < c2, got ({self.c1}, {self.c2})")

    @property
    def ratio(self) -> float:
        return self.c2 / self.c1

    @property
    def width(self) -> float:
        """Hyperbolic distance between the two horospheres."""
        return math.log(self.c2 / self.c1)

    def scaled(self, k: float) -> "SlabSpec":
        return SlabSpec(k * self.c1, k * self.c2)


def cyl_to_cartesian(c: CylCoords) -> HalfSpacePoint:
    scale = math.exp(c.z)
    t = math.tanh(c.rho)
    return HalfSpacePoint(scale * t * math.cos(c.theta),
                          scale * t * math.sin(c.theta),
                          scale / math.cosh(c.rho))


def apply_homothety(p: HalfSpacePoint, r: float) -> HalfSpacePoint:
    """Euclidean scaling by ``r`` about the origin (a hyperbolic translation along the z-axis)."""
    if not r > 0:
        raise InvalidParameterError(f"homothety factor must be > 0, got {r}")
    return HalfSpacePoint(r * p.x, r * p.y, r * p.z)


def translate_horizontal(p: HalfSpacePoint, dx: float, dy: float) -> HalfSpacePoint:
    return HalfSpacePoint(p.x + dx, p.y + dy, p.z)


def hyperbolic_distance(p: HalfSpacePoint, q: HalfSpacePoint) -> float:
    d2 = (p.x - q.x) ** 2 + (p.y - q.y) ** 2 + (p.z - q.z) ** 2
    # arccosh(1 + u) = log1p(u + sqrt(u (u + 2))) keeps accuracy for nearby points
    u = max(d2 / (2.0 * p.z * q.z), 0.0)
    return math.log1p(u + math.sqrt(u * (u + 2.0)))


def invert_through_unit_hemisphere(p: HalfSpacePoint) -> HalfSpacePoint:
    """Hyperbolic reflection in the totally geodesic unit hemisphere centred at the origin."""
    n2 = p.x * p.x + p.y * p.y + p.z * p.z
    return HalfSpacePoint(p.x / n2, p.y / n2, p.z / n2)
