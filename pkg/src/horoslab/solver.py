"""Candidate regions in a horosphere slab and the minimal-area selection.

Candidates are restricted to regions of revolution: tubes bounded by a
rotational CMC arc that meets both horospheres at right angles, umbilical
domes resting on one horosphere, and geodesic balls floating inside the slab.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial

from scipy import optimize

from .errors import InvalidParameterError, NoCandidateError
from .geometry import SlabSpec
from .measure import (dome_contour, free_area, geodesic_sphere_euclidean, sphere_contour,
                      tube_contour, volume_contour)
from .profile import (DEFAULT_TOL, FamilyParams, Regime, lambda_between, period, sample_at,
                      super_one_a_min, u_squared)
from .tangency import (Direction, FamilyKind, classify_family, slab_admissibility,
                       tangency_parameters)

N_SCAN = 512
KIND_ORDER = {"tube": 0, "dome": 1, "sphere": 2}
THEOREM_KINDS = frozenset({
    FamilyKind.CATENOID_COUSIN, FamilyKind.EQUIDISTANT_TYPE, FamilyKind.ONDULOID_TYPE,
    FamilyKind.UMBILICAL_H1, FamilyKind.UMBILICAL_SUB_ONE, FamilyKind.UMBILICAL_SUPER_ONE,
})
ASSUMPTIONS = ("candidates restricted to connected regions of revolution about a vertical axis",)


@dataclass(frozen=True)
class Candidate:
    kind: str                      # "tube" | "dome" | "sphere"
    family: FamilyKind
    H: float
    free_area: float
    volume: float
    r: float = 1.0                 # homothety factor
    regime: Regime | None = None
    a: float | None = None
    branch: str | None = None      # tube branch ("single", "narrowing", "widening")
    s_range: tuple | None = None   # tube: natural parameters of the two tangencies
    side: str | None = None        # dome: "lower" | "upper"
    radius: float | None = None    # Euclidean radius of a dome or sphere
    center: float | None = None    # Euclidean centre height of a dome or sphere
    rho: float | None = None       # hyperbolic radius of a floating sphere
    heights: tuple | None = None   # lowest and highest model heights reached

    def to_dict(self) -> dict:
        d = asdict(self)
        d["family"] = self.family.value
        d["regime"] = self.regime.value if self.regime else None
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in d.items()}

    @property
    def label(self) -> str:
        """Short family label used to group candidates in charts and tables."""
        if self.kind == "tube":
            return f"tube:{self.family.value}:{self.branch}"
        if self.kind == "dome":
            return f"dome:{self.side}"
        return "sphere"

    def sort_key(self):
        return (KIND_ORDER[self.kind], self.H)


@dataclass
class IsoPoint:
    volume: float
    min_area: float
    winner: Candidate
    runners_up: list = field(default_factory=list)
    hits: list = field(default_factory=list)   # every family matched to this volume


# ---------------------------------------------------------------------------
# tubes


def tube_a_interval(regime: Regime, H: float) -> tuple[float, float] | None:
    """Range of a producing two Up tangencies, or None when the regime has no tubes."""
    if regime is Regime.EQUAL_ONE:
        return (-0.25, 0.0)
    if H == 0.0:
        return None
    lo = -1.0 / (4.0 * H)
    if regime is Regime.SUPER_ONE:
        lo = max(lo, super_one_a_min(H))
    return (lo, 0.0)


def branches(regime: Regime) -> tuple[str, ...]:
    return ("narrowing", "widening") if regime is Regime.SUPER_ONE else ("single",)


def tube_pair(fp: FamilyParams, branch: str, tol: float = DEFAULT_TOL):
    """(s_lo, s_hi, z_hi / z_lo) for the tube of ``fp`` on ``branch``, or None."""
    if fp.regime is Regime.SUPER_ONE:
        per = period(fp)
        pts = tangency_parameters(fp, (-0.25 * per, 0.75 * per))
        pts = [p for p in pts if p[0] < 0.75 * per]
    else:
        pts = tangency_parameters(fp)
    if len(pts) != 2 or any(d is not Direction.UP for _, d in pts):
        return None
    t0, t1 = sorted(s for s, _ in pts)
    if fp.regime is not Regime.SUPER_ONE:
        if branch != "single":
            return None
        return _pair_with_ratio(fp, t0, t1, tol)
    for lo, hi in ((t0, t1), (t1, t0 + per)):
        res = _pair_with_ratio(fp, lo, hi, tol)
        x_lo, x_hi = res[3]
        label = "narrowing" if x_hi < x_lo else "widening"
        if label == branch:
            return res[:3]
    return None


def _pair_with_ratio(fp, lo, hi, tol):
    dlam = lambda_between(fp, lo, hi, tol)
    w_lo, w_hi = u_squared(fp, lo), u_squared(fp, hi)
    ratio = math.exp(dlam) * math.sqrt((1 + w_lo) / (1 + w_hi))
    xs = (math.sqrt(w_lo / (1 + w_lo)), math.exp(dlam) * math.sqrt(w_hi / (1 + w_hi)))
    return lo, hi, ratio, xs


def _ratio_fn(regime, H, branch, tol):
    def f(a):
        try:
            res = tube_pair(FamilyParams(regime, H, a), branch, tol)
        except InvalidParameterError:
            return None
        return None if res is None else res[2]
    return f


def _make_tube(regime, H, a, branch, slab, tol):
    fp = FamilyParams(regime, H, a)
    if not slab_admissibility(fp, tol):
        return None
    res = tube_pair(fp, branch, tol)
    if res is None:
        return None
    s_lo, s_hi = res[0], res[1]
    z_lo = sample_at(fp, s_lo, lambda_between(fp, 0.0, s_lo, tol)).z
    r = slab.c1 / z_lo
    contour = tube_contour(fp, s_lo, s_hi, r, tol)
    heights = (contour.arcs[3].c, contour.arcs[1].c)
    return Candidate(kind="tube", family=classify_family(fp), H=H, regime=regime, a=a,
                     branch=branch, s_range=(s_lo, s_hi), r=r,
                     free_area=free_area(contour, tol), volume=volume_contour(contour, tol),
                     heights=heights)


def tube_for_slab(regime: Regime | str, H: float, slab: SlabSpec, tol: float = DEFAULT_TOL,
                  n_scan: int = N_SCAN) -> list[Candidate]:
    """All tubes of mean curvature H whose tangency heights match the slab.

    Scans a over the open tube interval, refines every sign change of
    z_hi/z_lo - c2/c1 and rescales each solution so that it spans [c1, c2].
    The candidate's ``r`` maps the profile as normalised by lambda(0) = 0 onto
    the slab.
    """
    regime = Regime(regime)
    interval = tube_a_interval(regime, H)
    if interval is None:
        return []
    lo, hi = interval
    target = slab.ratio
    out = []
    for branch in branches(regime):
        f = _ratio_fn(regime, H, branch, tol)
        grid = [lo + (hi - lo) * (i + 0.5) / n_scan for i in range(n_scan)]
        vals = [f(a) for a in grid]
        for a0, a1, v0, v1 in zip(grid, grid[1:], vals, vals[1:]):
            if v0 is None or v1 is None:
                continue
            g0, g1 = v0 - target, v1 - target
            if g0 == 0.0:
                root = a0
            elif g0 * g1 < 0:
                root = optimize.brentq(lambda a: f(a) - target, a0, a1, xtol=1e-15, rtol=1e-15)
            else:
                continue
            cand = _make_tube(regime, H, root, branch, slab, tol)
            if cand is not None:
                out.append(cand)
    return out


def normalized_a(H: float, a: float) -> float:
    """-4 H a, which maps every tube interval into (0, 1]."""
    return -4.0 * H * a


def _tube_root_near(regime, H, branch, slab, a_guess, tol, width=1e-2):
    """Tube root for H closest to a_guess: local bracket first, then a full scan."""
    lo, hi = tube_a_interval(regime, H)
    f = _ratio_fn(regime, H, branch, tol)
    target = slab.ratio
    step = width * (hi - lo)
    g0 = f(a_guess) if lo < a_guess < hi else None
    if g0 is not None:
        g0 -= target
        if g0 == 0.0:
            return _make_tube(regime, H, a_guess, branch, slab, tol)
        for k in range(1, 8):
            for sgn in (1, -1):
                b = a_guess + sgn * step * k
                if not lo < b < hi:
                    continue
                gb = f(b)
                if gb is None or (gb - target) * g0 >= 0:
                    continue
                a0, a1 = sorted((a_guess, b))
                root = optimize.brentq(lambda a: f(a) - target, a0, a1, xtol=1e-15, rtol=1e-15)
                cand = _make_tube(regime, H, root, branch, slab, tol)
                if cand is not None:
                    return cand
    cands = [c for c in tube_for_slab(regime, H, slab, tol) if c.branch == branch]
    if not cands:
        return None
    t = normalized_a(H, a_guess)
    return min(cands, key=lambda c: abs(normalized_a(c.H, c.a) - t))


# ---------------------------------------------------------------------------
# umbilical candidates


def dome_kind(center: float, radius: float) -> FamilyKind:
    """Umbilical type of a Euclidean sphere: H = center / radius."""
    if math.isclose(radius, center, rel_tol=1e-12):
        return FamilyKind.UMBILICAL_H1
    return FamilyKind.UMBILICAL_SUPER_ONE if radius < center else FamilyKind.UMBILICAL_SUB_ONE


def make_dome(slab: SlabSpec, side: str, radius: float, tol: float = DEFAULT_TOL) -> Candidate:
    if side not in ("lower", "upper"):
        raise InvalidParameterError(f"dome side must be lower or upper, got {side!r}")
    if not 0 < radius <= slab.c2 - slab.c1 * (1 - 1e-15):
        raise InvalidParameterError(f"dome radius {radius} does not fit in the slab")
    c = slab.c1 if side == "lower" else slab.c2
    contour = dome_contour(c, radius, upper=(side == "upper"))
    heights = (c, c + radius) if side == "lower" else (c - radius, c)
    return Candidate(kind="dome", family=dome_kind(c, radius), H=c / radius, side=side,
                     radius=radius, center=c, free_area=free_area(contour, tol),
                     volume=volume_contour(contour, tol), heights=heights)


def dome_candidates(slab: SlabSpec, n_grid: int = 256, tol: float = DEFAULT_TOL) -> list[Candidate]:
    """Half-balls resting on either horosphere, radii up to the slab height."""
    if n_grid < 1:
        raise InvalidParameterError("n_grid must be >= 1")
    return [make_dome(slab, side, R, tol) for side in ("lower", "upper")
            for R in _dome_grid(slab, n_grid)]


def make_sphere(slab: SlabSpec, rho: float, tol: float = DEFAULT_TOL) -> Candidate:
    if not 0 < rho < slab.width / 2:
        raise InvalidParameterError(f"geodesic ball of radius {rho} does not fit strictly inside")
    zc, R = geodesic_sphere_euclidean(math.sqrt(slab.c1 * slab.c2), rho)
    contour = sphere_contour(zc, R)
    return Candidate(kind="sphere", family=FamilyKind.UMBILICAL_SUPER_ONE, H=1 / math.tanh(rho),
                     rho=rho, radius=R, center=zc, free_area=free_area(contour, tol),
                     volume=volume_contour(contour, tol), heights=(zc - R, zc + R))


def floating_spheres(slab: SlabSpec, n_grid: int = 256, tol: float = DEFAULT_TOL) -> list[Candidate]:
    """Geodesic balls centred on the middle horosphere, not touching either boundary."""
    if n_grid < 1:
        raise InvalidParameterError("n_grid must be >= 1")
    return [make_sphere(slab, rho, tol) for rho in _sphere_grid(slab, n_grid)]


# ---------------------------------------------------------------------------
# sweep


def default_h_grid(n: int = 64) -> dict[Regime, list[float]]:
    """n values per regime, log-spaced toward the regime boundaries.

    H < 1 is logit-spaced in (0.03, 0.999); H > 1 has H - 1 log-spaced in (1e-3, 10).
    """
    if n < 2:
        raise InvalidParameterError("h grid needs n >= 2")
    ys = [-1.5 + 4.5 * i / (n - 1) for i in range(n)]
    sub = sorted({1 / (1 + 10 ** -y) for y in ys})
    sup = sorted({1 + 10 ** (1.0 - 4.0 * i / (n - 1)) for i in range(n)})
    return {Regime.SUB_ONE: sub, Regime.EQUAL_ONE: [1.0], Regime.SUPER_ONE: sup}


def _regime_for(H):
    return Regime.EQUAL_ONE if H == 1.0 else (Regime.SUB_ONE if H < 1 else Regime.SUPER_ONE)


def _solve_h(slab, tol, H):
    return tube_for_slab(_regime_for(H), H, slab, tol)


PAIR_GAP = 0.15


def _compatible(c, d):
    # the h1 tube continues into the narrowing onduloid branch across H = 1
    return c.branch == d.branch or c.regime is not d.regime


def tube_segments(slab: SlabSpec, h_values, tol: float = DEFAULT_TOL, threads: int | None = None):
    """Tube solutions on the H grid, plus pairs of neighbours lying on one continuous track.

    Neighbours are matched when they are mutually nearest in normalised a.
    Results do not depend on ``threads``.
    """
    h_values = sorted(h_values)
    job = partial(_solve_h, slab, tol)
    if threads and threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            solved = list(ex.map(job, h_values))
    else:
        solved = [job(H) for H in h_values]
    segments = []
    for cs, ds in zip(solved, solved[1:]):
        def nearest(c, pool):
            ok = [d for d in pool if _compatible(c, d)]
            if not ok:
                return None
            return min(ok, key=lambda d: abs(normalized_a(d.H, d.a) - normalized_a(c.H, c.a)))
        for c in cs:
            d = nearest(c, ds)
            if d is None or nearest(d, cs) is not c:
                continue
            if abs(normalized_a(c.H, c.a) - normalized_a(d.H, d.a)) <= PAIR_GAP:
                segments.append((c, d))
    return [c for cs in solved for c in cs], segments


def _invert_on_grid(make, params, cands, target, tol):
    """Every solution of make(p).volume = target bracketed by neighbouring grid entries."""
    out = []
    for p0, p1, c0, c1 in zip(params, params[1:], cands, cands[1:]):
        if not (min(c0.volume, c1.volume) <= target <= max(c0.volume, c1.volume)):
            continue
        g = lambda p: make(p).volume - target
        if g(p0) == 0.0:
            out.append(c0)
            continue
        if g(p1) == 0.0:
            continue   # picked up by the next segment or returned below
        p = optimize.brentq(g, p0, p1, xtol=1e-15, rtol=1e-15, maxiter=200)
        out.append(make(p))
    if cands and cands[-1].volume == target:
        out.append(cands[-1])
    return out


def _dome_grid(slab, n):
    r_max = slab.c2 - slab.c1
    return [r_max * i / n for i in range(1, n + 1)]


def _sphere_grid(slab, n):
    rho_max = slab.width / 2
    return [rho_max * i / (n + 1) for i in range(1, n + 1)]


def _umbilical_grids(slab, tol, n_dome, n_sphere):
    """(make, params, candidates) per umbilical family, shared by every target volume."""
    grids = []
    # a tiny first parameter keeps very small target volumes inside the grid
    radii = [1e-6 * (slab.c2 - slab.c1)] + _dome_grid(slab, n_dome)
    for side in ("lower", "upper"):
        make = partial(make_dome, slab, side, tol=tol)
        grids.append((make, radii, [make(R) for R in radii]))
    rhos = [1e-6 * slab.width] + _sphere_grid(slab, n_sphere)
    make = partial(make_sphere, slab, tol=tol)
    grids.append((make, rhos, [make(r) for r in rhos]))
    return grids


def _family_hits(slab, V, segments, grids, tol):
    hits = []
    for make, params, cands in grids:
        hits += _invert_on_grid(make, params, cands, V, tol)
    for c0, c1 in segments:
        if min(c0.volume, c1.volume) <= V <= max(c0.volume, c1.volume):
            c = _invert_tube(slab, c0, c1, V, tol)
            if c is not None:
                hits.append(c)
    return hits


def _invert_tube(slab, c0, c1, V, tol):
    """Bisect in H between two neighbouring solutions of one tube track."""
    lo, hi = (c0, c1) if c0.volume <= c1.volume else (c1, c0)
    for _ in range(200):
        for c in (lo, hi):
            if abs(c.volume - V) <= tol * max(1.0, V):
                return c
        Hm = 0.5 * (lo.H + hi.H)
        if abs(Hm - 1.0) < 1e-8 or Hm in (lo.H, hi.H):
            return None
        regime = _regime_for(Hm)
        branch = lo.branch if lo.regime is regime else hi.branch
        w = (Hm - lo.H) / (hi.H - lo.H)
        t = (1 - w) * normalized_a(lo.H, lo.a) + w * normalized_a(hi.H, hi.a)
        mid = _tube_root_near(regime, Hm, branch, slab, -t / (4 * Hm), tol)
        if mid is None:
            return None
        if mid.volume < V:
            lo = mid
        else:
            hi = mid
    return None


def sweep_profiles(slab: SlabSpec, h_grid=None, v_grid=(), tol: float = 1e-8,
                   n_dome: int = 256, n_sphere: int = 256, threads: int | None = None,
                   runner_up_frac: float = 0.05) -> list[IsoPoint]:
    """Minimal free-boundary area among all candidate families, per target volume.

    ``h_grid`` is either a flat list of H values or a mapping regime -> values.
    The dome and sphere grids only serve as coarse enumerations; every family
    is matched to a target volume exactly by inverting its volume map.
    """
    if not v_grid:
        raise InvalidParameterError("v_grid must be nonempty")
    if any(v <= 0 for v in v_grid):
        raise InvalidParameterError("volumes must be positive")
    if h_grid is None:
        h_grid = default_h_grid()
    if isinstance(h_grid, dict):
        h_values = sorted({h for vals in h_grid.values() for h in vals})
    else:
        h_values = sorted(set(h_grid))
    if not h_values:
        raise InvalidParameterError("h_grid must be nonempty")
    _, segments = tube_segments(slab, h_values, tol, threads)
    grids = _umbilical_grids(slab, tol, n_dome, n_sphere)
    points = []
    for V in v_grid:
        hits = _family_hits(slab, V, segments, grids, tol)
        if not hits:
            raise NoCandidateError(f"no candidate family reaches volume {V}")
        hits.sort(key=lambda c: (c.free_area, c.sort_key()))
        best = hits[0]
        runners = [c for c in hits[1:] if c.free_area <= best.free_area * (1 + runner_up_frac)]
        points.append(IsoPoint(volume=V, min_area=best.free_area, winner=best, runners_up=runners,
                              hits=hits))
    return points


def solve(slab: SlabSpec, volume: float, **kw) -> IsoPoint:
    """Best candidate for a single volume."""
    return sweep_profiles(slab, v_grid=[volume], **kw)[0]
