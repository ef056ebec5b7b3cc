"""Command-line front end.

    horoslab profile --regime h1 --H 1 --a -0.2 --s-min -2 --s-max 2 --n 400 --format csv
    horoslab tangency --regime h1 --H 1 --a -0.25
    horoslab solve --c1 1 --c2 2 --volume 3.0

Exit codes: 0 success, 2 invalid parameters, 3 no candidate, 4 numerical failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from dataclasses import dataclass

import numpy as np

from .errors import ContourError, InvalidParameterError, NoCandidateError
from .geometry import SlabSpec
from .measure import (area_cartesian, area_natural, dome_contour, free_area,
                      geodesic_sphere_euclidean, mean_curvature_fd, sphere_contour,
                      tube_contour, volume_contour, ProfileArc)
from .output import PROFILE_COLUMNS, dump_json, sample_dict, sample_row, write_csv
from .profile import FamilyParams, Regime, family, period, profile_polyline
from .solver import ASSUMPTIONS, default_h_grid, sweep_profiles
from .svg import profile_svg, sweep_svg
from .tangency import (admissible_tangencies, algebraic_roots, classify_family,
                       default_window, slab_admissibility)

EXIT_OK, EXIT_INVALID, EXIT_NO_CANDIDATE, EXIT_NUMERIC = 0, 2, 3, 4

COMMANDS = ("profile", "tangency", "classify", "measure", "solve", "sweep", "plot")
FORMATS = {
    "profile": ("csv", "json", "svg"),
    "tangency": ("json", "csv"),
    "classify": ("json",),
    "measure": ("json",),
    "solve": ("json", "csv"),
    "sweep": ("json", "csv", "svg"),
    "plot": ("svg",),
}


@dataclass
class RunConfig:
    command: str
    regime: str | None = None
    H: float | None = None
    a: float | None = None
    s_min: float | None = None
    s_max: float | None = None
    n: int = 400
    c1: float | None = None
    c2: float | None = None
    volume: float | None = None
    v_min: float = 0.01
    v_max: float = 50.0
    n_v: int = 16
    n_h: int = 64
    rho: float | None = None
    radius: float | None = None
    center: float = 1.0
    format: str | None = None
    out: str | None = None
    tol: float = 1e-10
    threads: int | None = None

    def validate(self):
        if self.command not in COMMANDS:
            raise InvalidParameterError(f"unknown command {self.command!r}")
        if self.format is None:
            self.format = FORMATS[self.command][0]
        if self.format not in FORMATS[self.command]:
            raise InvalidParameterError(f"{self.command} cannot write {self.format}")
        if not self.tol > 0:
            raise InvalidParameterError("--tol must be positive")
        for name in ("n", "n_v", "n_h"):
            if getattr(self, name) < 2:
                raise InvalidParameterError(f"--{name.replace('_', '-')} must be >= 2")
        if self.threads is not None and self.threads < 1:
            raise InvalidParameterError("--threads must be >= 1")
        if (self.c1 is None) != (self.c2 is None):
            raise InvalidParameterError("--c1 and --c2 go together")
        if self.c1 is not None and not 0 < self.c1 < self.c2:
            raise InvalidParameterError("slab needs 0 < c1 < c2")
        return self

    def family(self) -> FamilyParams:
        if self.H is None or self.a is None:
            raise InvalidParameterError(f"{self.command} needs --H and --a")
        return family(self.H, self.a, self.regime)

    def slab(self) -> SlabSpec:
        if self.c1 is None:
            raise InvalidParameterError(f"{self.command} needs --c1 and --c2")
        return SlabSpec(self.c1, self.c2)


# ---------------------------------------------------------------------------
# commands


def _s_range(cfg, fp):
    if cfg.s_min is not None and cfg.s_max is not None:
        return cfg.s_min, cfg.s_max
    per = period(fp)
    lo, hi = (-0.5 * per, 1.5 * per) if per else (-2.0, 2.0)
    return (lo if cfg.s_min is None else cfg.s_min, hi if cfg.s_max is None else cfg.s_max)


def _params(fp):
    return {"regime": fp.regime.value, "H": fp.H, "a": fp.a}


def _tangency_dict(t):
    return {"s": t.s, "height": t.height, "x": t.x, "direction": t.direction.value}


def _window_tangencies(cfg, fp):
    window = _s_range(cfg, fp) if cfg.s_min is not None or cfg.s_max is not None \
        else default_window(fp)
    return window, admissible_tangencies(fp, window, cfg.tol)


def cmd_profile(cfg):
    fp = cfg.family()
    lo, hi = _s_range(cfg, fp)
    samples = profile_polyline(fp, lo, hi, cfg.n, cfg.tol)
    if cfg.format == "csv":
        return write_csv(PROFILE_COLUMNS, [sample_row(p) for p in samples])
    if cfg.format == "json":
        return dump_json({"command": "profile", "params": {**_params(fp), "s_min": lo, "s_max": hi},
                          "samples": [sample_dict(p) for p in samples]})
    return cmd_plot(cfg)


def cmd_plot(cfg):
    fp = cfg.family()
    lo, hi = _s_range(cfg, fp)
    samples = profile_polyline(fp, lo, hi, cfg.n, cfg.tol)
    tangencies = admissible_tangencies(fp, (lo, hi), cfg.tol)
    title = f"H = {fp.H:g}, a = {fp.a:g} ({classify_family(fp).value})"
    return profile_svg(samples, tangencies, title)


def cmd_tangency(cfg):
    fp = cfg.family()
    window, pts = _window_tangencies(cfg, fp)
    if cfg.format == "csv":
        return write_csv(("s", "height", "x", "direction"),
                         [(t.s, t.height, t.x, t.direction.value) for t in pts])
    adm = slab_admissibility(fp, cfg.tol)
    return dump_json({
        "command": "tangency",
        "params": {**_params(fp), "window": list(window)},
        "algebraic_roots": algebraic_roots(fp, window),
        "tangencies": [_tangency_dict(t) for t in pts],
        "admissibility": {"admissible": adm.admissible, "reason": adm.reason},
    })


def cmd_classify(cfg):
    fp = cfg.family()
    adm = slab_admissibility(fp, cfg.tol)
    return dump_json({"command": "classify", "params": _params(fp),
                      "family": classify_family(fp).value,
                      "admissibility": {"admissible": adm.admissible, "reason": adm.reason}})


def cmd_measure(cfg):
    if cfg.rho is not None:
        zc, R = geodesic_sphere_euclidean(cfg.center, cfg.rho)
        contour = sphere_contour(zc, R)
        params = {"shape": "sphere", "rho": cfg.rho, "center": cfg.center}
        result = {"free_area": free_area(contour, cfg.tol),
                  "volume": volume_contour(contour, cfg.tol),
                  "mean_curvature_fd": mean_curvature_fd(contour.arcs[0], 0.3)}
    elif cfg.radius is not None:
        if not cfg.radius > 0 or not cfg.center > 0:
            raise InvalidParameterError("dome needs positive --radius and --center")
        contour = dome_contour(cfg.center, cfg.radius, upper=False)
        arc = contour.arcs[1]
        params = {"shape": "dome", "radius": cfg.radius, "center": cfg.center}
        result = {"free_area": free_area(contour, cfg.tol),
                  "volume": volume_contour(contour, cfg.tol),
                  "mean_curvature_fd": mean_curvature_fd(arc, 0.5 * (arc.t_from + arc.t_to))}
    else:
        fp = cfg.family()
        lo, hi = _s_range(cfg, fp)
        params = {**_params(fp), "shape": "profile", "s_min": lo, "s_max": hi}
        try:
            volume = volume_contour(tube_contour(fp, lo, hi, 1.0, cfg.tol), cfg.tol)
        except ContourError:
            volume = None   # the arc does not bound a region with the axis
        try:
            h_fd = mean_curvature_fd(fp, 0.5 * (lo + hi))
        except InvalidParameterError:
            h_fd = None
        result = {"area_natural": area_natural(fp, lo, hi, cfg.tol),
                  "area_cartesian": area_cartesian(ProfileArc(fp, lo, hi), cfg.tol),
                  "volume": volume, "mean_curvature_fd": h_fd}
    return dump_json({"command": "measure", "params": params, **result})


def _sweep(cfg, volumes):
    slab = cfg.slab()
    return sweep_profiles(slab, h_grid=default_h_grid(cfg.n_h), v_grid=volumes,
                          tol=max(cfg.tol, 1e-10), threads=cfg.threads)


def _candidate_rows(cands):
    cols = ("kind", "family", "H", "a", "branch", "side", "r", "free_area", "volume")
    return cols, [tuple(getattr(c, k) if k != "family" else c.family.value for k in cols)
                  for c in cands]


def cmd_solve(cfg):
    if cfg.volume is None or not cfg.volume > 0:
        raise InvalidParameterError("solve needs a positive --volume")
    pt = _sweep(cfg, [cfg.volume])[0]
    if cfg.format == "csv":
        return write_csv(*_candidate_rows(pt.hits))
    return dump_json({
        "command": "solve",
        "params": {"c1": cfg.c1, "c2": cfg.c2, "volume": cfg.volume, "n_h": cfg.n_h},
        "assumptions": list(ASSUMPTIONS),
        "min_area": pt.min_area,
        "candidates": [c.to_dict() for c in pt.hits],
        "winner": pt.winner.to_dict(),
    })


def cmd_sweep(cfg):
    if not 0 < cfg.v_min < cfg.v_max:
        raise InvalidParameterError("sweep needs 0 < --v-min < --v-max")
    volumes = [float(v) for v in np.geomspace(cfg.v_min, cfg.v_max, cfg.n_v)]
    pts = _sweep(cfg, volumes)
    if cfg.format == "csv":
        cols = ("volume", "min_area", "kind", "family", "H", "a", "branch", "side")
        return write_csv(cols, [(p.volume, p.min_area, p.winner.kind, p.winner.family.value,
                                 p.winner.H, p.winner.a, p.winner.branch, p.winner.side)
                                for p in pts])
    if cfg.format == "svg":
        series = {}
        for p in pts:
            best = {}
            for c in p.hits:
                if c.label not in best or c.free_area < best[c.label]:
                    best[c.label] = c.free_area
            for label, area in best.items():
                series.setdefault(label, []).append((p.volume, area))
        return sweep_svg(series, [(p.volume, p.min_area) for p in pts],
                         f"slab [{cfg.c1:g}, {cfg.c2:g}]")
    return dump_json({
        "command": "sweep",
        "params": {"c1": cfg.c1, "c2": cfg.c2, "v_min": cfg.v_min, "v_max": cfg.v_max,
                   "n_v": cfg.n_v, "n_h": cfg.n_h},
        "assumptions": list(ASSUMPTIONS),
        "points": [{"volume": p.volume, "min_area": p.min_area, "winner": p.winner.to_dict(),
                    "runners_up": [c.to_dict() for c in p.runners_up]} for p in pts],
        "candidates": [p.winner.to_dict() for p in pts],
        "winner": None,
    })


HANDLERS = {"profile": cmd_profile, "tangency": cmd_tangency, "classify": cmd_classify,
            "measure": cmd_measure, "solve": cmd_solve, "sweep": cmd_sweep, "plot": cmd_plot}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute one command and write its artifact; returns the exit code."""
    stdout = stdout or sys.stdout
    try:
        cfg.validate()
        text = HANDLERS[cfg.command](cfg)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NoCandidateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CANDIDATE
    except ArithmeticError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _add_flags(p):
    p.add_argument("--regime", choices=[r.value for r in Regime])
    p.add_argument("--H", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--s-min", type=float)
    p.add_argument("--s-max", type=float)
    p.add_argument("--n", type=int, help="number of profile samples")
    p.add_argument("--c1", type=float, help="height of the lower horosphere")
    p.add_argument("--c2", type=float, help="height of the upper horosphere")
    p.add_argument("--volume", type=float)
    p.add_argument("--v-min", type=float)
    p.add_argument("--v-max", type=float)
    p.add_argument("--n-v", type=int, help="number of sweep volumes")
    p.add_argument("--n-h", type=int, help="H values per regime")
    p.add_argument("--rho", type=float, help="measure a geodesic ball of this radius")
    p.add_argument("--radius", type=float, help="measure a dome of this Euclidean radius")
    p.add_argument("--center", type=float, help="centre height for --rho / --radius")
    p.add_argument("--format", choices=("csv", "json", "svg"))
    p.add_argument("--out")
    p.add_argument("--tol", type=float)
    p.add_argument("--threads", type=int)
    p.add_argument("--config", help="key=value file; command-line flags take precedence")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="horoslab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        _add_flags(sub.add_parser(name))
    return parser


def read_config(path: str) -> list[str]:
    """Translate a key=value file into flags that precede the real ones."""
    args = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise InvalidParameterError(f"{path}:{lineno}: expected key=value")
            args += ["--" + key.strip().replace("_", "-"), value.strip()]
    return args


def parse_config(argv) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.config:
        # argparse keeps the last occurrence, so flags after the file win
        ns = parser.parse_args([argv[0]] + read_config(ns.config) + list(argv[1:]))
    given = {k: v for k, v in vars(ns).items() if v is not None and k != "config"}
    fields = {f.name for f in dataclasses.fields(RunConfig)}
    return RunConfig(**{k: v for k, v in given.items() if k in fields})


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cfg = parse_config(argv)
    except (InvalidParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
