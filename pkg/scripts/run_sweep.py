"""Isoperimetric sweep for one slab; writes the winner-per-volume table as JSON.

    python3 scripts/run_sweep.py --c1 1 --c2 2 --out tests/data/sweep_slab_1_2.json

The stored file is regression data for the acceptance suite: it records what
the solver found, nothing more.
"""
import argparse
import json
import time

import numpy as np

from horoslab.geometry import SlabSpec
from horoslab.solver import ASSUMPTIONS, default_h_grid, sweep_profiles

V_MIN, V_MAX, N_V = 0.01, 50.0, 16


def volume_grid(n=N_V):
    return [float(v) for v in np.geomspace(V_MIN, V_MAX, n)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--c1", type=float, default=1.0)
    ap.add_argument("--c2", type=float, default=2.0)
    ap.add_argument("--n-h", type=int, default=64)
    ap.add_argument("--n-v", type=int, default=N_V)
    ap.add_argument("--tol", type=float, default=1e-8)
    ap.add_argument("--threads", type=int, default=None)
    ap.add_argument("--out", default="sweep.json")
    args = ap.parse_args()

    slab = SlabSpec(args.c1, args.c2)
    t0 = time.perf_counter()
    pts = sweep_profiles(slab, h_grid=default_h_grid(args.n_h), v_grid=volume_grid(args.n_v),
                         tol=args.tol, threads=args.threads)
    elapsed = time.perf_counter() - t0
    rows = []
    for p in pts:
        w = p.winner
        rows.append({"volume": p.volume, "min_area": p.min_area, "kind": w.kind,
                     "family": w.family.value, "H": w.H, "a": w.a, "side": w.side,
                     "branch": w.branch, "others": sorted({c.label for c in p.hits})})
        print(f"V={p.volume:10.5g}  A={p.min_area:10.6f}  {w.label:36s} H={w.H:.6g}")
    doc = {"slab": [args.c1, args.c2], "n_h": args.n_h, "tol": args.tol,
           "assumptions": list(ASSUMPTIONS), "points": rows}
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    print(f"{len(rows)} volumes in {elapsed:.1f} s -> {args.out}")


if __name__ == "__main__":
    main()
