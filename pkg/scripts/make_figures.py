"""Profile-curve figures for three reference families and an A(V) chart.

    python3 scripts/make_figures.py --out figures
"""
import argparse
import pathlib

from horoslab import cli

PROFILES = {
    "profile_h1_a-0.2.svg": ["--H", "1", "--a", "-0.2", "--s-min", "-2", "--s-max", "2"],
    "profile_h0.5_a-0.25.svg": ["--H", "0.5", "--a", "-0.25", "--s-min", "-2.5", "--s-max", "1"],
    "profile_h3_a-0.05.svg": ["--H", "3", "--a", "-0.05"],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--n-h", default="24", help="H values per regime for the sweep chart")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, flags in PROFILES.items():
        code = cli.main(["plot", *flags, "--n", "600", "--out", str(out / name)])
        print(name, "ok" if code == 0 else f"exit {code}")
    code = cli.main(["sweep", "--c1", "1", "--c2", "2", "--n-h", args.n_h, "--n-v", "24",
                     "--tol", "1e-8", "--format", "svg", "--out", str(out / "sweep_slab_1_2.svg")])
    print("sweep_slab_1_2.svg", "ok" if code == 0 else f"exit {code}")


if __name__ == "__main__":
    main()
