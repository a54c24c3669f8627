"""Chart closed forms vs brute-force minors on seeded random points."""
import argparse

from grassblow import charts
from grassblow.config import ChartSweepConfig


def main():
    cfg = ChartSweepConfig()
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=cfg.nmax)
    ap.add_argument("--samples", type=int, default=cfg.samples)
    ap.add_argument("--seed", type=int, default=cfg.seed)
    args = ap.parse_args()
    checks, fails = charts.sweep(args.nmax, args.samples, args.seed)
    print(f"seed {args.seed}: {checks} checks, {len(fails)} failures")
    for f in fails[:10]:
        print("  ", f)


if __name__ == "__main__":
    main()
