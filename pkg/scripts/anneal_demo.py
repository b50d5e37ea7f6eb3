"""Annealing against the canonical value: best cross-index per n and seed."""
import argparse

from kncross import z_value
from kncross.optimizer import AnnealConfig, stochastic_min


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ns", type=int, nargs="+", default=[9, 13, 17, 21])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--steps", type=int, default=50_000)
    ap.add_argument("--restarts", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    cfg = AnnealConfig(restarts=args.restarts, steps=args.steps)
    for n in args.ns:
        vals = []
        for seed in range(args.seeds):
            res = stochastic_min(n, seed=seed, config=cfg, workers=args.workers)
            vals.append(res.best_value)
            if res.flags:
                print(f"n={n} seed={seed}: {res.flags}")
        print(f"n={n:>3} Z={z_value(n):>6} best={min(vals):>6} per-seed={vals}")


if __name__ == "__main__":
    main()
