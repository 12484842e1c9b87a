"""Search for smooth quartics with every (f, f') combination at a prime."""

import argparse

from prymrank.search import SearchExhausted, SearchTarget, default_workers, find_example


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--budget", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=default_workers())
    args = ap.parse_args()
    for f in range(4):
        for fp in range(3):
            t = SearchTarget(args.p, f, fp, budget=args.budget, seed=args.seed)
            try:
                rec = find_example(t, workers=args.workers)
                print(f"({f},{fp}) sample {rec.sample_index}: q={rec.data}")
                print(f"      X: {rec.X_poly}")
                print(f"      Z: z^2 = {rec.Z_poly}")
            except SearchExhausted as e:
                print(f"({f},{fp}) none in {e.tried} samples")


if __name__ == "__main__":
    main()
