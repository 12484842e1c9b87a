"""deg_b det H_X for z^2 = x^6 - 1 and the standalone coefficient checks."""

import argparse
import json

from prymrank.search import degree_in_b


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, nargs="*", default=[5, 11, 17])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for p in args.p:
        s = degree_in_b(p, args.seed).summary()
        print(json.dumps(s))


if __name__ == "__main__":
    main()
