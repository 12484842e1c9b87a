"""Point counts of random genus-2 curves, their Jacobians and Kummer surfaces."""

import argparse
import random

from prymrank.acceptance import random_genus2
from prymrank.gf import make_ext
from prymrank.kummer_count import kummer_counts, supersingular_congruences
from prymrank.search import curve_p_rank


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", default="3,5,9")
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print("q  d0..d6                      n1  n2  a1  a2  |J|  |K|naive |K|avg |K|formula f'  cong")
    for q in (int(x) for x in args.fields.split(",")):
        p = min(d for d in range(2, q + 1) if q % d == 0)
        F = make_ext(p, 1 if q == p else 2)
        rng = random.Random(f"{args.seed}/count/{q}")
        for _ in range(args.n):
            Z = random_genus2(F, rng)
            kc = kummer_counts(Z, q)
            z = kc.zeta
            fp = curve_p_rank(Z)
            cong = supersingular_congruences(z) if fp == 0 else ""
            print(f"{q:<2} {str(list(Z.d)):<27} {z.n1:3d} {z.n2:3d} {z.a1:3d} {z.a2:3d} "
                  f"{kc.jac:4d} {kc.naive:8d} {kc.twist_average:6d} {kc.formula:9d} {fp:2d}  {cong}")


if __name__ == "__main__":
    main()
