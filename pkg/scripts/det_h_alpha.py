"""det H as a polynomial in alpha for the Z_alpha family at p = 3."""

import argparse

from prymrank.search import det_h_alpha, expected_det_h


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--plane", default="0,-1,0,1", help="a,b,c,d over F_3")
    args = ap.parse_args()
    plane = [int(x) for x in args.plane.split(",")]
    r = det_h_alpha(plane)
    print(f"nodes={r.nodes} in F_{r.node_field_size}, degree={r.poly.deg}")
    for g, m in r.factors:
        print(f"  ({g.format()})^{m}")
    if plane == [0, -1, 0, 1]:
        P, facs = expected_det_h()
        same = [(g.c, m) for g, m in r.factors] == [(g.c, m) for g, m in facs]
        print("matches displayed factorization:", same)


if __name__ == "__main__":
    main()
