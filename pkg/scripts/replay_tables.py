"""Rebuild every published example row and print what was recomputed."""

import argparse

from prymrank.search import TABLE_PRIMES, verify_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, nargs="*", default=list(TABLE_PRIMES))
    args = ap.parse_args()
    bad = 0
    for p in args.p:
        for r in verify_table(p):
            flag = "ok " if r.passed else "BAD"
            bad += not r.passed
            print(f"{flag} p={p:2d} label={r.label} recomputed=({r.f},{r.fp}) "
                  f"X_smooth={r.X_smooth} Z_smooth={r.Z_smooth} "
                  f"X_scalar={r.X_scalar_repaired} Z_scalar={r.Z_scalar}")
            for n in r.notes:
                print(f"      {n}")
    print(f"{bad} row(s) with a mismatch")


if __name__ == "__main__":
    main()
