"""Run every acceptance check and print one line each."""

import sys

from prymrank.acceptance import run_all

if __name__ == "__main__":
    results = run_all()
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
