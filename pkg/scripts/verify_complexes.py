#!/usr/bin/env python3
"""Run the structural verification suite standalone.

Checks, by exact linear algebra: exactness of the sign-wedge complexes in all
nonnegative degrees, the brute-force invariant counts against their closed
forms, the dimension formulas, the binomial identities, and the vanishing of
slot-group invariants in positive degrees.

Usage: python scripts/verify_complexes.py [k_max]   (default k_max = 7)
"""

import sys
import time

from tautchi.cli import render_table, run_verification

if __name__ == "__main__":
    k_max = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    start = time.time()
    rows, ok = run_verification(k_max)
    print(render_table(rows))
    print(f"\n{'all checks passed' if ok else 'FAILURES PRESENT'} "
          f"({time.time() - start:.1f}s, k_max={k_max})")
    sys.exit(0 if ok else 2)
