"""Tabulate exact mean, variance and the Kolmogorov bound for the four normal families.

    python3 scripts/family_bounds.py --sizes 20 100 1000 10000
"""

import argparse
import math

from crossings.graph import FamilyId
from crossings.moments import FAMILY_DK_CONSTANT, family_bound, family_reference


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 100, 1000, 10000])
    args = ap.parse_args()

    print(f"{'family':<10} {'n':>6} {'mean':>14} {'variance':>16} {'bound':>10} {'C/sqrt(n)':>10}  note")
    for tag in FAMILY_DK_CONSTANT:
        for n in args.sizes:
            f = FamilyId(tag, n)
            ref = family_reference(f)
            bound = family_bound(f)
            print(f"{tag:<10} {n:>6} {float(ref.mean):>14.2f} {float(ref.variance):>16.2f} "
                  f"{bound:>10.2f} {ref.dk_constant / math.sqrt(n):>10.2f}  {ref.note}")


if __name__ == "__main__":
    main()
