"""Monte Carlo check of the normal approximation for a family graph.

Samples the crossing count, standardizes with the exact moments and reports
the empirical Kolmogorov distance next to the deterministic bound.

    python3 scripts/clt_check.py --family path --sizes 50 200 800 --samples 200000
"""

import argparse

import numpy as np

from crossings.census import census
from crossings.embedding import sample_crossings
from crossings.errors import CapabilityError
from crossings.graph import FAMILIES, FamilyId, family_graph
from crossings.moments import kolmogorov_bound, moments_from_census
from crossings.stats import empirical_dk, standardize


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=FAMILIES, default="matching")
    ap.add_argument("--sizes", type=int, nargs="+", default=[25, 50, 100])
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>6} {'mean':>12} {'sd':>10} {'emp d_K':>9} {'1/sqrt(N)':>9} {'bound':>10}")
    for n in args.sizes:
        g = family_graph(FamilyId(args.family, n))
        rep = moments_from_census(census(g))
        x = sample_crossings(g, args.samples, args.seed, threads=args.threads)
        dk = empirical_dk(np.sort(standardize(x, float(rep.mean), rep.sigma)))
        try:
            bound = f"{kolmogorov_bound(rep.census, rep.sigma):10.2f}"
        except CapabilityError:
            bound = f"{'n/a':>10}"
        print(f"{n:>6} {float(rep.mean):>12.2f} {rep.sigma:>10.3f} {dk:>9.4f} "
              f"{args.samples ** -0.5:>9.4f} {bound}")


if __name__ == "__main__":
    main()
