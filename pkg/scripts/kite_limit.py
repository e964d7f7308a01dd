"""Kite graphs: sampled X_n / n against the limit CDF 2x - x^2.

Also prints the distance of the standardized count from the normal law,
which stays bounded away from zero as n grows.

    python3 scripts/kite_limit.py --sizes 100 500 2000 --samples 100000
"""

import argparse

import numpy as np

from crossings.census import census
from crossings.embedding import sample_crossings
from crossings.graph import FamilyId, family_graph
from crossings.moments import kite_law, moments_from_census
from crossings.stats import ecdf_gap, empirical_dk, standardize


def exact_limit_gap(n: int) -> float:
    """sup_x |P(X_n / n <= x) - (2x - x^2)| from the exact law."""
    law = kite_law(n)
    cdf = np.cumsum([float(p) for p in law.probability])
    x = np.array(law.support) / n
    limit = 2 * x - x * x
    left = np.concatenate([[0.0], cdf[:-1]])
    return float(max(np.abs(cdf - limit).max(), np.abs(left - limit).max()))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 500, 2000])
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'n':>6} {'exact gap':>10} {'sampled gap':>12} {'d_K normal':>11}")
    for n in args.sizes:
        g = family_graph(FamilyId("kite", n))
        x = sample_crossings(g, args.samples, args.seed)
        gap = ecdf_gap(np.sort(x / n), lambda v: 2 * v - v * v)
        rep = moments_from_census(census(g))
        dk = empirical_dk(np.sort(standardize(x, float(rep.mean), rep.sigma)))
        print(f"{n:>6} {exact_limit_gap(n):>10.4f} {gap:>12.4f} {dk:>11.4f}")


if __name__ == "__main__":
    main()
