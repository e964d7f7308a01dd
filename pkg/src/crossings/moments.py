"""Exact moments of the crossing count, the normal-approximation bound,
family references and the kite law.

All closed forms are exact ``Fraction`` arithmetic.  ``sigma`` and the
Kolmogorov bound are the only floats; both come from one correctly rounded
``float()`` conversion and ``math.sqrt``, so relative error stays near
1e-16.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .census import SubgraphCensus, closed_form_census
from .embedding import Pmf
from .errors import BoundInapplicableError, BoundUndefinedError, ValidationError
from .graph import FamilyId

PAIR_TYPES = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8")

PAIR_PROBABILITY = {
    "A1": Fraction(1, 9),
    "A2": Fraction(1, 9),
    "A3": Fraction(2, 15),
    "A4": Fraction(7, 60),
    "A5": Fraction(1, 10),
    "A6": Fraction(1, 12),
    "A7": Fraction(1, 6),
    "A8": Fraction(1, 3),
}

# Ordered pairs (k, l) of 2-matchings whose union is one subgraph of class i.
#   C1 4-matching: choose k's 2 edges out of 4                  -> 6
#   C2 P3+2K2: k takes one path edge and one isolated edge       -> 2 * 2
#   C3 3-matching: shared edge (3) times which rest goes to k    -> 3 * 2
#   C4 2P3: k takes one edge of each path                        -> 2 * 2
#   C5 P4+K2: k is the two end edges of the P4                   -> 2
#   C6 P5: k is edges {1,3}, l is {2,4}, or swapped              -> 2
#   C7 P3+K2: shared isolated edge, path edges split             -> 2
#   C8 k = l                                                     -> 1
MULTIPLICITY = {"A1": 6, "A2": 4, "A3": 6, "A4": 4, "A5": 2, "A6": 2, "A7": 2, "A8": 1}

# One (k, l) representative per class, on vertices 0..v-1.
REPRESENTATIVES = {
    "A1": (((0, 1), (2, 3)), ((4, 5), (6, 7))),
    "A2": (((0, 1), (3, 4)), ((1, 2), (5, 6))),
    "A3": (((0, 1), (2, 3)), ((2, 3), (4, 5))),
    "A4": (((0, 1), (3, 4)), ((1, 2), (4, 5))),
    "A5": (((0, 1), (2, 3)), ((1, 2), (4, 5))),
    "A6": (((0, 1), (2, 3)), ((1, 2), (3, 4))),
    "A7": (((0, 1), (3, 4)), ((1, 2), (3, 4))),
    "A8": (((0, 1), (2, 3)), ((0, 1), (2, 3))),
}

FAMILY_THRESHOLD = {"matching": 2, "path": 14, "cycle": 15, "triangles": 3}
FAMILY_DK_CONSTANT = {"matching": 1390, "path": 8159, "cycle": 6259, "triangles": 3290}


def _class_count(c: SubgraphCensus, t: str) -> int:
    return {"A1": c.m4, "A2": c.s2, "A3": c.m3, "A4": c.s4, "A5": c.s5,
            "A6": c.s6, "A7": c.s7, "A8": c.m2}[t]


@dataclass(frozen=True)
class MomentReport:
    mean: Fraction
    second_moment: Fraction
    variance: Fraction
    sigma: float
    census: SubgraphCensus


def second_moment_coefficients() -> dict[str, Fraction]:
    """Coefficient of each class count in E[X^2]: multiplicity * P(A_i)."""
    return {t: MULTIPLICITY[t] * PAIR_PROBABILITY[t] for t in PAIR_TYPES}


def moments_from_census(c: SubgraphCensus) -> MomentReport:
    mean = Fraction(c.m2, 3)
    coef = second_moment_coefficients()
    second = sum((coef[t] * _class_count(c, t) for t in PAIR_TYPES), Fraction(0))
    variance = second - mean * mean
    return MomentReport(mean, second, variance, math.sqrt(float(variance)), c)


def pair_probability(t: str) -> Fraction:
    if t not in PAIR_PROBABILITY:
        raise ValidationError(f"unknown pair type {t!r}")
    return PAIR_PROBABILITY[t]


def _both_cross(positions: np.ndarray, k, l) -> np.ndarray:
    def crosses(match):
        (a, b), (c, d) = match
        l1 = np.minimum(positions[:, a], positions[:, b])
        r1 = np.maximum(positions[:, a], positions[:, b])
        l2 = np.minimum(positions[:, c], positions[:, d])
        r2 = np.maximum(positions[:, c], positions[:, d])
        return ((l1 < l2) & (l2 < r1) & (r1 < r2)) | ((l2 < l1) & (l1 < r2) & (r2 < r1))
    return crosses(k) & crosses(l)


def verify_pair_probability(t: str) -> Fraction:
    """P(both 2-matchings cross), by enumerating every ordering of the class representative."""
    if t not in REPRESENTATIVES:
        raise ValidationError(f"unknown pair type {t!r}")
    k, l = REPRESENTATIVES[t]
    v = 1 + max(x for e in k + l for x in e)
    positions = np.array(list(itertools.permutations(range(v))), dtype=np.int64)
    hits = int(_both_cross(positions, k, l).sum())
    return Fraction(hits, len(positions))


def bound_radicand(c: SubgraphCensus) -> Fraction:
    return (1 + (Fraction(32 * c.delta, c.m) - 1) * Fraction(6 * c.m4, c.m2 ** 2)
            + Fraction(c.delta ** 2 * c.m, 2 * c.m2))


def kolmogorov_bound(c: SubgraphCensus, sigma: float) -> float:
    """Upper bound on the Kolmogorov distance between (X - mu)/sigma and N(0, 1)."""
    if c.m2 == 0 or not sigma > 0:
        raise BoundUndefinedError("bound undefined: needs m2 > 0 and positive variance")
    radicand = bound_radicand(c)
    if radicand < 0:
        raise BoundInapplicableError(f"bound inapplicable: negative radicand {float(radicand)}")
    sigma = float(sigma)
    prefactor = 4 * c.delta * c.m * c.m2 / (3 * sigma * sigma)
    return prefactor * (6 * c.delta * c.m / sigma + math.sqrt(float(radicand)))


@dataclass(frozen=True)
class FamilyReference:
    family: FamilyId
    mean: Fraction
    variance: Fraction
    dk_constant: int | None
    dk_reference: float | None
    guaranteed: bool
    note: str


def family_moment_polynomials(family: FamilyId) -> tuple[Fraction, Fraction]:
    """Mean and variance as the families' closed-form polynomials in the size.

    The path polynomial holds for k >= 4 and the cycle polynomial for k >= 5;
    below that the 4-cycle and short-path degeneracies break them.
    """
    n = Fraction(family.k)
    tag = family.tag
    if tag == "matching":
        return n * (n - 1) / 6, n * (n - 1) * (n + 3) / 45
    if tag == "path":
        return (n - 2) * (n - 3) / 6, n ** 3 / 45 - n ** 2 / 18 - 11 * n / 45 + Fraction(2, 3)
    if tag == "cycle":
        return n * (n - 3) / 6, n ** 3 / 45 + n ** 2 / 90 - n / 3
    if tag == "triangles":
        return 3 * n * (n - 1) / 2, 3 * n ** 3 / 5 + 3 * n ** 2 / 10 - 9 * n / 10
    return (n - 3) / 3, n * (n - 3) / 18


POLYNOMIAL_MINIMUM = {"matching": 1, "path": 4, "cycle": 5, "triangles": 1, "kite": 4}


def family_reference(family: FamilyId) -> FamilyReference:
    mean, variance = family_moment_polynomials(family)
    const = FAMILY_DK_CONSTANT.get(family.tag)
    if const is None:
        return FamilyReference(family, mean, variance, None, None, False,
                               "no normal limit; see kite_law")
    guaranteed = family.k >= FAMILY_THRESHOLD[family.tag]
    notes = []
    if not guaranteed:
        notes.append("constants not guaranteed below size %d" % FAMILY_THRESHOLD[family.tag])
    if family.k < POLYNOMIAL_MINIMUM[family.tag]:
        notes.append("moment polynomials not valid below size %d" % POLYNOMIAL_MINIMUM[family.tag])
    note = "; ".join(notes)
    return FamilyReference(family, mean, variance, const, const / math.sqrt(family.k), guaranteed, note)


def family_bound(family: FamilyId) -> float:
    """Kolmogorov bound evaluated on the family's closed-form census."""
    c = closed_form_census(family)
    return kolmogorov_bound(c, moments_from_census(c).sigma)


def kite_law(n: int) -> Pmf:
    """Exact law of the kite's crossing count on k = 0..n-2.

    The k = n-2 term has probability zero and is left out of the support,
    matching what enumeration produces.
    """
    if n < 4:
        raise ValidationError(f"kite needs n >= 4, got {n}")
    denom = (n - 1) * (n - 2)
    ks = range(n - 2)
    return Pmf(tuple(ks), tuple(Fraction(2 * (n - 2 - k), denom) for k in ks))


def kite_limit_cdf(x: float) -> float:
    """CDF of the limit of X_n / n: density 2(1 - x) on [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValidationError(f"x must lie in [0, 1], got {x}")
    return 2 * x - x * x
