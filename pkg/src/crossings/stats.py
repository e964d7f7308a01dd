"""Normal CDF, standardization and the empirical Kolmogorov distance."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.special import erfc

from .errors import DegenerateVarianceError, ValidationError

_SQRT1_2 = math.sqrt(0.5)


def std_normal_cdf(x: float) -> float:
    """Phi(x) = erfc(-x / sqrt(2)) / 2.

    ``erfc`` (libm) keeps full relative accuracy in the lower tail, so the
    absolute error is well below 1e-12 everywhere.
    """
    if not math.isfinite(x):
        raise ValidationError(f"non-finite input {x!r}")
    return 0.5 * math.erfc(-x * _SQRT1_2)


def std_normal_cdf_array(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValidationError("non-finite input")
    return 0.5 * erfc(-x * _SQRT1_2)


def standardize(counts, mean: float, sd: float) -> np.ndarray:
    if not sd > 0:
        raise DegenerateVarianceError(f"degenerate variance: sd = {sd}")
    return (np.asarray(counts, dtype=float) - float(mean)) / float(sd)


def ecdf_gap(w, cdf) -> float:
    """sup_x |ECDF(x) - cdf(x)| for a continuous ``cdf`` over sorted samples ``w``.

    Uses max_i max(|i/N - F(w_i)|, |(i-1)/N - F(w_i)|).  Ties need no special
    case: inside a run of equal values the gap is convex in i, so the run's
    end points dominate.
    """
    w = np.asarray(w, dtype=float)
    n = len(w)
    if n == 0:
        raise ValidationError("empty sample")
    f = cdf(w)
    i = np.arange(1, n + 1)
    return float(max(np.max(np.abs(i / n - f)), np.max(np.abs((i - 1) / n - f))))


def empirical_dk(w) -> float:
    """Kolmogorov distance between the empirical law of sorted ``w`` and N(0, 1)."""
    return ecdf_gap(w, std_normal_cdf_array)


def ecdf_table(w) -> np.ndarray:
    """Rows ``(w_i, i/N, Phi(w_i))`` for plotting."""
    w = np.asarray(w, dtype=float)
    n = len(w)
    return np.column_stack([w, np.arange(1, n + 1) / n, std_normal_cdf_array(w)])


@dataclass
class EmpiricalReport:
    samples: int
    mean: float
    sd: float
    dk_empirical: float
    seed: int
    graph_descriptor: str

    def as_dict(self) -> dict:
        return asdict(self)


def empirical_report(counts, mu: float, sigma: float, seed: int, descriptor: str) -> EmpiricalReport:
    counts = np.asarray(counts)
    w = np.sort(standardize(counts, mu, sigma))
    sd = float(counts.std(ddof=1)) if len(counts) > 1 else 0.0
    return EmpiricalReport(len(counts), float(counts.mean()), sd, empirical_dk(w), seed, descriptor)
