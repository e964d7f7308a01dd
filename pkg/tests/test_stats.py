import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import ndtri

from crossings.errors import DegenerateVarianceError, ValidationError
from crossings.stats import (
    ecdf_gap,
    ecdf_table,
    empirical_dk,
    empirical_report,
    standardize,
    std_normal_cdf,
    std_normal_cdf_array,
)


def test_phi_values():
    assert std_normal_cdf(0.0) == 0.5
    assert std_normal_cdf(1.96) == pytest.approx(float(mpmath.ncdf(1.96)), abs=1e-12)


@pytest.mark.parametrize("x", [-37.5, -8.0, -3.3, -0.7, 0.25, 2.5, 6.0])
def test_phi_against_mpmath(x):
    mpmath.mp.dps = 40
    assert std_normal_cdf(x) == pytest.approx(float(mpmath.ncdf(x)), abs=1e-12, rel=1e-12)


@given(st.floats(-40, 40))
def test_phi_symmetry_and_monotonicity(x):
    assert std_normal_cdf(x) + std_normal_cdf(-x) == pytest.approx(1.0, abs=1e-15)
    assert std_normal_cdf(x) <= std_normal_cdf(x + 0.01)


def test_phi_array_matches_scalar():
    xs = np.linspace(-9, 9, 301)
    np.testing.assert_allclose(std_normal_cdf_array(xs), [std_normal_cdf(x) for x in xs], atol=1e-15)


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
def test_phi_rejects_non_finite(bad):
    with pytest.raises(ValidationError):
        std_normal_cdf(bad)
    with pytest.raises(ValidationError):
        std_normal_cdf_array([0.0, bad])


def test_standardize():
    np.testing.assert_allclose(standardize([1, 2, 3], 2, 1), [-1, 0, 1])
    np.testing.assert_allclose(standardize([4], 2, 0.5), [4])
    for sd in (0, -1, float("nan")):
        with pytest.raises(DegenerateVarianceError):
            standardize([1, 2], 1, sd)


def test_dk_single_point():
    assert empirical_dk([0.0]) == 0.5


def test_dk_quantile_points():
    # w_i = Phi^-1((i - 1/2)/N): the gap is exactly 1/(2N)
    n = 200
    w = [float(mpmath.sqrt(2) * mpmath.erfinv(2 * (i - 0.5) / n - 1)) for i in range(1, n + 1)]
    assert empirical_dk(w) == pytest.approx(0.5 / n, abs=1e-12)


def dense_grid_gap(w, cdf):
    """Reference: evaluate both CDFs just left of and at each jump plus a fine grid."""
    w = np.sort(np.asarray(w, dtype=float))
    grid = np.concatenate([w, np.nextafter(w, -np.inf), np.linspace(w[0] - 3, w[-1] + 3, 20001)])
    ecdf = np.searchsorted(w, grid, side="right") / len(w)
    return float(np.max(np.abs(ecdf - cdf(grid))))


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=60), st.floats(0.3, 3.0))
@settings(max_examples=100, deadline=None)
def test_dk_matches_dense_grid_with_ties(raw, scale):
    w = np.sort(np.array(raw, dtype=float) / scale)
    assert empirical_dk(w) == pytest.approx(dense_grid_gap(w, std_normal_cdf_array), abs=1e-9)


def test_ecdf_gap_custom_cdf():
    y = np.sort(np.random.default_rng(0).uniform(size=10_000))
    gap = ecdf_gap(y, lambda v: v)
    assert gap == pytest.approx(dense_grid_gap(y, lambda v: np.clip(v, 0, 1)), abs=1e-9)
    assert gap < 0.02


def test_dk_decreases_with_grid_refinement():
    gaps = []
    for n in (10, 100, 1000, 10_000):
        q = (np.arange(1, n + 1) - 0.5) / n
        gaps.append(empirical_dk(ndtri(q)))
    assert gaps == sorted(gaps, reverse=True)


def test_empty_input():
    with pytest.raises(ValidationError):
        empirical_dk([])


def test_ecdf_table():
    t = ecdf_table([-1.0, 0.0, 1.0])
    assert t.shape == (3, 3)
    np.testing.assert_allclose(t[:, 1], [1 / 3, 2 / 3, 1])
    assert t[1, 2] == 0.5


def test_empirical_report():
    counts = np.random.default_rng(1).normal(10, 2, size=50_000).round()
    rep = empirical_report(counts, 10.0, 2.0, seed=1, descriptor="test")
    d = rep.as_dict()
    assert d["samples"] == 50_000 and d["seed"] == 1 and d["graph_descriptor"] == "test"
    assert rep.mean == pytest.approx(10, abs=0.05)
    assert 0 < rep.dk_empirical < 0.15
    assert math.isfinite(rep.sd)
