import math

import numpy as np
import pytest

from hansen.harmonic import HarmonicSeries, analyze
from hansen.kepler import TWO_PI
from hansen.statistics import (
    DegenerateFitError,
    ParsevalMismatchError,
    avg_squared_distance,
    compute_fit_statistics,
    fit_variance,
    probable_errors,
    residual_sum,
)


def grid(count):
    return (TWO_PI * np.arange(count)) / count


def test_zero_signal_has_zero_residual():
    u = np.zeros(32)
    assert residual_sum(u, analyze(u, 5)) == 0.0


def test_band_limited_signal_is_interpolated():
    x = grid(64)
    u = 1.0 + 0.5 * np.cos(2 * x) - 0.25 * np.sin(3 * x)
    delta_sq = residual_sum(u, analyze(u, 3))
    assert delta_sq <= 1e-20 * float(u @ u)


def test_corrupted_coefficients_trip_the_consistency_check():
    rng = np.random.default_rng(3)
    u = rng.standard_normal(50)
    series = analyze(u, 10)
    broken = HarmonicSeries(
        order=10,
        a=series.a + np.eye(11)[1] * 1e-3,
        b=series.b,
        sample_count=50,
    )
    with pytest.raises(ParsevalMismatchError):
        residual_sum(u, broken)


def test_residual_rejects_mismatched_signal_length():
    u = np.zeros(32)
    with pytest.raises(ValueError):
        residual_sum(np.zeros(16), analyze(u, 3))


def test_residual_monotone_in_order():
    rng = np.random.default_rng(17)
    u = rng.standard_normal(60)
    energy = float(u @ u)
    previous = math.inf
    for order in range(1, 25):
        delta_sq = residual_sum(u, analyze(u, order))
        assert delta_sq <= previous + 1e-15 * energy
        previous = delta_sq


def test_parseval_forms_agree_at_energy_scale():
    rng = np.random.default_rng(23)
    u = rng.standard_normal(100)
    series = analyze(u, 20)
    direct = residual_sum(u, series)
    energy = float(u @ u)
    closed = energy - 100.0 * (
        series.a[0] ** 2 + 0.5 * (float(series.a[1:] @ series.a[1:]) + float(series.b @ series.b))
    )
    assert abs(direct - closed) <= 1e-10 * max(energy, direct)


def test_fit_variance_values():
    assert fit_variance(0.0, 100, 5) == 0.0
    assert fit_variance(77.0, 100, 11) == 1.0


def test_fit_variance_degenerate():
    with pytest.raises(DegenerateFitError):
        fit_variance(1.0, 11, 5)  # l == 2s + 1 leaves no degrees of freedom
    with pytest.raises(DegenerateFitError):
        fit_variance(1.0, 100, 50)


def test_probable_errors_zero_variance():
    assert probable_errors(0.0, 10) == (0.0, 0.0, 0.0)


def test_probable_errors_minimal_grid():
    pe_fit, sigma_coeff, pe_coeff = probable_errors(1.0, 2)
    assert pe_fit == 0.6745
    assert sigma_coeff == 1.0
    assert pe_coeff == 0.6745


def test_probable_errors_hundred_samples():
    pe_fit, sigma_coeff, pe_coeff = probable_errors(1.0, 100)
    assert pe_fit == 0.6745
    assert sigma_coeff == math.sqrt(0.02)
    assert pe_coeff == 0.6745 * math.sqrt(0.02)


def test_avg_squared_distance_values():
    assert avg_squared_distance(0.0, 7, 100) == 0.0
    assert avg_squared_distance(3.0, 50, 100) == 3.0


def test_statistics_field_identities():
    rng = np.random.default_rng(31)
    u = rng.standard_normal(100)
    stats = compute_fit_statistics(u, analyze(u, 11))
    assert stats.parameter_count == 23
    assert stats.sigma_sq == stats.delta_sq / (100 - 23)
    assert stats.pe_fit == 0.6745 * math.sqrt(stats.sigma_sq)
    assert stats.sigma_coeff == math.sqrt(stats.sigma_sq) * math.sqrt(2.0 / 100)
    assert stats.pe_coeff == 0.6745 * stats.sigma_coeff
    assert stats.q_dist == (2.0 * 11 / 100) * stats.sigma_sq
    assert stats.delta_sq >= 0.0
