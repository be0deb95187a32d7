"""Precision measures for a fitted harmonic series."""

import math
from dataclasses import dataclass

import numpy as np

from .harmonic import HarmonicSeries, evaluate_series
from .kepler import TWO_PI

PROBABLE_ERROR_FACTOR = 0.6745

_PARSEVAL_RTOL = 1e-10


class ParsevalMismatchError(ArithmeticError):
    """Direct and closed-form residual sums disagree: coefficient bug."""


class DegenerateFitError(ValueError):
    """No degrees of freedom left: l <= 2s + 1."""


@dataclass(frozen=True)
class FitStatistics:
    """Error estimates of one fitted series.

    Attributes:
        delta_sq: sum of squared residuals.
        sigma_sq: variance of the fit, delta_sq / (l - L).
        pe_fit: probable error of the fit, 0.6745 * sigma.
        sigma_coeff: common standard error of the coefficients, sigma*sqrt(2/l).
        pe_coeff: probable error per coefficient, 0.6745 * sigma_coeff.
        q_dist: average squared coefficient distance, (2s/l) * sigma_sq.
        order: truncation order s used.
        sample_count: number of samples l.
        parameter_count: number of fitted parameters L = 2s + 1.
    """

    delta_sq: float
    sigma_sq: float
    pe_fit: float
    sigma_coeff: float
    pe_coeff: float
    q_dist: float
    order: int
    sample_count: int
    parameter_count: int


def residual_sum(u: np.ndarray, series: HarmonicSeries) -> float:
    """Sum of squared residuals of ``series`` against its own sample grid.

    The value is the direct sum over (u_k - model(x_k))^2.  Grid
    orthogonality implies the closed form

        delta^2 = sum(u^2) - l*a_0^2 - (l/2) * sum(a_j^2 + b_j^2)

    which is recomputed as a consistency check.  Both forms subtract
    near-equal energies, so they can only be compared at the scale of the
    signal energy; a discrepancy beyond 1e-10 of that scale means the
    coefficients do not belong to this signal and is raised as an error.
    """
    u = np.asarray(u, dtype=float)
    if u.shape != (series.sample_count,):
        raise ValueError(
            f"signal length {u.shape} does not match the series grid "
            f"({series.sample_count} samples)"
        )
    grid = (TWO_PI * np.arange(series.sample_count)) / series.sample_count
    residuals = u - evaluate_series(series, grid)
    direct = float(residuals @ residuals)

    energy = float(u @ u)
    model_energy = series.sample_count * (
        series.a[0] ** 2 + 0.5 * (float(series.a[1:] @ series.a[1:]) + float(series.b @ series.b))
    )
    closed_form = energy - model_energy
    scale = max(energy, direct)
    if abs(direct - closed_form) > _PARSEVAL_RTOL * scale:
        raise ParsevalMismatchError(
            f"residual sums disagree: direct {direct!r} vs closed form "
            f"{closed_form!r} at signal energy {energy!r}"
        )
    return direct


def fit_variance(delta_sq: float, sample_count: int, order: int) -> float:
    """Variance of the fit, delta^2 / (l - L) with L = 2s + 1 parameters."""
    parameter_count = 2 * order + 1
    if sample_count <= parameter_count:
        raise DegenerateFitError(
            f"{sample_count} samples cannot support {parameter_count} parameters"
        )
    return delta_sq / (sample_count - parameter_count)


def probable_errors(sigma_sq: float, sample_count: int) -> tuple[float, float, float]:
    """(pe_fit, sigma_coeff, pe_coeff) for a fit variance sigma^2.

    pe_fit = 0.6745*sigma, sigma_coeff = sigma*sqrt(2/l) (the normal
    equations are diagonal with equal entries l/2, so every coefficient
    shares one standard error), pe_coeff = 0.6745*sigma_coeff.
    """
    sigma = math.sqrt(sigma_sq)
    pe_fit = PROBABLE_ERROR_FACTOR * sigma
    sigma_coeff = sigma * math.sqrt(2.0 / sample_count)
    pe_coeff = PROBABLE_ERROR_FACTOR * sigma_coeff
    return pe_fit, sigma_coeff, pe_coeff


def avg_squared_distance(sigma_sq: float, order: int, sample_count: int) -> float:
    """Expected squared distance between true and fitted coefficient vectors.

    Q = (2s/l) * sigma^2 in the diagonal normal-equation case.
    """
    return (2.0 * order / sample_count) * sigma_sq


def compute_fit_statistics(u: np.ndarray, series: HarmonicSeries) -> FitStatistics:
    """Assemble the full statistics block for one fitted series."""
    delta_sq = residual_sum(u, series)
    sigma_sq = fit_variance(delta_sq, series.sample_count, series.order)
    pe_fit, sigma_coeff, pe_coeff = probable_errors(sigma_sq, series.sample_count)
    q_dist = avg_squared_distance(sigma_sq, series.order, series.sample_count)
    return FitStatistics(
        delta_sq=delta_sq,
        sigma_sq=sigma_sq,
        pe_fit=pe_fit,
        sigma_coeff=sigma_coeff,
        pe_coeff=pe_coeff,
        q_dist=q_dist,
        order=series.order,
        sample_count=series.sample_count,
        parameter_count=2 * series.order + 1,
    )
