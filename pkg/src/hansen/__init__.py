"""Hansen coefficients of elliptic motion by recursive harmonic analysis.

The package samples the two-body signals (r/a)^n * cos(m*v) and
(r/a)^n * sin(m*v) on a uniform mean-anomaly grid, extracts their Fourier
coefficients with the Goertzel recurrence (the normal equations are
diagonal on that grid), and reports the coefficient tables together with
least-squares error estimates.
"""

from .anomaly import AnomalySample, beta, radius_ratio, true_anomaly
from .harmonic import (
    HarmonicSeries,
    OrthogonalityReport,
    analyze,
    coefficient_a,
    coefficient_b,
    direct_coefficients,
    evaluate_series,
    goertzel_pass,
    max_series_order,
    orthogonality_sums,
)
from .kepler import KeplerSolution, NonConvergenceError, battin_initial_guess, solve_kepler
from .sampling import (
    InvalidSampleCountError,
    SignalGrid,
    evaluate_signals,
    integer_power,
    mean_anomaly_grid,
    write_grid_csv,
)
from .series import (
    AliasingRiskWarning,
    HansenRequest,
    HansenTable,
    compute_hansen_table,
    evaluate_table,
    select_order,
    table_from_grid,
)
from .statistics import (
    DegenerateFitError,
    FitStatistics,
    ParsevalMismatchError,
    avg_squared_distance,
    compute_fit_statistics,
    fit_variance,
    probable_errors,
    residual_sum,
)

__version__ = "0.1.0"

# The estimator layer pulls in scikit-learn; load it on first use so the
# CLI and the numeric core stay import-light.
_LAZY_EXPORTS = {"FourierSeriesRegressor", "HansenExpansion"}


def __getattr__(name):
    if name in _LAZY_EXPORTS:
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "AliasingRiskWarning",
    "AnomalySample",
    "DegenerateFitError",
    "FitStatistics",
    "FourierSeriesRegressor",
    "HansenExpansion",
    "HansenRequest",
    "HansenTable",
    "HarmonicSeries",
    "InvalidSampleCountError",
    "KeplerSolution",
    "NonConvergenceError",
    "OrthogonalityReport",
    "ParsevalMismatchError",
    "SignalGrid",
    "analyze",
    "avg_squared_distance",
    "battin_initial_guess",
    "beta",
    "coefficient_a",
    "coefficient_b",
    "compute_fit_statistics",
    "compute_hansen_table",
    "direct_coefficients",
    "evaluate_series",
    "evaluate_signals",
    "evaluate_table",
    "fit_variance",
    "goertzel_pass",
    "integer_power",
    "max_series_order",
    "mean_anomaly_grid",
    "orthogonality_sums",
    "probable_errors",
    "radius_ratio",
    "residual_sum",
    "select_order",
    "solve_kepler",
    "table_from_grid",
    "true_anomaly",
    "write_grid_csv",
]
