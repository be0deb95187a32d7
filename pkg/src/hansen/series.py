"""End-to-end construction of Hansen coefficient tables.

The pipeline samples (r/a)^n * cos(m*v) and (r/a)^n * sin(m*v) on the
uniform mean-anomaly grid, picks a truncation order from the residual-sum
decrease, and pairs the cosine-signal a_k with the sine-signal b_k:

    (r/a)^n * cos(m*v) = sum_{k>=0} A_k cos(k*M)
    (r/a)^n * sin(m*v) = sum_{k>=1} B_k sin(k*M)
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import harmonic
from .sampling import SignalGrid, evaluate_signals
from .statistics import FitStatistics, compute_fit_statistics


class AliasingRiskWarning(UserWarning):
    """The truncated series has not decayed; trailing coefficients are suspect."""


@dataclass(frozen=True)
class HansenRequest:
    """Problem statement (e, n, m) plus the numeric controls.

    Attributes:
        e: eccentricity in [0, 1).
        n: integer exponent of r/a.
        m: non-negative integer multiple of the true anomaly.
        l: number of grid samples (default 100).
        tol: order-selection tolerance (default 1e-6).
        eps1: Kepler solver tolerance (default 1e-8).
        max_order: optional cap on the truncation order, at most (l-1)//2.
    """

    e: float
    n: int
    m: int
    l: int = 100
    tol: float = 1e-6
    eps1: float = 1e-8
    max_order: int | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.e) and 0.0 <= self.e < 1.0):
            raise ValueError(f"eccentricity must be in [0, 1), got {self.e}")
        if self.m < 0:
            raise ValueError(f"harmonic multiple m must be non-negative, got {self.m}")
        if self.l < 4:
            raise ValueError(f"sample count must be at least 4, got {self.l}")
        if not (math.isfinite(self.tol) and self.tol > 0.0):
            raise ValueError(f"tol must be positive, got {self.tol}")
        if not (math.isfinite(self.eps1) and self.eps1 > 0.0):
            raise ValueError(f"eps1 must be positive, got {self.eps1}")
        if self.max_order is not None and not (
            1 <= self.max_order <= harmonic.max_series_order(self.l)
        ):
            raise ValueError(
                f"max_order must be in [1, {harmonic.max_series_order(self.l)}] "
                f"for l={self.l}, got {self.max_order}"
            )

    @property
    def order_cap(self) -> int:
        """Effective truncation-order cap."""
        if self.max_order is not None:
            return self.max_order
        return harmonic.max_series_order(self.l)


@dataclass(frozen=True)
class HansenTable:
    """Final coefficient table with per-side fit statistics.

    A holds A_0 .. A_s (the cosine-signal cosine coefficients) and B holds
    B_1 .. B_s (the sine-signal sine coefficients); there is no B_0.
    """

    request: HansenRequest
    order: int
    A: np.ndarray
    B: np.ndarray
    stats_A: FitStatistics
    stats_B: FitStatistics


def _last_significant(series: harmonic.HarmonicSeries, tol: float) -> int:
    """Last harmonic whose removal would change the residual sum appreciably.

    Adding harmonic j lowers the residual sum by (l/2)*(a_j^2 + b_j^2); the
    harmonic counts as significant while sqrt(a_j^2 + b_j^2) >= 10*tol,
    i.e. while that drop is at least 50*l*tol^2.  The cut is independent of
    the grid size, so refining the grid never shrinks the selected order.
    Returns 1 when no harmonic is significant.
    """
    amplitude = np.hypot(series.a[1:], series.b)
    significant = np.nonzero(amplitude >= 10.0 * tol)[0]
    if significant.size == 0:
        return 1
    return int(significant[-1]) + 1


def select_order(u: np.ndarray, tol: float, max_order: int | None = None) -> int:
    """Truncation order for one sampled signal.

    Orders are scanned upward as long as the residual sum keeps decreasing
    significantly (see ``_last_significant``); the returned order is capped
    by ``max_order`` (default floor((l-1)/2)).
    """
    u = np.asarray(u, dtype=float)
    cap = harmonic.max_series_order(len(u)) if max_order is None else max_order
    if not 1 <= cap <= harmonic.max_series_order(len(u)):
        raise ValueError(
            f"order cap must be in [1, {harmonic.max_series_order(len(u))}] "
            f"for {len(u)} samples, got {cap}"
        )
    return _last_significant(harmonic.analyze(u, cap), tol)


def _truncate(series: harmonic.HarmonicSeries, order: int) -> harmonic.HarmonicSeries:
    # Per-harmonic sums are independent, so truncation equals re-analysis.
    return harmonic.HarmonicSeries(
        order=order,
        a=series.a[: order + 1],
        b=series.b[:order],
        sample_count=series.sample_count,
    )


def _warn_if_undecayed(coeffs: np.ndarray, side: str, stats: FitStatistics, energy: float) -> None:
    # Fire only when truncation left real structure behind: an exactly
    # band-limited signal ends on its peak coefficient yet has ~zero residual.
    if coeffs.size == 0 or stats.delta_sq <= 1e-12 * energy:
        return
    peak = float(np.max(np.abs(coeffs)))
    if peak > 0.0 and abs(float(coeffs[-1])) > 1e-4 * peak:
        warnings.warn(
            f"{side}-side series has not decayed at truncation order "
            f"{stats.order}; increase max_order or the sample count",
            AliasingRiskWarning,
            stacklevel=3,
        )


def table_from_grid(request: HansenRequest, grid: SignalGrid) -> HansenTable:
    """Analyze an already-sampled grid into a HansenTable."""
    cap = request.order_cap
    cos_full = harmonic.analyze(grid.u_cos, cap)
    sin_full = harmonic.analyze(grid.u_sin, cap)

    # one shared order so the A and B columns pair row by row
    order = max(
        _last_significant(cos_full, request.tol),
        _last_significant(sin_full, request.tol),
    )

    cos_series = _truncate(cos_full, order)
    sin_series = _truncate(sin_full, order)
    stats_a = compute_fit_statistics(grid.u_cos, cos_series)
    stats_b = compute_fit_statistics(grid.u_sin, sin_series)

    _warn_if_undecayed(cos_series.a, "A", stats_a, float(grid.u_cos @ grid.u_cos))
    _warn_if_undecayed(sin_series.b, "B", stats_b, float(grid.u_sin @ grid.u_sin))

    return HansenTable(
        request=request,
        order=order,
        A=cos_series.a,
        B=sin_series.b,
        stats_A=stats_a,
        stats_B=stats_b,
    )


def compute_hansen_table(request: HansenRequest) -> HansenTable:
    """Run the full pipeline for one request.

    Raises:
        NonConvergenceError: Kepler solver failure (propagated).
        DegenerateFitError: sample count cannot support the selected order.
    """
    grid = evaluate_signals(request.e, request.n, request.m, request.l, request.eps1)
    return table_from_grid(request, grid)


def evaluate_table(table: HansenTable, mean_anomalies: np.ndarray) -> np.ndarray:
    """Evaluate both truncated series at the given mean anomalies.

    Returns an array of shape (len(M), 2): column 0 approximates
    (r/a)^n * cos(m*v) and column 1 approximates (r/a)^n * sin(m*v).
    """
    m_arr = np.atleast_1d(np.asarray(mean_anomalies, dtype=float))
    harmonics = np.arange(1, table.order + 1)
    angles = np.multiply.outer(m_arr, harmonics)
    cos_side = table.A[0] + np.cos(angles) @ table.A[1:]
    sin_side = np.sin(angles) @ table.B
    return np.column_stack([cos_side, sin_side])
