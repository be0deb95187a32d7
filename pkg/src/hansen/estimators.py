"""Scikit-learn style estimators on top of the harmonic-analysis pipeline."""

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.exceptions import NotFittedError

from . import harmonic
from ._validation import as_angle_array, check_uniform_grid
from .series import HansenRequest, compute_hansen_table, evaluate_table, select_order
from .statistics import compute_fit_statistics


class FourierSeriesRegressor(RegressorMixin, BaseEstimator):
    """Truncated Fourier series fitted on a uniform full-period grid.

    On the canonical grid ``2*pi*k/l`` the least-squares normal equations
    are diagonal, so the coefficients are exact weighted sums evaluated by
    the Goertzel recursion rather than a matrix solve.

    Parameters
    ----------
    order : int or None, default=None
        Truncation order ``s``.  ``None`` selects the smallest order past
        which the residual sum stops decreasing significantly (tolerance
        ``tol``).
    tol : float, default=1e-6
        Significance tolerance of the automatic order selection.
    max_order : int or None, default=None
        Cap for the automatic selection; defaults to ``(l - 1) // 2``.

    Attributes
    ----------
    order_ : int
        Truncation order of the fitted series.
    cos_coefficients_ : ndarray of shape (order_ + 1,)
        Coefficients ``a_0 .. a_s``.
    sin_coefficients_ : ndarray of shape (order_,)
        Coefficients ``b_1 .. b_s``.
    statistics_ : FitStatistics
        Residual sum, fit variance, probable errors and coefficient
        distance of the fit.
    n_samples_ : int
        Grid size ``l`` seen during ``fit``.

    Examples
    --------
    >>> import numpy as np
    >>> x = 2 * np.pi * np.arange(64) / 64
    >>> y = 1.5 + 2.0 * np.cos(x) - 0.5 * np.sin(3 * x)
    >>> reg = FourierSeriesRegressor().fit(x, y)
    >>> reg.order_
    3
    >>> np.round(reg.cos_coefficients_[0], 12)
    np.float64(1.5)
    """

    def __init__(self, order=None, tol=1e-6, max_order=None):
        self.order = order
        self.tol = tol
        self.max_order = max_order

    def fit(self, X, y):
        """Fit the series to samples ``y`` taken at the grid angles ``X``.

        Parameters
        ----------
        X : array-like of shape (l,) or (l, 1)
            Sample angles; must be exactly the uniform grid ``2*pi*k/l``.
        y : array-like of shape (l,)
            Signal values at the grid angles.

        Returns
        -------
        self : FourierSeriesRegressor
        """
        n_samples = check_uniform_grid(X)
        y = as_angle_array(y, "y")
        if y.shape[0] != n_samples:
            raise ValueError(
                f"X and y lengths differ: {n_samples} vs {y.shape[0]}"
            )

        if self.order is None:
            order = select_order(y, self.tol, self.max_order)
        else:
            order = int(self.order)
            if not 0 <= order <= harmonic.max_series_order(n_samples):
                raise ValueError(
                    f"order must be in [0, {harmonic.max_series_order(n_samples)}] "
                    f"for {n_samples} samples, got {order}"
                )

        series = harmonic.analyze(y, order)
        self.series_ = series
        self.order_ = order
        self.cos_coefficients_ = series.a
        self.sin_coefficients_ = series.b
        self.statistics_ = compute_fit_statistics(y, series)
        self.n_samples_ = n_samples
        return self

    def predict(self, X):
        """Evaluate the fitted series at arbitrary angles.

        Parameters
        ----------
        X : array-like of shape (n,) or (n, 1)

        Returns
        -------
        ndarray of shape (n,)
        """
        if not hasattr(self, "series_"):
            raise NotFittedError("fit must be called before predict")
        x = as_angle_array(X)
        return harmonic.evaluate_series(self.series_, x)


class HansenExpansion(BaseEstimator):
    """Mean-anomaly Fourier expansion of ``(r/a)^n cos(mv)`` / ``(r/a)^n sin(mv)``.

    ``fit`` samples both signals over one orbit of the requested
    eccentricity and fits the paired coefficient table; ``predict``
    evaluates the truncated expansions at given mean anomalies.  The
    training signal is generated internally, so ``fit`` takes no data
    (``X`` and ``y`` are accepted for pipeline compatibility and ignored).

    Parameters
    ----------
    exponent : int
        Power ``n`` of the radius ratio (any sign).
    multiple : int
        Non-negative multiple ``m`` of the true anomaly.
    eccentricity : float, default=0.0
        Orbit eccentricity in ``[0, 1)``.
    samples : int, default=100
        Grid size ``l``.
    tol : float, default=1e-6
        Order-selection tolerance.
    kepler_tol : float, default=1e-8
        Kepler solver tolerance.
    max_order : int or None, default=None
        Optional truncation-order cap (at most ``(samples - 1) // 2``).

    Attributes
    ----------
    table_ : HansenTable
        The full coefficient table with per-side statistics.
    order_ : int
        Shared truncation order of both series.
    cos_coefficients_ : ndarray of shape (order_ + 1,)
        ``A_0 .. A_s``.
    sin_coefficients_ : ndarray of shape (order_,)
        ``B_1 .. B_s`` (there is no ``B_0``).
    stats_cos_, stats_sin_ : FitStatistics
        Per-side error estimates.
    """

    def __init__(
        self,
        exponent=1,
        multiple=1,
        eccentricity=0.0,
        samples=100,
        tol=1e-6,
        kepler_tol=1e-8,
        max_order=None,
    ):
        self.exponent = exponent
        self.multiple = multiple
        self.eccentricity = eccentricity
        self.samples = samples
        self.tol = tol
        self.kepler_tol = kepler_tol
        self.max_order = max_order

    def fit(self, X=None, y=None):
        """Compute the coefficient table for the configured orbit.

        Returns
        -------
        self : HansenExpansion
        """
        request = HansenRequest(
            e=self.eccentricity,
            n=int(self.exponent),
            m=int(self.multiple),
            l=int(self.samples),
            tol=self.tol,
            eps1=self.kepler_tol,
            max_order=self.max_order,
        )
        table = compute_hansen_table(request)
        self.table_ = table
        self.order_ = table.order
        self.cos_coefficients_ = table.A
        self.sin_coefficients_ = table.B
        self.stats_cos_ = table.stats_A
        self.stats_sin_ = table.stats_B
        return self

    def predict(self, M):
        """Evaluate both truncated series at mean anomalies ``M``.

        Parameters
        ----------
        M : array-like of shape (n,) or (n, 1)
            Mean anomalies in radians.

        Returns
        -------
        ndarray of shape (n, 2)
            Column 0 approximates ``(r/a)^n cos(mv)``, column 1
            approximates ``(r/a)^n sin(mv)``.
        """
        if not hasattr(self, "table_"):
            raise NotFittedError("fit must be called before predict")
        return evaluate_table(self.table_, as_angle_array(M, "M"))
