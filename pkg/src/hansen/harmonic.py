"""Fourier coefficients of a signal sampled uniformly over one period.

On the grid x_k = 2*pi*k/l the trigonometric least-squares normal equations
are diagonal, so each coefficient of

    u(x) ~ a_0 + sum_j a_j*cos(j*x) + sum_j b_j*sin(j*x)

is an explicit weighted sum.  The production path evaluates those sums with
the backward three-term (Goertzel) recurrence; ``direct_coefficients``
evaluates the same sums by plain summation as an independent cross-check,
and ``orthogonality_sums`` exposes the normal-equation entries that justify
the diagonal solve.
"""

import math
from dataclasses import dataclass

import numpy as np

from .kepler import TWO_PI


@dataclass(frozen=True)
class HarmonicSeries:
    """Coefficients of a truncated trigonometric series.

    Attributes:
        order: truncation order s.
        a: cosine coefficients a_0 .. a_s (length s + 1).
        b: sine coefficients b_1 .. b_s (length s).
        sample_count: number of grid samples l the fit used.
    """

    order: int
    a: np.ndarray
    b: np.ndarray
    sample_count: int


def max_series_order(sample_count: int) -> int:
    """Largest admissible truncation order, floor((l - 1) / 2)."""
    return (sample_count - 1) // 2


def _check_order(order: int, sample_count: int) -> None:
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if order > max_series_order(sample_count):
        raise ValueError(
            f"order {order} needs more than {sample_count} samples "
            f"(maximum for this grid is {max_series_order(sample_count)})"
        )


def goertzel_pass(u: np.ndarray, j: int) -> tuple[float, float]:
    """Backward recursion F_k = u_k + 2*cos(x_j)*F_{k+1} - F_{k+2}.

    Starts from F_l = F_{l+1} = 0 and runs k = l-1 down to 1; u_0 enters
    only in the closing formulas.  Returns (F_1, F_2).
    """
    sample_count = len(u)
    _check_order(j, sample_count)
    two_cos = 2.0 * math.cos((TWO_PI * j) / sample_count)
    f1 = 0.0
    f2 = 0.0
    for k in range(sample_count - 1, 0, -1):
        f1, f2 = u[k] + two_cos * f1 - f2, f1
    return float(f1), float(f2)


def coefficient_a(u: np.ndarray, j: int) -> float:
    """Cosine coefficient a_j = (mu/l) * (u_0 + F_1*cos(x_j) - F_2).

    mu is 1 for j = 0 and 2 otherwise.
    """
    sample_count = len(u)
    f1, f2 = goertzel_pass(u, j)
    cos_x = math.cos((TWO_PI * j) / sample_count)
    mu = 1.0 if j == 0 else 2.0
    return float((mu / sample_count) * (u[0] + f1 * cos_x - f2))


def coefficient_b(u: np.ndarray, q: int) -> float:
    """Sine coefficient b_q = (2/l) * F_1 * sin(x_q), for 1 <= q <= (l-1)/2."""
    if q < 1:
        raise ValueError(f"sine coefficient index must be >= 1, got {q}")
    sample_count = len(u)
    f1, _ = goertzel_pass(u, q)
    sin_x = math.sin((TWO_PI * q) / sample_count)
    return float((2.0 / sample_count) * f1 * sin_x)


def analyze(u: np.ndarray, order: int) -> HarmonicSeries:
    """All coefficients a_0..a_s, b_1..b_s of ``u`` by the Goertzel recursion.

    The recursion is carried for every harmonic at once, with the identical
    per-harmonic arithmetic as the scalar ``goertzel_pass`` (the results are
    bitwise equal); each harmonic is independent of the others.
    """
    u = np.ascontiguousarray(u, dtype=float)
    if u.ndim != 1:
        raise ValueError("signal must be one-dimensional")
    sample_count = u.shape[0]
    _check_order(order, sample_count)

    j = np.arange(order + 1)
    x = (TWO_PI * j) / sample_count
    cos_x = np.cos(x)
    two_cos = 2.0 * cos_x
    f1 = np.zeros(order + 1)
    f2 = np.zeros(order + 1)
    for k in range(sample_count - 1, 0, -1):
        f1, f2 = u[k] + two_cos * f1 - f2, f1

    mu = np.where(j == 0, 1.0, 2.0)
    a = (mu / sample_count) * (u[0] + f1 * cos_x - f2)
    b = ((2.0 / sample_count) * f1 * np.sin(x))[1:]
    return HarmonicSeries(order=order, a=a, b=b, sample_count=sample_count)


def direct_coefficients(u: np.ndarray, order: int) -> HarmonicSeries:
    """Same coefficients by plain summation; the cross-check for ``analyze``.

    a_j = (mu/l) * sum_k u_k*cos(j*x_k) and b_q = (2/l) * sum_k u_k*sin(q*x_k),
    summed without compensation.
    """
    u = np.ascontiguousarray(u, dtype=float)
    if u.ndim != 1:
        raise ValueError("signal must be one-dimensional")
    sample_count = u.shape[0]
    _check_order(order, sample_count)

    x = (TWO_PI * np.arange(sample_count)) / sample_count
    angles = np.multiply.outer(np.arange(order + 1), x)
    mu = np.where(np.arange(order + 1) == 0, 1.0, 2.0)
    a = (mu / sample_count) * (np.cos(angles) @ u)
    b = ((2.0 / sample_count) * (np.sin(angles) @ u))[1:]
    return HarmonicSeries(order=order, a=a, b=b, sample_count=sample_count)


@dataclass(frozen=True)
class OrthogonalityReport:
    """Normal-equation sums on the uniform grid and their deviations.

    eta[i, j]   = sum_k cos(i*x_k)*cos(j*x_k),  0 <= i, j <= s
    mixed[q, j] = sum_k cos(j*x_k)*sin(q*x_k),  1 <= q <= s, 0 <= j <= s
    gamma[q, j] = sum_k sin(q*x_k)*sin(j*x_k),  1 <= q, j <= s

    On this grid the exact values are eta[0, 0] = l, eta[j, j] =
    gamma[j, j] = l/2 for j >= 1, and zero everywhere else.
    """

    eta: np.ndarray
    mixed: np.ndarray
    gamma: np.ndarray
    max_off_diagonal: float
    max_diagonal_deviation: float


def orthogonality_sums(sample_count: int, order: int) -> OrthogonalityReport:
    """Evaluate the normal-equation sums and report deviations from diagonal."""
    _check_order(order, sample_count)
    x = (TWO_PI * np.arange(sample_count)) / sample_count
    cos_rows = np.cos(np.multiply.outer(np.arange(order + 1), x))
    sin_rows = np.sin(np.multiply.outer(np.arange(1, order + 1), x))

    eta = cos_rows @ cos_rows.T
    mixed = sin_rows @ cos_rows.T
    gamma = sin_rows @ sin_rows.T

    half = sample_count / 2.0
    eta_exact = np.diag(np.concatenate(([float(sample_count)], np.full(order, half))))
    eta_dev = np.abs(eta - eta_exact)
    gamma_dev = np.abs(gamma - half * np.eye(order))

    deviations = [np.abs(mixed).ravel()]
    diagonals = [np.diag(eta_dev)]
    deviations.append(eta_dev[~np.eye(order + 1, dtype=bool)])
    if order:
        deviations.append(gamma_dev[~np.eye(order, dtype=bool)])
        diagonals.append(np.diag(gamma_dev))

    max_off = max((float(np.max(block)) for block in deviations if block.size), default=0.0)
    max_diag = max((float(np.max(block)) for block in diagonals if block.size), default=0.0)
    return OrthogonalityReport(eta, mixed, gamma, max_off, max_diag)


def evaluate_series(series: HarmonicSeries, x: np.ndarray) -> np.ndarray:
    """Evaluate the fitted series a_0 + sum a_j cos(jx) + sum b_j sin(jx)."""
    x = np.asarray(x, dtype=float)
    if series.order == 0:
        return np.broadcast_to(series.a[0], x.shape).copy()
    harmonics = np.arange(1, series.order + 1)
    angles = np.multiply.outer(x, harmonics)
    return series.a[0] + np.cos(angles) @ series.a[1:] + np.sin(angles) @ series.b
