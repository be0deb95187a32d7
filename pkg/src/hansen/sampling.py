"""Uniform mean-anomaly sampling of the two elliptic-motion target signals."""

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .anomaly import AnomalySample, radius_ratio, true_anomaly
from .kepler import TWO_PI, solve_kepler


class InvalidSampleCountError(ValueError):
    """Sample count too small to form a grid."""


@dataclass(frozen=True)
class SignalGrid:
    """Values of (r/a)^n * cos(m*v) and (r/a)^n * sin(m*v) on the uniform grid.

    Attributes:
        sample_count: number of grid points l.
        u_cos: array of l values of (r/a)^n * cos(m*v).
        u_sin: array of l values of (r/a)^n * sin(m*v).
        samples: the per-point anomaly records, for diagnostics and dumps.
    """

    sample_count: int
    u_cos: np.ndarray
    u_sin: np.ndarray
    samples: tuple[AnomalySample, ...]


def mean_anomaly_grid(sample_count: int) -> np.ndarray:
    """Uniform grid M_i = 2*pi*i / l for i = 0 .. l-1.

    Raises:
        InvalidSampleCountError: if l < 2.
    """
    if sample_count < 2:
        raise InvalidSampleCountError(
            f"sample count must be at least 2, got {sample_count}"
        )
    return (TWO_PI * np.arange(sample_count)) / sample_count


def integer_power(base: float, exponent: int) -> float:
    """base**exponent by binary exponentiation on the integer exponent.

    Negative exponents go through the reciprocal of the positive power, so
    the integer-exponent semantics never touch log/exp domain issues.
    """
    if exponent < 0:
        return 1.0 / integer_power(base, -exponent)
    result = 1.0
    square = base
    remaining = exponent
    while remaining:
        if remaining & 1:
            result *= square
        square *= square
        remaining >>= 1
    return result


def evaluate_signals(
    e: float, n: int, m: int, sample_count: int, eps1: float = 1e-8
) -> SignalGrid:
    """Sample (r/a)^n * cos(m*v) and (r/a)^n * sin(m*v) on the uniform grid.

    For each grid point the chain is: solve Kepler for E, convert to the
    true anomaly v and radius ratio r/a, then form the two products.
    Points are evaluated strictly in grid order, so results are
    reproducible bit for bit.

    Args:
        e: eccentricity in [0, 1).
        n: integer exponent of r/a (any sign).
        m: non-negative integer multiple of the true anomaly.
        sample_count: number of grid points l (>= 2).
        eps1: Kepler solver tolerance.

    Raises:
        InvalidSampleCountError: if sample_count < 2.
        ValueError: if m < 0 or e outside [0, 1).
        NonConvergenceError: propagated from the Kepler solver.
    """
    if m < 0:
        raise ValueError(f"harmonic multiple m must be non-negative, got {m}")
    grid = mean_anomaly_grid(sample_count)

    u_cos = np.empty(sample_count)
    u_sin = np.empty(sample_count)
    samples = []
    for i, mean_anom in enumerate(grid):
        solution = solve_kepler(float(mean_anom), e, eps1)
        ecc_anom = solution.eccentric_anomaly
        v = true_anomaly(ecc_anom, e)
        ratio = radius_ratio(ecc_anom, e)
        power = integer_power(ratio, n)
        u_cos[i] = power * math.cos(m * v)
        u_sin[i] = power * math.sin(m * v)
        samples.append(AnomalySample(float(mean_anom), ecc_anom, v, ratio))

    return SignalGrid(sample_count, u_cos, u_sin, tuple(samples))


def write_grid_csv(grid: SignalGrid, path: str | Path) -> None:
    """Dump the grid as CSV with columns i, M, E, v, r_over_a, u_cos, u_sin."""
    with open(path, "w", newline="") as stream:
        writer = csv.writer(stream)
        writer.writerow(["i", "M", "E", "v", "r_over_a", "u_cos", "u_sin"])
        for i, sample in enumerate(grid.samples):
            writer.writerow(
                [
                    i,
                    repr(sample.mean_anomaly),
                    repr(sample.eccentric_anomaly),
                    repr(sample.true_anomaly),
                    repr(sample.radius_ratio),
                    repr(float(grid.u_cos[i])),
                    repr(float(grid.u_sin[i])),
                ]
            )
