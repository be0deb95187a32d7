"""Input validation helpers shared by the estimators and the CLI."""

import math

import numpy as np

from .kepler import TWO_PI


def validate_eccentricity(e: float) -> float:
    e = float(e)
    if not (math.isfinite(e) and 0.0 <= e < 1.0):
        raise ValueError(f"eccentricity must be in [0, 1), got {e}")
    return e


def validate_positive(value: float, name: str) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def as_angle_array(x, name: str = "X") -> np.ndarray:
    """Coerce to a 1-D float array, accepting a single-column 2-D layout."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_uniform_grid(x, name: str = "X") -> int:
    """Verify that ``x`` is the canonical grid 2*pi*k/l and return l.

    The diagonal (exact) solve of the normal equations holds only on this
    grid, so the fit refuses anything else.
    """
    arr = as_angle_array(x, name)
    count = arr.shape[0]
    if count < 2:
        raise ValueError(f"{name} must hold at least 2 grid points, got {count}")
    expected = (TWO_PI * np.arange(count)) / count
    if not np.allclose(arr, expected, rtol=0.0, atol=1e-9):
        raise ValueError(
            f"{name} must be the uniform angles 2*pi*k/l for k = 0..l-1"
        )
    return count
