"""Kepler equation solver for elliptic orbits."""

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

MAX_ITERATIONS = 50


class NonConvergenceError(RuntimeError):
    """Newton iteration failed the convergence test within the iteration cap."""


@dataclass(frozen=True)
class KeplerSolution:
    """Converged eccentric anomaly with iteration diagnostics.

    Attributes:
        eccentric_anomaly: E in radians, on the same 2*pi branch as the
            input mean anomaly.
        iterations: number of Newton updates performed (>= 1).
        residual: |E - e*sin(E) - M| at the accepted iterate, radians.
    """

    eccentric_anomaly: float
    iterations: int
    residual: float


def battin_initial_guess(mean_anomaly: float, e: float) -> float:
    """Starting value for the Newton iteration (Battin's approximation).

    E0 = M + e*sin(M) / (1 - sin(M + e) + sin(M)).  The denominator equals
    1 - 2*cos(M + e/2)*sin(e/2) >= 1 - 2*sin(e/2) > 0 for e < 1, so the
    starter is defined for every finite mean anomaly, and it reduces to M
    exactly when e = 0.
    """
    s = math.sin(mean_anomaly)
    return mean_anomaly + e * s / (1.0 - math.sin(mean_anomaly + e) + s)


def solve_kepler(mean_anomaly: float, e: float, eps1: float = 1e-8) -> KeplerSolution:
    """Solve M = E - e*sin(E) for the eccentric anomaly.

    Newton iteration E <- E - (E - e*sin(E) - M) / (1 - e*cos(E)) from the
    Battin starter.  An iterate is accepted once both of the following hold:

      * the step is small: |dE / E| <= eps1 when |E| > 1 and |dE| <= eps1
        otherwise, and
      * the equation residual is small: |E - e*sin(E) - M| <= 100 * eps1.

    The mean anomaly is reduced into [0, 2*pi) before iterating and the
    solution is reported on the original branch, so E(M + 2*pi*k) =
    E(M) + 2*pi*k.

    Args:
        mean_anomaly: M in radians, any finite value.
        e: eccentricity in [0, 1).
        eps1: convergence tolerance, > 0.

    Returns:
        KeplerSolution with the converged E.

    Raises:
        NonConvergenceError: the test was not met within 50 iterations.
        ValueError: arguments outside the supported domain.
    """
    if not 0.0 <= e < 1.0:
        raise ValueError(f"eccentricity must be in [0, 1), got {e}")
    if not (math.isfinite(eps1) and eps1 > 0.0):
        raise ValueError(f"eps1 must be positive, got {eps1}")
    if not math.isfinite(mean_anomaly):
        raise ValueError(f"mean anomaly must be finite, got {mean_anomaly}")

    m = math.fmod(mean_anomaly, TWO_PI)
    if m < 0.0:
        m += TWO_PI
    branch_offset = mean_anomaly - m

    ecc_anomaly = battin_initial_guess(m, e)
    for iteration in range(1, MAX_ITERATIONS + 1):
        h = ecc_anomaly - e * math.sin(ecc_anomaly) - m
        updated = ecc_anomaly - h / (1.0 - e * math.cos(ecc_anomaly))
        step = updated - ecc_anomaly
        if abs(updated) > 1.0:
            step_size = abs(step / updated)
        else:
            step_size = abs(step)
        ecc_anomaly = updated
        residual = abs(ecc_anomaly - e * math.sin(ecc_anomaly) - m)
        if step_size <= eps1 and residual <= 100.0 * eps1:
            return KeplerSolution(ecc_anomaly + branch_offset, iteration, residual)

    raise NonConvergenceError(
        f"Kepler iteration did not converge for M={mean_anomaly!r}, e={e!r}, "
        f"eps1={eps1!r} within {MAX_ITERATIONS} iterations"
    )
