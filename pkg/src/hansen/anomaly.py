"""Anomaly conversions for elliptic orbits."""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class AnomalySample:
    """One orbit point: the three anomalies (radians) plus r/a."""

    mean_anomaly: float
    eccentric_anomaly: float
    true_anomaly: float
    radius_ratio: float


def beta(e: float) -> float:
    """Conversion parameter e / (1 + sqrt(1 - e^2)), in [0, 1) for e in [0, 1).

    Algebraically equal to (1 - sqrt(1 - e^2)) / e, but the rationalized
    form is free of cancellation at small eccentricity.
    """
    return e / (1.0 + math.sqrt(1.0 - e * e))


def true_anomaly(eccentric_anomaly: float, e: float) -> float:
    """True anomaly from eccentric anomaly, safe in every quadrant.

    v = E + 2*atan2(b*sin(E), 1 - b*cos(E)) with b = beta(e).  The second
    atan2 argument is bounded below by 1 - b > 0, so there is no
    singularity for any E and the correction satisfies |v - E| < pi.
    At e = 0 the correction vanishes and v = E.
    """
    b = beta(e)
    half_angle = math.atan2(
        b * math.sin(eccentric_anomaly), 1.0 - b * math.cos(eccentric_anomaly)
    )
    return eccentric_anomaly + 2.0 * half_angle


def radius_ratio(eccentric_anomaly: float, e: float) -> float:
    """Instantaneous r/a = 1 - e*cos(E), in [1 - e, 1 + e]."""
    return 1.0 - e * math.cos(eccentric_anomaly)
