"""The tooth tip problem.

Find the generating-circle angle at which the generating point reaches the
ray through the tooth centre, i.e. the ray at angle ``gamma = atan(m)`` for
a tooth-tip gradient ``m``. The residual used is ``y - m*x`` on the unit
epicycloid: it has the sign of the gradient difference while ``x > 0`` and
avoids the division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .errors import ScanFailed
from .rootfind import bisect, safeguarded_newton

LEGACY_SCAN_STEP = math.radians(1.0)


@dataclass(frozen=True)
class TipSolution:
    angle: float                     # tip generating angle, radians
    iterations_used: int
    residual: float
    bracket: Tuple[float, float]


def gradient_difference(r: float, m: float, theta: float) -> float:
    s = theta + theta / r
    return (
        (1 + r) * math.sin(theta)
        - r * math.sin(s)
        - m * (1 + r) * math.cos(theta)
        + m * r * math.cos(s)
    )


def gradient_difference_derivative(r: float, m: float, theta: float) -> float:
    s = theta + theta / r
    return (1 + r) * (
        math.cos(theta) - math.cos(s) + m * math.sin(theta) - m * math.sin(s)
    )


def default_scan_step(m: float) -> float:
    # the fixed 1 degree step gets too coarse once the tip ray angle is small
    return min(LEGACY_SCAN_STEP, math.atan(m) / 4)


def default_scan_limit(r: float) -> float:
    # one revolution of the generating circle, never more than a full turn
    return min(2 * math.pi * r, 2 * math.pi)


def scan_rows(
    r: float, m: float, scan_limit: float, step: float
) -> Iterator[Tuple[float, float]]:
    """Yield ``(theta, residual)`` at multiples of ``step`` up to ``scan_limit``."""
    step_deg = math.degrees(step)
    k = 0
    while True:
        # degrees first, as the legacy scan did, so 1-degree rows match exactly
        theta = (k * step_deg / 360.0) * 2 * math.pi
        if theta > scan_limit + 1e-15:
            return
        yield theta, gradient_difference(r, m, theta)
        k += 1


def coarse_scan(
    r: float,
    m: float,
    scan_limit: Optional[float] = None,
    step: Optional[float] = None,
) -> Tuple[float, float]:
    """Bracket the first sign change of the residual from below to above zero."""
    if scan_limit is None:
        scan_limit = default_scan_limit(r)
    scan_limit = min(scan_limit, 2 * math.pi)
    if step is None:
        step = default_scan_step(m)
    prev = None
    for theta, f in scan_rows(r, m, scan_limit, step):
        if f > 0:
            lo = prev if prev is not None else 0.0
            return lo, theta
        prev = theta
    raise ScanFailed("could not find GC stopping angle within scan limit")


def solve_tip_angle(
    r: float,
    m: float,
    *,
    scan_limit: Optional[float] = None,
    step: Optional[float] = None,
) -> TipSolution:
    lo, hi = coarse_scan(r, m, scan_limit, step)
    root, its = safeguarded_newton(
        lambda t: gradient_difference(r, m, t),
        lambda t: gradient_difference_derivative(r, m, t),
        lo,
        hi,
        hi,
    )
    return TipSolution(root, its, gradient_difference(r, m, root), (lo, hi))


def bisection_tip_angle(r: float, m: float, steps: int = 200) -> float:
    """Reference solution: pure bisection on the coarse-scan bracket."""
    lo, hi = coarse_scan(r, m)
    return bisect(lambda t: gradient_difference(r, m, t), lo, hi, steps)
