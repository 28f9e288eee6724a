"""Closed gear outlines.

One tooth period, counterclockwise, is: radial dedendum flank up from the
clearance circle to the pitch circle, rising epicycloid to the tip, mirrored
epicycloid back down to the pitch circle, radial flank down to the clearance
circle, then a root arc along the clearance circle to the next tooth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Tuple

import numpy as np

from .errors import NegativeClearanceRadius
from .geometry import GearGeometry, Point2
from .tessellate import FlankPath


@dataclass(frozen=True)
class GearProfile:
    points: np.ndarray            # (n, 2) closed polygon, last != first, module units
    teeth: int
    geometry: GearGeometry
    center: Point2 = Point2(0.0, 0.0)
    points_per_tooth: int = 0

    def placed(self, rotation: float, center: Point2) -> np.ndarray:
        """Polygon rotated by ``rotation`` radians about its own centre, then moved to ``center``."""
        return _rotate(self.points, rotation) + np.asarray(center, dtype=float)


def compute_dedendum_depths(
    wheel: GearGeometry, pinion: GearGeometry, clearance: float = 0.5
) -> Tuple[GearGeometry, GearGeometry]:
    """Dedendum of each gear is just deep enough for the mating gear's tip."""
    if wheel.tip_height is None or pinion.tip_height is None:
        raise ValueError("tip heights must be solved first")
    out = []
    for gear, mate in ((wheel, pinion), (pinion, wheel)):
        depth = mate.tip_height - mate.pitch_radius
        base = gear.pitch_radius - depth
        clearance_radius = base - clearance
        if not clearance_radius > 0:
            raise NegativeClearanceRadius(
                f"{gear.teeth}-tooth gear: clearance radius {clearance_radius:.5f} <= 0"
            )
        out.append(
            replace(gear, dedendum_depth=depth, base_radius=base, clearance_radius=clearance_radius)
        )
    return out[0], out[1]


def _rotate(pts: np.ndarray, angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return pts @ np.array([[c, s], [-s, c]])


def build_tooth(geometry: GearGeometry, flank: FlankPath, tooth_angle: float) -> np.ndarray:
    """Both addendum halves of one tooth, centred on the ray at ``tooth_angle``.

    Starts on the pitch circle at ``tooth_angle - gamma`` and ends on it at
    ``tooth_angle + gamma``; the tip point appears once.
    """
    rising = _rotate(flank.points, -geometry.tip_angle)
    falling = rising[-2::-1] * np.array([1.0, -1.0])
    return _rotate(np.vstack((rising, falling)), tooth_angle)


def _root_arc(radius: float, start: float, stop: float, eps: float) -> np.ndarray:
    """Interior points of the arc from ``start`` to ``stop`` (ccw) with chords <= eps."""
    span = stop - start
    max_step = 2 * math.asin(min(1.0, eps / (2 * radius)))
    n = max(1, math.ceil(span / max_step - 1e-12))
    a = start + span * np.arange(1, n) / n
    return radius * np.column_stack((np.cos(a), np.sin(a)))


def build_profile(
    geometry: GearGeometry, flank: FlankPath, eps: float, phase: float = 0.0
) -> GearProfile:
    """Closed counterclockwise outline with tooth centres at ``phase + 2*pi*k/N``."""
    if geometry.clearance_radius is None:
        raise ValueError("dedendum depths must be computed first")
    if not geometry.clearance_radius > 0:
        raise NegativeClearanceRadius(f"clearance radius {geometry.clearance_radius} <= 0")
    gamma = geometry.tip_angle
    rc = geometry.clearance_radius
    period = geometry.tooth_period

    tooth = build_tooth(geometry, flank, 0.0)
    foot_in = rc * np.array([[math.cos(-gamma), math.sin(-gamma)]])
    foot_out = rc * np.array([[math.cos(gamma), math.sin(gamma)]])
    arc = _root_arc(rc, gamma, period - gamma, eps)
    unit = np.vstack((foot_in, tooth, foot_out, arc))

    pts = np.vstack([_rotate(unit, phase + k * period) for k in range(geometry.teeth)])
    return GearProfile(pts, geometry.teeth, geometry, points_per_tooth=len(unit))
