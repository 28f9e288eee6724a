"""Placement, rotation schedules and interference checking for a meshing pair.

The wheel sits at the origin and the pinion on the 45 degree diagonal at the
sum of the pitch radii. Angles in this module are degrees unless named
otherwise, matching the frame log.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
import shapely

from .geometry import Point2
from .profile import GearProfile

PLACEMENT_ANGLE = math.pi / 4
# overlaps shallower than this are floating-point contact, not interference
CONTACT_TOL = 1e-9


@dataclass(frozen=True)
class Frame:
    index: int                # 1-based
    fraction: Fraction        # of one tooth period
    wheel_rotation: float     # degrees, counterclockwise
    pinion_rotation: float    # degrees, negative = clockwise


@dataclass(frozen=True)
class MeshScene:
    wheel_teeth: int
    pinion_teeth: int
    center_distance: float
    wheel_phase: float
    pinion_phase: float
    meshed: bool = True
    frames: Tuple[Frame, ...] = field(default_factory=tuple)

    @property
    def placement_angle(self) -> float:
        return PLACEMENT_ANGLE

    @property
    def pinion_center(self) -> Point2:
        if not self.meshed:
            # side-by-side layout: shifted by the radii sum on both axes
            return Point2(self.center_distance, self.center_distance)
        d = self.center_distance / math.sqrt(2)
        return Point2(d, d)

    def rotations(self, frame: Optional[Frame]) -> Tuple[float, float]:
        """Absolute (wheel, pinion) rotations in degrees for a frame."""
        if frame is None:
            return self.wheel_phase, self.pinion_phase
        return (
            self.wheel_phase + frame.wheel_rotation,
            self.pinion_phase + frame.pinion_rotation,
        )


def mesh_phases(wheel_teeth: int, pinion_teeth: int) -> Tuple[float, float]:
    """Wheel tooth centre and pinion gap centre both on the line of centres."""
    period = 360.0 / pinion_teeth
    return 45.0, math.fmod(225.0 + 180.0 / pinion_teeth, period)


def legacy_mesh_phases(wheel_teeth: int, pinion_teeth: int) -> Tuple[float, float]:
    """The original placement; overlaps teeth when the pinion count is odd."""
    return 45.0, 45.0 + (360.0 / pinion_teeth) / 2


def rotation_schedule(wheel_teeth: int, pinion_teeth: int, num_frames: int) -> List[Frame]:
    """``num_frames`` frames covering one tooth period, last one a frame short."""
    if num_frames < 2:
        raise ValueError("num_frames must be at least 2")
    wheel_period = 360.0 / wheel_teeth
    pinion_period = 360.0 / pinion_teeth
    frames = []
    for i in range(1, num_frames + 1):
        f = Fraction(i - 1, num_frames)
        frames.append(
            Frame(i, f, wheel_period * (i - 1) / num_frames, 0.0 - pinion_period * (i - 1) / num_frames)
        )
    return frames


def make_scene(
    wheel_pcr: float,
    pinion_pcr: float,
    wheel_teeth: int,
    pinion_teeth: int,
    *,
    meshed: bool = True,
    num_frames: int = 0,
    legacy_phase: bool = False,
) -> MeshScene:
    if meshed:
        phases = (legacy_mesh_phases if legacy_phase else mesh_phases)(wheel_teeth, pinion_teeth)
    else:
        phases = (0.0, 0.0)
    frames = tuple(rotation_schedule(wheel_teeth, pinion_teeth, num_frames)) if num_frames else ()
    return MeshScene(
        wheel_teeth, pinion_teeth, wheel_pcr + pinion_pcr, phases[0], phases[1], meshed, frames
    )


@dataclass(frozen=True)
class InterferenceReport:
    min_separation: float      # modules; negative when the outlines cross
    worst_frame: int           # 0-based sample index
    worst_fraction: Fraction
    separations: Tuple[float, ...]

    @property
    def crossing(self) -> bool:
        return self.min_separation < 0

    def passes(self, tolerance: float = 0.0) -> bool:
        """No crossing deeper than ``tolerance``; touching counts as passing."""
        return self.min_separation >= -tolerance


def separation(poly_a: np.ndarray, poly_b: np.ndarray) -> float:
    """Boundary gap between two polygons, negative when they overlap.

    For overlapping polygons the value is minus the width of the overlap,
    taken as the diameter of the largest circle inscribed in the shared
    region. Overlaps thinner than ``CONTACT_TOL`` are reported as contact (0.0).
    """
    a = shapely.Polygon(poly_a)
    b = shapely.Polygon(poly_b)
    shared = a.intersection(b)
    if shared.area == 0.0:
        return float(a.boundary.distance(b.boundary))
    parts = getattr(shared, "geoms", [shared])
    width = max(
        2 * shapely.maximum_inscribed_circle(g, tolerance=1e-9).length
        for g in parts
        if g.area > 0
    )
    if width <= CONTACT_TOL:
        return 0.0
    return -width


def placed_polygons(
    wheel: GearProfile, pinion: GearProfile, scene: MeshScene, fraction: Fraction
) -> Tuple[np.ndarray, np.ndarray]:
    wheel_rot = scene.wheel_phase + float(fraction) * 360.0 / scene.wheel_teeth
    pinion_rot = scene.pinion_phase - float(fraction) * 360.0 / scene.pinion_teeth
    return (
        wheel.placed(math.radians(wheel_rot), Point2(0.0, 0.0)),
        pinion.placed(math.radians(pinion_rot), scene.pinion_center),
    )


def check_interference(
    wheel: GearProfile, pinion: GearProfile, scene: MeshScene, samples: int = 64
) -> InterferenceReport:
    """Sweep ``samples`` rotation states over one tooth period; report the worst gap."""
    seps = []
    for j in range(samples):
        w, p = placed_polygons(wheel, pinion, scene, Fraction(j, samples))
        seps.append(separation(w, p))
    worst = int(np.argmin(seps))
    return InterferenceReport(seps[worst], worst, Fraction(worst, samples), tuple(seps))
