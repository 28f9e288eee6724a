"""Gear parameters, derived geometry and exact epicycloid evaluation.

Everything here is in module units: a gear with N teeth has pitch radius N/2.
The user's module (mm per module) is only applied by the exporters.

The addendum flank of each gear is an epicycloid traced by a generating
circle rolling on the gear's pitch circle. For a pitch circle scaled to unit
radius and a generating circle of radius ``r`` (the radius ratio), rolling
the circle's centre through angle ``theta`` puts the generating point at::

    x = (1 + r) cos(theta) - r cos(theta + theta / r)
    y = (1 + r) sin(theta) - r sin(theta + theta / r)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

import numpy as np

from .errors import InvalidSpec, PinionLargerThanWheel, TipGradientTooLarge

MIN_TEETH = 3


class Mode(enum.Enum):
    NONE = "none"
    SINGLE_MESH = "single_mesh"
    ANIMATION = "animation"


class Point2(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class GearPairSpec:
    """User inputs for one wheel/pinion pair."""

    wheel_teeth: int
    pinion_teeth: int
    module: float = 1.0          # output units per module
    clearance: float = 0.5       # modules
    epsilon: float = 0.05        # chord tolerance, modules
    clip_dedenda: bool = True
    svg_width: int = 750
    svg_height: int = 750
    mode: Mode = Mode.SINGLE_MESH
    num_frames: int = 0

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.pinion_teeth > self.wheel_teeth:
            raise PinionLargerThanWheel()
        if self.pinion_teeth < MIN_TEETH:
            raise InvalidSpec(f"pinion needs at least {MIN_TEETH} teeth")
        if not self.epsilon > 0:
            raise InvalidSpec("epsilon must be positive")
        if not self.clearance >= 0:
            raise InvalidSpec("clearance must be non-negative")
        if not self.module > 0:
            raise InvalidSpec("module must be positive")
        if self.svg_width < 16 or self.svg_height < 16:
            raise InvalidSpec("SVG dimensions must be at least 16 pixels")
        if self.mode is Mode.ANIMATION and self.num_frames < 2:
            raise InvalidSpec("animation needs at least 2 frames")


@dataclass(frozen=True)
class GearGeometry:
    """Derived geometry of one gear, in module units.

    The fields after ``tip_gradient`` stay ``None`` until the tip angle is
    solved and the dedendum depths are computed from the mating gear.
    """

    teeth: int
    pitch_radius: float
    generating_radius: float
    radius_ratio: float
    tip_angle: float
    tip_gradient: float
    tip_generating_angle: Optional[float] = None
    tip_height: Optional[float] = None
    dedendum_depth: Optional[float] = None
    base_radius: Optional[float] = None
    clearance_radius: Optional[float] = None
    bound_radius: Optional[float] = None

    @property
    def tooth_period(self) -> float:
        """Angular pitch in radians."""
        return 2 * math.pi / self.teeth

    def with_tip(self, tip_generating_angle: float) -> "GearGeometry":
        height = tip_height(self.pitch_radius, self.radius_ratio, tip_generating_angle)
        return replace(
            self,
            tip_generating_angle=tip_generating_angle,
            tip_height=height,
            bound_radius=height + 1.0,
        )


def _gear(teeth: int, generating_radius: float, which: str) -> GearGeometry:
    pcr = teeth / 2
    gamma = 2 * math.pi / (teeth * 4)
    m = math.tan(gamma)
    if m >= 1:
        raise TipGradientTooLarge(f"{which} tooth gradient > 1: that's unreasonable")
    return GearGeometry(
        teeth=teeth,
        pitch_radius=pcr,
        generating_radius=generating_radius,
        radius_ratio=generating_radius / pcr,
        tip_angle=gamma,
        tip_gradient=m,
    )


def derive_geometry(spec: GearPairSpec) -> tuple[GearGeometry, GearGeometry]:
    """Pitch/generating radii, radius ratios and tip rays for both gears.

    Each gear's generating circle has half the mating gear's pitch diameter,
    which turns the mating gear's dedendum flanks into radial lines.
    """
    spec.validate()
    wheel_pcr = spec.wheel_teeth / 2
    pinion_pcr = spec.pinion_teeth / 2
    wheel = _gear(spec.wheel_teeth, pinion_pcr / 2, "Wheel")
    pinion = _gear(spec.pinion_teeth, wheel_pcr / 2, "Pinion")
    return wheel, pinion


def epicycloid_point(r: float, theta: float) -> Point2:
    phi = theta / r
    x = (1 + r) * math.cos(theta) - r * math.cos(theta + phi)
    y = (1 + r) * math.sin(theta) - r * math.sin(theta + phi)
    return Point2(x, y)


def epicycloid_points(r: float, thetas) -> np.ndarray:
    """Vectorised ``epicycloid_point``; returns an (n, 2) array."""
    t = np.asarray(thetas, dtype=float)
    s = t + t / r
    return np.column_stack(
        ((1 + r) * np.cos(t) - r * np.cos(s), (1 + r) * np.sin(t) - r * np.sin(s))
    )


def epicycloid_velocity(r: float, theta: float) -> Point2:
    """Derivative of ``epicycloid_point`` with respect to theta."""
    s = theta + theta / r
    return Point2(
        (1 + r) * (math.sin(s) - math.sin(theta)),
        (1 + r) * (math.cos(theta) - math.cos(s)),
    )


def tip_height(pcr: float, r: float, theta: float) -> float:
    """Distance from the gear centre to the flank point at generating angle theta."""
    x, y = epicycloid_point(r, theta)
    return pcr * math.hypot(x, y)


def _rotate(x: float, y: float, a: float) -> tuple[float, float]:
    c, s = math.cos(a), math.sin(a)
    return c * x - s * y, s * x + c * y


def placed_tooth_point(
    pcr: float, r: float, theta: float, rot1: float, flip: bool, rot2: float
) -> Point2:
    """Flank point rotated by ``rot1``, optionally mirrored in the x axis,
    rotated by ``rot2`` and scaled to the pitch radius."""
    x, y = _rotate(*epicycloid_point(r, theta), rot1)
    if flip:
        y = -y
    x, y = _rotate(x, y, rot2)
    return Point2(pcr * x, pcr * y)
