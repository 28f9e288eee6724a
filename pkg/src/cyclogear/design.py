"""End-to-end construction of a wheel/pinion pair from a ``GearPairSpec``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .geometry import GearGeometry, GearPairSpec, derive_geometry
from .profile import GearProfile, build_profile, compute_dedendum_depths
from .tessellate import FlankPath, Method, tessellate
from .tip_solver import LEGACY_SCAN_STEP, TipSolution, solve_tip_angle


@dataclass(frozen=True)
class GearPair:
    spec: GearPairSpec
    wheel: GearGeometry
    pinion: GearGeometry
    wheel_tip: TipSolution
    pinion_tip: TipSolution
    wheel_flank: FlankPath
    pinion_flank: FlankPath
    wheel_profile: GearProfile
    pinion_profile: GearProfile


def solve_pair(spec: GearPairSpec, legacy_scan: bool = False):
    """Derived geometry with tip angles solved and dedendum depths filled in."""
    wheel, pinion = derive_geometry(spec)
    step: Optional[float] = LEGACY_SCAN_STEP if legacy_scan else None
    wtip = solve_tip_angle(wheel.radius_ratio, wheel.tip_gradient, step=step)
    ptip = solve_tip_angle(pinion.radius_ratio, pinion.tip_gradient, step=step)
    wheel, pinion = compute_dedendum_depths(
        wheel.with_tip(wtip.angle), pinion.with_tip(ptip.angle), spec.clearance
    )
    return wheel, pinion, wtip, ptip


def design_pair(
    spec: GearPairSpec,
    method: Method = Method.PRIORITY_QUEUE,
    legacy_scan: bool = False,
) -> GearPair:
    wheel, pinion, wtip, ptip = solve_pair(spec, legacy_scan)
    flanks = [
        tessellate(g.pitch_radius, g.radius_ratio, g.tip_generating_angle, spec.epsilon, method)
        for g in (wheel, pinion)
    ]
    return GearPair(
        spec,
        wheel,
        pinion,
        wtip,
        ptip,
        flanks[0],
        flanks[1],
        build_profile(wheel, flanks[0], spec.epsilon),
        build_profile(pinion, flanks[1], spec.epsilon),
    )
