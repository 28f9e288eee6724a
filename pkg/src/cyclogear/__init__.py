"""Cycloidal wheel/pinion generation: tip-angle solving, flank tessellation,
outline construction, mesh checking and SVG/OpenSCAD export."""

from .design import GearPair, design_pair, solve_pair
from .errors import GearError
from .geometry import GearGeometry, GearPairSpec, Mode, Point2, derive_geometry
from .tessellate import Method

__all__ = [
    "GearError",
    "GearGeometry",
    "GearPair",
    "GearPairSpec",
    "Method",
    "Mode",
    "Point2",
    "derive_geometry",
    "design_pair",
    "solve_pair",
]
