"""SVG, OpenSCAD and animation writers.

SVG output follows the original renderer's conventions: integer pixels via
``floor``, y flipped against the image height, outlines as individual
``<line>`` elements, and red/blue base/clearance circles.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .design import GearPair
from .errors import NonFiniteCoordinate
from .geometry import Point2
from .mesh import Frame, MeshScene

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class SvgViewport:
    svg_width: int
    svg_height: int
    leftmost_x: float
    bottommost_y: float
    rightmost_x: float
    topmost_y: float

    @property
    def unscaled_width(self) -> float:
        return self.rightmost_x - self.leftmost_x

    @property
    def unscaled_height(self) -> float:
        return self.topmost_y - self.bottommost_y

    @property
    def vert_scale_factor(self) -> float:
        return self.svg_height / self.unscaled_height

    @property
    def horiz_scale_factor(self) -> float:
        return self.svg_width / self.unscaled_width

    @property
    def scale_factor(self) -> float:
        return min(self.vert_scale_factor, self.horiz_scale_factor)


def viewport_for(pair: GearPair, scene: MeshScene) -> SvgViewport:
    """Box from the wheel's bound circle to the shifted pinion's bound circle."""
    shift = scene.pinion_center
    wb = pair.wheel.bound_radius
    pb = pair.pinion.bound_radius
    return SvgViewport(
        pair.spec.svg_width,
        pair.spec.svg_height,
        leftmost_x=-wb,
        bottommost_y=-wb,
        rightmost_x=pb + shift.x,
        topmost_y=pb + shift.y,
    )


def svg_transform(vp: SvgViewport, p: Sequence[float]) -> Tuple[int, int]:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise NonFiniteCoordinate(f"svg coordinate outputting infinite value: ({x}, {y})")
    s = vp.scale_factor
    return math.floor(s * (x - vp.leftmost_x)), vp.svg_height - math.floor(s * (y - vp.bottommost_y))


def _line(vp: SvgViewport, a, b, rgb=(0, 0, 0)) -> str:
    x1, y1 = svg_transform(vp, a)
    x2, y2 = svg_transform(vp, b)
    return (
        f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
        f'style="stroke:rgb({rgb[0]},{rgb[1]},{rgb[2]});stroke-width:2" />'
    )


def _circle(vp: SvgViewport, center: Point2, radius: float, colour: str) -> str:
    cx, cy = svg_transform(vp, center)
    r = math.floor(vp.scale_factor * radius)
    return f'<circle cx="{cx}" cy="{cy}" r="{r}" stroke="{colour}" stroke-width="3" style="fill:none" />'


def _outline_lines(vp: SvgViewport, poly: np.ndarray) -> List[str]:
    if len(poly) < 3:
        raise ValueError("outline needs at least 3 points")
    nxt = np.roll(poly, -1, axis=0)
    return [_line(vp, a, b) for a, b in zip(poly, nxt)]


def _nexus_lines(vp: SvgViewport, pair_profile, rotation: float, center: Point2) -> List[str]:
    """Dedendum flanks continued down to the gear centre (unclipped rendering)."""
    g = pair_profile.geometry
    lines = []
    for k in range(g.teeth):
        a = rotation + k * g.tooth_period
        for foot in (a - g.tip_angle, a + g.tip_angle):
            p = (center.x + g.pitch_radius * math.cos(foot), center.y + g.pitch_radius * math.sin(foot))
            lines.append(_line(vp, center, p))
    return lines


def svg_text(
    pair: GearPair,
    scene: MeshScene,
    frame: Optional[Frame] = None,
    clip_dedenda: Optional[bool] = None,
) -> str:
    """One complete SVG document showing both gears at a frame's rotation."""
    if clip_dedenda is None:
        clip_dedenda = pair.spec.clip_dedenda
    vp = viewport_for(pair, scene)
    wheel_rot, pinion_rot = (math.radians(a) for a in scene.rotations(frame))
    origin = Point2(0.0, 0.0)
    pc = scene.pinion_center

    out = [f'<svg height="{vp.svg_height}" width="{vp.svg_width}" xmlns="{SVG_NS}">']
    out += _outline_lines(vp, pair.wheel_profile.placed(wheel_rot, origin))
    out += _outline_lines(vp, pair.pinion_profile.placed(pinion_rot, pc))
    if not clip_dedenda:
        out += _nexus_lines(vp, pair.wheel_profile, wheel_rot, origin)
        out += _nexus_lines(vp, pair.pinion_profile, pinion_rot, pc)
    for g, c in ((pair.wheel, origin), (pair.pinion, pc)):
        out.append(_circle(vp, c, g.base_radius, "red"))
        out.append(_circle(vp, c, g.clearance_radius, "blue"))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(path, pair: GearPair, scene: MeshScene, frame: Optional[Frame] = None) -> Path:
    path = Path(path)
    path.write_text(svg_text(pair, scene, frame))
    return path


def _scad_points(points: np.ndarray, scale: float) -> str:
    return ",".join(f"[{x * scale!r},{y * scale!r}]" for x, y in points.tolist())


def openscad_polygon(points: np.ndarray, extrude_height: float, scale: float = 1.0) -> str:
    return (
        f"linear_extrude(height={extrude_height!r}) "
        f"polygon(points=[{_scad_points(np.asarray(points, dtype=float), scale)}]);"
    )


def openscad_text(profile, extrude_height: float, module: float = 1.0) -> str:
    return (
        f"// {profile.teeth}-tooth cycloidal gear, module {module!r}\n"
        + openscad_polygon(profile.points, extrude_height, module)
        + "\n"
    )


def openscad_pair_text(pair: GearPair, scene: MeshScene, extrude_height: float) -> str:
    m = pair.spec.module
    pc = scene.pinion_center
    return (
        f"// {pair.wheel.teeth}/{pair.pinion.teeth} cycloidal pair, module {m!r}\n"
        f"rotate([0,0,{scene.wheel_phase!r}]) "
        + openscad_polygon(pair.wheel_profile.points, extrude_height, m)
        + "\n"
        + f"translate([{pc.x * m!r},{pc.y * m!r},0]) rotate([0,0,{scene.pinion_phase!r}]) "
        + openscad_polygon(pair.pinion_profile.points, extrude_height, m)
        + "\n"
    )


def write_openscad(outdir, pair: GearPair, scene: MeshScene, extrude_height: float) -> List[Path]:
    outdir = Path(outdir)
    m = pair.spec.module
    files = {
        "wheel.scad": openscad_text(pair.wheel_profile, extrude_height, m),
        "pinion.scad": openscad_text(pair.pinion_profile, extrude_height, m),
        "wheel_pinion.scad": openscad_pair_text(pair, scene, extrude_height),
    }
    paths = []
    for name, text in files.items():
        p = outdir / name
        p.write_text(text)
        paths.append(p)
    return paths


def frame_log_text(pair: GearPair, scene: MeshScene) -> str:
    spec = pair.spec
    lines = [
        f"wheel teeth: {spec.wheel_teeth}",
        f"pinion teeth: {spec.pinion_teeth}",
        f"svg width: {spec.svg_width}",
        f"svg height: {spec.svg_height}",
        f"num_frames: {len(scene.frames)}",
        f"wheel tooth period: {360.0 / spec.wheel_teeth:.5f} degrees",
        f"pinion tooth period: {360.0 / spec.pinion_teeth:.5f} degrees",
    ]
    for f in scene.frames:
        lines.append(
            f"frame {f.index}: wheel rotation: {f.wheel_rotation:.5f} "
            f"pinion rotation: {f.pinion_rotation:.5f}"
        )
    return "\n".join(lines) + "\n"


def convert_script_text(num_frames: int) -> str:
    lines = ["#!/bin/bash"]
    for i in range(1, num_frames + 1):
        lines.append(f"echo converting frame {i} from svg to png")
        lines.append(f"convert frame{i:05d}.svg frame{i:05d}.png")
    return "\n".join(lines) + "\n"


def write_animation(outdir, pair: GearPair, scene: MeshScene) -> List[Path]:
    """Frame SVGs, the PNG conversion script (not executed) and the frame log."""
    if not scene.frames:
        raise ValueError("scene has no frames")
    outdir = Path(outdir)
    paths = [write_svg(outdir / f"frame{f.index:05d}.svg", pair, scene, f) for f in scene.frames]
    script = outdir / "convert_script"
    script.write_text(convert_script_text(len(scene.frames)))
    os.chmod(script, 0o755)
    log = outdir / "frame_log.txt"
    log.write_text(frame_log_text(pair, scene))
    return paths + [script, log]
