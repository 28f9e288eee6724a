"""Command-line front end.

Example::

    cyclogear --wheel-teeth 16 --pinion-teeth 6 --mode single -v --out build/

With ``-v`` the run prints the diagnostic log (radii, tip-angle scan, solved
angles, tip heights, viewport) in fixed 5-decimal format.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import FrozenSet, List, Optional, TextIO

from .design import GearPair, design_pair
from .errors import GearError, InterferenceDetected
from .export import viewport_for, write_animation, write_openscad, write_svg
from .geometry import GearGeometry, GearPairSpec, Mode
from .mesh import check_interference, make_scene
from .tessellate import Method
from .tip_solver import LEGACY_SCAN_STEP, default_scan_limit, default_scan_step, scan_rows

MODES = {"none": Mode.NONE, "single": Mode.SINGLE_MESH, "animation": Mode.ANIMATION}
METHODS = {"pq": Method.PRIORITY_QUEUE, "equal_arc": Method.EQUAL_ARC, "fixed20": Method.FIXED_20}
FORMATS = ("svg", "scad")


@dataclass(frozen=True)
class RunConfig:
    spec: GearPairSpec
    out: Path
    formats: FrozenSet[str]
    method: Method
    verbosity: int = 0
    legacy_scan: bool = False
    legacy_phase: bool = False
    samples: int = 64
    extrude_height: float = 5.0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{message}\n")


def _choice(name, table):
    def convert(value):
        if value not in table:
            raise argparse.ArgumentTypeError(f"Invalid value given for {name}.")
        return table[value]

    return convert


def _flag01(value):
    if value not in ("0", "1"):
        raise argparse.ArgumentTypeError("Invalid value given for clip_dedenda.")
    return value == "1"


def _formats(value):
    items = [v.strip() for v in value.split(",") if v.strip()]
    if not items or any(v not in FORMATS for v in items):
        raise argparse.ArgumentTypeError("Invalid value given for formats.")
    return frozenset(items)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclogear", description="Cycloidal wheel/pinion generator.")
    p.add_argument("--wheel-teeth", type=int, required=True)
    p.add_argument("--pinion-teeth", type=int, required=True)
    p.add_argument("--mode", type=_choice("simulate_meshing", MODES), default=Mode.SINGLE_MESH,
                   help="none | single | animation (default single)")
    p.add_argument("--frames", type=int, default=0, help="number of animation frames")
    p.add_argument("--clip-dedenda", dest="clip_dedenda", nargs="?", const=True, default=True,
                   type=_flag01, help="clip dedenda to the clearance circle (default)")
    p.add_argument("--no-clip-dedenda", dest="clip_dedenda", action="store_false")
    p.add_argument("--svg-width", type=int, default=750)
    p.add_argument("--svg-height", type=int, default=750)
    p.add_argument("--epsilon", type=float, default=0.05, help="max chord length, modules")
    p.add_argument("--clearance", type=float, default=0.5, help="root clearance, modules")
    p.add_argument("--module", type=float, default=1.0, help="output units per module")
    p.add_argument("--method", type=_choice("method", METHODS), default=Method.PRIORITY_QUEUE,
                   help="pq | equal_arc | fixed20")
    p.add_argument("--out", type=Path, default=Path("."))
    p.add_argument("--formats", type=_formats, default=frozenset(FORMATS),
                   help="comma-separated subset of svg,scad")
    p.add_argument("--extrude-height", type=float, default=5.0, help="OpenSCAD height, output units")
    p.add_argument("--samples", type=int, default=64, help="interference samples per tooth period")
    p.add_argument("--legacy-scan", action="store_true", help="scan tip angles in exact 1 degree steps")
    p.add_argument("--legacy-phase", action="store_true",
                   help="use the original pinion phase (overlaps for odd pinion counts)")
    p.add_argument("-v", "--verbose", action="count", default=0)
    return p


def parse_args(argv: Optional[List[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    if ns.mode is not Mode.ANIMATION and ns.frames:
        build_parser().error("--frames only applies to --mode animation")
    spec = GearPairSpec(
        wheel_teeth=ns.wheel_teeth,
        pinion_teeth=ns.pinion_teeth,
        module=ns.module,
        clearance=ns.clearance,
        epsilon=ns.epsilon,
        clip_dedenda=ns.clip_dedenda,
        svg_width=ns.svg_width,
        svg_height=ns.svg_height,
        mode=ns.mode,
        num_frames=ns.frames,
    )
    return RunConfig(
        spec=spec,
        out=ns.out,
        formats=ns.formats,
        method=ns.method,
        verbosity=ns.verbose,
        legacy_scan=ns.legacy_scan,
        legacy_phase=ns.legacy_phase,
        samples=ns.samples,
        extrude_height=ns.extrude_height,
    )


def _angle(out: TextIO, radians: float) -> None:
    out.write(f"    Angle in degrees: {math.degrees(radians):.5f}\n")
    out.write(f"    Angle in radians: {radians:.5f}\n")


def _scan_log(out: TextIO, g: GearGeometry, step: float, verbosity: int) -> None:
    if not (verbosity >= 2 or step == LEGACY_SCAN_STEP):
        return
    for theta, f in scan_rows(g.radius_ratio, g.tip_gradient, default_scan_limit(g.radius_ratio), step):
        out.write(f"angle in degrees: {math.degrees(theta):.5f}, grad_diff: {f:.5f}\n")
        if f > 0:
            break


def log_design(out: TextIO, cfg: RunConfig, pair: GearPair, scene) -> None:
    w, p = pair.wheel, pair.pinion
    out.write(f"Wheel teeth: {w.teeth}, Pinion teeth: {p.teeth}\n")
    out.write(f"Wheel PCR: {w.pitch_radius:.5f}\n")
    out.write(f"Pinion PCR: {p.pitch_radius:.5f}\n\n")
    out.write(f"Wheel GCR: {w.generating_radius:.5f}\n")
    out.write(f"Pinion GCR: {p.generating_radius:.5f}\n\n")
    out.write(f"Wheel GC one rev degrees: {360 * w.radius_ratio:.5f}\n")
    out.write(f"Pinion GC one rev degrees: {360 * p.radius_ratio:.5f}\n")
    if 360 * p.radius_ratio > 360:
        out.write("pinion GC one rev degrees > 360, so cutting back to 360\n")
    out.write(f"Wheel RR: {w.radius_ratio:.5f}\n")
    out.write(f"Pinion RR: {p.radius_ratio:.5f}\n\n")
    out.write("Wheel tooth tip angle:\n")
    _angle(out, w.tip_angle)
    out.write("Pinion tooth tip angle\n")
    _angle(out, p.tip_angle)
    out.write("Tooth tip gradients:\n")
    out.write(f"Wheel TTG: {w.tip_gradient:.5f}\n")
    out.write(f"Pinion TTG: {p.tip_gradient:.5f}\n\n")

    sols = ((w, pair.wheel_tip, "wheel"), (p, pair.pinion_tip, "pinion"))
    for g, sol, name in sols:
        out.write(f"Finding {name} GC angle\n")
        step = LEGACY_SCAN_STEP if cfg.legacy_scan else default_scan_step(g.tip_gradient)
        _scan_log(out, g, step, cfg.verbosity)
    for g, sol, name in sols:
        out.write(f"First approximation of {name} GC angle for addendum tip\n")
        _angle(out, sol.bracket[1])
    for g, sol, name in sols:
        out.write(
            f"\nNewton-Raphson iteration for {name} GC converged after "
            f"{sol.iterations_used} steps, residual {sol.residual:.3e}\n"
        )
        _angle(out, sol.angle)
    out.write("\n")
    out.write(f"Wheel addendum tip height: {w.tip_height:.5f}\n")
    out.write(f"Pinion addendum tip height: {p.tip_height:.5f}\n")
    out.write(f"Wheel bound radius: {w.bound_radius:.5f}\n")
    out.write(f"Pinion bound radius: {p.bound_radius:.5f}\n")

    vp = viewport_for(pair, scene)
    out.write(f"leftmost x: {vp.leftmost_x:.5f}\n")
    out.write(f"bottommost y: {vp.bottommost_y:.5f}\n")
    out.write(f"rightmost x: {vp.rightmost_x:.5f}\n")
    out.write(f"topmost y: {vp.topmost_y:.5f}\n")
    out.write(f"unscaled height: {vp.unscaled_height:.5f}\n")
    out.write(f"unscaled width: {vp.unscaled_width:.5f}\n")
    out.write(f"svg height: {vp.svg_height}\n")
    out.write(f"svg width: {vp.svg_width}\n")
    out.write(f"vertical scale factor: {vp.vert_scale_factor:.5f}\n")
    out.write(f"horiz scale factor: {vp.horiz_scale_factor:.5f}\n")
    out.write(f"smaller scale factor: {vp.scale_factor:.5f}\n")

    out.write(f"Wheel dedendum depth: {w.dedendum_depth:.5f}\n")
    out.write(f"Pinion dedendum depth: {p.dedendum_depth:.5f}\n")
    out.write(f"Wheel clearance radius: {w.clearance_radius:.5f}\n")
    out.write(f"Pinion clearance radius: {p.clearance_radius:.5f}\n")
    eps = pair.spec.epsilon
    for name, flank in (("Wheel", pair.wheel_flank), ("Pinion", pair.pinion_flank)):
        c = flank.chords()
        out.write(
            f"{name} flank: {len(flank)} points ({flank.method.value}), "
            f"max chord {c.max():.5f}, min chord {c.min():.5f} ({c.min() / eps:.5f} epsilon)\n"
        )


def run(cfg: RunConfig, out: TextIO = sys.stdout) -> int:
    spec = cfg.spec
    pair = design_pair(spec, cfg.method, cfg.legacy_scan)
    meshed = spec.mode is not Mode.NONE
    scene = make_scene(
        pair.wheel.pitch_radius,
        pair.pinion.pitch_radius,
        spec.wheel_teeth,
        spec.pinion_teeth,
        meshed=meshed,
        num_frames=spec.num_frames if spec.mode is Mode.ANIMATION else 0,
        legacy_phase=cfg.legacy_phase,
    )
    if cfg.verbosity >= 1:
        log_design(out, cfg, pair, scene)

    cfg.out.mkdir(parents=True, exist_ok=True)
    written = []
    if "svg" in cfg.formats:
        if spec.mode is Mode.ANIMATION:
            for f in scene.frames:
                if cfg.verbosity >= 1:
                    out.write(f"producing frame {f.index} of {len(scene.frames)}\n")
            written += write_animation(cfg.out, pair, scene)
        else:
            name = "wheel_pinion_single_mesh.svg" if meshed else "wheel_pinion_nomesh.svg"
            written.append(write_svg(cfg.out / name, pair, scene))
    if "scad" in cfg.formats:
        written += write_openscad(cfg.out, pair, scene, cfg.extrude_height)
    if cfg.verbosity >= 1:
        for path in written:
            out.write(f"wrote {path}\n")

    if meshed:
        report = check_interference(pair.wheel_profile, pair.pinion_profile, scene, cfg.samples)
        if cfg.verbosity >= 1:
            out.write(
                f"Interference check: min separation {report.min_separation:.5f} modules "
                f"at sample {report.worst_frame}/{cfg.samples}\n"
            )
        if not report.passes():
            raise InterferenceDetected(
                f"gear outlines overlap by {-report.min_separation:.5f} modules "
                f"at sample {report.worst_frame}/{cfg.samples}"
            )
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    try:
        cfg = parse_args(argv)
    except GearError as e:
        print(e, file=sys.stderr)
        return e.exit_code
    try:
        return run(cfg)
    except GearError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
