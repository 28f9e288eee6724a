"""Compare the corrected pinion phase with the original one.

For each pair, sweeps one tooth period and prints the minimum separation
(negative means the outlines cross) under both phase rules.

    python3 scripts/phase_study.py 16,6 16,7 15,7 20,10
"""

import argparse

from cyclogear import GearPairSpec, design_pair
from cyclogear.mesh import check_interference, make_scene


def pair_arg(s):
    a, b = s.split(",")
    return int(a), int(b)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("pairs", nargs="*", type=pair_arg, default=[(16, 6), (16, 7), (15, 7), (20, 10)])
    ap.add_argument("--samples", type=int, default=64)
    args = ap.parse_args()

    print(f"{'pair':>8} {'phase':>9} {'min_sep':>12} {'sample':>7}")
    for nw, np_ in args.pairs:
        pair = design_pair(GearPairSpec(nw, np_))
        for legacy in (False, True):
            scene = make_scene(pair.wheel.pitch_radius, pair.pinion.pitch_radius, nw, np_, legacy_phase=legacy)
            rep = check_interference(pair.wheel_profile, pair.pinion_profile, scene, args.samples)
            label = "original" if legacy else "fixed"
            print(f"{nw:>4}/{np_:<3} {label:>9} {rep.min_separation:>12.3e} {rep.worst_frame:>7}")


if __name__ == "__main__":
    main()
