"""Measure the smallest chord the priority-queue tessellator produces.

Sweeps tooth counts and tolerances and prints min chord / epsilon. The
longest-first subdivision is sometimes conjectured never to go below half the
tolerance; this script shows how close (and how far past) it gets.

    python3 scripts/pq_min_chord_study.py --max-teeth 60
"""

import argparse

from cyclogear import GearPairSpec, solve_pair
from cyclogear.errors import GearError
from cyclogear.tessellate import tessellate_priority_queue


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-teeth", type=int, default=40)
    ap.add_argument("--eps", type=float, nargs="+", default=[0.2, 0.1, 0.05, 0.02, 0.01])
    args = ap.parse_args()

    worst = (float("inf"), None)
    below_half = 0
    total = 0
    skipped = []
    for nw in range(4, args.max_teeth + 1):
        for np_ in range(3, nw + 1):
            try:
                gears = solve_pair(GearPairSpec(nw, np_))[:2]
            except GearError as e:
                skipped.append(((nw, np_), type(e).__name__))
                continue
            for g in gears:
                for eps in args.eps:
                    path = tessellate_priority_queue(g.pitch_radius, g.radius_ratio, g.tip_generating_angle, eps)
                    ratio = path.chords().min() / eps
                    total += 1
                    below_half += ratio < 0.5
                    if ratio < worst[0]:
                        worst = (ratio, (nw, np_, g.teeth, eps))
    print(f"paths: {total}, pairs skipped as invalid: {len(skipped)}")
    print(f"paths with a chord below eps/2: {below_half}")
    print(f"smallest min-chord/eps: {worst[0]:.6f} at (Nw, Np, teeth, eps) = {worst[1]}")


if __name__ == "__main__":
    main()
