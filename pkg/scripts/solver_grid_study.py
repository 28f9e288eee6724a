"""Newton vs bisection over a grid of tooth counts.

Prints worst disagreement, iteration histogram and the scan step used.

    python3 scripts/solver_grid_study.py --max-wheel 60
"""

import argparse
from collections import Counter

from cyclogear import GearPairSpec, derive_geometry
from cyclogear.tip_solver import bisection_tip_angle, solve_tip_angle


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-wheel", type=int, default=60)
    ap.add_argument("--bisection-steps", type=int, default=200)
    args = ap.parse_args()

    hist = Counter()
    worst = (0.0, None)
    for nw in range(4, args.max_wheel + 1):
        for np_ in range(3, nw + 1):
            for g in derive_geometry(GearPairSpec(nw, np_)):
                sol = solve_tip_angle(g.radius_ratio, g.tip_gradient)
                ref = bisection_tip_angle(g.radius_ratio, g.tip_gradient, args.bisection_steps)
                hist[sol.iterations_used] += 1
                err = abs(sol.angle - ref)
                if err > worst[0]:
                    worst = (err, (nw, np_, g.teeth))
    print(f"worst |newton - bisection| = {worst[0]:.3e} rad at {worst[1]}")
    print("newton iterations: " + ", ".join(f"{k}:{v}" for k, v in sorted(hist.items())))


if __name__ == "__main__":
    main()
