import math

import pytest

from cyclogear import GearPairSpec, design_pair, solve_pair
from cyclogear.mesh import make_scene

# 16/6 console log of the original program
GOLDEN_16_6 = {
    "wheel_tip_deg": 14.70086,
    "pinion_tip_deg": 46.63118,
    "wheel_tip_height": 9.31512,
    "pinion_tip_height": 4.37179,
    "wheel_bound": 10.31512,
    "pinion_bound": 5.37179,
    "rightmost_x": 13.14997,
    "scale_factor": 31.96237,
}


@pytest.fixture(scope="session")
def spec_16_6():
    return GearPairSpec(16, 6)


@pytest.fixture(scope="session")
def solved_16_6(spec_16_6):
    return solve_pair(spec_16_6)


@pytest.fixture(scope="session")
def pair_16_6(spec_16_6):
    return design_pair(spec_16_6)


@pytest.fixture(scope="session")
def scene_16_6(pair_16_6):
    return make_scene(pair_16_6.wheel.pitch_radius, pair_16_6.pinion.pitch_radius, 16, 6)


def angle_of(p):
    return math.atan2(p[1], p[0])
