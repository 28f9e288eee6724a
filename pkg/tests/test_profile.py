import math

import numpy as np
import pytest
import shapely

from cyclogear import GearPairSpec, design_pair
from cyclogear.errors import NegativeClearanceRadius
from cyclogear.geometry import derive_geometry
from cyclogear.polygon import is_simple, signed_area
from cyclogear.profile import build_profile, build_tooth, compute_dedendum_depths
from cyclogear.tessellate import tessellate_priority_queue

from conftest import angle_of


def test_dedendum_depths_16_6(solved_16_6):
    wheel, pinion = solved_16_6[:2]
    assert wheel.dedendum_depth == pytest.approx(4.37179 - 3.0, abs=1e-5)
    assert pinion.dedendum_depth == pytest.approx(9.31512 - 8.0, abs=1e-5)
    assert wheel.base_radius == pytest.approx(6.62821, abs=1e-5)
    assert wheel.clearance_radius == pytest.approx(6.12821, abs=1e-5)


def test_equal_counts_equal_depths():
    from cyclogear import solve_pair

    wheel, pinion = solve_pair(GearPairSpec(12, 12))[:2]
    assert wheel.dedendum_depth == pinion.dedendum_depth


def test_negative_clearance_radius(solved_16_6):
    wheel, pinion = solved_16_6[:2]
    with pytest.raises(NegativeClearanceRadius):
        compute_dedendum_depths(wheel, pinion, clearance=5.0)


def _wheel_flank(wheel, eps=0.05):
    return tessellate_priority_queue(wheel.pitch_radius, wheel.radius_ratio, wheel.tip_generating_angle, eps)


def test_tooth_is_mirror_symmetric(solved_16_6):
    wheel = solved_16_6[0]
    tooth = build_tooth(wheel, _wheel_flank(wheel), 0.0)
    mirrored = tooth[::-1] * np.array([1.0, -1.0])
    assert np.allclose(tooth, mirrored, atol=1e-9, rtol=0)


def test_tooth_tip_on_centre_ray(solved_16_6):
    wheel = solved_16_6[0]
    tooth = build_tooth(wheel, _wheel_flank(wheel), 0.0)
    radii = np.hypot(*tooth.T)
    k = int(np.argmax(radii))
    assert radii[k] == pytest.approx(9.31512, abs=1e-4)
    assert abs(angle_of(tooth[k])) <= 1e-9
    # tip emitted once
    assert np.count_nonzero(np.isclose(radii, radii[k], atol=1e-12)) == 1


@pytest.mark.parametrize("tooth_angle", [0.0, 0.7, -2.0])
def test_tooth_starts_on_pitch_circle(solved_16_6, tooth_angle):
    wheel = solved_16_6[0]
    tooth = build_tooth(wheel, _wheel_flank(wheel), tooth_angle)
    assert math.hypot(*tooth[0]) == pytest.approx(8.0, abs=1e-9)
    diff = math.remainder(angle_of(tooth[0]) - (tooth_angle - wheel.tip_angle), 2 * math.pi)
    assert abs(diff) <= 1e-9


def _symmetry_error(profile):
    n = profile.teeth
    rotated = profile.placed(2 * math.pi / n, (0.0, 0.0))
    shifted = np.roll(profile.points, -profile.points_per_tooth, axis=0)
    return np.abs(rotated - shifted).max()


PAIRS = [(16, 6), (40, 13), (20, 10), (15, 7)]


@pytest.fixture(scope="module", params=PAIRS, ids=lambda p: f"{p[0]}x{p[1]}")
def pair(request):
    return design_pair(GearPairSpec(*request.param))


def test_profiles_closed_simple_ccw(pair):
    for prof in (pair.wheel_profile, pair.pinion_profile):
        assert is_simple(prof.points)
        assert shapely.Polygon(prof.points).is_valid
        assert signed_area(prof.points) > 0
        assert not np.allclose(prof.points[0], prof.points[-1])


def test_rotational_symmetry(pair):
    for prof in (pair.wheel_profile, pair.pinion_profile):
        assert _symmetry_error(prof) <= 1e-9


def test_radius_band(pair):
    for prof in (pair.wheel_profile, pair.pinion_profile):
        g = prof.geometry
        radii = np.hypot(*prof.points.T)
        assert radii.min() >= g.clearance_radius - 1e-9
        assert radii.max() <= g.tip_height + 1e-9
        assert radii.min() == pytest.approx(g.clearance_radius, abs=1e-9)
        assert radii.max() == pytest.approx(g.tip_height, abs=1e-9)


def test_wheel_16_6_radius_extremes(pair_16_6):
    radii = np.hypot(*pair_16_6.wheel_profile.points.T)
    assert radii.min() == pytest.approx(6.12821, abs=1e-4)
    assert radii.max() == pytest.approx(9.31512, abs=1e-4)


def pitch_crossings(profile):
    """Polar angles where the outline sits exactly on the pitch circle."""
    g = profile.geometry
    radii = np.hypot(*profile.points.T)
    idx = np.flatnonzero(np.isclose(radii, g.pitch_radius, atol=1e-12))
    return np.unwrap(np.arctan2(profile.points[idx, 1], profile.points[idx, 0]))


def test_addendum_and_dedendum_spans(pair):
    for prof in (pair.wheel_profile, pair.pinion_profile):
        n = prof.teeth
        angles = pitch_crossings(prof)
        assert len(angles) == 2 * n
        spans = np.diff(np.append(angles, angles[0] + 2 * math.pi))
        assert np.allclose(spans, math.pi / n, atol=1e-6)


def test_root_arc_chords_within_epsilon(pair_16_6):
    prof = pair_16_6.wheel_profile
    g = prof.geometry
    pts = prof.points
    nxt = np.roll(pts, -1, axis=0)
    on_root = np.isclose(np.hypot(*pts.T), g.clearance_radius, atol=1e-12) & np.isclose(
        np.hypot(*nxt.T), g.clearance_radius, atol=1e-12
    )
    chords = np.hypot(*(nxt - pts)[on_root].T)
    assert on_root.any()
    assert chords.max() <= pair_16_6.spec.epsilon + 1e-12


def test_build_profile_requires_depths(solved_16_6):
    wheel, _ = derive_geometry(GearPairSpec(16, 6))
    with pytest.raises(ValueError):
        build_profile(wheel, None, 0.05)
