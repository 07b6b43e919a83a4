import math
import random

import pytest

from twocenter.geom import disk, dist
from twocenter.oracles import (
    MAX_BRUTE_DISKS,
    MAX_BRUTE_POINTS,
    brute_pierce_delta,
    brute_two_center_points,
    exchange_cover_bracket,
    grid_refine_cover_general,
)


def test_brute_pierce_triangle():
    # two disks two apart pierce at their midpoint only after inflating by 1;
    # the third disk is hit by its own point
    delta, p1, p2 = brute_pierce_delta([disk(0, 0, 1), disk(4, 0, 1), disk(2, 5, 1)])
    assert abs(delta - 1.0) <= 1e-6


def test_brute_pierce_overlapping_is_zero():
    delta, p1, p2 = brute_pierce_delta([disk(0, 0, 1), disk(1, 0, 1)])
    assert delta <= 1e-9


def test_brute_pierce_two_pairs():
    # two far pairs, each pair two apart: delta* = 1
    disks = [disk(0, 0, 1), disk(4, 0, 1), disk(100, 0, 1), disk(104, 0, 1)]
    delta, p1, p2 = brute_pierce_delta(disks)
    assert abs(delta - 1.0) <= 1e-6
    # each inflated disk holds one of the points
    for d in disks:
        assert min(dist(p1, d.center), dist(p2, d.center)) <= d.radius + delta + 1e-6


def test_brute_pierce_size_guard():
    too_many = [disk(i, 0, 0.1) for i in range(MAX_BRUTE_DISKS + 1)]
    with pytest.raises(ValueError):
        brute_pierce_delta(too_many)


def test_brute_two_center_points_clusters():
    r, c1, c2 = brute_two_center_points([(0, 0), (1, 0), (10, 0), (11, 0)])
    assert abs(r - 0.5) <= 1e-9
    xs = sorted((c1.x, c2.x))
    assert abs(xs[0] - 0.5) <= 1e-8 and abs(xs[1] - 10.5) <= 1e-8


def test_brute_two_center_points_guard():
    pts = [(i, 0) for i in range(MAX_BRUTE_POINTS + 1)]
    with pytest.raises(ValueError):
        brute_two_center_points(pts)


def test_grid_refine_two_unit_disks():
    lower, upper, c1, c2 = grid_refine_cover_general(
        [disk(0, 0, 1), disk(10, 0, 1)], tol=1e-3
    )
    assert lower <= 1.0 + 1e-9
    assert upper >= 1.0 - 1e-9
    assert upper - lower <= 0.05
    assert upper <= 1.05


def test_grid_refine_single_disk():
    lower, upper, c1, c2 = grid_refine_cover_general([disk(2, 3, 1.5)], tol=1e-3)
    assert lower <= 1.5 + 1e-9
    assert upper >= 1.5 - 1e-9
    assert upper - lower <= 0.05


def test_grid_refine_bounds_bracket_random():
    rng = random.Random(5)
    for _ in range(5):
        disks = [
            disk(rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(0.2, 1.2))
            for _ in range(rng.randint(2, 6))
        ]
        lower, upper, c1, c2 = grid_refine_cover_general(disks, tol=2e-3)
        assert lower <= upper + 1e-12
        # the returned centers certify the upper bound
        from twocenter.cover_general import coverage_radius

        assert coverage_radius(disks, c1, c2) <= upper + 1e-9


def test_exchange_bracket_two_far_disks_collapses():
    lower, upper, c1, c2 = exchange_cover_bracket([disk(0, 0, 1), disk(10, 0, 1)])
    assert abs(lower - 1.0) <= 1e-9
    assert abs(upper - 1.0) <= 1e-9


def test_exchange_bracket_single_disk():
    # a lone disk is pinned by its whole boundary, not a finite contact set;
    # the witness exchange stalls but the bracket stays valid
    lower, upper, c1, c2 = exchange_cover_bracket([disk(2, 3, 1.5)])
    assert lower <= 1.5 + 1e-9
    assert upper >= 1.5 - 1e-9
    assert upper - lower <= 0.1


def test_exchange_bracket_empty():
    lower, upper, c1, c2 = exchange_cover_bracket([])
    assert lower == 0.0 and upper == 0.0


def test_exchange_bracket_agrees_with_grid_refine():
    from twocenter.cover_general import coverage_radius

    rng = random.Random(5)
    for _ in range(5):
        disks = [
            disk(rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(0.2, 1.2))
            for _ in range(rng.randint(2, 6))
        ]
        lower, upper, c1, c2 = exchange_cover_bracket(disks)
        glo, gup, _, _ = grid_refine_cover_general(disks, tol=2e-3)
        assert lower <= upper + 1e-12
        assert coverage_radius(disks, c1, c2) <= upper + 1e-9
        # both brackets hold the same optimum
        assert lower <= gup + 1e-9
        assert glo <= upper + 1e-9
