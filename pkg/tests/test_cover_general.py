import math
import random

import pytest

from twocenter.cover_general import (
    RotationInterval,
    coverage_radius,
    decide_cover,
    fptas_general,
    gonzalez_2approx,
    rotation_intervals,
    solve_exact_general,
)
from twocenter.geom import Disk, Point, disk, dist
from twocenter.oracles import grid_refine_cover_general
from twocenter.solution import coverage_residual


def test_coverage_radius_examples():
    two = [disk(0, 0, 1), disk(10, 0, 1)]
    assert coverage_radius(two, (0, 0), (10, 0)) == pytest.approx(1.0, abs=1e-9)
    assert coverage_radius(two, (0, 0), (11, 0)) == pytest.approx(2.0, abs=1e-9)
    one = [disk(3, 4, 2.5)]
    assert coverage_radius(one, (3, 4), (3, 4)) == pytest.approx(2.5, abs=1e-12)


def test_gonzalez_two_disks():
    got = gonzalez_2approx([disk(0, 0, 1), disk(10, 0, 1)])
    assert got.c1 == Point(0.0, 0.0)
    assert got.c2 == Point(11.0, 0.0)
    assert got.r == pytest.approx(2.0, abs=1e-9)


def test_gonzalez_single_disk():
    got = gonzalez_2approx([disk(1, 2, 1.5)])
    assert got.r == pytest.approx(1.5, abs=1e-9)
    assert got.r <= 2 * 1.5 + 1e-9


def test_gonzalez_ratio_against_oracle():
    rng = random.Random(2)
    for _ in range(5):
        disks = [
            disk(rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(0.2, 1.2))
            for _ in range(10)
        ]
        got = gonzalez_2approx(disks)
        lower, _, _, _ = grid_refine_cover_general(disks, tol=2e-3)
        assert got.r <= 2 * lower + 1e-3


def test_decide_trivial_yes_no():
    two = [disk(0, 0, 1), disk(10, 0, 1)]
    sol = decide_cover(two, 1.0)
    assert sol is not None
    assert coverage_residual(two, sol) <= 1e-9
    assert decide_cover(two, 0.99) is None
    with pytest.raises(ValueError):
        decide_cover(two, 0.0)


def test_decide_constructed_certificate():
    # sample disks inside the union of two known congruent covers, add one
    # disk touching a boundary intersection point, then decide at R + 1e-6
    rng = random.Random(7)
    R = 2.0
    A = Point(0.0, 0.0)
    B = Point(3.0, 0.0)
    h = math.sqrt(R * R - 1.5 * 1.5)
    disks = []
    while len(disks) < 6:
        which = A if rng.random() < 0.5 else B
        ang = rng.uniform(0, 2 * math.pi)
        rad = rng.uniform(0, R)
        c = Point(which.x + rad * math.cos(ang), which.y + rad * math.sin(ang))
        rr = rng.uniform(0.05, 0.4)
        if min(dist(c, A), dist(c, B)) + rr <= R - 1e-9:
            disks.append(Disk(c, rr))
    disks.append(Disk(Point(1.5, h - 0.3), 0.3))
    sol = decide_cover(disks, R + 1e-6)
    assert sol is not None
    assert coverage_residual(disks, sol) <= 1e-7


def test_decide_monotone_in_r():
    rng = random.Random(9)
    for _ in range(4):
        disks = [
            disk(rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(0.1, 1.2))
            for _ in range(rng.randint(3, 6))
        ]
        ex = solve_exact_general(disks, 1e-5)
        for mult in (1.002, 1.05, 1.4):
            assert decide_cover(disks, ex.r * mult) is not None, mult


def test_solve_exact_two_far_disks():
    sol = solve_exact_general([disk(0, 0, 1), disk(10, 0, 1)], 1e-6)
    assert abs(sol.r - 1.0) <= 1e-5


def test_solve_exact_single_disk():
    sol = solve_exact_general([disk(5, 5, 2)], 1e-6)
    assert sol.r == pytest.approx(2.0, abs=1e-9)


def test_solve_exact_oracle_sandwich():
    rng = random.Random(11)
    for _ in range(4):
        disks = [
            disk(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0.1, 1.5))
            for _ in range(rng.randint(3, 6))
        ]
        sol = solve_exact_general(disks, 1e-6)
        lower, upper, _, _ = grid_refine_cover_general(disks, tol=2e-3)
        assert lower - 5e-3 <= sol.r <= upper + 5e-3
        assert coverage_residual(list(disks), sol) <= 1e-7


def test_solve_exact_certificate_tags():
    disks = [disk(0, 0, 1), disk(10, 0, 1)]
    sol = solve_exact_general(disks, 1e-6)
    assert set(sol.certificate) == {"in_C1", "in_C2"}


def test_fptas_examples():
    two = [disk(0, 0, 1), disk(10, 0, 1)]
    f = fptas_general(two, 0.5)
    assert f.r <= 1.5 + 1e-9
    one = [disk(3, -2, 2.0)]
    for eps in (1.0, 0.5, 0.2):
        f1 = fptas_general(one, eps)
        assert f1.r <= (1 + eps) * 2.0 + 1e-9
        assert f1.r >= 2.0 - 1e-9
    with pytest.raises(ValueError):
        fptas_general(two, 0.0)
    with pytest.raises(ValueError):
        fptas_general(two, 1.0001)


def test_fptas_ratio_and_validity():
    rng = random.Random(3)
    for _ in range(6):
        disks = [
            disk(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0.1, 1.5))
            for _ in range(rng.randint(3, 10))
        ]
        ex = solve_exact_general(disks, 1e-6)
        for eps in (0.5, 0.2):
            f = fptas_general(disks, eps)
            assert f.r <= (1 + eps) * ex.r + 1e-9
            assert f.r >= max(d.radius for d in disks) - 1e-12
            assert coverage_residual(list(disks), f) <= 1e-7


def test_rotation_intervals_tile_the_circle():
    disks = [disk(0, 0, 1), disk(4, 0, 1), disk(2, 3, 0.8)]
    ivs = rotation_intervals(disks, 3.0, 0)
    total = sum(iv.theta2 - iv.theta1 for iv in ivs)
    assert abs(total - 2 * math.pi) <= 1e-6
    for iv in ivs:
        assert iv.theta1 <= iv.theta2
        angles = [e[0] for e in iv.events]
        assert angles == sorted(angles)
        for _, b, direction in iv.events:
            assert 0 <= b < len(disks)
            assert direction in ("in", "out")


def test_rotation_interval_validation():
    with pytest.raises(ValueError):
        RotationInterval(0, 1.0, 0.5, (-1, -1), ())
    with pytest.raises(ValueError):
        RotationInterval(0, 0.0, 1.0, (-1, -1), ((0.7, 1, "in"), (0.2, 0, "out")))
    with pytest.raises(ValueError):
        rotation_intervals([disk(0, 0, 1)], 1.0, 3)
