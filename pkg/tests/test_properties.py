import math

from hypothesis import given, settings
from hypothesis import strategies as st

from twocenter.geom import (
    Disk,
    Point,
    circle_circle_intersection,
    dist,
    normalize_disks,
)
from twocenter.one_center import smallest_enclosing_disk_of_disks
from twocenter.piercing import decide_naive


def _pierce_ok(disks, delta, p1, p2, tol):
    return all(
        min(dist(p1, d.center), dist(p2, d.center)) <= d.radius + delta + tol
        for d in disks
    )

coord = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
radius = st.floats(0.01, 5, allow_nan=False, allow_infinity=False)


def disks_strategy(max_n=8):
    return st.lists(
        st.builds(lambda x, y, r: Disk(Point(x, y), r), coord, coord, radius),
        min_size=1,
        max_size=max_n,
    )


@settings(max_examples=60, deadline=None)
@given(disks_strategy())
def test_normalize_idempotent(ds):
    once = normalize_disks(ds, "piercing")
    twice = normalize_disks(once, "piercing")
    assert once == twice


@settings(max_examples=60, deadline=None)
@given(disks_strategy())
def test_normalize_piercing_drops_contained(ds):
    kept = normalize_disks(ds, "piercing")
    # no kept disk contains another kept disk
    for a in kept:
        for b in kept:
            if a is b:
                continue
            assert not dist(a.center, b.center) + b.radius <= a.radius + 1e-15


@settings(max_examples=100, deadline=None)
@given(coord, coord, radius, coord, coord, radius)
def test_intersection_points_on_both_circles(x1, y1, r1, x2, y2, r2):
    a = Disk(Point(x1, y1), r1)
    b = Disk(Point(x2, y2), r2)
    if dist(a.center, b.center) < 1e-9 and abs(r1 - r2) < 1e-9:
        return
    for p in circle_circle_intersection(a, b):
        scale = 1.0 + abs(x1) + abs(y1) + abs(x2) + abs(y2) + r1 + r2
        assert abs(dist(p, a.center) - r1) <= 1e-7 * scale
        assert abs(dist(p, b.center) - r2) <= 1e-7 * scale


@settings(max_examples=40, deadline=None)
@given(disks_strategy(6))
def test_enclosing_disk_contains_all(ds):
    sed = smallest_enclosing_disk_of_disks(ds)
    scale = 1.0 + sed.radius
    for d in ds:
        assert dist(sed.center, d.center) + d.radius <= sed.radius + 1e-7 * scale
    assert sed.radius >= max(d.radius for d in ds) - 1e-12


@settings(max_examples=25, deadline=None)
@given(disks_strategy(5), st.floats(0.01, 3), st.floats(1.01, 2))
def test_piercing_decision_monotone(ds, delta, stretch):
    got = decide_naive(ds, delta)
    if got is None:
        return
    scale = 1e-7 * (1.0 + delta)
    assert _pierce_ok(ds, delta, *got, scale)
    wider = decide_naive(ds, delta * stretch)
    assert wider is not None
    assert _pierce_ok(ds, delta * stretch, *wider, scale)
