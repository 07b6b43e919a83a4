"""Restricted two-center covering: every input disk must lie entirely
inside one of the two congruent covering disks.

A center placed at p covers disk D with radius `base` exactly when p lies
in the disk around c(D) of radius base - r(D), so shrinking all disks by
their own radius turns the problem into two-piercing.  The module offers
that exact reduction, a separating-line baseline, a 6-approximation, an
exact solver for a fixed split orientation, and two approximation schemes
built on orientation sampling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels as _k
from .cover_general import gonzalez_2approx
from .geom import (
    TWO_PI,
    Disk,
    Instance,
    Point,
    _extent,
    disk_arrays,
    normalize_disks,
    tolerance,
)
from .one_center import smallest_enclosing_disk_of_disks
from .piercing import solve_exact as _pierce_exact
from .solution import TwoCenterSolution, make_solution

# Grid constant of the fast approximation scheme; the rounding error
# sqrt(2) times the grid step has to fit in the eps budget next to the
# orientation sampling error.
GRID_FACTOR = 0.0625

# The inner orientation sampling runs at this fraction of the caller's eps
# so that its own error (about 4 sin of the sampling parameter) plus the
# grid rounding stays below eps overall.
INNER_EPS_FACTOR = 0.125


def _given_disks(instance) -> tuple[Disk, ...]:
    if isinstance(instance, Instance):
        return instance.disks
    return tuple(instance)


def _cover_disks(instance) -> tuple[Disk, ...]:
    return normalize_disks(_given_disks(instance), "covering")


def shrink(instance, base: float) -> list[Disk]:
    """Same centers, radius base - r(D) each: the region a covering center
    of radius base may occupy for each disk."""
    disks = _given_disks(instance)
    if not disks:
        return []
    rmax = max(d.radius for d in disks)
    if base < rmax:
        raise ValueError("base radius below the largest disk radius")
    return [Disk(d.center, max(base - d.radius, 0.0)) for d in disks]


def solve_exact_restricted(instance) -> TwoCenterSolution:
    """Minimal common radius via the piercing reduction: shrink by r_max,
    two-pierce, and add r_max back."""
    disks = _cover_disks(instance)
    if not disks:
        raise ValueError("need at least one disk")
    tol = tolerance(_extent(list(disks)))
    rmax = max(d.radius for d in disks)
    delta, p1, p2 = _pierce_exact(shrink(disks, rmax))
    return make_solution(disks, p1, p2, delta + rmax, tol)


def solve_bipartition_restricted(
    instance, seed: int = 0, gamma: float = 1e-7
) -> TwoCenterSolution:
    """Exact baseline: enumerate the bipartitions cut by a line through
    center pairs, each side covered by its smallest enclosing disk."""
    disks = _cover_disks(instance)
    if not disks:
        raise ValueError("need at least one disk")
    cx, cy, cr = disk_arrays(disks)
    tol = tolerance(_extent(list(disks)))
    v, x1, y1, x2, y2 = _k.split_sweep(cx, cy, cr, 1, gamma, seed, tol)
    return make_solution(
        disks, Point(float(x1), float(y1)), Point(float(x2), float(y2)),
        max(v, 0.0), tol,
    )


def sixapprox_restricted(instance) -> TwoCenterSolution:
    """Greedy centers, radius shrunk to the smallest value under which
    every disk still fits wholly inside one of the two.  Never worse than
    six times the optimum."""
    disks = _cover_disks(instance)
    if not disks:
        raise ValueError("need at least one disk")
    tol = tolerance(_extent(list(disks)))
    g = gonzalez_2approx(disks)
    cx, cy, cr = disk_arrays(disks)
    r = float(
        _k.min_assignment_radius(cx, cy, cr, g.c1.x, g.c1.y, g.c2.x, g.c2.y)
    )
    return make_solution(disks, g.c1, g.c2, r, tol)


# ---------------------------------------------------------------------------
# fixed split orientation


@dataclass(frozen=True)
class OrientationSample:
    """Outcome of one candidate split orientation: the projection angle,
    the chosen split position in the projection order, the solution."""

    angle: float
    split: int
    solution: TwoCenterSolution

    def __post_init__(self):
        if not 0.0 <= self.angle < math.pi:
            raise ValueError("angle must lie in [0, pi)")
        if self.split < 0:
            raise ValueError("split index must be nonnegative")


def _fixed_orientation(disks, theta: float, seed: int):
    n = len(disks)
    ux, uy = math.cos(theta), math.sin(theta)
    order = sorted(
        range(n), key=lambda i: (disks[i].center.x * ux + disks[i].center.y * uy, i)
    )
    ordered = [disks[i] for i in order]

    left: dict[int, Disk | None] = {0: None}
    right: dict[int, Disk | None] = {n: None}

    def left_disk(k: int):
        if k not in left:
            left[k] = smallest_enclosing_disk_of_disks(ordered[:k], seed=seed)
        return left[k]

    def right_disk(k: int):
        if k not in right:
            right[k] = smallest_enclosing_disk_of_disks(ordered[k:], seed=seed)
        return right[k]

    def radii(k: int) -> tuple[float, float]:
        ld = left_disk(k)
        rd = right_disk(k)
        return (ld.radius if ld else 0.0), (rd.radius if rd else 0.0)

    # the left radius is nondecreasing and the right nonincreasing in k, so
    # the smallest k where left >= right brackets the valley of the max
    lo, hi = 0, n
    while lo < hi:
        mid = (lo + hi) // 2
        lr, rr = radii(mid)
        if lr >= rr:
            hi = mid
        else:
            lo = mid + 1

    best_k = -1
    best_val = math.inf
    for k in range(max(lo - 1, 0), min(lo + 1, n) + 1):
        lr, rr = radii(k)
        val = max(lr, rr)
        if val < best_val:
            best_val = val
            best_k = k

    # verify the monotonicity the search relied on at the evaluated splits
    slack = 1e-9 * (1.0 + best_val)
    ks = sorted(k for k in left if k in right)
    ok = True
    for a, b in zip(ks, ks[1:]):
        la = left[a].radius if left[a] else 0.0
        lb = left[b].radius if left[b] else 0.0
        ra = right[a].radius if right[a] else 0.0
        rb = right[b].radius if right[b] else 0.0
        if la > lb + slack or rb > ra + slack:
            ok = False
            break
    if not ok:
        best_k = -1
        best_val = math.inf
        for k in range(n + 1):
            lr, rr = radii(k)
            val = max(lr, rr)
            if val < best_val:
                best_val = val
                best_k = k

    ld = left_disk(best_k)
    rd = right_disk(best_k)
    if ld is None and rd is None:
        raise ValueError("need at least one disk")
    c1 = ld.center if ld is not None else rd.center
    c2 = rd.center if rd is not None else ld.center
    return c1, c2, best_val, best_k


def fixed_orientation(instance, theta: float, seed: int = 0) -> TwoCenterSolution:
    """Best restricted cover whose two groups are split by the projection
    order along direction theta; ties in projection broken by disk index."""
    disks = _cover_disks(instance)
    if not disks:
        raise ValueError("need at least one disk")
    tol = tolerance(_extent(list(disks)))
    c1, c2, r, _ = _fixed_orientation(disks, theta % math.pi, seed)
    return make_solution(disks, c1, c2, r, tol)


# ---------------------------------------------------------------------------
# orientation sampling schemes


def orientation_samples(
    instance, eps: float, seed: int = 0
) -> tuple[OrientationSample, ...]:
    """fixed_orientation at ceil(2 pi / eps) evenly spaced angles in [0, pi)."""
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must be in (0, 1]")
    disks = _cover_disks(instance)
    if not disks:
        raise ValueError("need at least one disk")
    tol = tolerance(_extent(list(disks)))
    m = math.ceil(TWO_PI / eps)
    out = []
    for j in range(m):
        th = j * math.pi / m
        c1, c2, r, k = _fixed_orientation(disks, th, seed)
        out.append(OrientationSample(th, k, make_solution(disks, c1, c2, r, tol)))
    return tuple(out)


def fptas_restricted(instance, eps: float, seed: int = 0) -> TwoCenterSolution:
    """Best sampled orientation; radius at most (1 + 4 sin eps) times the
    optimum.  For a plain (1 + eps) factor use fptas_restricted_scaled."""
    samples = orientation_samples(instance, eps, seed)
    best = min(samples, key=lambda s: (s.solution.r, s.angle))
    return best.solution


def fptas_restricted_scaled(instance, eps: float, seed: int = 0) -> TwoCenterSolution:
    """Radius at most (1 + eps) times the optimum, by running the raw
    orientation sampling at eps / 4 (since 4 sin(eps/4) <= eps)."""
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must be in (0, 1]")
    return fptas_restricted(instance, eps / 4.0, seed)


def fptas_restricted_fast(instance, eps: float, seed: int = 0) -> TwoCenterSolution:
    """(1 + eps)-approximation at a cost depending on eps, not n, beyond
    one pass: snap centers to a grid sized by the 6-approximation, keep the
    largest radius per cell, sample orientations on the rounded disks, and
    pad the radius by the worst snap displacement."""
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must be in (0, 1]")
    disks = _cover_disks(instance)
    if not disks:
        raise ValueError("need at least one disk")
    tol = tolerance(_extent(list(disks)))
    six = sixapprox_restricted(disks)
    if six.r <= 0.0:
        return six
    step = GRID_FACTOR * eps * six.r

    cells: dict[tuple[int, int], float] = {}
    for d in disks:
        key = (math.ceil(d.center.x / step), math.ceil(d.center.y / step))
        if d.radius > cells.get(key, -1.0):
            cells[key] = d.radius
    rounded = [
        Disk(Point(kx * step, ky * step), rad)
        for (kx, ky), rad in sorted(cells.items())
    ]

    inner = fptas_restricted(rounded, eps * INNER_EPS_FACTOR, seed)
    r = inner.r + math.sqrt(2.0) * step
    return make_solution(disks, inner.c1, inner.c2, r, tol)
