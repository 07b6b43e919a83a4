"""General two-center covering of a union of disks.

Find two congruent disks of minimal radius whose union contains every
input disk.  The decision problem at a fixed radius r enumerates the
four placements an optimal left disk C1 can take: concentric with an
input disk, internally tangent to two input disks, aligned through a
boundary point at distance 2r from its touching point, or rotating
around a single pivot disk.  The optimum is then found by bisection
between the largest input radius and a greedy 2-approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels as _k
from .geom import (
    TWO_PI,
    Disk,
    Instance,
    Point,
    _extent,
    circle_circle_intersection,
    disk_arrays,
    dist,
    normalize_disks,
    tolerance,
)
from .one_center import (
    smallest_disk_covering_crescents,
    smallest_enclosing_disk_of_disks,
    two_center_points,
)
from .solution import TwoCenterSolution, make_solution

# Grid constant for the approximation scheme: the snapping error 2*sqrt(2)
# times the grid step must stay well inside the eps budget.
GRID_FACTOR = 0.125

# Rotation sweep resolution for the pivot case of the decision procedure.
ROTATION_SAMPLES = 2048
ANGLE_REFINE_TOL = 1e-10


def _cover_disks(instance) -> tuple[Disk, ...]:
    if isinstance(instance, Instance):
        return normalize_disks(instance.disks, "covering")
    return normalize_disks(tuple(instance), "covering")


def coverage_radius(instance, c1: Point | tuple, c2: Point | tuple) -> float:
    """Smallest r making disks of radius r at c1, c2 cover the whole union."""
    disks = _cover_disks(instance)
    if not disks:
        return 0.0
    cx, cy, cr = disk_arrays(disks)
    return float(
        _k.coverage_radius_arrays(
            cx, cy, cr, float(c1[0]), float(c1[1]), float(c2[0]), float(c2[1])
        )
    )


def gonzalez_2approx(instance) -> TwoCenterSolution:
    """Greedy two-center: first center on disk one, second at the farthest
    point of the union, radius the resulting coverage.  Never worse than
    twice the optimum."""
    disks = _cover_disks(instance)
    if not disks:
        raise ValueError("need at least one disk")
    tol = tolerance(_extent(list(disks)))
    c1 = disks[0].center
    far = disks[0]
    far_v = -math.inf
    for d in disks:
        v = dist(c1, d.center) + d.radius
        if v > far_v:
            far_v = v
            far = d
    dx = far.center.x - c1.x
    dy = far.center.y - c1.y
    dd = math.hypot(dx, dy)
    if dd <= 0.0:
        ux, uy = 1.0, 0.0
    else:
        ux, uy = dx / dd, dy / dd
    c2 = Point(far.center.x + far.radius * ux, far.center.y + far.radius * uy)
    r = coverage_radius(disks, c1, c2)
    return make_solution(disks, c1, c2, r, tol)


# ---------------------------------------------------------------------------
# decision at a fixed radius


@dataclass(frozen=True)
class RotationInterval:
    """One maximal rotation range of C1 around a pivot disk over which the
    set of disks left uncovered by C1 stays constant.

    touched holds the ids of the first-entry and last-exit disks crossing
    the C1 circle at the interval midpoint (-1 when there are none); events
    are the (angle, disk id, "in"/"out") coverage transitions at the
    interval ends, sorted by angle.
    """

    pivot: int
    theta1: float
    theta2: float
    touched: tuple[int, int]
    events: tuple[tuple[float, int, str], ...]

    def __post_init__(self):
        if self.theta2 < self.theta1:
            raise ValueError("empty angle interval")
        angles = [e[0] for e in self.events]
        if angles != sorted(angles):
            raise ValueError("events out of order")


def _c1_at(piv: Disk, r: float, phi: float) -> Point:
    return Point(
        piv.center.x + (r - piv.radius) * math.cos(phi),
        piv.center.y + (r - piv.radius) * math.sin(phi),
    )


def _first_last_touched(disks, c1: Point, r: float, phi: float, tol: float):
    """Ids of the crossing disks met first and left last when walking the
    C1 circle clockwise from the touching point at angle phi + pi."""
    theta0 = phi + math.pi
    first_i = last_i = -1
    first_s = math.inf
    last_s = -math.inf
    for i, dk in enumerate(disks):
        d = dist(c1, dk.center)
        if d + dk.radius <= r + tol:
            continue
        if d <= abs(r - dk.radius) or d >= r + dk.radius:
            continue
        psi = math.atan2(dk.center.y - c1.y, dk.center.x - c1.x)
        ca = (d * d + r * r - dk.radius * dk.radius) / (2.0 * d * r)
        ca = min(1.0, max(-1.0, ca))
        alpha = math.acos(ca)
        s_hi = (theta0 - (psi - alpha)) % TWO_PI
        s_lo = (theta0 - (psi + alpha)) % TWO_PI
        if s_lo <= s_hi:
            enter, exit_ = s_lo, s_hi
        else:
            enter, exit_ = 0.0, TWO_PI
        if enter < first_s:
            first_s = enter
            first_i = i
        if exit_ > last_s:
            last_s = exit_
            last_i = i
    return first_i, last_i


def rotation_intervals(
    instance, r: float, pivot: int, samples: int = ROTATION_SAMPLES
) -> tuple[RotationInterval, ...]:
    """Partition of [0, 2pi) by the coverage transitions of C1 rotating
    around the given pivot disk, with transition angles isolated to
    ANGLE_REFINE_TOL by bisection."""
    disks = _cover_disks(instance)
    if r <= 0.0:
        raise ValueError("radius must be positive")
    if not 0 <= pivot < len(disks):
        raise ValueError("pivot out of range")
    tol = tolerance(_extent(list(disks)))
    piv = disks[pivot]

    phis = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    c1x = piv.center.x + (r - piv.radius) * np.cos(phis)
    c1y = piv.center.y + (r - piv.radius) * np.sin(phis)
    covered = np.empty((samples, len(disks)), dtype=bool)
    for b, dk in enumerate(disks):
        dd = np.hypot(c1x - dk.center.x, c1y - dk.center.y)
        covered[:, b] = dd + dk.radius <= r + tol

    events: list[tuple[float, int, str]] = []
    trans_i, trans_b = np.nonzero(covered != np.roll(covered, -1, axis=0))
    for i, b in zip(trans_i.tolist(), trans_b.tolist()):
        a = float(phis[i])
        c = a + TWO_PI / samples
        va = bool(covered[i, b])
        dk = disks[b]
        while c - a > ANGLE_REFINE_TOL:
            m = 0.5 * (a + c)
            vm = dist(_c1_at(piv, r, m), dk.center) + dk.radius <= r + tol
            if vm == va:
                a = m
            else:
                c = m
        ang = 0.5 * (a + c) % TWO_PI
        events.append((ang, b, "out" if va else "in"))
    events.sort()

    out: list[RotationInterval] = []
    if not events:
        mid = math.pi
        out.append(
            RotationInterval(
                pivot, 0.0, TWO_PI,
                _first_last_touched(disks, _c1_at(piv, r, mid), r, mid, tol),
                (),
            )
        )
        return tuple(out)
    for i, ev in enumerate(events):
        nxt = events[(i + 1) % len(events)]
        t1 = ev[0]
        t2 = nxt[0] if nxt[0] > t1 else nxt[0] + TWO_PI
        mid = 0.5 * (t1 + t2) % TWO_PI
        inside = tuple(e for e in (ev, nxt) if t1 <= e[0] <= t2)
        out.append(
            RotationInterval(
                pivot, t1, t2,
                _first_last_touched(disks, _c1_at(piv, r, mid), r, mid, tol),
                inside,
            )
        )
    return tuple(out)


def _second_center(
    disks, c1: Point, r: float, tol: float
) -> Optional[Point]:
    """Center of a radius-r disk covering everything C1 misses, or None."""
    clip = Disk(c1, r)
    crescents: list[tuple[Disk, Disk]] = []
    whole: list[Disk] = []
    for d in disks:
        if clip.contains_disk(d, tol):
            continue
        if dist(c1, d.center) >= r + d.radius - tol:
            whole.append(d)
        else:
            crescents.append((d, clip))
    if not crescents and not whole:
        return c1
    cover = smallest_disk_covering_crescents(crescents, whole)
    if cover.radius <= r + tol:
        return cover.center
    return None


def _refine_margin(fun, lo: float, hi: float, iters: int = 60):
    """Golden-section minimize fun over [lo, hi]; fun returns (value, x, y).
    Tracks the best full evaluation seen."""
    inv = 0.6180339887498949
    a, b = lo, hi
    x1 = b - inv * (b - a)
    x2 = a + inv * (b - a)
    f1 = fun(x1)
    f2 = fun(x2)
    best = min((f1, x1), (f2, x2), key=lambda t: t[0][0])
    for _ in range(iters):
        if f1[0] <= f2[0]:
            b, x2, f2 = x2, x1, f1
            x1 = b - inv * (b - a)
            f1 = fun(x1)
            cand = (f1, x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + inv * (b - a)
            f2 = fun(x2)
            cand = (f2, x2)
        if cand[0][0] < best[0][0]:
            best = cand
    return best


def decide_cover(instance, r: float, seed: int = 0) -> Optional[TwoCenterSolution]:
    """A valid two-center cover of radius exactly r, or None.

    Tries the cheap placements first: C1 concentric with an input disk,
    then internally tangent to two disks, then aligned through a boundary
    point, and finally the rotation sweep around each pivot disk.
    """
    if r <= 0.0:
        raise ValueError("radius must be positive")
    disks = _cover_disks(instance)
    if not disks:
        return TwoCenterSolution(Point(0.0, 0.0), Point(0.0, 0.0), r, ())
    tol = tolerance(_extent(list(disks)))
    if r + tol < max(d.radius for d in disks):
        return None
    n = len(disks)

    def finish(c1: Point, c2: Point) -> TwoCenterSolution:
        return make_solution(disks, c1, c2, r, tol)

    # (a) C1 concentric with one input disk
    for d in disks:
        c2 = _second_center(disks, d.center, r, tol)
        if c2 is not None:
            return finish(d.center, c2)

    # (b) C1 internally tangent to two input disks
    for i in range(n):
        for j in range(i + 1, n):
            try:
                spots = circle_circle_intersection(
                    Disk(disks[i].center, r - disks[i].radius),
                    Disk(disks[j].center, r - disks[j].radius),
                    tol,
                )
            except ValueError:
                continue
            for c1 in spots:
                c2 = _second_center(disks, c1, r, tol)
                if c2 is not None:
                    return finish(c1, c2)

    # (c) C1 tangent to a disk with the far end of its diameter on another
    # disk's boundary
    for i in range(n):
        ring = Disk(disks[i].center, 2.0 * r - disks[i].radius)
        for j in range(n):
            if j == i:
                continue
            try:
                spots = circle_circle_intersection(ring, disks[j], tol)
            except ValueError:
                continue
            for t in spots:
                ux = (t.x - disks[i].center.x) / ring.radius
                uy = (t.y - disks[i].center.y) / ring.radius
                c1 = Point(
                    disks[i].center.x + (r - disks[i].radius) * ux,
                    disks[i].center.y + (r - disks[i].radius) * uy,
                )
                c2 = _second_center(disks, c1, r, tol)
                if c2 is not None:
                    return finish(c1, c2)

    # (d) C1 rotating around a pivot disk; sample the rotation, then refine
    # the most promising angles and the coverage transition angles
    cx, cy, cr = disk_arrays(disks)
    phis = np.linspace(0.0, TWO_PI, ROTATION_SAMPLES, endpoint=False)
    step = TWO_PI / ROTATION_SAMPLES
    for piv in range(n):
        margins, c2xs, c2ys = _k.case_d_scan(cx, cy, cr, piv, r, phis, seed, tol)
        order = np.argsort(margins, kind="stable")
        idx0 = int(order[0])
        if margins[idx0] <= tol:
            c1 = _c1_at(disks[piv], r, float(phis[idx0]))
            return finish(c1, Point(float(c2xs[idx0]), float(c2ys[idx0])))

        def margin_at(phi, _piv=piv):
            m, ax, ay = _k.case_d_margin(cx, cy, cr, _piv, r, phi, seed, tol)
            return float(m), float(ax), float(ay)

        cand_angles: list[float] = []
        local = [
            int(i)
            for i in range(ROTATION_SAMPLES)
            if margins[i] <= margins[i - 1]
            and margins[i] <= margins[(i + 1) % ROTATION_SAMPLES]
        ]
        local.sort(key=lambda i: margins[i])
        cand_angles.extend(float(phis[i]) for i in local[:8])
        for itv in rotation_intervals(disks, r, piv):
            for ang, _, _ in itv.events:
                cand_angles.append(ang)
        seen = set()
        for ang in cand_angles:
            key = round(ang / step)
            if key in seen:
                continue
            seen.add(key)
            (mg, ax, ay), phi_best = _refine_margin(
                margin_at, ang - step, ang + step
            )
            if mg <= tol:
                c1 = _c1_at(disks[piv], r, phi_best)
                return finish(c1, Point(ax, ay))
    return None


# ---------------------------------------------------------------------------
# optimization and approximation


def solve_exact_general(instance, tol: float = 1e-6, seed: int = 0) -> TwoCenterSolution:
    """Minimal common radius by bisection of decide_cover between the
    largest input radius and the greedy upper bound."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    disks = _cover_disks(instance)
    if not disks:
        raise ValueError("need at least one disk")
    inst_tol = tolerance(_extent(list(disks)))
    g = gonzalez_2approx(disks)
    hi = g.r
    lo = max(max(d.radius for d in disks), 0.5 * g.r)
    witness = g
    while hi - lo > tol * (1.0 + hi):
        mid = 0.5 * (lo + hi)
        sol = decide_cover(disks, mid, seed=seed)
        if sol is not None:
            hi = mid
            witness = sol
        else:
            lo = mid
    r_fin = coverage_radius(disks, witness.c1, witness.c2)
    return make_solution(disks, witness.c1, witness.c2, r_fin, inst_tol)


def fptas_general(instance, eps: float, seed: int = 0) -> TwoCenterSolution:
    """Cover within a (1 + eps) factor of optimal by snapping disks to a
    grid, sampling the surviving boundary circles, and covering the samples
    exactly.

    Two disks that cover the full boundary circle of a disk also cover its
    interior (each miss would confine the covering arcs to two open half
    planes through the missed point, which cannot exhaust all directions),
    so it is enough to track boundaries.  Samples are spaced so that chord
    gaps stay below 2*sqrt(2)*delta; that gap plus the center snap error is
    exactly what the grid constant budgets for.
    """
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must be in (0, 1]")
    disks = _cover_disks(instance)
    if not disks:
        raise ValueError("need at least one disk")
    tol = tolerance(_extent(list(disks)))
    g = gonzalez_2approx(disks)
    if g.r <= 0.0:
        return g
    delta = GRID_FACTOR * eps * g.r

    cells: dict[tuple[int, int], float] = {}
    for d in disks:
        key = (math.ceil(d.center.x / delta), math.ceil(d.center.y / delta))
        if d.radius > cells.get(key, -1.0):
            cells[key] = d.radius

    pts: set[tuple[float, float]] = set()
    for (kx, ky), rad in sorted(cells.items()):
        cxx = kx * delta
        cyy = ky * delta
        pts.add((cxx, cyy))
        if rad <= 0.0:
            continue
        # chord gap 2*rad*sin(pi/k) <= 2*pi*rad/k <= 2*sqrt(2)*delta
        k = max(4, math.ceil(math.pi * rad / (math.sqrt(2.0) * delta)))
        for j in range(k):
            ang = TWO_PI * j / k
            pts.add((cxx + rad * math.cos(ang), cyy + rad * math.sin(ang)))

    base = two_center_points(sorted(pts), seed=seed)
    # reported radius is the minimal certificate for the chosen centers; it
    # never exceeds the sample radius plus snap and chord-gap slack, which
    # the grid constant keeps inside the eps budget
    cov = coverage_radius(disks, base.c1, base.c2)
    return make_solution(disks, base.c1, base.c2, cov, tol)
