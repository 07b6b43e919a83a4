"""Single-center solvers and disk-intersection regions.

The region type represents a nonempty intersection of disks as a cyclic,
counterclockwise list of boundary arcs.  Clipping a region by one more disk
is the workhorse: the surviving parts of the old boundary keep their cyclic
order and the gaps are closed with arcs of the new circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import _kernels as _k
from .geom import (
    ANGLE_TOL,
    TWO_PI,
    ArcSegment,
    Disk,
    Point,
    canonical_angle,
    circle_circle_intersection,
    disk_arrays,
    dist,
    tolerance,
)
from .solution import TwoCenterSolution, make_solution


def smallest_enclosing_disk_of_disks(disks: Sequence[Disk], seed: int = 0) -> Disk:
    """Minimal disk containing every input disk."""
    if not disks:
        raise ValueError("need at least one disk")
    cx, cy, cr = disk_arrays(disks)
    tol = tolerance(_scale(disks))
    x, y, r = _k.sed_disks(cx, cy, cr, seed, tol)
    return Disk(Point(float(x), float(y)), float(max(r, 0.0)))


def smallest_enclosing_disk_of_points(
    points: Sequence[tuple[float, float]], seed: int = 0
) -> Disk:
    if not points:
        raise ValueError("need at least one point")
    px = np.array([p[0] for p in points], dtype=np.float64)
    py = np.array([p[1] for p in points], dtype=np.float64)
    zeros = np.zeros(len(points), dtype=np.float64)
    scale = float(np.max(np.abs(px)) + np.max(np.abs(py)))
    x, y, r = _k.sed_disks(px, py, zeros, seed, 1e-9 * (1.0 + scale))
    return Disk(Point(float(x), float(y)), float(max(r, 0.0)))


def smallest_intersecting_disk(
    disks: Sequence[Disk], seed: int = 0
) -> tuple[Point, float]:
    """Center minimizing the radius needed to touch every disk.

    The returned radius is zero exactly when all disks already share a
    common point.
    """
    if not disks:
        raise ValueError("need at least one disk")
    cx, cy, cr = disk_arrays(disks)
    tol = tolerance(_scale(disks))
    x, y, v = _k.aw_center_disks(cx, cy, cr, seed, tol)
    return Point(float(x), float(y)), float(max(v, 0.0))


def _scale(disks: Sequence[Disk]) -> float:
    hi = 0.0
    for d in disks:
        hi = max(hi, abs(d.center.x) + d.radius, abs(d.center.y) + d.radius)
    return hi


# ---------------------------------------------------------------------------
# regions


@dataclass(frozen=True)
class ConvexArcRegion:
    """Intersection of disks: empty, a single point, or bounded by ccw arcs.

    `constraints` lists the disks whose boundaries still support the region;
    the region equals the intersection of exactly these disks (redundant
    constraints are pruned during clipping).
    """

    arcs: tuple[ArcSegment, ...] = ()
    constraints: tuple[Disk, ...] = ()
    empty: bool = False
    point: Optional[Point] = None

    @classmethod
    def from_disk(cls, d: Disk) -> "ConvexArcRegion":
        if d.radius <= 0.0:
            return cls(point=d.center, constraints=(d,))
        return cls(arcs=(ArcSegment(d, 0.0, TWO_PI),), constraints=(d,))

    @classmethod
    def empty_region(cls) -> "ConvexArcRegion":
        return cls(empty=True)

    @property
    def is_point(self) -> bool:
        return self.point is not None

    def contains(self, p: Point | tuple, tol: float) -> bool:
        if self.empty:
            return False
        if self.point is not None:
            return dist(self.point, p) <= tol
        return all(c.contains_point(p, tol) for c in self.constraints)

    def vertices(self) -> tuple[Point, ...]:
        if self.empty or self.point is not None or not self.arcs:
            return ()
        return tuple(a.disk.point_at(a.start) for a in self.arcs)

    def witness(self) -> Optional[Point]:
        """A deterministic point inside the region, if any."""
        if self.empty:
            return None
        if self.point is not None:
            return self.point
        if len(self.arcs) == 1:
            return self.arcs[0].disk.center
        vs = self.vertices()
        x = sum(v.x for v in vs) / len(vs)
        y = sum(v.y for v in vs) / len(vs)
        return Point(x, y)

    def clip(self, d: Disk, tol: float) -> "ConvexArcRegion":
        """Intersect with one more disk."""
        if self.empty:
            return self
        if self.point is not None:
            if d.contains_point(self.point, tol):
                return ConvexArcRegion(
                    point=self.point, constraints=self.constraints + (d,)
                )
            return ConvexArcRegion.empty_region()
        if d.radius <= tol:
            if self.contains(d.center, tol):
                return ConvexArcRegion(point=d.center, constraints=self.constraints + (d,))
            return ConvexArcRegion.empty_region()

        pieces: list[ArcSegment] = []
        touch: Optional[Point] = None
        any_inside = False
        for arc in self.arcs:
            kept, tpoint = _arc_inside_disk(arc, d, tol)
            if kept:
                any_inside = True
                pieces.extend(kept)
            elif tpoint is not None and touch is None:
                touch = tpoint

        if not any_inside:
            if self.contains(d.center, tol):
                # new disk sits wholly inside the region
                return ConvexArcRegion.from_disk(d)
            if touch is not None and self.contains(touch, tol):
                return ConvexArcRegion(point=touch, constraints=self.constraints + (d,))
            return ConvexArcRegion.empty_region()

        # drop zero-length slivers unless nothing else remains
        real = [p for p in pieces if p.sweep > ANGLE_TOL]
        if not real:
            pt = pieces[0].disk.point_at(pieces[0].start)
            return ConvexArcRegion(point=pt, constraints=self.constraints + (d,))

        if len(real) == len(self.arcs) and all(
            r is a for r, a in zip(real, self.arcs)
        ):
            # every arc survived untouched: the new disk is redundant
            return self

        out: list[ArcSegment] = []
        for i, piece in enumerate(real):
            out.append(piece)
            nxt = real[(i + 1) % len(real)]
            end_pt = piece.disk.point_at(piece.start + piece.sweep)
            start_pt = nxt.disk.point_at(nxt.start)
            if dist(end_pt, start_pt) <= tol:
                continue
            a1 = math.atan2(end_pt.y - d.center.y, end_pt.x - d.center.x)
            a2 = math.atan2(start_pt.y - d.center.y, start_pt.x - d.center.x)
            sweep = (a2 - a1) % TWO_PI
            out.append(ArcSegment(d, canonical_angle(a1), sweep))
        out = _merge_continuous(out)

        support = {id(a.disk): a.disk for a in out}
        constraints = tuple(
            c for c in self.constraints + (d,) if id(c) in support or _supports(c, out, tol)
        )
        return ConvexArcRegion(arcs=tuple(out), constraints=constraints)


def _supports(c: Disk, arcs: list[ArcSegment], tol: float) -> bool:
    return any(a.disk == c for a in arcs)


def _merge_continuous(arcs: list[ArcSegment]) -> list[ArcSegment]:
    """Fuse consecutive pieces of the same circle split only by the
    parameter origin, including across the cyclic wrap."""
    if len(arcs) < 2:
        return arcs
    merged = list(arcs)
    changed = True
    while changed and len(merged) > 1:
        changed = False
        for i in range(len(merged)):
            j = (i + 1) % len(merged)
            a, b = merged[i], merged[j]
            if a.disk is not b.disk and a.disk != b.disk:
                continue
            gap = (b.start - (a.start + a.sweep)) % TWO_PI
            if gap > ANGLE_TOL and TWO_PI - gap > ANGLE_TOL:
                continue
            total = a.sweep + b.sweep
            if total >= TWO_PI - ANGLE_TOL:
                if len(merged) == 2:
                    return [ArcSegment(a.disk, 0.0, TWO_PI)]
                continue
            merged[i] = ArcSegment(a.disk, a.start, total)
            del merged[j]
            changed = True
            break
    return merged


def _arc_inside_disk(
    arc: ArcSegment, d: Disk, tol: float
) -> tuple[list[ArcSegment], Optional[Point]]:
    """Parts of the arc inside disk d, plus a tangency point if they only
    touch.  Returned pieces keep the original circle and direction."""
    s = arc.disk
    dx = d.center.x - s.center.x
    dy = d.center.y - s.center.y
    dd = math.hypot(dx, dy)
    # circle of the arc entirely inside d
    if dd + s.radius <= d.radius + tol:
        return [arc], None
    # circle of the arc entirely outside d (disjoint or d strictly inside s)
    if dd - s.radius > d.radius + tol or dd + d.radius < s.radius - tol:
        return [], None
    psi = math.atan2(dy, dx)
    ca = (dd * dd + s.radius * s.radius - d.radius * d.radius) / (2.0 * dd * s.radius)
    if ca > 1.0:
        ca = 1.0
    elif ca < -1.0:
        ca = -1.0
    phi = math.acos(ca)
    if phi <= ANGLE_TOL:
        # external or internal tangency: a single boundary point
        t = (psi - arc.start) % TWO_PI
        if t <= arc.sweep + ANGLE_TOL:
            return [], s.point_at(psi)
        return [], None
    # inside-d interval on the arc's circle is [psi - phi, psi + phi];
    # shift into the arc's parameter frame [0, sweep]
    lo = ((psi - phi) - arc.start) % TWO_PI
    length = 2.0 * phi
    pieces = []
    first_hi = min(lo + length, TWO_PI)
    a0 = lo
    a1 = min(first_hi, arc.sweep)
    if a1 > a0:
        pieces.append(ArcSegment(s, canonical_angle(arc.start + a0), a1 - a0))
    if lo + length > TWO_PI:
        b1 = min(lo + length - TWO_PI, arc.sweep)
        if b1 > 0.0:
            pieces.append(ArcSegment(s, canonical_angle(arc.start), b1))
    # keep pieces ordered along the arc parameter
    pieces.sort(key=lambda p: ((p.start - arc.start) % TWO_PI))
    return pieces, None


def common_intersection(disks: Sequence[Disk], tol: float | None = None) -> ConvexArcRegion:
    """Region of points common to all disks."""
    if not disks:
        raise ValueError("need at least one disk")
    if tol is None:
        tol = tolerance(_scale(disks))
    region = ConvexArcRegion.from_disk(disks[0])
    for d in disks[1:]:
        region = region.clip(d, tol)
        if region.empty:
            break
    return region


def regions_nonempty(
    regions: Sequence[ConvexArcRegion], tol: float
) -> Optional[Point]:
    """Witness point in the intersection of all regions, or None."""
    if not regions:
        return None
    current = regions[0]
    for other in regions[1:]:
        if current.empty or other.empty:
            return None
        if other.is_point:
            if current.contains(other.point, tol):
                current = other
                continue
            return None
        if current.is_point:
            if all(c.contains_point(current.point, tol) for c in other.constraints):
                continue
            return None
        for c in other.constraints:
            current = current.clip(c, tol)
            if current.empty:
                return None
    return current.witness()


# ---------------------------------------------------------------------------
# covering crescents


def smallest_disk_covering_crescents(
    crescents: Sequence[tuple[Disk, Disk]],
    whole_disks: Sequence[Disk],
    iters: int = 52,
) -> Disk:
    """Minimal disk containing the whole disks and every crescent D minus C.

    The farthest point of each constraint from a candidate center p has a
    closed form (antipodes and crossing points), so the radius needed at p is
    a convex function minimized by nested golden-section search.
    """
    if not crescents and not whole_disks:
        raise ValueError("need at least one constraint")
    wx, wy, wr = disk_arrays([w for w in whole_disks])
    m = len(crescents)
    dx_ = np.empty(m)
    dy_ = np.empty(m)
    dr_ = np.empty(m)
    ox = np.empty(m)
    oy = np.empty(m)
    orr = np.empty(m)
    e1x = np.zeros(m)
    e1y = np.zeros(m)
    e2x = np.zeros(m)
    e2y = np.zeros(m)
    ne = np.zeros(m, dtype=np.int64)
    scale = _scale([c[0] for c in crescents] + list(whole_disks))
    tol = tolerance(scale)
    for i, (dsk, clip) in enumerate(crescents):
        if clip.contains_disk(dsk, -tol):
            raise ValueError("crescent disk lies entirely inside its clip disk")
        dx_[i], dy_[i], dr_[i] = dsk.center.x, dsk.center.y, dsk.radius
        ox[i], oy[i], orr[i] = clip.center.x, clip.center.y, clip.radius
        try:
            pts = circle_circle_intersection(dsk, clip, tol)
        except ValueError:
            pts = ()
        ne[i] = len(pts)
        if len(pts) >= 1:
            e1x[i], e1y[i] = pts[0]
        if len(pts) >= 2:
            e2x[i], e2y[i] = pts[1]
    xs_lo, xs_hi, ys_lo, ys_hi = _material_bbox(crescents, whole_disks)
    r, px, py = _k.crescent_cover_golden(
        wx, wy, wr, dx_, dy_, dr_, ox, oy, orr,
        e1x, e1y, e2x, e2y, ne, xs_lo, xs_hi, ys_lo, ys_hi, iters, tol,
    )
    return Disk(Point(float(px), float(py)), float(max(r, 0.0)))


def _material_bbox(crescents, whole_disks):
    xs_lo = ys_lo = math.inf
    xs_hi = ys_hi = -math.inf
    for d in [c[0] for c in crescents] + list(whole_disks):
        xs_lo = min(xs_lo, d.center.x - d.radius)
        xs_hi = max(xs_hi, d.center.x + d.radius)
        ys_lo = min(ys_lo, d.center.y - d.radius)
        ys_hi = max(ys_hi, d.center.y + d.radius)
    return xs_lo, xs_hi, ys_lo, ys_hi


# ---------------------------------------------------------------------------
# exact two-center of points


def two_center_points(
    points: Sequence[tuple[float, float]],
    seed: int = 0,
    gamma: float = 1e-7,
) -> TwoCenterSolution:
    """Two congruent disks of minimal common radius covering the points.

    An optimal bipartition is linearly separable, so sweeping the
    perpendicular of every pair direction (jittered both ways to realise tie
    orders) and binary-searching the prefix/suffix radius crossover visits an
    optimal split.
    """
    if not points:
        raise ValueError("need at least one point")
    px = np.array([p[0] for p in points], dtype=np.float64)
    py = np.array([p[1] for p in points], dtype=np.float64)
    scale = float(np.max(np.abs(px)) + np.max(np.abs(py)))
    tol = 1e-9 * (1.0 + scale)
    r, x1, y1, x2, y2 = _k.two_center_points_kernel(px, py, gamma, seed, tol)
    c1 = Point(float(x1), float(y1))
    c2 = Point(float(x2), float(y2))
    disks = [Disk(Point(float(a), float(b)), 0.0) for a, b in zip(px, py)]
    return make_solution(disks, c1, c2, float(max(r, 0.0)), tol)
