"""Planar primitives: points, disks, arcs, instances, and circle algebra.

Coordinates are plain floats.  Every predicate that compares distances uses a
tolerance scaled to the extent of the data involved; `tolerance` is the single
place where that scaling lives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from ._kernels import equal_offset_circumcenter, farthest_min2

TOL = 1e-9
ANGLE_TOL = 1e-9
TWO_PI = 2.0 * math.pi


def tolerance(scale: float) -> float:
    """Absolute comparison tolerance for data of the given extent."""
    return TOL * (1.0 + scale)


class Point(NamedTuple):
    x: float
    y: float


def dist(a: Point | tuple, b: Point | tuple) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def canonical_angle(a: float) -> float:
    """Reduce an angle to [0, 2*pi), snapping near-2*pi values to 0."""
    a = math.fmod(a, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if TWO_PI - a <= ANGLE_TOL:
        a = 0.0
    return a


@dataclass(frozen=True)
class Disk:
    center: Point
    radius: float

    def __post_init__(self):
        x, y = self.center
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(self.radius)):
            raise ValueError("disk coordinates must be finite")
        if self.radius < 0.0:
            raise ValueError("disk radius must be nonnegative")
        if not isinstance(self.center, Point):
            object.__setattr__(self, "center", Point(float(x), float(y)))

    def contains_point(self, p: Point | tuple, tol: float = TOL) -> bool:
        return dist(self.center, p) <= self.radius + tol

    def contains_disk(self, other: "Disk", tol: float = TOL) -> bool:
        return dist(self.center, other.center) + other.radius <= self.radius + tol

    def inflate(self, delta: float) -> "Disk":
        return Disk(self.center, self.radius + delta)

    def point_at(self, angle: float) -> Point:
        return Point(
            self.center.x + self.radius * math.cos(angle),
            self.center.y + self.radius * math.sin(angle),
        )


def disk(x: float, y: float, r: float) -> Disk:
    """Shorthand constructor used heavily in tests."""
    return Disk(Point(float(x), float(y)), float(r))


@dataclass(frozen=True)
class ArcSegment:
    """Directed arc on the boundary of `disk` from angle `start`, sweeping
    `sweep` radians (positive counterclockwise).  A full circle has
    sweep 2*pi."""

    disk: Disk
    start: float
    sweep: float

    @property
    def end(self) -> float:
        return canonical_angle(self.start + self.sweep)

    def midpoint(self) -> Point:
        return self.disk.point_at(self.start + 0.5 * self.sweep)


def circle_circle_intersection(a: Disk, b: Disk, tol: float = TOL) -> tuple[Point, ...]:
    """Intersection points of the two boundary circles, ordered by angle
    around the center of `a`.  Tangencies collapse to a single point.

    Raises ValueError for coincident circles (infinitely many points).
    """
    dx = b.center.x - a.center.x
    dy = b.center.y - a.center.y
    d = math.hypot(dx, dy)
    if d <= tol and abs(a.radius - b.radius) <= tol:
        raise ValueError("coincident circles intersect everywhere")
    if d > a.radius + b.radius + tol:
        return ()
    if d < abs(a.radius - b.radius) - tol:
        return ()
    if d <= tol:
        return ()
    x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d)
    h2 = a.radius * a.radius - x * x
    h = math.sqrt(h2) if h2 > 0.0 else 0.0
    ux, uy = dx / d, dy / d
    px = a.center.x + x * ux
    py = a.center.y + x * uy
    if h <= tol:
        return (Point(px, py),)
    p1 = Point(px - h * uy, py + h * ux)
    p2 = Point(px + h * uy, py - h * ux)
    a1 = canonical_angle(math.atan2(p1.y - a.center.y, p1.x - a.center.x))
    a2 = canonical_angle(math.atan2(p2.y - a.center.y, p2.x - a.center.x))
    if a1 <= a2:
        return (p1, p2)
    return (p2, p1)


def aw_circumcenter(
    d1: Disk, d2: Disk, d3: Disk, tol: float = TOL
) -> tuple[tuple[Point, float], ...]:
    """Points equidistant from three circles after equal inflation.

    Returns every (p, delta) with delta >= 0 and |p - c_i| = r_i + delta for
    all three disks.  Collinear centers are solved by the reduced system;
    inconsistent or fully degenerate inputs give an empty result.
    """
    cnt, ta, xa, ya, tb, xb, yb = equal_offset_circumcenter(
        d1.center.x, d1.center.y, d1.radius,
        d2.center.x, d2.center.y, d2.radius,
        d3.center.x, d3.center.y, d3.radius,
        tol,
    )
    out = []
    for t, x, y in ((ta, xa, ya), (tb, xb, yb))[:cnt]:
        if t < -tol:
            continue
        out.append((Point(x, y), max(t, 0.0)))
    out.sort(key=lambda pt: (pt[1], pt[0].x, pt[0].y))
    return tuple(out)


def farthest_point_in_disk_min2(
    d: Disk, c1: Point | tuple, c2: Point | tuple
) -> tuple[float, Point]:
    """Maximize min(|x - c1|, |x - c2|) over x in the disk.

    The maximum is attained on the boundary, at an antipode of one center or
    where the bisector of the centers crosses the boundary; all candidates
    are checked.  Returns (value, achieving point).
    """
    v, px, py = farthest_min2(
        d.center.x, d.center.y, d.radius, c1[0], c1[1], c2[0], c2[1]
    )
    return v, Point(px, py)


def normalize_disks(
    disks: Iterable[Disk], mode: str, tol: float | None = None
) -> tuple[Disk, ...]:
    """Drop disks made redundant by containment, preserving input order.

    mode "piercing": a disk containing another can be dropped (piercing the
    smaller pierces it too).  mode "covering": a disk contained in another
    can be dropped.  mode "raw": disks kept as given.  Exact duplicates are
    removed in every mode except raw, keeping the earlier one.
    """
    items = list(disks)
    if mode == "raw":
        return tuple(items)
    if mode not in ("piercing", "covering"):
        raise ValueError("mode must be piercing, covering or raw")
    if tol is None:
        tol = tolerance(_extent(items))
    kept: list[Disk] = []
    for d in items:
        drop = False
        survivors = []
        for k in kept:
            if mode == "piercing":
                if d.contains_disk(k, tol):
                    drop = True  # d redundant: piercing k pierces d
                elif k.contains_disk(d, tol):
                    continue  # k redundant
            else:
                if k.contains_disk(d, tol):
                    drop = True
                elif d.contains_disk(k, tol):
                    continue
            survivors.append(k)
        if drop:
            continue
        kept = survivors
        kept.append(d)
    return tuple(kept)


def _extent(disks: list[Disk]) -> float:
    if not disks:
        return 0.0
    xlo = min(d.center.x - d.radius for d in disks)
    xhi = max(d.center.x + d.radius for d in disks)
    ylo = min(d.center.y - d.radius for d in disks)
    yhi = max(d.center.y + d.radius for d in disks)
    return math.hypot(xhi - xlo, yhi - ylo)


@dataclass(frozen=True)
class Instance:
    """A collection of disks plus the normalization applied on construction.

    The stored `disks` are the normalized ones; `raw_disks` keeps the input.
    """

    raw_disks: tuple[Disk, ...]
    mode: str = "raw"
    disks: tuple[Disk, ...] = field(init=False)

    def __post_init__(self):
        raw = tuple(self.raw_disks)
        object.__setattr__(self, "raw_disks", raw)
        object.__setattr__(self, "disks", normalize_disks(raw, self.mode))

    @property
    def n(self) -> int:
        return len(self.disks)

    @property
    def diameter(self) -> float:
        return _extent(list(self.disks))

    @property
    def tol(self) -> float:
        return tolerance(self.diameter)

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        cx = np.array([d.center.x for d in self.disks], dtype=np.float64)
        cy = np.array([d.center.y for d in self.disks], dtype=np.float64)
        cr = np.array([d.radius for d in self.disks], dtype=np.float64)
        return cx, cy, cr


def disk_arrays(disks: Iterable[Disk]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    ds = list(disks)
    cx = np.array([d.center.x for d in ds], dtype=np.float64)
    cy = np.array([d.center.y for d in ds], dtype=np.float64)
    cr = np.array([d.radius for d in ds], dtype=np.float64)
    return cx, cy, cr
