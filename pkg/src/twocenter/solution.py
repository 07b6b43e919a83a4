"""Result type shared by the covering solvers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .geom import Disk, Point, dist, farthest_point_in_disk_min2

IN_C1 = "in_C1"
IN_C2 = "in_C2"
SPLIT = "split"


@dataclass(frozen=True)
class TwoCenterSolution:
    """Two congruent disks of radius r at c1, c2 plus a per-disk tag.

    Tags: in_C1 / in_C2 when the input disk fits wholly inside that center's
    disk, split when it is only covered by the union of the two.
    """

    c1: Point
    c2: Point
    r: float
    certificate: tuple[str, ...] = ()

    def __post_init__(self):
        if self.r < 0.0:
            raise ValueError("solution radius must be nonnegative")

    def disks(self) -> tuple[Disk, Disk]:
        return Disk(self.c1, self.r), Disk(self.c2, self.r)


def classify(
    disks: Sequence[Disk], c1: Point, c2: Point, r: float, tol: float
) -> tuple[str, ...]:
    """Post hoc certificate: split only when neither containment holds."""
    tags = []
    for d in disks:
        if dist(c1, d.center) + d.radius <= r + tol:
            tags.append(IN_C1)
        elif dist(c2, d.center) + d.radius <= r + tol:
            tags.append(IN_C2)
        else:
            tags.append(SPLIT)
    return tuple(tags)


def make_solution(
    disks: Sequence[Disk], c1: Point, c2: Point, r: float, tol: float
) -> TwoCenterSolution:
    return TwoCenterSolution(c1, c2, max(r, 0.0), classify(disks, c1, c2, r, tol))


def coverage_residual(
    disks: Sequence[Disk], sol: TwoCenterSolution
) -> float:
    """Worst uncovered excess: <= 0 means the union covers every disk."""
    worst = -1e300
    for d in disks:
        v, _ = farthest_point_in_disk_min2(d, sol.c1, sol.c2)
        worst = max(worst, v - sol.r)
    return worst
