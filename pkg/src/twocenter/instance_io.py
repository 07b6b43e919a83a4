"""Plain-text instance files, seeded generators and CSV run reports.

The instance format is a header line ``disks <n>`` followed by n lines
``<x> <y> <r>``; blank lines and ``#`` comments are skipped.  Values are
written with 12 significant digits so files round-trip through parse and
serialize.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geom import Disk, Instance, Point

CSV_HEADER = "problem,algorithm,n,eps,radius,c1x,c1y,c2x,c2y,seed"


def parse_instance(text: str) -> Instance:
    """Instance from file text; malformed input reports the line number."""
    expected: Optional[int] = None
    disks: list[Disk] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if expected is None:
            if len(parts) != 2 or parts[0] != "disks":
                raise ValueError(f"line {lineno}: expected header 'disks <n>'")
            try:
                expected = int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: bad disk count {parts[1]!r}")
            if expected < 0:
                raise ValueError(f"line {lineno}: negative disk count")
            continue
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected '<x> <y> <r>'")
        try:
            x, y, r = (float(p) for p in parts)
        except ValueError:
            raise ValueError(f"line {lineno}: bad number")
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(r)):
            raise ValueError(f"line {lineno}: values must be finite")
        if r < 0:
            raise ValueError(f"line {lineno}: negative radius")
        if len(disks) == expected:
            raise ValueError(f"line {lineno}: more disks than declared")
        disks.append(Disk(Point(x, y), r))
    if expected is None:
        raise ValueError("line 1: missing 'disks <n>' header")
    if len(disks) != expected:
        raise ValueError(f"declared {expected} disks, found {len(disks)}")
    return Instance(tuple(disks))


def serialize_instance(instance) -> str:
    disks = instance.disks if isinstance(instance, Instance) else tuple(instance)
    lines = [f"disks {len(disks)}"]
    for d in disks:
        lines.append(f"{d.center.x:.12g} {d.center.y:.12g} {d.radius:.12g}")
    return "\n".join(lines) + "\n"


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def save_instance(path, instance) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(instance))


def generate(n: int, seed: int, box: float = 20.0, r_max: float = 1.5) -> Instance:
    """Uniform centers in a box of the given side around the origin, radii
    uniform in (0, r_max]; identical per seed."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if box <= 0 or r_max <= 0:
        raise ValueError("box and r_max must be positive")
    rng = np.random.default_rng(seed)
    xs = rng.uniform(-0.5 * box, 0.5 * box, size=n)
    ys = rng.uniform(-0.5 * box, 0.5 * box, size=n)
    # 1 - uniform[0,1) lands in (0,1], keeping the radius positive
    rs = r_max * (1.0 - rng.uniform(0.0, 1.0, size=n))
    return Instance(
        tuple(
            Disk(Point(float(x), float(y)), float(r))
            for x, y, r in zip(xs, ys, rs)
        )
    )


@dataclass(frozen=True)
class RunReport:
    """One solver run, serialized as a CSV row.

    wall_time is kept for logging but never enters the row, so reruns with
    the same seed stay byte-identical.
    """

    problem: str
    algorithm: str
    n: int
    eps: Optional[float]
    radius: float
    c1: Point
    c2: Point
    seed: int
    wall_time: float = 0.0

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")

    def csv_row(self) -> str:
        eps_s = "" if self.eps is None else f"{self.eps:.12g}"
        return (
            f"{self.problem},{self.algorithm},{self.n},{eps_s},"
            f"{self.radius:.12g},{self.c1.x:.12g},{self.c1.y:.12g},"
            f"{self.c2.x:.12g},{self.c2.y:.12g},{self.seed}"
        )
