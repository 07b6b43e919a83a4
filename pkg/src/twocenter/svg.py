"""Standalone SVG figures: input disks stroked, solution disks dashed,
centers drawn as crosses."""

from __future__ import annotations

import math
from typing import Optional, Sequence

from .geom import Disk, Instance
from .solution import TwoCenterSolution


def _bounds(disks: Sequence[Disk]) -> tuple[float, float, float, float]:
    xlo = ylo = math.inf
    xhi = yhi = -math.inf
    for d in disks:
        xlo = min(xlo, d.center.x - d.radius)
        xhi = max(xhi, d.center.x + d.radius)
        ylo = min(ylo, d.center.y - d.radius)
        yhi = max(yhi, d.center.y + d.radius)
    if not math.isfinite(xlo):
        return -1.0, -1.0, 1.0, 1.0
    return xlo, ylo, xhi, yhi


def render_svg(
    instance,
    solution: Optional[TwoCenterSolution] = None,
    width: int = 640,
) -> str:
    disks = list(instance.disks if isinstance(instance, Instance) else instance)
    extras = list(solution.disks()) if solution is not None else []
    xlo, ylo, xhi, yhi = _bounds(disks + extras)
    span = max(xhi - xlo, yhi - ylo, 1e-9)
    pad = 0.05 * span
    xlo -= pad
    ylo -= pad
    xhi += pad
    yhi += pad
    scale = width / (xhi - xlo)
    height = max(int(round((yhi - ylo) * scale)), 1)

    def px(x: float) -> float:
        return (x - xlo) * scale

    def py(y: float) -> float:
        # svg y axis points down
        return (yhi - y) * scale

    stroke = max(width, height) / 640.0
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for d in disks:
        parts.append(
            f'<circle cx="{px(d.center.x):.2f}" cy="{py(d.center.y):.2f}" '
            f'r="{d.radius * scale:.2f}" fill="none" stroke="#333" '
            f'stroke-width="{1.5 * stroke:.2f}"/>'
        )
    if solution is not None:
        for d in extras:
            parts.append(
                f'<circle cx="{px(d.center.x):.2f}" cy="{py(d.center.y):.2f}" '
                f'r="{d.radius * scale:.2f}" fill="none" stroke="#c22" '
                f'stroke-width="{2.0 * stroke:.2f}" '
                f'stroke-dasharray="{8 * stroke:.1f} {5 * stroke:.1f}"/>'
            )
        arm = 6.0 * stroke
        for c in (solution.c1, solution.c2):
            x, y = px(c.x), py(c.y)
            parts.append(
                f'<path d="M {x - arm:.2f} {y:.2f} H {x + arm:.2f} '
                f'M {x:.2f} {y - arm:.2f} V {y + arm:.2f}" stroke="#c22" '
                f'stroke-width="{2.0 * stroke:.2f}" fill="none"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(path, instance, solution=None, width: int = 640) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(instance, solution, width))
