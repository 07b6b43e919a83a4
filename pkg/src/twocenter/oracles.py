"""Slow reference solvers used to validate the fast ones in tests.

These deliberately take different routes than the production algorithms:
exhaustive bipartition enumeration with nested golden-section search for
piercing, branch-and-bound over center pairs for covering, and determining-set
enumeration for the point two-center.  They share only the basic geometry
layer with the solvers.
"""

from __future__ import annotations

import heapq
import itertools
import math
from typing import Sequence

import numpy as np

from . import _kernels as _k
from .geom import Disk, Point, disk_arrays, farthest_point_in_disk_min2, tolerance

MAX_BRUTE_DISKS = 16
MAX_BRUTE_POINTS = 12


def brute_pierce_delta(
    disks: Sequence[Disk], iters: int = 64
) -> tuple[float, Point, Point]:
    """Minimal common inflation so two points pierce every inflated disk.

    Evaluates min_p max_i (|p - c_i| - r_i) for every subset by nested
    golden-section search over the center bounding box, then minimizes the
    max over all bipartitions.  Exponential: refuses more than 16 disks.
    """
    n = len(disks)
    if n == 0:
        return 0.0, Point(0.0, 0.0), Point(0.0, 0.0)
    if n > MAX_BRUTE_DISKS:
        raise ValueError("brute force limited to %d disks" % MAX_BRUTE_DISKS)
    cx, cy, cr = disk_arrays(disks)
    vals, pxs, pys = _k.subset_piercing_values(cx, cy, cr, iters)
    full = (1 << n) - 1
    best = max(vals[full], 0.0)
    best_mask = full
    for mask in range(1, full + 1):
        if not (mask & 1):
            continue
        other = full & ~mask
        v = max(vals[mask], vals[other] if other else -1.0)
        if v < best - 1e-15:
            best = v
            best_mask = mask
    other = full & ~best_mask
    p1 = Point(pxs[best_mask], pys[best_mask])
    p2 = Point(pxs[other], pys[other]) if other else p1
    return max(best, 0.0), p1, p2


def brute_two_center_points(
    points: Sequence[tuple[float, float]]
) -> tuple[float, Point, Point]:
    """Exact two-center of points by enumerating every bipartition and the
    determining pairs/triples of each side.  Refuses more than 12 points."""
    pts = list(points)
    if not pts:
        return 0.0, Point(0.0, 0.0), Point(0.0, 0.0)
    if len(pts) > MAX_BRUTE_POINTS:
        raise ValueError("brute force limited to %d points" % MAX_BRUTE_POINTS)
    px = np.array([p[0] for p in pts], dtype=np.float64)
    py = np.array([p[1] for p in pts], dtype=np.float64)
    r, x1, y1, x2, y2, _ = _k.brute_two_center_points_kernel(px, py, 1e-12)
    return r, Point(x1, y1), Point(x2, y2)


def exchange_cover_bracket(
    disks: Sequence[Disk], rounds: int = 48
) -> tuple[float, float, Point, Point]:
    """Bracket the optimal general covering radius by witness exchange.

    Any finite point set drawn from the input disks must be covered, so its
    exact two-center radius is a lower bound on the optimum, while any
    concrete center pair is an upper bound.  Alternates solving the witness
    set exactly with adding the worst-covered disk point for the resulting
    centers.  The bracket collapses when the optimum is pinned by a small
    contact set; otherwise the bounds stay valid, just wider.  Returns
    (lower, upper, c1, c2).
    """
    ds = list(disks)
    if not ds:
        return 0.0, 0.0, Point(0.0, 0.0), Point(0.0, 0.0)
    witnesses = [(d.center.x, d.center.y) for d in ds[:MAX_BRUTE_POINTS]]
    lower = 0.0
    upper = math.inf
    uc1 = uc2 = Point(ds[0].center.x, ds[0].center.y)
    for _ in range(rounds):
        r_s, p1, p2 = brute_two_center_points(witnesses)
        if r_s > lower:
            lower = r_s
        worst = -math.inf
        wpt = p1
        for d in ds:
            v, pt = farthest_point_in_disk_min2(d, p1, p2)
            if v > worst:
                worst = v
                wpt = pt
        if worst < upper:
            upper = worst
            uc1, uc2 = p1, p2
        if upper - lower <= 1e-9 * (1.0 + abs(upper)):
            break
        new = (wpt.x, wpt.y)
        if any(math.hypot(new[0] - w[0], new[1] - w[1]) <= 1e-12 for w in witnesses):
            break  # no fresh witness, the bracket cannot move
        witnesses.append(new)
        if len(witnesses) > MAX_BRUTE_POINTS:
            # keep the witnesses the current centers cover worst; the fresh
            # point tops that order, so it always survives
            witnesses.sort(
                key=lambda w: min(
                    math.hypot(w[0] - p1.x, w[1] - p1.y),
                    math.hypot(w[0] - p2.x, w[1] - p2.y),
                ),
                reverse=True,
            )
            del witnesses[MAX_BRUTE_POINTS:]
    return lower, upper, uc1, uc2


def grid_refine_cover_general(
    disks: Sequence[Disk],
    tol: float = 1e-3,
    max_boxes: int = 200_000,
) -> tuple[float, float, Point, Point]:
    """Bracket the optimal general two-disk covering radius.

    Branch-and-bound over pairs of center boxes.  The coverage radius moves
    by at most the larger center displacement, which gives the lower bound
    used for pruning.  Returns (lower, upper, c1, c2) with the guarantee
    lower <= optimum <= upper; upper - lower <= tol * extent unless the box
    budget runs out first.
    """
    ds = list(disks)
    if not ds:
        return 0.0, 0.0, Point(0.0, 0.0), Point(0.0, 0.0)
    cx, cy, cr = disk_arrays(ds)
    xlo = float(np.min(cx - cr))
    xhi = float(np.max(cx + cr))
    ylo = float(np.min(cy - cr))
    yhi = float(np.max(cy + cr))
    extent = math.hypot(xhi - xlo, yhi - ylo)
    if extent <= 0.0:
        c = Point(float(cx[0]), float(cy[0]))
        r = float(np.max(cr))
        return r, r, c, c
    target = tol * extent

    def evaluate(pairs: np.ndarray) -> np.ndarray:
        return _k.coverage_pairs(cx, cy, cr, pairs)

    # coarse seed for the incumbent
    grid = np.linspace(0.0, 1.0, 5)
    xs = xlo + grid * (xhi - xlo)
    ys = ylo + grid * (yhi - ylo)
    seeds = np.array(
        [
            (x1, y1, x2, y2)
            for x1, y1 in itertools.product(xs, ys)
            for x2, y2 in itertools.product(xs, ys)
            if x1 <= x2
        ],
        dtype=np.float64,
    )
    seed_vals = evaluate(seeds)
    bi = int(np.argmin(seed_vals))
    best_val = float(seed_vals[bi])
    best_pair = seeds[bi]

    def box_entry(box):
        x1l, x1h, y1l, y1h, x2l, x2h, y2l, y2h = box
        mid = np.array(
            [[(x1l + x1h) / 2, (y1l + y1h) / 2, (x2l + x2h) / 2, (y2l + y2h) / 2]]
        )
        val = float(evaluate(mid)[0])
        h1 = math.hypot((x1h - x1l) / 2, (y1h - y1l) / 2)
        h2 = math.hypot((x2h - x2l) / 2, (y2h - y2l) / 2)
        lb = val - max(h1, h2)
        return lb, val, mid[0]

    root = (xlo, xhi, ylo, yhi, xlo, xhi, ylo, yhi)
    lb, val, mid = box_entry(root)
    if val < best_val:
        best_val, best_pair = val, mid
    heap = [(lb, 0, root)]
    counter = 1
    processed = 0
    global_lb = lb
    while heap and processed < max_boxes:
        lb, _, box = heapq.heappop(heap)
        global_lb = lb
        if lb >= best_val - target:
            break
        processed += 1
        dims = [box[1] - box[0], box[3] - box[2], box[5] - box[4], box[7] - box[6]]
        axis = int(np.argmax(dims))
        lo_i, hi_i = 2 * axis, 2 * axis + 1
        mid_c = 0.5 * (box[lo_i] + box[hi_i])
        for half in range(2):
            child = list(box)
            if half == 0:
                child[hi_i] = mid_c
            else:
                child[lo_i] = mid_c
            # symmetry: only keep boxes that can satisfy c1.x <= c2.x
            if child[0] > child[5]:
                continue
            clb, cval, cmid = box_entry(tuple(child))
            if cval < best_val:
                best_val, best_pair = cval, cmid
            if clb < best_val - target:
                heapq.heappush(heap, (clb, counter, tuple(child)))
                counter += 1
    if heap:
        global_lb = min(global_lb, min(e[0] for e in heap))
    lower = min(global_lb, best_val)
    return lower, best_val, Point(best_pair[0], best_pair[1]), Point(best_pair[2], best_pair[3])
