"""Two-piercing of disks: inflate by delta until two points stab everything.

The decision problem ("do two points exist that together touch every
delta-inflated disk?") is solved two ways: a quadratic-candidate reference
(decide_naive) and the arrangement walk with a segment tree of intersection
regions (decide_fast).  The optimizer binary-searches the finite candidate
list of critical delta values.

All containment predicates here are tolerance-closed: tangency counts.  To
make that robust the decision procedures inflate every disk by the instance
tolerance on top of delta, which perturbs answers only within the tolerance
band around critical values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import _kernels as _k
from .geom import (
    TWO_PI,
    Disk,
    Instance,
    Point,
    canonical_angle,
    circle_circle_intersection,
    disk_arrays,
    dist,
    tolerance,
)
from .one_center import (
    ConvexArcRegion,
    common_intersection,
    regions_nonempty,
    smallest_intersecting_disk,
)

_KIND_RANK = {"zero": 0, "pair_tangency": 1, "triple_boundary": 2}


def _as_disks(instance) -> tuple[Disk, ...]:
    if isinstance(instance, Instance):
        return instance.disks
    return tuple(instance)


def _scale_of(disks: Sequence[Disk]) -> float:
    hi = 0.0
    for d in disks:
        hi = max(hi, abs(d.center.x) + d.radius, abs(d.center.y) + d.radius)
    return hi


def inflate(instance, delta: float) -> list[Disk]:
    """Grow every disk radius by delta."""
    if delta < 0.0:
        raise ValueError("delta must be nonnegative")
    return [d.inflate(delta) for d in _as_disks(instance)]


# ---------------------------------------------------------------------------
# decisions


def decide_naive(instance, delta: float) -> Optional[tuple[Point, Point]]:
    """Reference decision: try every structurally distinct first point.

    If a piercing pair exists, the first point can be normalized to a center
    of an inflated disk or an intersection point of two inflated circles;
    the leftover family is then checked for a common point.
    """
    disks = _as_disks(instance)
    if not disks:
        return (Point(0.0, 0.0), Point(0.0, 0.0))
    tol = tolerance(_scale_of(disks) + delta)
    inflated = [d.inflate(delta) for d in disks]
    candidates: list[Point] = [d.center for d in inflated]
    for i in range(len(inflated)):
        for j in range(i + 1, len(inflated)):
            try:
                pts = circle_circle_intersection(inflated[i], inflated[j], tol)
            except ValueError:
                pts = (inflated[i].center,)
            candidates.extend(pts)
    for p1 in candidates:
        rest = [d for d in inflated if not d.contains_point(p1, tol)]
        if not rest:
            return (p1, p1)
        p2, need = smallest_intersecting_disk(rest)
        if need <= tol:
            return (p1, p2)
    return None


# ---------------------------------------------------------------------------
# arrangement


@dataclass(frozen=True)
class ArrangementVertex:
    point: Point
    circles: tuple[int, ...]


@dataclass(frozen=True)
class ArrangementArc:
    circle: int
    start: float
    sweep: float
    v_start: int
    v_end: int

    def midpoint_angle(self) -> float:
        return canonical_angle(self.start + 0.5 * self.sweep)


@dataclass(frozen=True)
class Face:
    index: int
    probe: Point
    bits: int
    arc_ids: tuple[int, ...]


@dataclass
class CircleArrangement:
    circles: list[Disk]
    vertices: list[ArrangementVertex]
    arcs: list[ArrangementArc]
    faces: list[Face]
    adjacency: list[tuple[int, int, int]]  # (face_a, face_b, circle id)
    outer_face: int
    components: int
    warnings: list[str] = field(default_factory=list)

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.arcs)

    @property
    def F(self) -> int:
        return len(self.faces)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def build_arrangement(circles: Sequence[Disk], tol: float | None = None) -> CircleArrangement:
    """Planar subdivision induced by the circle boundaries.

    Faces are found by gluing arc sides: around every vertex the outgoing
    arc ends are sorted by direction (curvature breaks tangency ties) and
    consecutive sectors merged; one horizontal stitch line per connected
    component then merges faces across components and to the outer face.
    """
    circs = list(circles)
    if not circs:
        raise ValueError("need at least one circle")
    warnings: list[str] = []
    if tol is None:
        tol = tolerance(_scale_of(circs))
    # merge coincident circles
    kept: list[Disk] = []
    for c in circs:
        dup = any(
            dist(c.center, k.center) <= tol and abs(c.radius - k.radius) <= tol
            for k in kept
        )
        if dup:
            warnings.append("coincident circle merged: %r" % (c,))
        else:
            kept.append(c)
    circs = kept
    n = len(circs)

    # vertices: pairwise intersections, merged within tolerance
    raw: list[tuple[Point, int, int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            try:
                pts = circle_circle_intersection(circs[i], circs[j], tol)
            except ValueError:
                pts = ()
            for p in pts:
                raw.append((p, i, j))
    verts: list[tuple[Point, set[int]]] = []
    for p, i, j in raw:
        for k, (q, inc) in enumerate(verts):
            if dist(p, q) <= tol:
                inc.update((i, j))
                break
        else:
            verts.append((p, {i, j}))
    vertices = [ArrangementVertex(p, tuple(sorted(inc))) for p, inc in verts]

    # arcs per circle between consecutive incident vertices
    arcs: list[ArrangementArc] = []
    circle_arcs: list[list[int]] = [[] for _ in range(n)]
    free_circles: list[int] = []
    for ci in range(n):
        inc = [
            (canonical_angle(math.atan2(v.point.y - circs[ci].center.y,
                                        v.point.x - circs[ci].center.x)), vi)
            for vi, v in enumerate(vertices)
            if ci in v.circles
        ]
        if not inc:
            free_circles.append(ci)
            continue
        inc.sort()
        m = len(inc)
        for k in range(m):
            a0, v0 = inc[k]
            a1, v1 = inc[(k + 1) % m]
            sweep = (a1 - a0) % TWO_PI
            if m == 1:
                sweep = TWO_PI
            circle_arcs[ci].append(len(arcs))
            arcs.append(ArrangementArc(ci, a0, sweep, v0, v1))

    # face pieces: (arc, side) with side 0 = inside the circle, 1 = outside;
    # free circles contribute one pseudo piece pair; last slot is the outer face
    n_arc_pieces = 2 * len(arcs)
    free_base = n_arc_pieces
    outer_piece = free_base + 2 * len(free_circles)
    uf = _UnionFind(outer_piece + 1)

    def piece(arc_id: int, inside: bool) -> int:
        return 2 * arc_id + (0 if inside else 1)

    def free_piece(free_idx: int, inside: bool) -> int:
        return free_base + 2 * free_idx + (0 if inside else 1)

    # sector gluing around each vertex
    for vi in range(len(vertices)):
        ends = []
        for ai in range(len(arcs)):
            a = arcs[ai]
            r = circs[a.circle].radius
            if a.v_start == vi:
                theta = canonical_angle(a.start + 0.5 * math.pi)
                # traveling ccw: circle interior on the left
                ends.append((theta, 1.0 / r, piece(ai, True), piece(ai, False)))
            if a.v_end == vi:
                theta = canonical_angle(a.start + a.sweep - 0.5 * math.pi)
                # traveling cw: interior on the right
                ends.append((theta, -1.0 / r, piece(ai, False), piece(ai, True)))
        ends.sort(key=lambda e: (e[0], e[1]))
        m = len(ends)
        for k in range(m):
            _, _, ccw_side, _ = ends[k]
            _, _, _, cw_side = ends[(k + 1) % m]
            uf.union(ccw_side, cw_side)

    # connected components of the circle graph
    cuf = _UnionFind(n)
    for v in vertices:
        first = v.circles[0]
        for c in v.circles[1:]:
            cuf.union(first, c)
    comp_members: dict[int, list[int]] = {}
    for ci in range(n):
        comp_members.setdefault(cuf.find(ci), []).append(ci)
    components = len(comp_members)

    # stitch line per component
    scale = _scale_of(circs)
    eps = max(100.0 * tol, 1e-7 * (1.0 + scale))
    free_index = {ci: k for k, ci in enumerate(free_circles)}

    def locate_piece(ci: int, angle: float, inside: bool) -> int:
        if ci in free_index:
            return free_piece(free_index[ci], inside)
        for ai in circle_arcs[ci]:
            a = arcs[ai]
            if ((angle - a.start) % TWO_PI) <= a.sweep + 1e-12:
                return piece(ai, inside)
        return piece(circle_arcs[ci][0], inside)

    for members in comp_members.values():
        ylo = min(circs[c].center.y - circs[c].radius for c in members)
        yhi = max(circs[c].center.y + circs[c].radius for c in members)
        span = (yhi - ylo) + 1.0
        y = 0.5 * (ylo + yhi)
        for attempt in range(400):
            cand = y + span * 1e-5 * ((attempt + 1) // 2) * (1 if attempt % 2 else -1)
            ok = all(abs(abs(cand - c.center.y) - c.radius) > eps for c in circs)
            if ok:
                ok = all(abs(v.point.y - cand) > eps for v in vertices)
            if ok:
                xs = []
                for ci, c in enumerate(circs):
                    dy = cand - c.center.y
                    if abs(dy) < c.radius:
                        h = math.sqrt(c.radius * c.radius - dy * dy)
                        xs.extend([c.center.x - h, c.center.x + h])
                xs.sort()
                ok = all(xs[k + 1] - xs[k] > eps for k in range(len(xs) - 1))
            if ok:
                y = cand
                break
        else:
            raise RuntimeError("could not place a stitch line")
        crossings = []
        for ci, c in enumerate(circs):
            dy = y - c.center.y
            if abs(dy) < c.radius:
                h = math.sqrt(c.radius * c.radius - dy * dy)
                for x, entering in ((c.center.x - h, True), (c.center.x + h, False)):
                    ang = canonical_angle(math.atan2(dy, x - c.center.x))
                    crossings.append((x, ci, ang, entering))
        crossings.sort()
        if not crossings:
            continue
        for k in range(len(crossings) - 1):
            xa, ca, anga, entering_a = crossings[k]
            xb, cb, angb, entering_b = crossings[k + 1]
            right_a = locate_piece(ca, anga, entering_a)
            left_b = locate_piece(cb, angb, not entering_b)
            uf.union(right_a, left_b)
        x0, c0, ang0, ent0 = crossings[0]
        uf.union(outer_piece, locate_piece(c0, ang0, not ent0))
        xl, cl, angl, entl = crossings[-1]
        uf.union(outer_piece, locate_piece(cl, angl, entl))

    # assemble faces
    roots: dict[int, int] = {}
    face_pieces: dict[int, list[int]] = {}
    for p in range(outer_piece + 1):
        r = uf.find(p)
        if r not in roots:
            roots[r] = len(roots)
        face_pieces.setdefault(roots[r], []).append(p)

    def probe_for(pieces: list[int]) -> Point:
        for p in pieces:
            if p == outer_piece:
                continue
            if p < n_arc_pieces:
                a = arcs[p // 2]
                inside = (p % 2) == 0
                c = circs[a.circle]
                ang = a.midpoint_angle()
            else:
                fi = (p - free_base) // 2
                inside = ((p - free_base) % 2) == 0
                c = circs[free_circles[fi]]
                ang = 0.0
            pm = c.point_at(ang)
            gap = c.radius
            for cj, other in enumerate(circs):
                if other is c:
                    continue
                gap = min(gap, abs(dist(pm, other.center) - other.radius))
            h = 0.5 * max(gap, 1e-13 * (1.0 + scale))
            h = min(h, 0.5 * c.radius)
            sgn = -1.0 if inside else 1.0
            return Point(
                c.center.x + (c.radius + sgn * h) * math.cos(ang),
                c.center.y + (c.radius + sgn * h) * math.sin(ang),
            )
        # class holds only the virtual outer element
        return Point(max(c.center.x + c.radius for c in circs) + 1.0 + scale * 0.01, 0.0)

    faces = []
    outer_face = roots[uf.find(outer_piece)]
    for fi in range(len(roots)):
        pieces = face_pieces[fi]
        if fi == outer_face and len(pieces) == 1:
            probe = Point(max(c.center.x + c.radius for c in circs) + 1.0 + scale * 0.01, 0.0)
        else:
            probe = probe_for(pieces)
        bits = 0
        for ci, c in enumerate(circs):
            if dist(probe, c.center) <= c.radius:
                bits |= 1 << ci
        arc_ids = tuple(sorted({p // 2 for p in pieces if p < n_arc_pieces}))
        faces.append(Face(fi, probe, bits, arc_ids))

    adjacency = []
    for ai in range(len(arcs)):
        fa = roots[uf.find(piece(ai, True))]
        fb = roots[uf.find(piece(ai, False))]
        adjacency.append((fa, fb, arcs[ai].circle))
    for k, ci in enumerate(free_circles):
        fa = roots[uf.find(free_piece(k, True))]
        fb = roots[uf.find(free_piece(k, False))]
        adjacency.append((fa, fb, ci))

    return CircleArrangement(
        circles=circs,
        vertices=vertices,
        arcs=arcs,
        faces=faces,
        adjacency=adjacency,
        outer_face=outer_face,
        components=components,
        warnings=warnings,
    )


@dataclass
class FaceTour:
    visits: list[int]
    events: list[tuple[int, str]]  # between consecutive visits: (disk id, enter/exit)


def face_tour(arr: CircleArrangement) -> FaceTour:
    """Euler tour of a DFS tree of the face adjacency graph."""
    neighbors: dict[int, list[tuple[int, int]]] = {f.index: [] for f in arr.faces}
    for fa, fb, ci in arr.adjacency:
        if fa == fb:
            continue
        neighbors[fa].append((fb, ci))
        neighbors[fb].append((fa, ci))
    for lst in neighbors.values():
        lst.sort()
    visits: list[int] = []
    seen = set()

    def dfs(u: int) -> None:
        seen.add(u)
        visits.append(u)
        for v, _ in neighbors[u]:
            if v not in seen:
                dfs(v)
                visits.append(u)

    order = [arr.outer_face] + [f.index for f in arr.faces if f.index != arr.outer_face]
    for root in order:
        if root not in seen:
            dfs(root)
    events: list[tuple[int, str]] = []
    for k in range(len(visits) - 1):
        a = arr.faces[visits[k]].bits
        b = arr.faces[visits[k + 1]].bits
        diff = a ^ b
        if diff and diff.bit_count() == 1:
            ci = diff.bit_length() - 1
            events.append((ci, "enter" if b & (1 << ci) else "exit"))
        elif diff:
            events.append((-1, "jump"))
        else:
            events.append((-1, "none"))
    return FaceTour(visits=visits, events=events)


class TourSegmentTree:
    """Segment tree over tour positions; each node holds the disks inactive
    (not containing the visited face) across its whole span, plus the region
    where all of them could still be pierced by the second point."""

    def __init__(self, bits_per_pos: list[int], disks: Sequence[Disk], tol: float):
        self.m = len(bits_per_pos)
        self.tol = tol
        self.node_disks: dict[int, list[int]] = {}
        self.disks = list(disks)
        for di in range(len(self.disks)):
            mask = 1 << di
            k = 0
            while k < self.m:
                if bits_per_pos[k] & mask:
                    k += 1
                    continue
                j = k
                while j < self.m and not (bits_per_pos[j] & mask):
                    j += 1
                self._insert(1, 0, self.m - 1, k, j - 1, di)
                k = j
        self.node_region: dict[int, Optional[ConvexArcRegion]] = {}
        for node, dlist in self.node_disks.items():
            self.node_region[node] = common_intersection(
                [self.disks[d] for d in dlist], tol
            )

    def _insert(self, node: int, lo: int, hi: int, l: int, r: int, di: int) -> None:
        if r < lo or hi < l:
            return
        if l <= lo and hi <= r:
            self.node_disks.setdefault(node, []).append(di)
            return
        mid = (lo + hi) // 2
        self._insert(2 * node, lo, mid, l, r, di)
        self._insert(2 * node + 1, mid + 1, hi, l, r, di)

    def path_disks(self, pos: int) -> list[int]:
        out = []
        node, lo, hi = 1, 0, self.m - 1
        while True:
            out.extend(self.node_disks.get(node, ()))
            if lo == hi:
                return out
            mid = (lo + hi) // 2
            if pos <= mid:
                node, hi = 2 * node, mid
            else:
                node, lo = 2 * node + 1, mid + 1

    def first_feasible(self) -> Optional[tuple[int, Optional[Point]]]:
        """Leftmost tour position whose leaf-to-root regions intersect.

        Returns (position, witness) where witness is None when no disk is
        active on the path (the first point already pierces everything).
        """
        return self._search(1, 0, self.m - 1, None)

    def _search(self, node, lo, hi, running):
        region = self.node_region.get(node)
        if region is not None:
            if region.empty:
                return None
            running = _intersect_regions(running, region, self.tol)
            if running is not None and running.empty:
                return None
        if lo == hi:
            if running is None:
                return (lo, None)
            w = running.witness()
            return (lo, w) if w is not None else None
        mid = (lo + hi) // 2
        found = self._search(2 * node, lo, mid, running)
        if found is not None:
            return found
        return self._search(2 * node + 1, mid + 1, hi, running)


def _intersect_regions(
    running: Optional[ConvexArcRegion], region: ConvexArcRegion, tol: float
) -> Optional[ConvexArcRegion]:
    if running is None:
        return region
    if region.is_point:
        if running.contains(region.point, tol):
            return region
        return ConvexArcRegion.empty_region()
    if running.is_point:
        if all(c.contains_point(running.point, tol) for c in region.constraints):
            return running
        return ConvexArcRegion.empty_region()
    for c in region.constraints:
        running = running.clip(c, tol)
        if running.empty:
            break
    return running


def decide_fast(instance, delta: float) -> Optional[tuple[Point, Point]]:
    """Arrangement-based decision; agrees with decide_naive.

    Walks an Euler tour of the inflated-circle arrangement faces with the
    first point, while a segment tree maintains, for every tour span, the
    region where a second point would pierce all disks the first one misses.
    """
    disks = _as_disks(instance)
    if not disks:
        return (Point(0.0, 0.0), Point(0.0, 0.0))
    tol = tolerance(_scale_of(disks) + delta)
    pad = tol
    inflated = [Disk(d.center, d.radius + delta + pad) for d in disks]
    if any(d.radius <= tol for d in inflated):
        return decide_naive(instance, delta)
    arr = build_arrangement(inflated, tol)
    if len(arr.circles) != len(inflated):
        # coincident circles were merged; fall back to the reference decision
        return decide_naive(instance, delta)
    tour = face_tour(arr)
    bits = [arr.faces[f].bits for f in tour.visits]
    tree = TourSegmentTree(bits, inflated, tol)
    hit = tree.first_feasible()
    if hit is None:
        return None
    pos, witness = hit
    p1 = arr.faces[tour.visits[pos]].probe
    p2 = witness if witness is not None else p1
    return (p1, p2)


# ---------------------------------------------------------------------------
# candidates and optimization


@dataclass(frozen=True)
class CandidateDelta:
    value: float
    kind: str  # zero | pair_tangency | triple_boundary
    indices: tuple[int, ...]
    witness: Optional[Point]


def candidate_deltas(instance) -> list[CandidateDelta]:
    """Critical inflation values: zero, pair tangencies, triple boundary
    points; sorted ascending with near-duplicates merged."""
    disks = _as_disks(instance)
    n = len(disks)
    if n == 0:
        return [CandidateDelta(0.0, "zero", (), None)]
    tol = tolerance(_scale_of(disks))
    _, delta_max = smallest_intersecting_disk(disks)
    cands: list[CandidateDelta] = [CandidateDelta(0.0, "zero", (), None)]
    for i in range(n):
        for j in range(i + 1, n):
            d = dist(disks[i].center, disks[j].center)
            v = max(0.0, 0.5 * (d - disks[i].radius - disks[j].radius))
            if v > delta_max + tol:
                continue
            if d > tol:
                f = (disks[i].radius + v) / d
                w = Point(
                    disks[i].center.x + f * (disks[j].center.x - disks[i].center.x),
                    disks[i].center.y + f * (disks[j].center.y - disks[i].center.y),
                )
            else:
                w = disks[i].center
            cands.append(CandidateDelta(v, "pair_tangency", (i, j), w))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                cnt, ta, xa, ya, tb, xb, yb = _k.equal_offset_circumcenter(
                    disks[i].center.x, disks[i].center.y, disks[i].radius,
                    disks[j].center.x, disks[j].center.y, disks[j].radius,
                    disks[k].center.x, disks[k].center.y, disks[k].radius,
                    tol,
                )
                for t, x, yy in ((ta, xa, ya), (tb, xb, yb))[:cnt]:
                    if t < -tol or t > delta_max + tol:
                        continue
                    cands.append(
                        CandidateDelta(max(t, 0.0), "triple_boundary", (i, j, k), Point(x, yy))
                    )
    cands.sort(key=lambda c: (c.value, _KIND_RANK[c.kind], c.indices))
    merged: list[CandidateDelta] = []
    for c in cands:
        if merged and abs(c.value - merged[-1].value) <= tol * (1.0 + c.value):
            continue
        merged.append(c)
    return merged


def solve_exact(instance, use_naive: bool = False) -> tuple[float, Point, Point]:
    """Minimal delta with a piercing pair, plus the witnesses."""
    disks = _as_disks(instance)
    if not disks:
        return 0.0, Point(0.0, 0.0), Point(0.0, 0.0)
    decide = decide_naive if use_naive else decide_fast
    cands = candidate_deltas(disks)
    lo, hi = 0, len(cands) - 1
    top = decide(disks, cands[hi].value)
    if top is None:
        # delta_max filtering should leave a feasible top candidate
        raise RuntimeError("no feasible candidate delta")
    best = (hi, top)
    while lo < hi:
        mid = (lo + hi) // 2
        got = decide(disks, cands[mid].value)
        if got is not None:
            best = (mid, got)
            hi = mid
        else:
            lo = mid + 1
    idx, pair = best
    return cands[idx].value, pair[0], pair[1]


def solve_bipartition(instance, seed: int = 0, gamma: float = 1e-7) -> tuple[float, Point, Point]:
    """Exact piercing radius via the separating-line sweep.

    An optimal grouping is split by the bisector of the two points, hence
    linearly separable; sweeping all pair-perpendicular directions and
    binary-searching the valley of the two one-center values finds it.
    """
    disks = _as_disks(instance)
    if not disks:
        return 0.0, Point(0.0, 0.0), Point(0.0, 0.0)
    cx, cy, cr = disk_arrays(disks)
    tol = tolerance(_scale_of(disks))
    v, x1, y1, x2, y2 = _k.split_sweep(cx, cy, cr, 0, gamma, seed, tol)
    return max(v, 0.0), Point(float(x1), float(y1)), Point(float(x2), float(y2))
