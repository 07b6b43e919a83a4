"""Numeric kernels shared by the solvers and oracles.

Everything here operates on plain float64 numpy arrays so the hot loops can be
compiled by numba (see :mod:`twocenter._accel`).  The object layer (Disk,
Instance, regions) lives in the higher-level modules; these functions are the
inner loops they delegate to.

Determinism: randomized routines take an explicit integer seed and use a small
internal LCG, so results are identical with and without numba.
"""

from __future__ import annotations

import numpy as np

from ._accel import jit

_GOLDEN = 0.6180339887498949
_TWO_PI = 6.283185307179586


# ---------------------------------------------------------------------------
# deterministic shuffling


@jit
def _rng_next(state):
    # Park-Miller minimal standard generator; products stay below 2**47.
    return (state * 48271) % 2147483647


@jit
def _shuffled_indices(n, seed):
    idx = np.empty(n, dtype=np.int64)
    for i in range(n):
        idx[i] = i
    state = (seed % 2147483646) + 1
    for i in range(n - 1, 0, -1):
        state = _rng_next(state)
        j = state % (i + 1)
        tmp = idx[i]
        idx[i] = idx[j]
        idx[j] = tmp
    return idx


# ---------------------------------------------------------------------------
# equal-offset circumcenter: solve |p - c_i| = t + s_i for three sites.
#
# Subtracting pairs of squared equations leaves two equations linear in the
# coordinates of p and in t; eliminating p gives one quadratic in t.  Callers
# choose the offsets: s_i = +r_i yields the point equidistant from three
# inflated circles, s_i = -r_i the disk internally tangent to three disks.


@jit
def _quad_roots(qa, qb, qc):
    """Roots of qa*t^2 + qb*t + qc = 0, numerically stable form."""
    out = np.empty(2, dtype=np.float64)
    if abs(qa) < 1e-14 * (1.0 + abs(qb) + abs(qc)):
        if abs(qb) < 1e-300:
            return out[:0]
        out[0] = -qc / qb
        return out[:1]
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0.0:
        if disc > -1e-9 * (qb * qb + 4.0 * abs(qa * qc) + 1e-300):
            disc = 0.0
        else:
            return out[:0]
    root = np.sqrt(disc)
    if qb >= 0.0:
        q = -0.5 * (qb + root)
    else:
        q = -0.5 * (qb - root)
    if abs(q) < 1e-300:
        out[0] = 0.0
        return out[:1]
    out[0] = q / qa
    out[1] = qc / q
    if abs(out[0] - out[1]) < 1e-12 * (1.0 + abs(out[0])):
        return out[:1]
    return out


@jit
def equal_offset_circumcenter(x1, y1, s1, x2, y2, s2, x3, y3, s3, tol):
    """Return (count, t_a, xa, ya, t_b, xb, yb) solving |p-c_i| = t + s_i.

    Only solutions with t + s_i >= -tol for all i are reported.  Collinear
    centers are handled by a reduced one-dimensional solve; fully degenerate
    inputs yield count 0.
    """
    a1x = 2.0 * (x2 - x1)
    a1y = 2.0 * (y2 - y1)
    b01 = (x2 * x2 + y2 * y2 - x1 * x1 - y1 * y1) - (s2 * s2 - s1 * s1)
    b11 = -2.0 * (s2 - s1)
    a2x = 2.0 * (x3 - x1)
    a2y = 2.0 * (y3 - y1)
    b02 = (x3 * x3 + y3 * y3 - x1 * x1 - y1 * y1) - (s3 * s3 - s1 * s1)
    b12 = -2.0 * (s3 - s1)

    det = a1x * a2y - a1y * a2x
    mag = abs(a1x) + abs(a1y) + abs(a2x) + abs(a2y)
    n_out = 0
    t_a = 0.0
    xa = 0.0
    ya = 0.0
    t_b = 0.0
    xb = 0.0
    yb = 0.0

    if abs(det) > 1e-12 * (1.0 + mag * mag):
        ax = (b01 * a2y - b02 * a1y) / det
        ay = (a1x * b02 - a2x * b01) / det
        bx = (b11 * a2y - b12 * a1y) / det
        by = (a1x * b12 - a2x * b11) / det
        dax = ax - x1
        day = ay - y1
        qa = bx * bx + by * by - 1.0
        qb = 2.0 * (bx * dax + by * day) - 2.0 * s1
        qc = dax * dax + day * day - s1 * s1
        roots = _quad_roots(qa, qb, qc)
        for ri in range(roots.size):
            t = roots[ri]
            if t + s1 < -tol or t + s2 < -tol or t + s3 < -tol:
                continue
            px = ax + bx * t
            py = ay + by * t
            if n_out == 0:
                t_a = t
                xa = px
                ya = py
            else:
                t_b = t
                xb = px
                yb = py
            n_out += 1
        return n_out, t_a, xa, ya, t_b, xb, yb

    # Collinear centers: the two linear equations are parallel.  Consistency
    # pins t; p then lies on a line and one quadratic gives up to two points.
    m1 = abs(a1x) + abs(a1y)
    m2 = abs(a2x) + abs(a2y)
    if m1 < m2:
        a1x, a2x = a2x, a1x
        a1y, a2y = a2y, a1y
        b01, b02 = b02, b01
        b11, b12 = b12, b11
        m1, m2 = m2, m1
    if m1 < 1e-12 * (1.0 + abs(x1) + abs(y1)):
        return 0, t_a, xa, ya, t_b, xb, yb
    if abs(a1x) >= abs(a1y):
        kappa = a2x / a1x
    else:
        kappa = a2y / a1y
    denom = b12 - kappa * b11
    numer = kappa * b01 - b02
    if abs(denom) < 1e-12 * (1.0 + abs(b11) + abs(b12)):
        return 0, t_a, xa, ya, t_b, xb, yb
    t = numer / denom
    if t + s1 < -tol or t + s2 < -tol or t + s3 < -tol:
        return 0, t_a, xa, ya, t_b, xb, yb
    beta = b01 + t * b11
    nrm2 = a1x * a1x + a1y * a1y
    p0x = beta * a1x / nrm2
    p0y = beta * a1y / nrm2
    wl = np.sqrt(nrm2)
    wx = -a1y / wl
    wy = a1x / wl
    dax = p0x - x1
    day = p0y - y1
    qb = 2.0 * (wx * dax + wy * day)
    qc = dax * dax + day * day - (t + s1) * (t + s1)
    roots = _quad_roots(1.0, qb, qc)
    for ri in range(roots.size):
        u = roots[ri]
        px = p0x + wx * u
        py = p0y + wy * u
        if n_out == 0:
            t_a = t
            xa = px
            ya = py
        else:
            t_b = t
            xb = px
            yb = py
        n_out += 1
    return n_out, t_a, xa, ya, t_b, xb, yb


# ---------------------------------------------------------------------------
# smallest enclosing disk of disks / additively weighted one-center.
#
# Randomized move-to-front incremental solver.  Metric for covering is
# distance + radius, for intersecting distance - radius (not clipped here).


@jit
def _ball2_cover(x1, y1, r1, x2, y2, r2):
    dx = x2 - x1
    dy = y2 - y1
    d = np.sqrt(dx * dx + dy * dy)
    if r1 >= d + r2:
        return x1, y1, r1
    if r2 >= d + r1:
        return x2, y2, r2
    rr = 0.5 * (d + r1 + r2)
    f = (rr - r1) / d
    return x1 + dx * f, y1 + dy * f, rr


@jit
def _ball2_aw(x1, y1, r1, x2, y2, r2):
    dx = x2 - x1
    dy = y2 - y1
    d = np.sqrt(dx * dx + dy * dy)
    if d < 1e-300:
        if r1 < r2:
            return x1, y1, -r1
        return x1, y1, -r2
    x = 0.5 * (d + r1 - r2)
    if x < 0.0:
        x = 0.0
    elif x > d:
        x = d
    t = x - r1
    t2 = (d - x) - r2
    if t2 > t:
        t = t2
    f = x / d
    return x1 + dx * f, y1 + dy * f, t


@jit
def _ball3_cover(x1, y1, r1, x2, y2, r2, x3, y3, r3, tol):
    bestx = 0.0
    besty = 0.0
    bestr = 1e300
    # pair candidates
    for pi in range(3):
        if pi == 0:
            cx, cy, cr = _ball2_cover(x1, y1, r1, x2, y2, r2)
        elif pi == 1:
            cx, cy, cr = _ball2_cover(x1, y1, r1, x3, y3, r3)
        else:
            cx, cy, cr = _ball2_cover(x2, y2, r2, x3, y3, r3)
        slack = tol * (1.0 + cr)
        ok = True
        d = np.sqrt((cx - x1) ** 2 + (cy - y1) ** 2) + r1
        if d > cr + slack:
            ok = False
        d = np.sqrt((cx - x2) ** 2 + (cy - y2) ** 2) + r2
        if d > cr + slack:
            ok = False
        d = np.sqrt((cx - x3) ** 2 + (cy - y3) ** 2) + r3
        if d > cr + slack:
            ok = False
        if ok and cr < bestr:
            bestx = cx
            besty = cy
            bestr = cr
    # triple-tangent candidates
    cnt, ta, xa, ya, tb, xb, yb = equal_offset_circumcenter(
        x1, y1, -r1, x2, y2, -r2, x3, y3, -r3, tol
    )
    for ci in range(cnt):
        if ci == 0:
            t = ta
            cx = xa
            cy = ya
        else:
            t = tb
            cx = xb
            cy = yb
        if t < -tol:
            continue
        slack = tol * (1.0 + t)
        ok = True
        d = np.sqrt((cx - x1) ** 2 + (cy - y1) ** 2) + r1
        if d > t + slack:
            ok = False
        d = np.sqrt((cx - x2) ** 2 + (cy - y2) ** 2) + r2
        if d > t + slack:
            ok = False
        d = np.sqrt((cx - x3) ** 2 + (cy - y3) ** 2) + r3
        if d > t + slack:
            ok = False
        if ok and t < bestr:
            bestx = cx
            besty = cy
            bestr = t
    return bestx, besty, bestr


@jit
def _ball3_aw(x1, y1, r1, x2, y2, r2, x3, y3, r3, tol):
    bestx = 0.0
    besty = 0.0
    bestv = 1e300
    for pi in range(3):
        if pi == 0:
            cx, cy, cv = _ball2_aw(x1, y1, r1, x2, y2, r2)
        elif pi == 1:
            cx, cy, cv = _ball2_aw(x1, y1, r1, x3, y3, r3)
        else:
            cx, cy, cv = _ball2_aw(x2, y2, r2, x3, y3, r3)
        slack = tol * (1.0 + abs(cv))
        ok = True
        d = np.sqrt((cx - x1) ** 2 + (cy - y1) ** 2) - r1
        if d > cv + slack:
            ok = False
        d = np.sqrt((cx - x2) ** 2 + (cy - y2) ** 2) - r2
        if d > cv + slack:
            ok = False
        d = np.sqrt((cx - x3) ** 2 + (cy - y3) ** 2) - r3
        if d > cv + slack:
            ok = False
        if ok and cv < bestv:
            bestx = cx
            besty = cy
            bestv = cv
    cnt, ta, xa, ya, tb, xb, yb = equal_offset_circumcenter(
        x1, y1, r1, x2, y2, r2, x3, y3, r3, tol
    )
    for ci in range(cnt):
        if ci == 0:
            t = ta
            cx = xa
            cy = ya
        else:
            t = tb
            cx = xb
            cy = yb
        slack = tol * (1.0 + abs(t))
        ok = True
        d = np.sqrt((cx - x1) ** 2 + (cy - y1) ** 2) - r1
        if d > t + slack:
            ok = False
        d = np.sqrt((cx - x2) ** 2 + (cy - y2) ** 2) - r2
        if d > t + slack:
            ok = False
        d = np.sqrt((cx - x3) ** 2 + (cy - y3) ** 2) - r3
        if d > t + slack:
            ok = False
        if ok and t < bestv:
            bestx = cx
            besty = cy
            bestv = t
    return bestx, besty, bestv


@jit
def _welzl_once(cx, cy, cr, seed, tol, cover):
    n = cx.size
    idx = _shuffled_indices(n, seed)
    i0 = idx[0]
    bx = cx[i0]
    by = cy[i0]
    if cover == 1:
        bv = cr[i0]
    else:
        bv = -cr[i0]
    for ii in range(1, n):
        i = idx[ii]
        if cover == 1:
            d = np.sqrt((cx[i] - bx) ** 2 + (cy[i] - by) ** 2) + cr[i]
        else:
            d = np.sqrt((cx[i] - bx) ** 2 + (cy[i] - by) ** 2) - cr[i]
        if d <= bv + tol * (1.0 + abs(bv)):
            continue
        bx = cx[i]
        by = cy[i]
        if cover == 1:
            bv = cr[i]
        else:
            bv = -cr[i]
        for jj in range(ii):
            j = idx[jj]
            if cover == 1:
                d = np.sqrt((cx[j] - bx) ** 2 + (cy[j] - by) ** 2) + cr[j]
            else:
                d = np.sqrt((cx[j] - bx) ** 2 + (cy[j] - by) ** 2) - cr[j]
            if d <= bv + tol * (1.0 + abs(bv)):
                continue
            if cover == 1:
                bx, by, bv = _ball2_cover(cx[i], cy[i], cr[i], cx[j], cy[j], cr[j])
            else:
                bx, by, bv = _ball2_aw(cx[i], cy[i], cr[i], cx[j], cy[j], cr[j])
            for kk in range(jj):
                k = idx[kk]
                if cover == 1:
                    d = np.sqrt((cx[k] - bx) ** 2 + (cy[k] - by) ** 2) + cr[k]
                else:
                    d = np.sqrt((cx[k] - bx) ** 2 + (cy[k] - by) ** 2) - cr[k]
                if d <= bv + tol * (1.0 + abs(bv)):
                    continue
                if cover == 1:
                    bx, by, bv = _ball3_cover(
                        cx[i], cy[i], cr[i], cx[j], cy[j], cr[j],
                        cx[k], cy[k], cr[k], tol,
                    )
                else:
                    bx, by, bv = _ball3_aw(
                        cx[i], cy[i], cr[i], cx[j], cy[j], cr[j],
                        cx[k], cy[k], cr[k], tol,
                    )
    return bx, by, bv


@jit
def _max_violation(cx, cy, cr, bx, by, bv, cover):
    worst = -1e300
    for i in range(cx.size):
        if cover == 1:
            d = np.sqrt((cx[i] - bx) ** 2 + (cy[i] - by) ** 2) + cr[i] - bv
        else:
            d = np.sqrt((cx[i] - bx) ** 2 + (cy[i] - by) ** 2) - cr[i] - bv
        if d > worst:
            worst = d
    return worst


@jit
def _lp_center(cx, cy, cr, seed, tol, cover):
    """Move-to-front solver with verification and reseeded retries."""
    n = cx.size
    if n == 0:
        return 0.0, 0.0, 0.0
    bestx = 0.0
    besty = 0.0
    bestv = 1e300
    bestviol = 1e300
    for attempt in range(8):
        bx, by, bv = _welzl_once(cx, cy, cr, seed + attempt * 7919, tol, cover)
        viol = _max_violation(cx, cy, cr, bx, by, bv, cover)
        if viol <= tol * (1.0 + abs(bv)):
            return bx, by, bv
        if viol < bestviol:
            bestviol = viol
            bestx = bx
            besty = by
            bestv = bv
    # Violations on every attempt: report the least-violating ball inflated
    # until feasible, so the result is at least a valid enclosure.
    if bestviol > 0.0:
        bestv = bestv + bestviol
    return bestx, besty, bestv


@jit
def sed_disks(cx, cy, cr, seed, tol):
    """Smallest disk containing every input disk: (x, y, radius)."""
    return _lp_center(cx, cy, cr, seed, tol, 1)


@jit
def aw_center_disks(cx, cy, cr, seed, tol):
    """Additively weighted one-center: minimize max_i (|p-c_i| - r_i).

    Returns (x, y, value); the value is negative when all disks share a
    common point.  Clipping at zero is up to the caller.
    """
    return _lp_center(cx, cy, cr, seed, tol, 0)


# ---------------------------------------------------------------------------
# farthest point of a disk under the two-center min metric


@jit
def farthest_min2(dcx, dcy, dr, ax, ay, bx, by):
    """max over x in disk of min(|x-a|, |x-b|); returns (value, px, py)."""
    bestv = -1.0
    bpx = dcx
    bpy = dcy
    # antipode seen from a
    dx = dcx - ax
    dy = dcy - ay
    da = np.sqrt(dx * dx + dy * dy)
    if da < 1e-300:
        px = dcx + dr
        py = dcy
    else:
        px = dcx + dr * dx / da
        py = dcy + dr * dy / da
    v1 = np.sqrt((px - ax) ** 2 + (py - ay) ** 2)
    v2 = np.sqrt((px - bx) ** 2 + (py - by) ** 2)
    v = v1 if v1 < v2 else v2
    if v > bestv:
        bestv = v
        bpx = px
        bpy = py
    # antipode seen from b
    dx = dcx - bx
    dy = dcy - by
    db = np.sqrt(dx * dx + dy * dy)
    if db < 1e-300:
        px = dcx + dr
        py = dcy
    else:
        px = dcx + dr * dx / db
        py = dcy + dr * dy / db
    v1 = np.sqrt((px - ax) ** 2 + (py - ay) ** 2)
    v2 = np.sqrt((px - bx) ** 2 + (py - by) ** 2)
    v = v1 if v1 < v2 else v2
    if v > bestv:
        bestv = v
        bpx = px
        bpy = py
    # bisector of a,b crossed with the disk boundary
    abx = bx - ax
    aby = by - ay
    ab = np.sqrt(abx * abx + aby * aby)
    if ab > 1e-300:
        mx = 0.5 * (ax + bx)
        my = 0.5 * (ay + by)
        ux = -aby / ab
        uy = abx / ab
        t0 = (dcx - mx) * ux + (dcy - my) * uy
        qx = mx + t0 * ux
        qy = my + t0 * uy
        h2 = dr * dr - ((qx - dcx) ** 2 + (qy - dcy) ** 2)
        if h2 > 0.0:
            h = np.sqrt(h2)
            for sgn in range(2):
                s = 1.0 if sgn == 0 else -1.0
                px = qx + s * h * ux
                py = qy + s * h * uy
                v1 = np.sqrt((px - ax) ** 2 + (py - ay) ** 2)
                v2 = np.sqrt((px - bx) ** 2 + (py - by) ** 2)
                v = v1 if v1 < v2 else v2
                if v > bestv:
                    bestv = v
                    bpx = px
                    bpy = py
    return bestv, bpx, bpy


@jit
def coverage_radius_arrays(cx, cy, cr, ax, ay, bx, by):
    worst = 0.0
    for i in range(cx.size):
        v, _, _ = farthest_min2(cx[i], cy[i], cr[i], ax, ay, bx, by)
        if v > worst:
            worst = v
    return worst


@jit
def coverage_pairs(cx, cy, cr, pairs):
    out = np.empty(pairs.shape[0], dtype=np.float64)
    for i in range(pairs.shape[0]):
        out[i] = coverage_radius_arrays(
            cx, cy, cr, pairs[i, 0], pairs[i, 1], pairs[i, 2], pairs[i, 3]
        )
    return out


@jit
def min_assignment_radius(cx, cy, cr, ax, ay, bx, by):
    """Smallest common radius such that every disk fits wholly in one disk."""
    worst = 0.0
    for i in range(cx.size):
        d1 = np.sqrt((cx[i] - ax) ** 2 + (cy[i] - ay) ** 2)
        d2 = np.sqrt((cx[i] - bx) ** 2 + (cy[i] - by) ** 2)
        d = d1 if d1 < d2 else d2
        need = d + cr[i]
        if need > worst:
            worst = need
    return worst


# ---------------------------------------------------------------------------
# nested golden-section minimization of the subset piercing objective
# (oracle side; deliberately independent of the incremental solver above)


@jit
def _aw_eval_mask(cx, cy, cr, mask, x, y):
    worst = -1e300
    for i in range(cx.size):
        if mask & (1 << i):
            d = np.sqrt((cx[i] - x) ** 2 + (cy[i] - y) ** 2) - cr[i]
            if d > worst:
                worst = d
    return worst


@jit
def _aw_inner_min(cx, cy, cr, mask, x, ylo, yhi, iters):
    a = ylo
    b = yhi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = _aw_eval_mask(cx, cy, cr, mask, x, c)
    fd = _aw_eval_mask(cx, cy, cr, mask, x, d)
    for _ in range(iters):
        if fc < fd:
            b = d
            d = c
            fd = fc
            c = b - _GOLDEN * (b - a)
            fc = _aw_eval_mask(cx, cy, cr, mask, x, c)
        else:
            a = c
            c = d
            fc = fd
            d = a + _GOLDEN * (b - a)
            fd = _aw_eval_mask(cx, cy, cr, mask, x, d)
    ym = 0.5 * (a + b)
    return _aw_eval_mask(cx, cy, cr, mask, x, ym), ym


@jit
def _aw_outer_min(cx, cy, cr, mask, xlo, xhi, ylo, yhi, iters):
    a = xlo
    b = xhi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, _ = _aw_inner_min(cx, cy, cr, mask, c, ylo, yhi, iters)
    fd, _ = _aw_inner_min(cx, cy, cr, mask, d, ylo, yhi, iters)
    for _ in range(iters):
        if fc < fd:
            b = d
            d = c
            fd = fc
            c = b - _GOLDEN * (b - a)
            fc, _ = _aw_inner_min(cx, cy, cr, mask, c, ylo, yhi, iters)
        else:
            a = c
            c = d
            fc = fd
            d = a + _GOLDEN * (b - a)
            fd, _ = _aw_inner_min(cx, cy, cr, mask, d, ylo, yhi, iters)
    xm = 0.5 * (a + b)
    fv, ym = _aw_inner_min(cx, cy, cr, mask, xm, ylo, yhi, iters)
    return fv, xm, ym


@jit
def subset_piercing_values(cx, cy, cr, iters):
    """Value and minimizer of the piercing objective for every disk subset.

    Entry m holds min_p max_{i in m} (|p-c_i| - r_i), found by nested
    golden-section search over the center bounding box.
    """
    n = cx.size
    total = 1 << n
    vals = np.empty(total, dtype=np.float64)
    pxs = np.empty(total, dtype=np.float64)
    pys = np.empty(total, dtype=np.float64)
    vals[0] = -1e300
    pxs[0] = 0.0
    pys[0] = 0.0
    for mask in range(1, total):
        xlo = 1e300
        xhi = -1e300
        ylo = 1e300
        yhi = -1e300
        for i in range(n):
            if mask & (1 << i):
                if cx[i] < xlo:
                    xlo = cx[i]
                if cx[i] > xhi:
                    xhi = cx[i]
                if cy[i] < ylo:
                    ylo = cy[i]
                if cy[i] > yhi:
                    yhi = cy[i]
        pad = 1e-9 * (1.0 + (xhi - xlo) + (yhi - ylo))
        v, x, y = _aw_outer_min(
            cx, cy, cr, mask, xlo - pad, xhi + pad, ylo - pad, yhi + pad, iters
        )
        vals[mask] = v
        pxs[mask] = x
        pys[mask] = y
    return vals, pxs, pys


# ---------------------------------------------------------------------------
# brute-force two-center of points via determining sets (oracle side)


@jit
def _sed_points_mask(px, py, mask, tol):
    """Smallest enclosing circle of the masked points by direct enumeration."""
    n = px.size
    cnt = 0
    first = -1
    for i in range(n):
        if mask & (1 << i):
            cnt += 1
            if first < 0:
                first = i
    if cnt == 0:
        return 0.0, 0.0, 0.0
    if cnt == 1:
        return px[first], py[first], 0.0
    bestx = 0.0
    besty = 0.0
    bestr = 1e300
    for i in range(n):
        if not (mask & (1 << i)):
            continue
        for j in range(i + 1, n):
            if not (mask & (1 << j)):
                continue
            cxx = 0.5 * (px[i] + px[j])
            cyy = 0.5 * (py[i] + py[j])
            rr = 0.5 * np.sqrt((px[i] - px[j]) ** 2 + (py[i] - py[j]) ** 2)
            if rr < bestr:
                ok = True
                lim = rr + tol * (1.0 + rr)
                for k in range(n):
                    if mask & (1 << k):
                        if np.sqrt((px[k] - cxx) ** 2 + (py[k] - cyy) ** 2) > lim:
                            ok = False
                            break
                if ok:
                    bestx = cxx
                    besty = cyy
                    bestr = rr
    for i in range(n):
        if not (mask & (1 << i)):
            continue
        for j in range(i + 1, n):
            if not (mask & (1 << j)):
                continue
            for k in range(j + 1, n):
                if not (mask & (1 << k)):
                    continue
                ax = px[j] - px[i]
                ay = py[j] - py[i]
                bx = px[k] - px[i]
                by = py[k] - py[i]
                det = 2.0 * (ax * by - ay * bx)
                if abs(det) < 1e-14 * (1.0 + abs(ax) + abs(ay) + abs(bx) + abs(by)) ** 2:
                    continue
                a2 = ax * ax + ay * ay
                b2 = bx * bx + by * by
                ux = (by * a2 - ay * b2) / det
                uy = (ax * b2 - bx * a2) / det
                cxx = px[i] + ux
                cyy = py[i] + uy
                rr = np.sqrt(ux * ux + uy * uy)
                if rr < bestr:
                    ok = True
                    lim = rr + tol * (1.0 + rr)
                    for m in range(n):
                        if mask & (1 << m):
                            if np.sqrt((px[m] - cxx) ** 2 + (py[m] - cyy) ** 2) > lim:
                                ok = False
                                break
                    if ok:
                        bestx = cxx
                        besty = cyy
                        bestr = rr
    return bestx, besty, bestr


@jit
def brute_two_center_points_kernel(px, py, tol):
    """Exhaustive bipartition two-center: (r, c1x, c1y, c2x, c2y, mask)."""
    n = px.size
    total = 1 << n
    vals = np.empty(total, dtype=np.float64)
    cxs = np.empty(total, dtype=np.float64)
    cys = np.empty(total, dtype=np.float64)
    for mask in range(total):
        x, y, r = _sed_points_mask(px, py, mask, tol)
        vals[mask] = r
        cxs[mask] = x
        cys[mask] = y
    full = total - 1
    bestmask = full
    bestv = vals[full]
    for mask in range(total):
        if not (mask & 1):
            continue
        other = full & ~mask
        v = vals[mask]
        if vals[other] > v:
            v = vals[other]
        if v < bestv - 1e-15:
            bestv = v
            bestmask = mask
    other = full & ~bestmask
    c2x = cxs[other] if other != 0 else cxs[bestmask]
    c2y = cys[other] if other != 0 else cys[bestmask]
    return bestv, cxs[bestmask], cys[bestmask], c2x, c2y, bestmask


# ---------------------------------------------------------------------------
# smallest disk covering crescents and whole disks (nested golden search)


@jit
def crescent_eval(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr, e1x, e1y, e2x, e2y, ne, px, py, tol):
    """Largest distance from p to the whole disks and crescent material.

    Crescent i is disk (dx_, dy_, dr_)[i] minus the open disk (ox, oy, orr)[i];
    e1/e2 are the precomputed boundary crossing points (ne of them valid).
    """
    worst = 0.0
    for i in range(wx.size):
        d = np.sqrt((wx[i] - px) ** 2 + (wy[i] - py) ** 2) + wr[i]
        if d > worst:
            worst = d
    for i in range(dx_.size):
        ddx = dx_[i] - px
        ddy = dy_[i] - py
        dd = np.sqrt(ddx * ddx + ddy * ddy)
        if dd < 1e-300:
            apx = dx_[i] + dr_[i]
            apy = dy_[i]
        else:
            apx = dx_[i] + dr_[i] * ddx / dd
            apy = dy_[i] + dr_[i] * ddy / dd
        if np.sqrt((apx - ox[i]) ** 2 + (apy - oy[i]) ** 2) >= orr[i] - tol:
            d = dd + dr_[i]
            if d > worst:
                worst = d
        odx = ox[i] - px
        ody = oy[i] - py
        od = np.sqrt(odx * odx + ody * ody)
        if od < 1e-300:
            bpx = ox[i] + orr[i]
            bpy = oy[i]
        else:
            bpx = ox[i] + orr[i] * odx / od
            bpy = oy[i] + orr[i] * ody / od
        if np.sqrt((bpx - dx_[i]) ** 2 + (bpy - dy_[i]) ** 2) <= dr_[i] + tol:
            d = od + orr[i]
            if d > worst:
                worst = d
        if ne[i] >= 1:
            d = np.sqrt((e1x[i] - px) ** 2 + (e1y[i] - py) ** 2)
            if d > worst:
                worst = d
        if ne[i] >= 2:
            d = np.sqrt((e2x[i] - px) ** 2 + (e2y[i] - py) ** 2)
            if d > worst:
                worst = d
    return worst


@jit
def _crescent_inner(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr, e1x, e1y, e2x, e2y, ne,
                    x, ylo, yhi, iters, tol):
    a = ylo
    b = yhi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = crescent_eval(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr, e1x, e1y, e2x, e2y, ne, x, c, tol)
    fd = crescent_eval(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr, e1x, e1y, e2x, e2y, ne, x, d, tol)
    for _ in range(iters):
        if fc < fd:
            b = d
            d = c
            fd = fc
            c = b - _GOLDEN * (b - a)
            fc = crescent_eval(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr,
                               e1x, e1y, e2x, e2y, ne, x, c, tol)
        else:
            a = c
            c = d
            fc = fd
            d = a + _GOLDEN * (b - a)
            fd = crescent_eval(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr,
                               e1x, e1y, e2x, e2y, ne, x, d, tol)
    ym = 0.5 * (a + b)
    return crescent_eval(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr,
                         e1x, e1y, e2x, e2y, ne, x, ym, tol), ym


@jit
def crescent_cover_golden(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr,
                          e1x, e1y, e2x, e2y, ne, xlo, xhi, ylo, yhi, iters, tol):
    """Minimize the crescent covering radius over p: returns (r, px, py)."""
    a = xlo
    b = xhi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, _ = _crescent_inner(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr,
                            e1x, e1y, e2x, e2y, ne, c, ylo, yhi, iters, tol)
    fd, _ = _crescent_inner(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr,
                            e1x, e1y, e2x, e2y, ne, d, ylo, yhi, iters, tol)
    for _ in range(iters):
        if fc < fd:
            b = d
            d = c
            fd = fc
            c = b - _GOLDEN * (b - a)
            fc, _ = _crescent_inner(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr,
                                    e1x, e1y, e2x, e2y, ne, c, ylo, yhi, iters, tol)
        else:
            a = c
            c = d
            fc = fd
            d = a + _GOLDEN * (b - a)
            fd, _ = _crescent_inner(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr,
                                    e1x, e1y, e2x, e2y, ne, d, ylo, yhi, iters, tol)
    xm = 0.5 * (a + b)
    fv, ym = _crescent_inner(wx, wy, wr, dx_, dy_, dr_, ox, oy, orr,
                             e1x, e1y, e2x, e2y, ne, xm, ylo, yhi, iters, tol)
    return fv, xm, ym


# ---------------------------------------------------------------------------
# direction sweeps: exact point two-center and disk bipartitions
#
# A separating line can be translated/rotated to pass through two sites, so
# sweeping the perpendiculars of all pairwise difference directions (with a
# small jitter either way to realise both tie orders) enumerates every
# linearly separable bipartition as a prefix of the projection order.


@jit
def _pair_direction_angles(xs, ys, gamma):
    n = xs.size
    m = n * (n - 1) // 2
    base = np.empty(m, dtype=np.float64)
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            a = np.arctan2(ys[j] - ys[i], xs[j] - xs[i])
            while a < 0.0:
                a += np.pi
            while a >= np.pi:
                a -= np.pi
            base[t] = a
            t += 1
    base = np.sort(base)
    # dedupe: regular point sets (grid snaps) generate many equal directions
    uniq = np.empty(m, dtype=np.float64)
    u = 0
    for i in range(m):
        if u == 0 or base[i] - uniq[u - 1] > 1e-12:
            uniq[u] = base[i]
            u += 1
    out = np.empty(3 * u + 1, dtype=np.float64)
    t = 0
    for i in range(u):
        perp = uniq[i] + 0.5 * np.pi
        out[t] = perp - gamma
        out[t + 1] = perp
        out[t + 2] = perp + gamma
        t += 3
    out[t] = 0.123456789
    return out


@jit
def _side_value(cx, cy, cr, order, k, lo, seed, tol, cover, wx, wy, wrr):
    """Metric value and center of one side of a split (order[lo:lo+k])."""
    if k == 0:
        if cover == 1:
            return 0.0, 0.0, 0.0
        return 0.0, 0.0, -1e300
    for t in range(k):
        i = order[lo + t]
        wx[t] = cx[i]
        wy[t] = cy[i]
        wrr[t] = cr[i]
    x, y, v = _lp_center(wx[:k], wy[:k], wrr[:k], seed, tol, cover)
    return x, y, v


@jit
def split_sweep(cx, cy, cr, cover, gamma, seed, tol):
    """Best two-center bipartition over all pair-perpendicular directions.

    cover=1 uses the enclosing metric (restricted covering, point two-center),
    cover=0 the piercing metric (unclipped).  Returns
    (value, c1x, c1y, c2x, c2y).
    """
    n = cx.size
    if n == 0:
        return 0.0, 0.0, 0.0, 0.0, 0.0
    if n == 1:
        if cover == 1:
            return cr[0], cx[0], cy[0], cx[0], cy[0]
        return 0.0, cx[0], cy[0], cx[0], cy[0]
    angles = _pair_direction_angles(cx, cy, gamma)
    wx = np.empty(n, dtype=np.float64)
    wy = np.empty(n, dtype=np.float64)
    wrr = np.empty(n, dtype=np.float64)
    proj = np.empty(n, dtype=np.float64)
    bestv = 1e300
    b1x = cx[0]
    b1y = cy[0]
    b2x = cx[0]
    b2y = cy[0]
    for ai in range(angles.size):
        ux = np.cos(angles[ai])
        uy = np.sin(angles[ai])
        for i in range(n):
            proj[i] = cx[i] * ux + cy[i] * uy
        order = np.argsort(proj)
        # Left radius grows with k, right radius shrinks: the max of the two
        # is a valley in k, so binary-search the crossover.
        lo = 0
        hi = n
        while lo < hi:
            mid = (lo + hi) // 2
            _, _, lv = _side_value(cx, cy, cr, order, mid, 0, seed, tol, cover, wx, wy, wrr)
            _, _, rv = _side_value(cx, cy, cr, order, n - mid, mid, seed, tol, cover, wx, wy, wrr)
            if lv >= rv:
                hi = mid
            else:
                lo = mid + 1
        k0 = lo
        kfrom = k0 - 1
        if kfrom < 0:
            kfrom = 0
        kto = k0 + 1
        if kto > n:
            kto = n
        for k in range(kfrom, kto + 1):
            lx, ly, lv = _side_value(cx, cy, cr, order, k, 0, seed, tol, cover, wx, wy, wrr)
            rx, ry, rv = _side_value(cx, cy, cr, order, n - k, k, seed, tol, cover, wx, wy, wrr)
            v = lv if lv > rv else rv
            if v < bestv - 1e-15 * (1.0 + abs(bestv)):
                bestv = v
                if k == 0:
                    b1x = rx
                    b1y = ry
                else:
                    b1x = lx
                    b1y = ly
                if k == n:
                    b2x = lx
                    b2y = ly
                else:
                    b2x = rx
                    b2y = ry
    return bestv, b1x, b1y, b2x, b2y


@jit
def two_center_points_kernel(px, py, gamma, seed, tol):
    """Exact two-center of points: (r, c1x, c1y, c2x, c2y)."""
    zeros = np.zeros(px.size, dtype=np.float64)
    return split_sweep(px, py, zeros, 1, gamma, seed, tol)


# ---------------------------------------------------------------------------
# rotation case of the covering decision: C1 pivots around one disk while C2
# follows the first-entry/last-exit boundary points


@jit
def _margin_for_c2(cx, cy, cr, r, ax, ay, bx, by):
    worst = -1e300
    for i in range(cx.size):
        v, _, _ = farthest_min2(cx[i], cy[i], cr[i], ax, ay, bx, by)
        if v - r > worst:
            worst = v - r
    return worst


@jit
def case_d_margin(cx, cy, cr, piv, r, phi, seed, tol):
    """Uncovered margin at rotation angle phi: (margin, c2x, c2y).

    Margin <= 0 means the pivoted C1 plus the constructed C2 cover all disks.
    """
    n = cx.size
    pcx = cx[piv]
    pcy = cy[piv]
    prr = cr[piv]
    c1x = pcx + (r - prr) * np.cos(phi)
    c1y = pcy + (r - prr) * np.sin(phi)
    theta0 = phi + np.pi  # angle of the touching point around c1

    # disks not fully inside C1
    unc = np.empty(n, dtype=np.int64)
    nu = 0
    for i in range(n):
        d = np.sqrt((cx[i] - c1x) ** 2 + (cy[i] - c1y) ** 2) + cr[i]
        if d > r + tol:
            unc[nu] = i
            nu += 1
    if nu == 0:
        return _margin_for_c2(cx, cy, cr, r, c1x, c1y, c1x, c1y), c1x, c1y

    # first-entry and last-exit crossing disks, clockwise from the touch point
    first_i = -1
    last_i = -1
    first_s = 1e300
    last_s = -1e300
    for t in range(nu):
        i = unc[t]
        dxx = cx[i] - c1x
        dyy = cy[i] - c1y
        d = np.sqrt(dxx * dxx + dyy * dyy)
        if d <= abs(r - cr[i]) or d >= r + cr[i]:
            continue
        psi = np.arctan2(dyy, dxx)
        ca = (d * d + r * r - cr[i] * cr[i]) / (2.0 * d * r)
        if ca > 1.0:
            ca = 1.0
        elif ca < -1.0:
            ca = -1.0
        alpha = np.arccos(ca)
        s_hi = (theta0 - (psi - alpha)) % _TWO_PI
        s_lo = (theta0 - (psi + alpha)) % _TWO_PI
        if s_lo <= s_hi:
            enter = s_lo
            exit_ = s_hi
        else:
            enter = 0.0
            exit_ = _TWO_PI
        if enter < first_s:
            first_s = enter
            first_i = i
        if exit_ > last_s:
            last_s = exit_
            last_i = i

    best = 1e300
    bx = c1x
    by = c1y

    # fallback candidate: C2 as the smallest disk enclosing everything C1 missed
    ux = np.empty(nu, dtype=np.float64)
    uy = np.empty(nu, dtype=np.float64)
    ur = np.empty(nu, dtype=np.float64)
    for t in range(nu):
        i = unc[t]
        ux[t] = cx[i]
        uy[t] = cy[i]
        ur[t] = cr[i]
    sx, sy, _ = sed_disks(ux, uy, ur, seed, tol)
    m = _margin_for_c2(cx, cy, cr, r, c1x, c1y, sx, sy)
    if m < best:
        best = m
        bx = sx
        by = sy

    if first_i >= 0 and last_i >= 0:
        # boundary crossing points of the first/last disks on the C1 circle
        qx = np.empty(4, dtype=np.float64)
        qy = np.empty(4, dtype=np.float64)
        nq = 0
        for which in range(2):
            i = first_i if which == 0 else last_i
            if which == 1 and last_i == first_i:
                continue
            dxx = cx[i] - c1x
            dyy = cy[i] - c1y
            d = np.sqrt(dxx * dxx + dyy * dyy)
            psi = np.arctan2(dyy, dxx)
            ca = (d * d + r * r - cr[i] * cr[i]) / (2.0 * d * r)
            if ca > 1.0:
                ca = 1.0
            elif ca < -1.0:
                ca = -1.0
            alpha = np.arccos(ca)
            qx[nq] = c1x + r * np.cos(psi - alpha)
            qy[nq] = c1y + r * np.sin(psi - alpha)
            nq += 1
            qx[nq] = c1x + r * np.cos(psi + alpha)
            qy[nq] = c1y + r * np.sin(psi + alpha)
            nq += 1
        # pair up first-disk points with last-disk points (or the two points
        # of the single disk when first == last)
        if first_i == last_i:
            npairs = 1
        else:
            npairs = 4
        for pi in range(npairs):
            if first_i == last_i:
                x1 = qx[0]
                y1 = qy[0]
                x2 = qx[1]
                y2 = qy[1]
            else:
                x1 = qx[pi // 2]
                y1 = qy[pi // 2]
                x2 = qx[2 + (pi % 2)]
                y2 = qy[2 + (pi % 2)]
            hx = 0.5 * (x1 + x2)
            hy = 0.5 * (y1 + y2)
            half2 = 0.25 * ((x1 - x2) ** 2 + (y1 - y2) ** 2)
            h2 = r * r - half2
            if h2 < 0.0:
                continue
            h = np.sqrt(h2)
            dx12 = x2 - x1
            dy12 = y2 - y1
            dl = np.sqrt(dx12 * dx12 + dy12 * dy12)
            if dl < 1e-300:
                vx = 1.0
                vy = 0.0
            else:
                vx = -dy12 / dl
                vy = dx12 / dl
            for sgn in range(2):
                s = 1.0 if sgn == 0 else -1.0
                ccx = hx + s * h * vx
                ccy = hy + s * h * vy
                m = _margin_for_c2(cx, cy, cr, r, c1x, c1y, ccx, ccy)
                if m < best:
                    best = m
                    bx = ccx
                    by = ccy
    return best, bx, by


@jit
def case_d_scan(cx, cy, cr, piv, r, phis, seed, tol):
    m = phis.size
    margins = np.empty(m, dtype=np.float64)
    c2xs = np.empty(m, dtype=np.float64)
    c2ys = np.empty(m, dtype=np.float64)
    for i in range(m):
        mg, ax, ay = case_d_margin(cx, cy, cr, piv, r, phis[i], seed, tol)
        margins[i] = mg
        c2xs[i] = ax
        c2ys[i] = ay
    return margins, c2xs, c2ys
