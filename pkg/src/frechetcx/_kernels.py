"""Compiled numeric kernels.

Everything in here works on plain float64/int64 arrays so it can be jitted.
A *cell* is a stack of k simplices given as ``verts[i, :mdims[i] + 1, :]``;
points inside simplex ``i`` are parameterized by ``mdims[i]`` free barycentric
coordinates (the coefficient of vertex 0 is implied).
"""

import numpy as np
from numba import njit

PAIRWISE = 0
STAR_MAX = 1
WEIGHTED_SUM = 2
MEB_RADIUS = 3
HULL_PERIMETER = 4

OK = 0
OK_LOOSE = 1
FAILED = 2


@njit(cache=True)
def _norm(v):
    s = 0.0
    for i in range(v.shape[0]):
        s += v[i] * v[i]
    return np.sqrt(s)


@njit(cache=True)
def _clamp01(x):
    if x < 0.0:
        return 0.0
    if x > 1.0:
        return 1.0
    return x


@njit(cache=True)
def segment_distance(p0, p1, q0, q1):
    """Closest points of segments p0p1 and q0q1 (either may be a point).

    Returns (distance, s, t) with the witnesses at p0 + s(p1-p0), q0 + t(q1-q0).
    """
    d1 = p1 - p0
    d2 = q1 - q0
    r = p0 - q0
    a = np.dot(d1, d1)
    e = np.dot(d2, d2)
    f = np.dot(d2, r)
    s = 0.0
    t = 0.0
    if a <= 0.0 and e <= 0.0:
        pass
    elif a <= 0.0:
        t = _clamp01(f / e)
    else:
        c = np.dot(d1, r)
        if e <= 0.0:
            s = _clamp01(-c / a)
        else:
            b = np.dot(d1, d2)
            denom = a * e - b * b
            if denom > 1e-14 * a * e:
                s = _clamp01((b * f - c * e) / denom)
            t = (b * s + f) / e
            if t < 0.0:
                t = 0.0
                s = _clamp01(-c / a)
            elif t > 1.0:
                t = 1.0
                s = _clamp01((b - c) / a)
    diff = (p0 + s * d1) - (q0 + t * d2)
    return _norm(diff), s, t


@njit(cache=True)
def _solve_small(A, b):
    """Gaussian elimination with partial pivoting; returns (ok, x)."""
    n = A.shape[0]
    M = A.copy()
    y = b.copy()
    scale = 0.0
    for i in range(n):
        for j in range(n):
            if abs(M[i, j]) > scale:
                scale = abs(M[i, j])
    if scale == 0.0:
        return False, y
    for col in range(n):
        piv = col
        for r in range(col + 1, n):
            if abs(M[r, col]) > abs(M[piv, col]):
                piv = r
        if abs(M[piv, col]) <= 1e-13 * scale:
            return False, y
        if piv != col:
            for j in range(n):
                tmp = M[col, j]
                M[col, j] = M[piv, j]
                M[piv, j] = tmp
            tmp = y[col]
            y[col] = y[piv]
            y[piv] = tmp
        for r in range(col + 1, n):
            fac = M[r, col] / M[col, col]
            if fac != 0.0:
                for j in range(col, n):
                    M[r, j] -= fac * M[col, j]
                y[r] -= fac * y[col]
    x = np.zeros(n)
    for i in range(n - 1, -1, -1):
        acc = y[i]
        for j in range(i + 1, n):
            acc -= M[i, j] * x[j]
        x[i] = acc / M[i, i]
    return True, x


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        c += x & 1
        x >>= 1
    return c


@njit(cache=True)
def simplex_distance(VA, mA, VB, mB):
    """Exact distance between conv(VA[:mA+1]) and conv(VB[:mB+1]).

    Enumerates face pairs and solves the affine-hull least squares problem on
    each; the optimum lies in the relative interior of some face pair where
    that solution is unique. Returns (distance, baryA, baryB).
    """
    d = VA.shape[1]
    na = mA + 1
    nb = mB + 1
    best = np.inf
    bestA = np.zeros(na)
    bestB = np.zeros(nb)
    if na <= 2 and nb <= 2:
        dist, s, t = segment_distance(VA[0], VA[na - 1], VB[0], VB[nb - 1])
        if na == 2:
            bestA[0] = 1.0 - s
            bestA[1] = s
        else:
            bestA[0] = 1.0
        if nb == 2:
            bestB[0] = 1.0 - t
            bestB[1] = t
        else:
            bestB[0] = 1.0
        return dist, bestA, bestB
    ia = np.zeros(na, dtype=np.int64)
    ib = np.zeros(nb, dtype=np.int64)
    for maskA in range(1, 1 << na):
        ca = 0
        for j in range(na):
            if maskA & (1 << j):
                ia[ca] = j
                ca += 1
        for maskB in range(1, 1 << nb):
            cb = 0
            for j in range(nb):
                if maskB & (1 << j):
                    ib[cb] = j
                    cb += 1
            p = ca - 1 + cb - 1
            a0 = VA[ia[0]]
            b0 = VB[ib[0]]
            coefA = np.zeros(ca)
            coefB = np.zeros(cb)
            coefA[0] = 1.0
            coefB[0] = 1.0
            if p > 0:
                M = np.zeros((d, p))
                for j in range(1, ca):
                    for r in range(d):
                        M[r, j - 1] = VA[ia[j], r] - a0[r]
                for j in range(1, cb):
                    for r in range(d):
                        M[r, ca - 1 + j - 1] = -(VB[ib[j], r] - b0[r])
                r0 = a0 - b0
                ok, z = _solve_small(M.T @ M, -(M.T @ r0))
                if not ok:
                    continue
                feasible = True
                sa = 0.0
                for j in range(1, ca):
                    coefA[j] = z[j - 1]
                    sa += z[j - 1]
                coefA[0] = 1.0 - sa
                sb = 0.0
                for j in range(1, cb):
                    coefB[j] = z[ca - 1 + j - 1]
                    sb += coefB[j]
                coefB[0] = 1.0 - sb
                for j in range(ca):
                    if coefA[j] < -1e-12:
                        feasible = False
                for j in range(cb):
                    if coefB[j] < -1e-12:
                        feasible = False
                if not feasible:
                    continue
                for j in range(ca):
                    if coefA[j] < 0.0:
                        coefA[j] = 0.0
                for j in range(cb):
                    if coefB[j] < 0.0:
                        coefB[j] = 0.0
                coefA /= coefA.sum()
                coefB /= coefB.sum()
            x = np.zeros(d)
            y = np.zeros(d)
            for j in range(ca):
                x += coefA[j] * VA[ia[j]]
            for j in range(cb):
                y += coefB[j] * VB[ib[j]]
            dist = _norm(x - y)
            if dist < best:
                best = dist
                bestA[:] = 0.0
                bestB[:] = 0.0
                for j in range(ca):
                    bestA[ia[j]] = coefA[j]
                for j in range(cb):
                    bestB[ib[j]] = coefB[j]
    return best, bestA, bestB


@njit(cache=True)
def meb_points(P):
    """Exact minimum enclosing ball of a small point set (rows of P).

    Tries every support set of at most d+1 points; the smallest circumscribed
    ball that contains everything is the answer.
    """
    k = P.shape[0]
    d = P.shape[1]
    lo = P[0].copy()
    hi = P[0].copy()
    for i in range(k):
        for r in range(d):
            lo[r] = min(lo[r], P[i, r])
            hi[r] = max(hi[r], P[i, r])
    scale = _norm(hi - lo)
    if scale == 0.0:
        return P[0].copy(), 0.0
    mag = 0.0
    for r in range(d):
        mag = max(mag, abs(lo[r]), abs(hi[r]))
    # relative to the spread, but never below coordinate roundoff
    slack = 1e-12 * scale + 8.0 * 2.220446049250313e-16 * mag
    best_r = np.inf
    best_c = P[0].copy()
    maxs = min(k, d + 1)
    idx = np.zeros(maxs, dtype=np.int64)
    for mask in range(1, 1 << k):
        m = _popcount(mask)
        if m > maxs:
            continue
        c = 0
        for j in range(k):
            if mask & (1 << j):
                idx[c] = j
                c += 1
        s0 = P[idx[0]]
        center = s0.copy()
        if m > 1:
            D = np.zeros((d, m - 1))
            for j in range(1, m):
                D[:, j - 1] = P[idx[j]] - s0
            G = D.T @ D
            rhs = np.zeros(m - 1)
            for j in range(m - 1):
                rhs[j] = 0.5 * G[j, j]
            ok, lam = _solve_small(G, rhs)
            if not ok:
                continue
            center = s0 + D @ lam
        rad = _norm(center - s0)
        if rad >= best_r:
            continue
        inside = True
        for i in range(k):
            if _norm(P[i] - center) > rad + slack:
                inside = False
                break
        if inside:
            best_r = rad
            best_c = center
    return best_c, best_r


@njit(cache=True)
def hull_order(P):
    """Indices of the planar convex hull (monotone chain, counter-clockwise)."""
    k = P.shape[0]
    order = np.arange(k)
    for i in range(1, k):
        j = i
        while j > 0:
            a = order[j - 1]
            b = order[j]
            if P[a, 0] > P[b, 0] or (P[a, 0] == P[b, 0] and P[a, 1] > P[b, 1]):
                order[j - 1] = b
                order[j] = a
                j -= 1
            else:
                break
    hull = np.zeros(2 * k + 1, dtype=np.int64)
    h = 0
    for ii in range(k):
        i = order[ii]
        while h >= 2:
            o = P[hull[h - 2]]
            a = P[hull[h - 1]]
            cr = (a[0] - o[0]) * (P[i, 1] - o[1]) - (a[1] - o[1]) * (P[i, 0] - o[0])
            if cr <= 0.0:
                h -= 1
            else:
                break
        hull[h] = i
        h += 1
    lower = h + 1
    for ii in range(k - 2, -1, -1):
        i = order[ii]
        while h >= lower:
            o = P[hull[h - 2]]
            a = P[hull[h - 1]]
            cr = (a[0] - o[0]) * (P[i, 1] - o[1]) - (a[1] - o[1]) * (P[i, 0] - o[0])
            if cr <= 0.0:
                h -= 1
            else:
                break
        hull[h] = i
        h += 1
    if h > 1:
        h -= 1
    return hull[:h]


@njit(cache=True)
def builtin_oracle(kind, pts, center, iparams, fparams, gpts, gcenter):
    """Value and a subgradient of a registered cost at ``pts`` (and ``center``)."""
    k = pts.shape[0]
    gpts[:, :] = 0.0
    gcenter[:] = 0.0
    if kind == PAIRWISE:
        diff = pts[0] - pts[1]
        f = _norm(diff)
        if f > 0.0:
            gpts[0] = diff / f
            gpts[1] = -diff / f
        return f
    if kind == STAR_MAX:
        h = iparams[0]
        f = 0.0
        arg = -1
        for i in range(k):
            if i == h:
                continue
            v = _norm(pts[h] - pts[i])
            if v > f or arg < 0:
                f = v
                arg = i
        if arg >= 0 and f > 0.0:
            u = (pts[h] - pts[arg]) / f
            gpts[h] = u
            gpts[arg] = -u
        return f
    if kind == WEIGHTED_SUM:
        f = 0.0
        for e in range(fparams.shape[0]):
            a = iparams[2 * e]
            b = iparams[2 * e + 1]
            w = fparams[e]
            diff = pts[a] - pts[b]
            v = _norm(diff)
            f += w * v
            if v > 0.0:
                gpts[a] += w * diff / v
                gpts[b] -= w * diff / v
        return f
    if kind == MEB_RADIUS:
        f = -1.0
        arg = 0
        for i in range(k):
            v = _norm(center - pts[i])
            if v > f:
                f = v
                arg = i
        if f > 0.0:
            u = (center - pts[arg]) / f
            gcenter[:] = u
            gpts[arg] = -u
        return f
    if kind == HULL_PERIMETER:
        hull = hull_order(pts)
        h = hull.shape[0]
        if h < 2:
            return 0.0
        f = 0.0
        for j in range(h):
            a = hull[j]
            b = hull[(j + 1) % h]
            diff = pts[b] - pts[a]
            v = _norm(diff)
            f += v
            if v > 0.0:
                gpts[b] += diff / v
                gpts[a] -= diff / v
        return f
    return np.nan


@njit(cache=True)
def _points_from(x, verts, mdims, pts):
    k = verts.shape[0]
    off = 0
    for i in range(k):
        pts[i] = verts[i, 0]
        for j in range(mdims[i]):
            pts[i] += x[off + j] * (verts[i, j + 1] - verts[i, 0])
        off += mdims[i]


@njit(cache=True)
def _bbox_scale(verts, mdims):
    k = verts.shape[0]
    lo = verts[0, 0].copy()
    hi = verts[0, 0].copy()
    for i in range(k):
        for j in range(mdims[i] + 1):
            for r in range(verts.shape[2]):
                lo[r] = min(lo[r], verts[i, j, r])
                hi[r] = max(hi[r], verts[i, j, r])
    return _norm(hi - lo)


def make_ellipsoid(oracle):
    """Build an ellipsoid-method minimizer around a cost oracle.

    The returned function is plain numpy, so it can be jitted when ``oracle``
    is itself jitted (builtin costs) or run interpreted with a Python oracle.
    """

    def ellipsoid_core(kind, verts, mdims, iparams, fparams, use_center, tol_abs, maxiter):
        """Minimize a convex cost over a product of simplices by the ellipsoid method.

        Variables are the free barycentric coordinates of each simplex, followed by
        a scaled ball center when ``use_center`` (minimum enclosing ball cost).
        Uses deep cuts; the lower bound ``f(x) - ||g||_P`` from every objective
        cut certifies the gap. Returns (status, fbest, points, center, gap, iters).
        """
        k = verts.shape[0]
        d = verts.shape[2]
        nl = 0
        for i in range(k):
            nl += mdims[i]
        nc = d if use_center else 0
        n = nl + nc
        # center box for the enclosing-ball variables
        c0 = np.zeros(d)
        cnt = 0
        for i in range(k):
            for j in range(mdims[i] + 1):
                c0 += verts[i, j]
                cnt += 1
        c0 /= cnt
        R = 0.0
        for i in range(k):
            for j in range(mdims[i] + 1):
                R = max(R, _norm(verts[i, j] - c0))
        if R == 0.0:
            R = 1.0
        pts = np.zeros((k, d))
        gpts = np.zeros((k, d))
        gc = np.zeros(d)
        center = c0.copy()
        x = np.zeros(n)
        for i in range(nl):
            x[i] = 0.5
        best_x = x.copy()
        fbest = np.inf
        lb = -np.inf
        g = np.zeros(n)

        if n == 0:
            _points_from(x, verts, mdims, pts)
            f = oracle(kind, pts, center, iparams, fparams, gpts, gc)
            return OK, f, pts, center, 0.0, 0

        if n == 1:
            # bisection on the single coordinate using the subgradient sign
            lo = 0.0 if nl == 1 else -1.0
            hi = 1.0
            it = 0
            for it in range(200):
                xm = 0.5 * (lo + hi)
                x[0] = xm
                _points_from(x[:nl], verts, mdims, pts)
                if nc:
                    center = c0 + R * x[nl:]
                f = oracle(kind, pts, center, iparams, fparams, gpts, gc)
                if f < fbest:
                    fbest = f
                    best_x[:] = x
                gs = 0.0
                if nl == 1:
                    for i in range(k):
                        if mdims[i] == 1:
                            gs = np.dot(gpts[i], verts[i, 1] - verts[i, 0])
                else:
                    gs = R * gc[0]
                lb = max(lb, f - abs(gs) * (hi - lo))
                if gs > 0.0:
                    hi = xm
                elif gs < 0.0:
                    lo = xm
                else:
                    lb = fbest
                if fbest - lb <= tol_abs or hi - lo <= 1e-16:
                    break
            # the interval endpoints are candidates too (kinks at the boundary)
            for xe in (lo, hi):
                x[0] = xe
                _points_from(x[:nl], verts, mdims, pts)
                if nc:
                    center = c0 + R * x[nl:]
                f = oracle(kind, pts, center, iparams, fparams, gpts, gc)
                if f < fbest:
                    fbest = f
                    best_x[:] = x
            _points_from(best_x[:nl], verts, mdims, pts)
            if nc:
                center = c0 + R * best_x[nl:]
            gap = max(fbest - lb, 0.0)
            return OK, fbest, pts, center, gap, it + 1

        P = np.zeros((n, n))
        for i in range(n):
            P[i, i] = n * (0.25 if i < nl else 1.0)
        status = FAILED
        it = 0
        for it in range(maxiter):
            # feasibility: most violated simplex constraint
            worst = 0.0
            wkind = -1
            wi = 0
            off = 0
            for i in range(k):
                s = 0.0
                for j in range(mdims[i]):
                    v = x[off + j]
                    s += v
                    if -v > worst:
                        worst = -v
                        wkind = 0
                        wi = off + j
                if s - 1.0 > worst:
                    worst = s - 1.0
                    wkind = 1
                    wi = i
                off += mdims[i]
            g[:] = 0.0
            if wkind >= 0:
                if wkind == 0:
                    g[wi] = -1.0
                else:
                    off = 0
                    for i in range(wi):
                        off += mdims[i]
                    for j in range(mdims[wi]):
                        g[off + j] = 1.0
                Pg = P @ g
                gPg = np.dot(g, Pg)
                if gPg <= 0.0:
                    break
                sq = np.sqrt(gPg)
                alpha = worst / sq
            else:
                _points_from(x, verts, mdims, pts)
                if nc:
                    center = c0 + R * x[nl:]
                f = oracle(kind, pts, center, iparams, fparams, gpts, gc)
                if f < fbest:
                    fbest = f
                    best_x[:] = x
                off = 0
                for i in range(k):
                    for j in range(mdims[i]):
                        g[off + j] = np.dot(gpts[i], verts[i, j + 1] - verts[i, 0])
                    off += mdims[i]
                for r in range(nc):
                    g[nl + r] = R * gc[r]
                Pg = P @ g
                gPg = np.dot(g, Pg)
                if gPg <= 0.0:
                    lb = fbest
                    status = OK
                    break
                sq = np.sqrt(gPg)
                lb = max(lb, f - sq)
                if fbest - lb <= tol_abs:
                    status = OK
                    break
                alpha = (f - fbest) / sq
            if alpha >= 1.0:
                # the cut leaves nothing but the boundary; numerically exhausted
                break
            b = Pg / sq
            x = x - (1.0 + n * alpha) / (n + 1.0) * b
            fac = n * n * (1.0 - alpha * alpha) / (n * n - 1.0)
            P = fac * (P - (2.0 * (1.0 + n * alpha) / ((n + 1.0) * (1.0 + alpha))) * np.outer(b, b))
            P = 0.5 * (P + P.T)
        gap = fbest - lb
        if status != OK:
            if gap <= tol_abs * 1e3:
                status = OK_LOOSE
        _points_from(best_x[:nl], verts, mdims, pts)
        if nc:
            center = c0 + R * best_x[nl:]
        return status, fbest, pts, center, max(gap, 0.0), it + 1
    return ellipsoid_core


ellipsoid_builtin = njit(cache=True)(make_ellipsoid(builtin_oracle))


@njit(cache=True)
def _pair_index(kind, iparams, k):
    """Multiplier turning a two-point cost into plain distance, or -1."""
    if k != 2:
        return -1.0
    if kind == PAIRWISE or kind == STAR_MAX:
        return 1.0
    if kind == MEB_RADIUS:
        return 0.5
    if kind == HULL_PERIMETER:
        return 2.0
    return -1.0


@njit(cache=True)
def cell_minimize(kind, verts, mdims, iparams, fparams, tol_rel, maxiter):
    """Elevation of one product cell under a builtin cost.

    Returns (status, value, points, gap). Point cells are evaluated directly,
    two-point distance-type costs use the exact simplex distance, everything
    else goes through the ellipsoid method.
    """
    k = verts.shape[0]
    d = verts.shape[2]
    pts = np.zeros((k, d))
    gpts = np.zeros((k, d))
    gc = np.zeros(d)
    free = 0
    for i in range(k):
        free += mdims[i]
    if free == 0:
        for i in range(k):
            pts[i] = verts[i, 0]
        if kind == MEB_RADIUS:
            c, r = meb_points(pts)
            return OK, r, pts, 0.0
        f = builtin_oracle(kind, pts, gc, iparams, fparams, gpts, gc)
        return OK, f, pts, 0.0
    mult = _pair_index(kind, iparams, k)
    if kind == WEIGHTED_SUM and k == 2:
        mult = 0.0
        for e in range(fparams.shape[0]):
            mult += fparams[e]
    if mult >= 0.0:
        dist, ba, bb = simplex_distance(verts[0], mdims[0], verts[1], mdims[1])
        pts[0] = 0.0
        pts[1] = 0.0
        for j in range(mdims[0] + 1):
            pts[0] += ba[j] * verts[0, j]
        for j in range(mdims[1] + 1):
            pts[1] += bb[j] * verts[1, j]
        return OK, mult * dist, pts, 0.0
    scale = _bbox_scale(verts, mdims)
    if scale == 0.0:
        scale = 1.0
    use_center = kind == MEB_RADIUS
    status, f, pts, center, gap, iters = ellipsoid_builtin(
        kind, verts, mdims, iparams, fparams, use_center,
        tol_rel * scale, maxiter)
    if kind == MEB_RADIUS:
        c, r = meb_points(pts)
        if r < f:
            f = r
    return status, f, pts, gap


@njit(cache=True)
def _curve_cell(coords, lens, feats, verts, mdims):
    """Fill (verts, mdims) for a cell of k curves given feature indices.

    Feature 2i is vertex i, feature 2i+1 the segment from vertex i to i+1.
    """
    k = feats.shape[0]
    for i in range(k):
        f = feats[i]
        v = f // 2
        verts[i, 0] = coords[i, v]
        if f % 2 == 1:
            verts[i, 1] = coords[i, v + 1]
            mdims[i] = 1
        else:
            verts[i, 1] = coords[i, v]
            mdims[i] = 0


@njit(cache=True)
def curve_prim(coords, lens, kind, iparams, fparams, bound, tol_rel, maxiter):
    """Prim's algorithm on the implicit cell graph of k polygonal curves.

    Starts at the all-first-vertices cell and stops when the all-last-vertices
    cell enters the tree, or when every frontier key exceeds ``bound``.
    Ties are broken by the linear cell index, i.e. lexicographic feature tuple.

    Returns (status, reached, value, path_indices, explored, evaluated).
    ``status`` is FAILED if some cell minimization did not converge.
    """
    k = coords.shape[0]
    d = coords.shape[2]
    sizes = np.zeros(k, dtype=np.int64)
    strides = np.zeros(k, dtype=np.int64)
    for i in range(k):
        sizes[i] = 2 * lens[i] - 1
    acc = 1
    for i in range(k - 1, -1, -1):
        strides[i] = acc
        acc *= sizes[i]
    goal = 0
    for i in range(k):
        goal += (sizes[i] - 1) * strides[i]
    verts = np.zeros((k, 2, d))
    mdims = np.zeros(k, dtype=np.int64)
    feats = np.zeros(k, dtype=np.int64)
    elev = dict()
    elev[np.int64(0)] = 0.0
    del elev[np.int64(0)]
    parent = dict()
    parent[np.int64(0)] = np.int64(-1)
    intree = dict()
    intree[np.int64(0)] = True
    del intree[np.int64(0)]
    status = OK

    # elevation of the start cell
    for i in range(k):
        feats[i] = 0
    _curve_cell(coords, lens, feats, verts, mdims)
    st, e0, _, _ = cell_minimize(kind, verts, mdims, iparams, fparams, tol_rel, maxiter)
    if st == FAILED:
        status = FAILED
    elev[np.int64(0)] = e0
    evaluated = 1
    heap = [(e0, np.int64(0), np.int64(-1))]
    explored = 0
    reached = False
    while len(heap) > 0:
        item = _heappop(heap)
        key = item[0]
        idx = item[1]
        if idx in intree:
            continue
        if key > bound:
            break
        intree[idx] = True
        parent[idx] = item[2]
        explored += 1
        if idx == goal:
            reached = True
            break
        ev = elev[idx]
        rem = idx
        for i in range(k):
            feats[i] = rem // strides[i]
            rem = rem % strides[i]
        for i in range(k):
            f = feats[i]
            for step in (-1, 1):
                nf = f + step
                if nf < 0 or nf >= sizes[i]:
                    continue
                nidx = idx + step * strides[i]
                if nidx in intree:
                    continue
                if nidx in elev:
                    en = elev[nidx]
                else:
                    feats[i] = nf
                    _curve_cell(coords, lens, feats, verts, mdims)
                    feats[i] = f
                    st, en, _, _ = cell_minimize(kind, verts, mdims, iparams, fparams,
                                                 tol_rel, maxiter)
                    if st == FAILED:
                        status = FAILED
                    elev[nidx] = en
                    evaluated += 1
                w = en if en > ev else ev
                if w <= bound:
                    _heappush(heap, (w, nidx, idx))
    path = np.zeros(0, dtype=np.int64)
    value = np.inf
    if reached:
        n = 0
        cur = goal
        while cur >= 0:
            n += 1
            cur = parent[cur]
        path = np.zeros(n, dtype=np.int64)
        cur = goal
        j = n - 1
        value = 0.0
        while cur >= 0:
            path[j] = cur
            if elev[cur] > value:
                value = elev[cur]
            j -= 1
            cur = parent[cur]
    return status, reached, value, path, explored, evaluated


@njit(cache=True)
def _heappush(heap, item):
    heap.append(item)
    pos = len(heap) - 1
    while pos > 0:
        par = (pos - 1) >> 1
        if item < heap[par]:
            heap[pos] = heap[par]
            pos = par
        else:
            break
    heap[pos] = item


@njit(cache=True)
def _heappop(heap):
    last = heap.pop()
    if len(heap) == 0:
        return last
    top = heap[0]
    n = len(heap)
    pos = 0
    while True:
        child = 2 * pos + 1
        if child >= n:
            break
        if child + 1 < n and heap[child + 1] < heap[child]:
            child += 1
        if heap[child] < last:
            heap[pos] = heap[child]
            pos = child
        else:
            break
    heap[pos] = last
    return top


@njit(cache=True)
def centers_along(W, resolution):
    """Enclosing-ball centers at ``resolution`` samples per step of a motion.

    ``W`` is ``(m, k, d)``: the k positions at each breakpoint.
    """
    m, k, d = W.shape
    out = np.zeros((1 + max(m - 1, 0) * resolution, d))
    c, _ = meb_points(W[0])
    out[0] = c
    j = 1
    for s in range(m - 1):
        same = True
        for i in range(k):
            for r in range(d):
                if W[s, i, r] != W[s + 1, i, r]:
                    same = False
        if same:
            continue
        for t in range(1, resolution + 1):
            lam = t / resolution
            c, _ = meb_points((1.0 - lam) * W[s] + lam * W[s + 1])
            out[j] = c
            j += 1
    return out[:j]
