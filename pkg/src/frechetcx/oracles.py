"""Slow, independent reference implementations used by the test-suite.

Nothing here calls the production solvers; the point is to have a second
route to every value the package computes.
"""

from __future__ import annotations

import itertools
import math
from collections import deque

import numpy as np

# -- elementary geometry, written out longhand ------------------------------


def seg_point(p, a, b) -> float:
    """Distance from p to segment ab via projection clamping."""
    p, a, b = (np.asarray(x, float) for x in (p, a, b))
    ab = b - a
    den = float(np.dot(ab, ab))
    if den == 0.0:
        return float(np.linalg.norm(p - a))
    t = float(np.dot(p - a, ab)) / den
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    return float(np.linalg.norm(a + t * ab - p))


def _cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def seg_seg_2d(a, b, c, d) -> float:
    """Planar segment distance: zero if they cross, else the best endpoint-segment pair."""
    a, b, c, d = (np.asarray(x, float) for x in (a, b, c, d))
    d1 = _cross2(b - a, c - a)
    d2 = _cross2(b - a, d - a)
    d3 = _cross2(d - c, a - c)
    d4 = _cross2(d - c, b - c)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return 0.0
    return min(seg_point(a, c, d), seg_point(b, c, d), seg_point(c, a, b), seg_point(d, a, b))


def grid_simplex_distance(A, B, steps: int = 60) -> float:
    """Upper estimate of the distance between two simplices on barycentric grids."""
    def grid(V):
        V = np.asarray(V, float)
        m = len(V)
        pts = []
        for c in itertools.product(range(steps + 1), repeat=m - 1):
            if sum(c) <= steps:
                w = np.array(list(c) + [steps - sum(c)], float) / steps
                pts.append(w @ V)
        return np.array(pts)
    GA, GB = grid(A), grid(B)
    best = np.inf
    for p in GA:
        best = min(best, float(np.min(np.linalg.norm(GB - p, axis=1))))
    return best


def meb_exhaustive(P):
    """Smallest enclosing circle/ball by trying every support set of size <= d+1."""
    P = np.asarray(P, float)
    n, d = P.shape
    best_r, best_c = np.inf, None
    for size in range(1, min(n, d + 1) + 1):
        for S in itertools.combinations(range(n), size):
            Q = P[list(S)]
            if size == 1:
                c = Q[0]
            else:
                # circumcenter within the affine hull of Q
                M = Q[1:] - Q[0]
                G = M @ M.T
                rhs = 0.5 * np.einsum("ij,ij->i", M, M)
                try:
                    lam = np.linalg.solve(G, rhs)
                except np.linalg.LinAlgError:
                    continue
                c = Q[0] + lam @ M
            r = float(np.max(np.linalg.norm(P - c, axis=1)))
            if r < best_r - 1e-15:
                best_r, best_c = r, c
    return best_c, best_r


# -- bottleneck paths ---------------------------------------------------------


def threshold_bottleneck(n, edges, s, t) -> float:
    """Smallest weight w such that edges of weight <= w connect s and t."""
    if s == t:
        return 0.0
    weights = sorted({w for _, _, w in edges})
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    ordered = sorted(edges, key=lambda e: e[2])
    k = 0
    for w in weights:
        while k < len(ordered) and ordered[k][2] <= w:
            a, b, _ = ordered[k]
            parent[find(a)] = find(b)
            k += 1
        if find(s) == find(t):
            return w
    return math.inf


def simple_path_bottleneck(n, edges, s, t) -> float:
    """Minimum over all simple s-t paths of the largest edge weight (DFS)."""
    adj = [[] for _ in range(n)]
    for a, b, w in edges:
        adj[a].append((b, w))
        adj[b].append((a, w))
    best = [math.inf]
    seen = [False] * n

    def go(x, cur):
        if cur >= best[0]:
            return
        if x == t:
            best[0] = cur
            return
        seen[x] = True
        for y, w in adj[x]:
            if not seen[y]:
                go(y, max(cur, w))
        seen[x] = False

    go(s, 0.0 if s != t else 0.0)
    return best[0]


# -- weak Fréchet over cell paths ---------------------------------------------


def weak_frechet_cells(P, Q) -> float:
    """Weak Fréchet distance of two planar curves as a threshold search.

    Grid cells (i, j) with i over the 2n-1 vertices/segments of P and j
    likewise for Q; the cell cost is the distance between the two features.
    """
    P, Q = np.asarray(P, float), np.asarray(Q, float)

    def feats(C):
        out = []
        for i in range(len(C)):
            out.append((C[i],))
            if i + 1 < len(C):
                out.append((C[i], C[i + 1]))
        return out

    FP, FQ = feats(P), feats(Q)

    def cost(x, y):
        if len(x) == 1 and len(y) == 1:
            return float(np.linalg.norm(x[0] - y[0]))
        if len(x) == 1:
            return seg_point(x[0], *y)
        if len(y) == 1:
            return seg_point(y[0], *x)
        return seg_seg_2d(*x, *y)

    H = np.array([[cost(x, y) for y in FQ] for x in FP])
    R, C = H.shape
    for w in np.unique(H):
        if H[0, 0] > w or H[-1, -1] > w:
            continue
        seen = np.zeros_like(H, dtype=bool)
        seen[0, 0] = True
        q = deque([(0, 0)])
        while q:
            i, j = q.popleft()
            for di in (-1, 0, 1):
                for dj in (-1, 0, 1):
                    if di == dj == 0:
                        continue
                    a, b = i + di, j + dj
                    if 0 <= a < R and 0 <= b < C and not seen[a, b] and H[a, b] <= w:
                        seen[a, b] = True
                        q.append((a, b))
        if seen[-1, -1]:
            return float(w)
    return math.inf


# -- monotone Fréchet for curves (free-space intervals) ------------------------


def _interval(p, a, b, eps):
    """Sub-interval of [0,1] of segment ab within eps of p, or None."""
    ab = b - a
    L2 = float(ab @ ab)
    if L2 == 0.0:
        return (0.0, 1.0) if np.linalg.norm(p - a) <= eps else None
    t0 = float((p - a) @ ab) / L2
    foot = a + t0 * ab
    h2 = float((p - foot) @ (p - foot))
    if h2 > eps * eps:
        return None
    half = math.sqrt(max(eps * eps - h2, 0.0) / L2)
    lo, hi = max(0.0, t0 - half), min(1.0, t0 + half)
    if np.linalg.norm(p - a) <= eps:
        lo = 0.0
    if np.linalg.norm(p - b) <= eps:
        hi = 1.0
    return (lo, hi) if lo <= hi else None


def frechet_decide_curves(P, Q, eps) -> bool:
    """Classical free-space reachability on the (m-1) x (n-1) cell grid."""
    P, Q = np.asarray(P, float), np.asarray(Q, float)
    m, n = len(P), len(Q)
    if np.linalg.norm(P[0] - Q[0]) > eps or np.linalg.norm(P[-1] - Q[-1]) > eps:
        return False
    if m == 1 or n == 1:
        return max(np.max(np.linalg.norm(P - Q[0], axis=1)),
                   np.max(np.linalg.norm(Q - P[0], axis=1))) <= eps
    # LF[i][j]: point P[i] vs segment Q[j]Q[j+1]; BF[i][j]: point Q[j] vs segment P[i]P[i+1]
    LF = [[_interval(P[i], Q[j], Q[j + 1], eps) for j in range(n - 1)] for i in range(m)]
    BF = [[_interval(Q[j], P[i], P[i + 1], eps) for j in range(n)] for i in range(m - 1)]
    LR = [[None] * (n - 1) for _ in range(m)]
    BR = [[None] * n for _ in range(m - 1)]
    ok = True
    for j in range(n - 1):
        f = LF[0][j]
        if ok and f is not None and f[0] == 0.0:
            LR[0][j] = f
            ok = f[1] == 1.0
        else:
            ok = False
    ok = True
    for i in range(m - 1):
        f = BF[i][0]
        if ok and f is not None and f[0] == 0.0:
            BR[i][0] = f
            ok = f[1] == 1.0
        else:
            ok = False
    for i in range(m - 1):
        for j in range(n - 1):
            left, bottom = LR[i][j], BR[i][j]
            if left is None and bottom is None:
                continue
            f = LF[i + 1][j]
            if f is not None:
                if bottom is not None:
                    LR[i + 1][j] = f
                elif max(left[0], f[0]) <= f[1]:
                    LR[i + 1][j] = (max(left[0], f[0]), f[1])
            f = BF[i][j + 1]
            if f is not None:
                if left is not None:
                    BR[i][j + 1] = f
                elif max(bottom[0], f[0]) <= f[1]:
                    BR[i][j + 1] = (max(bottom[0], f[0]), f[1])
    r, t = LR[m - 1][n - 2], BR[m - 2][n - 1]
    return (r is not None and r[1] == 1.0) or (t is not None and t[1] == 1.0)


def curve_critical_values(P, Q) -> np.ndarray:
    """All candidate radii for two curves, enumerated over every tuple."""
    P, Q = np.asarray(P, float), np.asarray(Q, float)
    vals = [float(np.linalg.norm(p - q)) for p in P for q in Q]
    for A, B in ((P, Q), (Q, P)):
        for p in A:
            for j in range(len(B) - 1):
                vals.append(seg_point(p, B[j], B[j + 1]))
        for j in range(len(B) - 1):
            a, b = B[j], B[j + 1]
            ab = b - a
            for u, w in itertools.combinations(range(len(A)), 2):
                x, y = A[u], A[w]
                # point a + s ab equidistant from x and y
                den = 2.0 * float(ab @ (y - x))
                if den == 0.0:
                    continue
                s = float((y - a) @ (y - a) - (x - a) @ (x - a)) / den
                if 0.0 <= s <= 1.0:
                    vals.append(float(np.linalg.norm(a + s * ab - x)))
    return np.unique(vals)


def monotone_frechet_curves(P, Q, rtol: float = 1e-11) -> float:
    """Exact Fréchet distance of two curves by scanning every candidate radius."""
    cand = curve_critical_values(P, Q)
    lo, hi = -1, len(cand) - 1
    scale = float(np.abs(np.concatenate([np.asarray(P, float), np.asarray(Q, float)])).max()) + 1.0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if frechet_decide_curves(P, Q, cand[mid] * (1 + rtol) + 1e-14 * scale):
            hi = mid
        else:
            lo = mid
    return float(cand[hi])


def monotone_frechet_sampled(P, Q, samples: int = 400) -> float:
    """Discrete Fréchet distance of densely resampled curves (an upper bound)."""
    def dense(C):
        C = np.asarray(C, float)
        out = [C[0]]
        for a, b in zip(C, C[1:]):
            for lam in np.linspace(0, 1, samples // max(len(C) - 1, 1) + 2)[1:]:
                out.append((1 - lam) * a + lam * b)
        return np.array(out)
    A, B = dense(P), dense(Q)
    D = np.linalg.norm(A[:, None] - B[None], axis=2)
    F = np.full_like(D, np.inf)
    for i in range(len(A)):
        for j in range(len(B)):
            prev = 0.0 if i == j == 0 else min(
                F[i - 1, j] if i else np.inf, F[i, j - 1] if j else np.inf,
                F[i - 1, j - 1] if i and j else np.inf)
            F[i, j] = max(prev, D[i, j])
    return float(F[-1, -1])


# -- cell-graph adjacency ------------------------------------------------------


def adjacency_bruteforce(complexes):
    """Adjacent product cells by direct face/coface tests on vertex sets."""
    sims = [c.simplices for c in complexes]
    cells = list(itertools.product(*[range(len(s)) for s in sims]))
    out = set()
    for x in cells:
        for y in cells:
            diff = [i for i in range(len(x)) if x[i] != y[i]]
            if len(diff) != 1:
                continue
            i = diff[0]
            a, b = set(sims[i][x[i]]), set(sims[i][y[i]])
            if a < b or b < a:
                out.add((x, y))
    return out


def check_candidate_sandwich(P, Z) -> bool:
    """Each pairwise distance y has z1 <= y <= z2 <= 2 z1 with z1, z2 in Z."""
    P = np.asarray(P, float)
    Z = np.sort(np.asarray(Z, float))
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            y = float(np.linalg.norm(P[i] - P[j]))
            if y == 0.0:
                continue
            k = np.searchsorted(Z, y, side="right") - 1
            if k < 0:
                return False
            z1 = Z[k]
            k2 = np.searchsorted(Z, y, side="left")
            if k2 >= len(Z) or Z[k2] > 2.0 * z1 * (1 + 1e-12):
                return False
    return True
