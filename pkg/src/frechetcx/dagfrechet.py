"""Exact monotone Fréchet distance between two DAG complexes.

A decision procedure sweeps the product complex in topological order and
keeps, for every 1-cell, the earliest reachable parameter. The optimum is a
critical value (vertex-vertex, vertex-edge or monotonicity event); it is
located by sampling critical values, binary searching the sample, and then
enumerating the few events that fall into the resulting atomic interval.
"""

from __future__ import annotations

import heapq
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .complex import Curve, DagComplex

VERTEX_VERTEX = "vertex-vertex"
VERTEX_EDGE = "vertex-edge"
MONOTONICITY = "monotonicity"

#: relative slack applied to δ inside the decision procedure
DECIDE_RTOL = 1e-11

# predecessor codes
_P_NONE, _P_START, _P_VERTEX, _P_LEFT, _P_BOTTOM, _P_EV, _P_UF = range(7)


def as_dag(c) -> DagComplex:
    if isinstance(c, DagComplex):
        return c
    if isinstance(c, Curve):
        return DagComplex.from_curve(c)
    return DagComplex.from_curve(Curve(c))


@dataclass(frozen=True)
class _Arrays:
    P: np.ndarray
    E: np.ndarray
    kind: np.ndarray  # features in topological rank order: 0 vertex / 1 edge
    fid: np.ndarray
    out_ptr: np.ndarray
    out_idx: np.ndarray


def _arrays(C: DagComplex) -> _Arrays:
    if C.order is None:
        raise ValueError(f"{C.name or 'DAG'} contains a directed cycle")
    kind, fid = [], []
    for u in C.order:
        kind.append(0)
        fid.append(u)
        for j in C.out_edges[u]:
            kind.append(1)
            fid.append(j)
    ptr = np.zeros(len(C.points) + 1, dtype=np.int64)
    idx = []
    for u in range(len(C.points)):
        idx.extend(C.out_edges[u])
        ptr[u + 1] = len(idx)
    E = np.array(C.edges, dtype=np.int64).reshape(-1, 2)
    return _Arrays(np.ascontiguousarray(C.points), E, np.array(kind, dtype=np.int64),
                   np.array(fid, dtype=np.int64), ptr, np.array(idx, dtype=np.int64))


@njit(cache=True)
def _dist(p, q):
    s = 0.0
    for r in range(p.shape[0]):
        t = p[r] - q[r]
        s += t * t
    return math.sqrt(s)


@njit(cache=True)
def _free_interval(a, b, v, delta):
    """Parameters s in [0,1] with |a + s(b-a) - v| <= delta; (1, 0) when empty."""
    da = _dist(a, v) <= delta
    db = _dist(b, v) <= delta
    A = 0.0
    B = 0.0
    C = -delta * delta
    for r in range(a.shape[0]):
        e = b[r] - a[r]
        w = a[r] - v[r]
        A += e * e
        B += 2.0 * e * w
        C += w * w
    if A == 0.0:
        if da:
            return 0.0, 1.0
        return 1.0, 0.0
    disc = B * B - 4.0 * A * C
    if disc < 0.0:
        if da or db:
            # roundoff at a tangency; endpoint tests are authoritative
            return (0.0 if da else 1.0), (1.0 if db else 0.0)
        return 1.0, 0.0
    sq = math.sqrt(disc)
    if B >= 0.0:
        q = -0.5 * (B + sq)
    else:
        q = -0.5 * (B - sq)
    r1 = q / A
    r2 = C / q if q != 0.0 else r1
    lo = min(r1, r2)
    hi = max(r1, r2)
    lo = max(lo, 0.0)
    hi = min(hi, 1.0)
    if da:
        lo = 0.0
    if db:
        hi = 1.0
    return lo, hi


@njit(cache=True)
def _decide(P1, E1, k1, f1, op1, oi1, P2, E2, k2, f2, op2, oi2, s1, s2, t1, t2, delta):
    n1, n2 = P1.shape[0], P2.shape[0]
    m1, m2 = E1.shape[0], E2.shape[0]
    vv = np.zeros((n1, n2), dtype=np.bool_)
    vv_pred = np.zeros((n1, n2, 3), dtype=np.int64)
    ev = np.full((m1, n2), np.inf)
    ev_pred = np.zeros((m1, n2, 3), dtype=np.int64)
    uf = np.full((n1, m2), np.inf)
    uf_pred = np.zeros((n1, m2, 3), dtype=np.int64)
    if _dist(P1[s1], P2[s2]) <= delta:
        vv[s1, s2] = True
        vv_pred[s1, s2, 0] = _P_START
    for i1 in range(k1.shape[0]):
        a1 = f1[i1]
        for i2 in range(k2.shape[0]):
            a2 = f2[i2]
            if k1[i1] == 0 and k2[i2] == 0:
                u, v = a1, a2
                if not vv[u, v]:
                    continue
                for j in range(op1[u], op1[u + 1]):
                    e = oi1[j]
                    if ev[e, v] > 0.0:
                        ev[e, v] = 0.0
                        ev_pred[e, v, 0] = _P_VERTEX
                        ev_pred[e, v, 1] = u
                        ev_pred[e, v, 2] = v
                for j in range(op2[v], op2[v + 1]):
                    f = oi2[j]
                    if uf[u, f] > 0.0:
                        uf[u, f] = 0.0
                        uf_pred[u, f, 0] = _P_VERTEX
                        uf_pred[u, f, 1] = u
                        uf_pred[u, f, 2] = v
            elif k1[i1] == 1 and k2[i2] == 0:
                e, v = a1, a2
                if ev[e, v] == np.inf:
                    continue
                b = E1[e, 1]
                if not vv[b, v] and _dist(P1[b], P2[v]) <= delta:
                    vv[b, v] = True
                    vv_pred[b, v, 0] = _P_EV
                    vv_pred[b, v, 1] = e
                    vv_pred[b, v, 2] = v
            elif k1[i1] == 0 and k2[i2] == 1:
                u, f = a1, a2
                if uf[u, f] == np.inf:
                    continue
                d = E2[f, 1]
                if not vv[u, d] and _dist(P1[u], P2[d]) <= delta:
                    vv[u, d] = True
                    vv_pred[u, d, 0] = _P_UF
                    vv_pred[u, d, 1] = u
                    vv_pred[u, d, 2] = f
            else:
                e, f = a1, a2
                a, b = E1[e, 0], E1[e, 1]
                c, d = E2[f, 0], E2[f, 1]
                l0 = uf[a, f]
                b0 = ev[e, c]
                hasL = l0 < np.inf
                hasB = b0 < np.inf
                if not hasL and not hasB:
                    continue
                # top side (e, d): s-parameter along e
                tlo, thi = _free_interval(P1[a], P1[b], P2[d], delta)
                if tlo <= thi:
                    cand = tlo if hasL else max(tlo, b0)
                    if cand <= thi and cand < ev[e, d]:
                        ev[e, d] = cand
                        ev_pred[e, d, 0] = _P_LEFT if hasL else _P_BOTTOM
                        ev_pred[e, d, 1] = e
                        ev_pred[e, d, 2] = f
                # right side (b, f): t-parameter along f
                rlo, rhi = _free_interval(P2[c], P2[d], P1[b], delta)
                if rlo <= rhi:
                    cand = rlo if hasB else max(rlo, l0)
                    if cand <= rhi and cand < uf[b, f]:
                        uf[b, f] = cand
                        uf_pred[b, f, 0] = _P_BOTTOM if hasB else _P_LEFT
                        uf_pred[b, f, 1] = e
                        uf_pred[b, f, 2] = f
                if not vv[b, d] and _dist(P1[b], P2[d]) <= delta:
                    vv[b, d] = True
                    vv_pred[b, d, 0] = _P_LEFT if hasL else _P_BOTTOM
                    vv_pred[b, d, 1] = e
                    vv_pred[b, d, 2] = f
    return vv[t1, t2], vv_pred, ev, ev_pred, uf, uf_pred


@dataclass
class MonotoneWitness:
    """Synchronized positions along the two monotone paths.

    Consecutive pairs lie in a common product cell, so the leash between
    them stays at most the largest leash at the breakpoints.
    """

    points1: np.ndarray
    points2: np.ndarray
    vertices1: list
    vertices2: list

    def leash(self) -> float:
        return float(np.max(np.linalg.norm(self.points1 - self.points2, axis=1)))


@dataclass
class DecideResult:
    reachable: bool
    witness: MonotoneWitness | None = None

    def __bool__(self):
        return self.reachable


def _backtrack(A1, A2, t1, t2, vv_pred, ev, ev_pred, uf, uf_pred):
    P1, E1, P2, E2 = A1.P, A1.E, A2.P, A2.E

    def through_square(code, e, f):
        # the motion entered this 2-cell at the earliest point of a side
        return ("uf", E1[e, 0], f) if code == _P_LEFT else ("ev", e, E2[f, 0])

    pts1, pts2 = [], []
    tag, x, y = "vv", t1, t2
    limit = 4 * (len(P1) + len(E1) + 1) * (len(P2) + len(E2) + 1)
    for _ in range(limit):
        if tag == "vv":
            pts1.append(P1[x])
            pts2.append(P2[y])
            code, p, q = vv_pred[x, y]
            if code == _P_START:
                return np.array(pts1[::-1]), np.array(pts2[::-1])
            if code == _P_EV:
                tag, x, y = "ev", p, q
            elif code == _P_UF:
                tag, x, y = "uf", p, q
            else:
                tag, x, y = through_square(code, p, q)
            continue
        if tag == "ev":
            a, b = E1[x]
            pts1.append(P1[a] + ev[x, y] * (P1[b] - P1[a]))
            pts2.append(P2[y])
            code, p, q = ev_pred[x, y]
        else:
            c, d = E2[y]
            pts1.append(P1[x])
            pts2.append(P2[c] + uf[x, y] * (P2[d] - P2[c]))
            code, p, q = uf_pred[x, y]
        tag, x, y = ("vv", p, q) if code == _P_VERTEX else through_square(code, p, q)
    raise RuntimeError("witness reconstruction did not terminate")


def _vertex_walk(P, pts, start):
    out = [start]
    for p in pts:
        hit = np.flatnonzero(np.all(P == p, axis=1))
        if len(hit) and hit[0] != out[-1]:
            out.append(int(hit[0]))
    return out


class DagPair:
    """Two DAG complexes with endpoints, packed once for repeated decisions."""

    def __init__(self, C1, C2, s1=None, t1=None, s2=None, t2=None):
        self.C1, self.C2 = as_dag(C1), as_dag(C2)
        if self.C1.dim != self.C2.dim:
            raise ValueError("complexes live in different dimensions")
        self.A1, self.A2 = _arrays(self.C1), _arrays(self.C2)
        self.s1 = self._vid(self.C1, s1, first=True)
        self.t1 = self._vid(self.C1, t1, first=False)
        self.s2 = self._vid(self.C2, s2, first=True)
        self.t2 = self._vid(self.C2, t2, first=False)
        allp = np.concatenate([self.C1.points, self.C2.points])
        self.scale = float(np.abs(allp).max(initial=0.0)) + float(np.ptp(allp, axis=0).max(initial=0.0))

    @staticmethod
    def _vid(C, v, first):
        if v is None:
            return C.order[0] if first else C.order[-1]
        return C.vertex_id(v)

    def slack(self, delta: float) -> float:
        return delta * (1.0 + DECIDE_RTOL) + 1e-14 * self.scale

    def decide(self, delta: float, witness: bool = False) -> DecideResult:
        if delta < 0:
            return DecideResult(False)
        A1, A2 = self.A1, self.A2
        ok, vv_pred, ev, ev_pred, uf, uf_pred = _decide(
            A1.P, A1.E, A1.kind, A1.fid, A1.out_ptr, A1.out_idx,
            A2.P, A2.E, A2.kind, A2.fid, A2.out_ptr, A2.out_idx,
            self.s1, self.s2, self.t1, self.t2, self.slack(float(delta)))
        if not ok or not witness:
            return DecideResult(bool(ok))
        p1, p2 = _backtrack(A1, A2, self.t1, self.t2, vv_pred, ev, ev_pred, uf, uf_pred)
        w = MonotoneWitness(p1, p2, _vertex_walk(A1.P, p1, self.s1), _vertex_walk(A2.P, p2, self.s2))
        return DecideResult(True, w)


def dag_decide(C1, C2, s1=None, t1=None, s2=None, t2=None, delta: float = 0.0,
               witness: bool = True) -> DecideResult:
    """Is there a pair of monotone paths within monotone Fréchet distance ``delta``?"""
    return DagPair(C1, C2, s1, t1, s2, t2).decide(delta, witness=witness)


# ---------------------------------------------------------------------------
# critical values


@dataclass(frozen=True, order=True)
class CriticalValue:
    radius: float
    kind: str = field(compare=False)
    features: tuple = field(compare=False)


def point_segment_distance(p, a, b) -> float:
    p, a, b = (np.asarray(x, dtype=np.float64) for x in (p, a, b))
    e = b - a
    L2 = float(e @ e)
    t = 0.0 if L2 == 0 else min(1.0, max(0.0, float((p - a) @ e) / L2))
    return float(np.linalg.norm(a + t * e - p))


def monotonicity_radius(a, b, u, w):
    """Radius at which spheres around ``u`` and ``w`` meet on segment ab.

    The common point lies on the bisector of u and w; returns ``None`` when
    the bisector misses the segment or runs parallel to it. For u == w the
    common point is the foot of the perpendicular (if it is on the segment).
    """
    a, b, u, w = (np.asarray(x, dtype=np.float64) for x in (a, b, u, w))
    e = b - a
    L2 = float(e @ e)
    if L2 == 0:
        raise ValueError("degenerate edge")
    nrm = w - u
    if not np.any(nrm):
        s = float((u - a) @ e) / L2
        if 0.0 <= s <= 1.0:
            return float(np.linalg.norm(a + s * e - u))
        return None
    # |a + s e - u|^2 = |a + s e - w|^2  <=>  2 s e.(w-u) = |w|^2 - |u|^2 - 2 a.(w-u)
    den = 2.0 * float(e @ nrm)
    num = float(w @ w - u @ u) - 2.0 * float(a @ nrm)
    if den == 0.0:
        return None
    s = num / den
    if not 0.0 <= s <= 1.0:
        return None
    return float(np.linalg.norm(a + s * e - u))


def enumerate_vv_ve(C1, C2, a: float = 0.0, b: float = np.inf) -> list[CriticalValue]:
    """All vertex-vertex and vertex-edge radii (both directions) inside [a, b]."""
    C1, C2 = as_dag(C1), as_dag(C2)
    out = []
    P1, P2 = C1.points, C2.points
    D = np.linalg.norm(P1[:, None, :] - P2[None, :, :], axis=2)
    for i, j in zip(*np.nonzero((D >= a) & (D <= b))):
        out.append(CriticalValue(float(D[i, j]), VERTEX_VERTEX, (int(i), int(j))))
    for side, (Pv, Q, edges) in enumerate(((P1, C2.points, C2.edges), (P2, C1.points, C1.edges))):
        if not edges:
            continue
        E = np.array(edges)
        A, B = Q[E[:, 0]], Q[E[:, 1]]
        R = _point_segment_dists(Pv, A, B)
        for i, j in zip(*np.nonzero((R >= a) & (R <= b))):
            out.append(CriticalValue(float(R[i, j]), VERTEX_EDGE, (side, int(i), int(j))))
    out.sort()
    return out


def _point_segment_dists(Pv, A, B):
    """Distances from every point to every segment, shape (len(Pv), len(A))."""
    e = B - A
    L2 = np.einsum("ij,ij->i", e, e)
    rel = Pv[:, None, :] - A[None, :, :]
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.where(L2 > 0, np.einsum("pij,ij->pi", rel, e) / np.where(L2 > 0, L2, 1.0), 0.0)
    t = np.clip(t, 0.0, 1.0)
    foot = A[None, :, :] + t[:, :, None] * e[None, :, :]
    return np.linalg.norm(foot - Pv[:, None, :], axis=2)


def _sweep_edge(a, b, V, lo, hi, scale):
    """Monotonicity radii in [lo, hi] between segment ab and the points V.

    Kinetic sort of sphere/segment intersection points along ab as the common
    radius grows; a swap of two neighbours from different vertices is a
    monotonicity event. Yields (radius, i, j) with i < j vertex indices.
    """
    e = b - a
    L = float(np.linalg.norm(e))
    if L == 0.0:
        return []
    u = e / L
    rel = V - a
    x0 = rel @ u
    h = np.linalg.norm(rel - np.outer(x0, u), axis=1)
    nv = len(V)
    tol = 1e-12 * max(scale, 1.0)
    start = lo - 1e-9 * max(scale, 1.0)

    # pairs that never separate on the line (same projection and distance)
    def twin(i, j):
        return abs(x0[i] - x0[j]) <= tol and abs(h[i] - h[j]) <= tol

    meet_cache = {}

    def meet(i, j):
        key = (i, j) if i < j else (j, i)
        if key not in meet_cache:
            p, q = key
            den = 2.0 * (x0[q] - x0[p])
            if den == 0.0:
                meet_cache[key] = None
            else:
                xs = (x0[q] ** 2 + h[q] ** 2 - x0[p] ** 2 - h[p] ** 2) / den
                meet_cache[key] = (xs, math.hypot(xs - x0[p], h[p]))
        return meet_cache[key]

    def pos(i, side, t):
        g = math.sqrt(max(t * t - h[i] * h[i], 0.0))
        return x0[i] + side * g

    def vel(i, side, t):
        g = math.sqrt(max(t * t - h[i] * h[i], 0.0))
        return side * (t / g if g > 0 else math.inf)

    # lifetime on the segment of each moving point (vertex, side)
    life = {}
    for i in range(nv):
        gin, gout = max(0.0, -x0[i]), L - x0[i]
        if gout >= gin:
            life[(i, 1)] = (math.hypot(gin, h[i]), math.hypot(gout, h[i]))
        gin, gout = max(0.0, x0[i] - L), x0[i]
        if gout >= gin:
            life[(i, -1)] = (math.hypot(gin, h[i]), math.hypot(gout, h[i]))

    order = []  # list of (vertex, side), sorted along the segment
    for key, (tin, tout) in life.items():
        if tin <= start < tout:
            order.append(key)
    order.sort(key=lambda k: (pos(k[0], k[1], start), vel(k[0], k[1], start), k))

    heap = []
    met = set()
    out = []
    seq = 0

    def push(t, kind, payload):
        nonlocal seq
        heapq.heappush(heap, (t, kind, seq, payload))
        seq += 1

    def schedule(idx, now):
        if idx < 0 or idx + 1 >= len(order):
            return
        (i, si), (j, sj) = order[idx], order[idx + 1]
        if i == j or twin(i, j):
            return
        key = (min(i, j), max(i, j))
        if key in met:
            return
        m = meet(i, j)
        if m is None:
            return
        xs, ts = m
        if ts < max(now - tol, start) or ts > hi + tol:
            return
        if not (-tol <= xs <= L + tol):
            return
        if si * (xs - x0[i]) <= 0 or sj * (xs - x0[j]) <= 0:
            return
        push(ts, 0, (order[idx], order[idx + 1]))

    for key, (tin, tout) in life.items():
        if tin > start and tin <= hi:
            push(tin, 2, key)
        if tout > start and tout <= hi + tol:
            push(tout, 1, key)
    for idx in range(len(order) - 1):
        schedule(idx, start)

    while heap:
        t, kind, _, payload = heapq.heappop(heap)
        if t > hi + tol:
            break
        if kind == 0:
            p, q = payload
            try:
                idx = order.index(p)
            except ValueError:
                continue
            if idx + 1 >= len(order) or order[idx + 1] != q:
                continue
            key = (min(p[0], q[0]), max(p[0], q[0]))
            if key in met:
                continue
            met.add(key)
            order[idx], order[idx + 1] = q, p
            if lo - tol <= t <= hi + tol:
                out.append((t, key[0], key[1]))
            schedule(idx - 1, t)
            schedule(idx + 1, t)
        elif kind == 1:
            if payload in order:
                idx = order.index(payload)
                order.pop(idx)
                schedule(idx - 1, t)
        else:
            i, side = payload
            x = pos(i, side, t)
            xs = [pos(k[0], k[1], t) for k in order]
            # a left-moving point goes before ties, a right-moving one after
            idx = bisect_left(xs, x) if side < 0 else bisect_right(xs, x)
            order.insert(idx, payload)
            schedule(idx - 1, t)
            schedule(idx, t)
    return out


def extract(C1, C2, a: float = 0.0, b: float = np.inf) -> list[CriticalValue]:
    """All critical values with radius in [a, b], sorted.

    The window is widened by a relative 1e-12 so that radii computed by a
    different formula than the endpoints are not lost to rounding.
    """
    C1, C2 = as_dag(C1), as_dag(C2)
    allp = np.concatenate([C1.points, C2.points])
    scale = float(np.ptp(allp, axis=0).max(initial=0.0))
    slop = 1e-12 * max(scale, 1.0)
    a = a - slop
    b = b + slop
    out = enumerate_vv_ve(C1, C2, a, b)
    hi = b if np.isfinite(b) else 4.0 * (scale + float(np.abs(allp).max(initial=0.0))) + 1.0
    for side, (CE, CV) in enumerate(((C1, C2), (C2, C1))):
        for j, (p, q) in enumerate(CE.edges):
            for t, u, w in _sweep_edge(CE.points[p], CE.points[q], CV.points, a, hi, scale):
                out.append(CriticalValue(float(t), MONOTONICITY, (side, j, u, w)))
    out.sort()
    return out


def all_monotonicity(C1, C2, a=0.0, b=np.inf) -> list[CriticalValue]:
    """Direct enumeration of monotonicity radii over all (edge, vertex pair) triples."""
    C1, C2 = as_dag(C1), as_dag(C2)
    out = []
    for side, (CE, CV) in enumerate(((C1, C2), (C2, C1))):
        for j, (p, q) in enumerate(CE.edges):
            for u in range(len(CV.points)):
                for w in range(u + 1, len(CV.points)):
                    r = monotonicity_radius(CE.points[p], CE.points[q], CV.points[u], CV.points[w])
                    if r is not None and a <= r <= b:
                        out.append(CriticalValue(r, MONOTONICITY, (side, j, u, w)))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# sampling


def event_counts(C1, C2) -> dict:
    """Sizes of the candidate tuple families for each event kind."""
    C1, C2 = as_dag(C1), as_dag(C2)
    n1, n2 = len(C1.points), len(C2.points)
    m1, m2 = len(C1.edges), len(C2.edges)
    return {
        VERTEX_VERTEX: n1 * n2,
        VERTEX_EDGE: n1 * m2 + n2 * m1,
        MONOTONICITY: m1 * (n2 * (n2 - 1) // 2) + m2 * (n1 * (n1 - 1) // 2),
    }


def _mono_batch(EP, EQ, V, ei, ui, wi):
    """Vectorized monotonicity radii; NaN where the event does not exist."""
    a, b = EP[ei], EQ[ei]
    u, w = V[ui], V[wi]
    e = b - a
    nrm = w - u
    den = 2.0 * np.einsum("ij,ij->i", e, nrm)
    num = np.einsum("ij,ij->i", w, w) - np.einsum("ij,ij->i", u, u) - 2.0 * np.einsum("ij,ij->i", a, nrm)
    with np.errstate(divide="ignore", invalid="ignore"):
        s = num / den
    ok = (den != 0) & (s >= 0) & (s <= 1)
    s = np.where(ok, s, 0.0)
    r = np.linalg.norm(a + s[:, None] * e - u, axis=1)
    return np.where(ok, r, np.nan)


def _pair_from_index(idx, n):
    """Unordered pair (i < j) with rank ``idx`` in lexicographic order of n items."""
    # row i holds n-1-i pairs; invert the triangular count
    idx = np.asarray(idx, dtype=np.int64)
    i = (n - 1 - np.floor((np.sqrt((2 * n - 1) ** 2 - 8 * idx) - 1) / 2)).astype(np.int64) - 1
    i = np.clip(i, 0, n - 2)
    start = i * (2 * n - i - 1) // 2
    # fix off-by-one from floating roundoff
    over = start > idx
    i = np.where(over, i - 1, i)
    start = i * (2 * n - i - 1) // 2
    nxt = (i + 1) * (2 * n - i - 2) // 2
    under = idx >= nxt
    i = np.where(under, i + 1, i)
    start = i * (2 * n - i - 1) // 2
    j = i + 1 + (idx - start)
    return i, j


def sample_critical(C1, C2, count: int, seed: int = 0, with_kinds: bool = False):
    """I.i.d. uniform samples from the multiset of existing critical events.

    An event kind is drawn with probability proportional to its tuple count,
    then a uniform tuple of that kind; monotonicity tuples without an event
    are rejected and the draw restarts.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    C1, C2 = as_dag(C1), as_dag(C2)
    rng = np.random.Generator(np.random.Philox(seed))
    P1, P2 = C1.points, C2.points
    n1, n2 = len(P1), len(P2)
    E1 = np.array(C1.edges, dtype=np.int64).reshape(-1, 2)
    E2 = np.array(C2.edges, dtype=np.int64).reshape(-1, 2)
    m1, m2 = len(E1), len(E2)
    # tuple families in a fixed order
    fam = np.array([n1 * n2, n1 * m2, n2 * m1,
                    m1 * (n2 * (n2 - 1) // 2), m2 * (n1 * (n1 - 1) // 2)], dtype=np.float64)
    prob = fam / fam.sum()
    vals, kinds = [], []
    have = 0
    while have < count:
        batch = max(64, 2 * (count - have))
        f = rng.choice(5, size=batch, p=prob)
        r = np.full(batch, np.nan)
        sel = f == 0
        if sel.any():
            i = rng.integers(n1, size=sel.sum()); j = rng.integers(n2, size=sel.sum())
            r[sel] = np.linalg.norm(P1[i] - P2[j], axis=1)
        sel = f == 1
        if sel.any():
            i = rng.integers(n1, size=sel.sum()); j = rng.integers(m2, size=sel.sum())
            r[sel] = _point_segment_dists_pairs(P1[i], P2[E2[j, 0]], P2[E2[j, 1]])
        sel = f == 2
        if sel.any():
            i = rng.integers(n2, size=sel.sum()); j = rng.integers(m1, size=sel.sum())
            r[sel] = _point_segment_dists_pairs(P2[i], P1[E1[j, 0]], P1[E1[j, 1]])
        sel = f == 3
        if sel.any():
            e = rng.integers(m1, size=sel.sum())
            u, w = _pair_from_index(rng.integers(n2 * (n2 - 1) // 2, size=sel.sum()), n2)
            r[sel] = _mono_batch(P1[E1[:, 0]], P1[E1[:, 1]], P2, e, u, w)
        sel = f == 4
        if sel.any():
            e = rng.integers(m2, size=sel.sum())
            u, w = _pair_from_index(rng.integers(n1 * (n1 - 1) // 2, size=sel.sum()), n1)
            r[sel] = _mono_batch(P2[E2[:, 0]], P2[E2[:, 1]], P1, e, u, w)
        keep = ~np.isnan(r)
        vals.append(r[keep])
        kinds.append(f[keep])
        have += int(keep.sum())
    vals = np.concatenate(vals)[:count]
    if not with_kinds:
        return vals
    names = np.array([VERTEX_VERTEX, VERTEX_EDGE, VERTEX_EDGE, MONOTONICITY, MONOTONICITY])
    return vals, names[np.concatenate(kinds)[:count]]


def _point_segment_dists_pairs(p, a, b):
    e = b - a
    L2 = np.einsum("ij,ij->i", e, e)
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.where(L2 > 0, np.einsum("ij,ij->i", p - a, e) / np.where(L2 > 0, L2, 1.0), 0.0)
    t = np.clip(t, 0, 1)
    return np.linalg.norm(a + t[:, None] * e - p, axis=1)


# ---------------------------------------------------------------------------
# driver


@dataclass
class CompFrResult:
    value: float
    witness: MonotoneWitness
    interval: tuple
    interval_events: int
    decider_calls: int
    sample_size: int


def _smallest_accepting(pair: DagPair, vals, calls):
    """Index of the first value accepted by the decider (len(vals) if none)."""
    lo, hi = -1, len(vals)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        calls[0] += 1
        if pair.decide(float(vals[mid])):
            hi = mid
        else:
            lo = mid
    return hi


def comp_fr(C1, C2, s1=None, t1=None, s2=None, t2=None, seed: int = 0,
            sample_size: int | None = None) -> CompFrResult:
    """Exact monotone Fréchet distance between two DAG complexes (randomized search)."""
    pair = DagPair(C1, C2, s1, t1, s2, t2)
    n = max(len(pair.C1.edges), len(pair.C2.edges), 1)
    mu = 4 * n * n if sample_size is None else int(sample_size)
    R = np.sort(sample_critical(pair.C1, pair.C2, mu, seed))
    calls = [0]
    i = _smallest_accepting(pair, R, calls)
    a = float(R[i - 1]) if i > 0 else 0.0
    b = float(R[i]) if i < len(R) else np.inf
    S = extract(pair.C1, pair.C2, a, b)
    radii = np.array([c.radius for c in S])
    j = _smallest_accepting(pair, radii, calls)
    if j == len(radii):
        raise RuntimeError("no critical value in the atomic interval is accepted")
    value = float(radii[j])
    res = pair.decide(value, witness=True)
    return CompFrResult(value, res.witness, (a, b), len(S), calls[0], mu)


def monotone_frechet(A, B) -> float:
    """Monotone Fréchet distance between two polygonal curves."""
    return comp_fr(A, B).value
