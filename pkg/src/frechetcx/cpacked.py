"""(1+ε)-approximate mean curve for c-packed inputs.

Pipeline: greedy μ-simplification, a three-way decider on simplified curves,
a linear-size 2-approximation of all vertex distances, binary search over it,
geometric grid refinement, and an MST-based solver for the remaining gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from . import _kernels as K
from .cellgraph import CellGraph
from .complex import Curve
from .costs import MEBRadius
from .frechet import ProductPath, _build_path, centers_along, curve_arrays, grid_ids, mean_curve
from .geometry import DEFAULT_TOL, MAX_ITER, MinimizationError

TINY = np.finfo(np.float64).tiny


# ---------------------------------------------------------------------------
# simplification


@njit(cache=True)
def _marks(P, mu):
    n = P.shape[0]
    out = np.empty(n, dtype=np.int64)
    out[0] = 0
    m = 1
    cur = 0
    for i in range(1, n - 1):
        s = 0.0
        for r in range(P.shape[1]):
            t = P[i, r] - P[cur, r]
            s += t * t
        if math.sqrt(s) >= mu:
            out[m] = i
            m += 1
            cur = i
    if n > 1:
        out[m] = n - 1
        m += 1
    return out[:m]


@dataclass
class SimplifiedCurve:
    original: Curve
    mu: float
    marked: np.ndarray
    curve: Curve


def simplify(curve: Curve, mu: float) -> SimplifiedCurve:
    """Greedy μ-simplification: keep the first vertex, then each vertex at
    distance at least μ from the last kept one, then the final vertex."""
    if not mu > 0:
        raise ValueError("mu must be positive")
    if not isinstance(curve, Curve):
        curve = Curve(curve)
    marks = _marks(np.ascontiguousarray(curve.points), float(mu))
    return SimplifiedCurve(curve, float(mu), marks, Curve(curve.points[marks], name=curve.name))


# ---------------------------------------------------------------------------
# decider


@dataclass
class DeciderOutcome:
    tag: str  # "approx" | "below" | "above"
    value: float | None
    explored: int
    delta: float
    _witness: tuple | None = field(default=None, repr=False)

    @property
    def approx(self) -> bool:
        return self.tag == "approx"

    @property
    def path(self) -> ProductPath | None:
        """Accepting motion on the simplified curves (built on demand)."""
        if self._witness is None:
            return None
        return _path_on(*self._witness)


def _prim_simplified(curves, mu, bound):
    simp = [simplify(c, mu).curve for c in curves]
    coords, lens = curve_arrays(simp)
    cost = MEBRadius()
    status, reached, value, lin, explored, _ = K.curve_prim(
        coords, lens, cost.code, cost.iparams(), cost.fparams(), bound, DEFAULT_TOL, MAX_ITER)
    if status == K.FAILED:
        raise MinimizationError("cell minimization failed inside the decider", best_value=np.nan)
    return simp, reached, value, lin, lens, explored


def _path_on(simp, lin, lens, explored):
    g = CellGraph(simp, MEBRadius())
    return _build_path(g, grid_ids(lin, lens), explored)


def decider(delta: float, eps: float, curves) -> DeciderOutcome:
    """Compare ``delta`` with the optimal mean-curve radius.

    Curves are μ-simplified with μ = εδ/4, which moves every point by at most
    μ, so the optimum on the simplified curves is within μ of the true one.
    Prim on the simplified cell graph is cut off at δ + μ.
    """
    if not delta > 0:
        raise ValueError("delta must be positive")
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    mu = eps * delta / 4
    simp, reached, value, lin, lens, explored = _prim_simplified(curves, mu, delta + mu)
    if not reached:
        return DeciderOutcome("above", None, explored, delta)
    wit = (simp, lin, lens, explored)
    if value < delta - mu:
        return DeciderOutcome("below", None, explored, delta, wit)
    return DeciderOutcome("approx", value + mu, explored, delta, wit)


# ---------------------------------------------------------------------------
# pairwise-distance candidates


@njit(cache=True)
def _fair_split_tree(P):
    n, d = P.shape
    perm = np.arange(n)
    cap = 2 * n
    lo = np.zeros((cap, d))
    hi = np.zeros((cap, d))
    start = np.zeros(cap, dtype=np.int64)
    end = np.zeros(cap, dtype=np.int64)
    left = -np.ones(cap, dtype=np.int64)
    right = -np.ones(cap, dtype=np.int64)
    nodes = 1
    start[0] = 0
    end[0] = n
    stack = [0]
    while len(stack) > 0:
        v = stack.pop()
        a, b = start[v], end[v]
        for r in range(d):
            lo[v, r] = np.inf
            hi[v, r] = -np.inf
        for i in range(a, b):
            for r in range(d):
                x = P[perm[i], r]
                lo[v, r] = min(lo[v, r], x)
                hi[v, r] = max(hi[v, r], x)
        if b - a <= 1:
            continue
        axis = 0
        ext = -1.0
        for r in range(d):
            if hi[v, r] - lo[v, r] > ext:
                ext = hi[v, r] - lo[v, r]
                axis = r
        if ext <= 0.0:
            continue  # all points coincide: a leaf of duplicates
        cut = 0.5 * (lo[v, axis] + hi[v, axis])
        i, j = a, b - 1
        while i <= j:
            if P[perm[i], axis] <= cut:
                i += 1
            else:
                t = perm[i]
                perm[i] = perm[j]
                perm[j] = t
                j -= 1
        if i == a or i == b:
            # cut at the midpoint always separates the extremes; guard anyway
            i = a + (b - a) // 2
        l, rr = nodes, nodes + 1
        nodes += 2
        start[l], end[l] = a, i
        start[rr], end[rr] = i, b
        left[v], right[v] = l, rr
        stack.append(l)
        stack.append(rr)
    return lo[:nodes], hi[:nodes], left[:nodes], right[:nodes]


@njit(cache=True)
def _wspd_bounds(P, sep):
    lo, hi, left, right = _fair_split_tree(P)
    m = lo.shape[0]
    d = P.shape[1]
    cen = 0.5 * (lo + hi)
    rad = np.zeros(m)
    for v in range(m):
        s = 0.0
        for r in range(d):
            t = hi[v, r] - lo[v, r]
            s += t * t
        rad[v] = 0.5 * math.sqrt(s)
    out = []
    pairs = []
    for v in range(m):
        if left[v] >= 0:
            pairs.append((left[v], right[v]))
    while len(pairs) > 0:
        a, b = pairs.pop()
        s = 0.0
        for r in range(d):
            t = cen[a, r] - cen[b, r]
            s += t * t
        D = math.sqrt(s)
        ra, rb = rad[a], rad[b]
        big = max(ra, rb)
        if D - ra - rb >= sep * big:
            lo_ = D - ra - rb
            if lo_ > 0.0:
                out.append(lo_)
                out.append(D + ra + rb)
            continue
        if ra >= rb:
            pairs.append((left[a], b))
            pairs.append((right[a], b))
        else:
            pairs.append((a, left[b]))
            pairs.append((a, right[b]))
    res = np.empty(len(out))
    for i in range(len(out)):
        res[i] = out[i]
    return res


@dataclass
class CandidateSet:
    values: np.ndarray

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def approx_distances(P, separation: float = 4.0) -> CandidateSet:
    """Linear-size set Z 2-approximating every positive pairwise distance.

    Each well-separated pair (A, B) of a fair-split tree contributes the
    bounds ``D - rA - rB`` and ``D + rA + rB`` on every distance between its
    sides; with gap at least ``4 max(rA, rB)`` the upper bound is at most
    twice the lower one.
    """
    P = np.array(P, dtype=np.float64, ndmin=2)
    if len(P) < 2:
        raise ValueError("need at least two points")
    if separation < 4.0:
        raise ValueError("separation below 4 breaks the factor-2 guarantee")
    Z = np.unique(_wspd_bounds(P, float(separation)))
    return CandidateSet(Z)


# ---------------------------------------------------------------------------
# searches


@dataclass
class SearchResult:
    """Either an approximation (``value`` set) or an interval ``[alpha, beta]``."""

    value: float | None = None
    alpha: float = 0.0
    beta: float = np.inf
    outcome: DeciderOutcome | None = None
    calls: int = 0


def approx_binary_search(Z: CandidateSet, eps: float, curves) -> SearchResult:
    """Locate δ* between consecutive candidates, or stop early on an approximation."""
    vals = Z.values if isinstance(Z, CandidateSet) else np.asarray(Z)
    lo, hi = -1, len(vals)  # decider is "above" at vals[lo] and "below" at vals[hi]
    calls = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        out = decider(float(vals[mid]), eps, curves)
        calls += 1
        if out.approx:
            return SearchResult(value=out.value, outcome=out, calls=calls)
        if out.tag == "below":
            hi = mid
        else:
            lo = mid
    alpha = 0.0 if lo < 0 else float(vals[lo])
    beta = np.inf if hi >= len(vals) else float(vals[hi])
    assert np.isfinite(beta), "optimum above every candidate distance"
    return SearchResult(alpha=alpha, beta=beta, calls=calls)


def search_interval(alpha: float, beta: float, eps: float, curves) -> SearchResult:
    """(1+ε)-approximate δ* if it lies in [α, β], else report that it does not.

    Binary search over the grid α(1+ε/4)^i, i = 0..N with α(1+ε/4)^N ≥ β.
    """
    if alpha <= 0:
        alpha = TINY
    if beta < alpha:
        beta = alpha
    ratio = 1.0 + eps / 4
    N = max(0, math.ceil(math.log(beta / alpha) / math.log(ratio) - 1e-12))
    grid = lambda i: min(alpha * ratio ** i, beta) if i < N else beta
    calls = 0

    def probe(i):
        nonlocal calls
        calls += 1
        return decider(grid(i), eps, curves)

    first = probe(0)
    if first.approx:
        return SearchResult(value=first.value, outcome=first, calls=calls)
    if first.tag == "below":
        return SearchResult(alpha=alpha, beta=beta, calls=calls)
    if N == 0:
        return SearchResult(alpha=alpha, beta=beta, calls=calls)
    last = probe(N)
    if last.approx:
        return SearchResult(value=last.value, outcome=last, calls=calls)
    if last.tag == "above":
        return SearchResult(alpha=alpha, beta=beta, calls=calls)
    lo, hi, hi_out = 0, N, last
    while hi - lo > 1:
        mid = (lo + hi) // 2
        out = probe(mid)
        if out.approx:
            return SearchResult(value=out.value, outcome=out, calls=calls)
        if out.tag == "below":
            hi, hi_out = mid, out
        else:
            lo = mid
    # δ* in (grid(lo), grid(hi)) and the two differ by a factor ≤ 1 + ε/4
    return SearchResult(value=grid(hi), outcome=hi_out, calls=calls)


def solver(alpha: float, beta: float, curves):
    """Lowest-path value on the β-simplified curves (Prim, stopped at the goal)."""
    simp, reached, value, lin, lens, explored = _prim_simplified(curves, beta, np.inf)
    return value, explored


# ---------------------------------------------------------------------------
# driver


@dataclass
class ApproxMeanResult:
    value: float
    mean: Curve
    step: str
    decider_calls: int = 0
    explored: int = 0
    path: ProductPath | None = field(default=None, repr=False)

    def __iter__(self):
        yield self.value
        yield self.mean


def _finish(res: SearchResult, step, calls, resolution):
    path = res.outcome.path if res.outcome is not None else None
    mean = Curve(centers_along(path, resolution), name="mean") if path is not None else None
    explored = res.outcome.explored if res.outcome is not None else 0
    return ApproxMeanResult(float(res.value), mean, step, calls, explored, path)


def aprx_mean(eps: float, curves, resolution: int = 16) -> ApproxMeanResult:
    """(1+ε)-approximate mean curve; steps follow the basic approximation scheme."""
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    curves = [c if isinstance(c, Curve) else Curve(c) for c in curves]
    if len(curves) < 2:
        raise ValueError("need at least two curves")
    P = np.concatenate([c.points for c in curves])
    calls = 0
    if len(np.unique(P, axis=0)) >= 2:
        Z = approx_distances(P)
        r = approx_binary_search(Z, eps, curves)
        calls += r.calls
        if r.value is not None:
            return _finish(r, "C", calls, resolution)
        alpha, beta = r.alpha, r.beta
        for step, (a, b) in (("D", (alpha, 8 * alpha)), ("E", (beta / 2, beta))):
            r = search_interval(a, b, eps, curves)
            calls += r.calls
            if r.value is not None:
                return _finish(r, step, calls, resolution)
        if 2 * alpha < beta / 2:
            delta, _ = solver(2 * alpha, beta / 2, curves)
            if delta > 0:
                r = search_interval(delta / 2, 3 * delta / 2, eps, curves)
                calls += r.calls
                if r.value is not None:
                    return _finish(r, "G", calls, resolution)
    # δ* = 0 (or numerically at a boundary): settle it exactly
    exact = mean_curve(curves, resolution=resolution)
    return ApproxMeanResult(exact.value, exact.mean, "exact", calls, exact.path.explored, exact.path)


# ---------------------------------------------------------------------------
# packedness


def length_in_ball(P: np.ndarray, q: np.ndarray, r: float) -> float:
    """Length of the polyline ``P`` inside the closed ball B(q, r)."""
    A, B = P[:-1], P[1:]
    D = B - A
    a = np.einsum("ij,ij->i", D, D)
    f = A - q
    b = 2 * np.einsum("ij,ij->i", f, D)
    c = np.einsum("ij,ij->i", f, f) - r * r
    disc = b * b - 4 * a * c
    ok = (disc > 0) & (a > 0)
    sq = np.sqrt(np.where(ok, disc, 0.0))
    with np.errstate(divide="ignore", invalid="ignore"):
        t0 = np.clip((-b - sq) / (2 * a), 0, 1)
        t1 = np.clip((-b + sq) / (2 * a), 0, 1)
    frac = np.where(ok, np.maximum(t1 - t0, 0.0), 0.0)
    return float(np.sum(frac * np.sqrt(a)))


def measure_packedness(curve, balls: int = 500, seed: int = 0) -> float:
    """Largest ratio length-in-ball / radius over sampled balls.

    Centers are curve vertices and random points on the curve; radii are
    log-uniform between the shortest edge and the diameter.
    """
    P = curve.points if isinstance(curve, Curve) else np.asarray(curve, dtype=np.float64)
    if len(P) < 2:
        return 0.0
    rng = np.random.default_rng(seed)
    seg = np.linalg.norm(np.diff(P, axis=0), axis=1)
    rmin = max(seg[seg > 0].min() * 0.25, 1e-12)
    rmax = float(np.linalg.norm(np.ptp(P, axis=0))) + rmin
    best = 0.0
    for _ in range(balls):
        j = rng.integers(len(P) - 1)
        q = P[j] + rng.random() * (P[j + 1] - P[j])
        r = float(np.exp(rng.uniform(np.log(rmin), np.log(rmax))))
        best = max(best, length_in_ball(P, q, r) / r)
    return best
