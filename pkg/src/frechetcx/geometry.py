"""Points, simplices, distances and enclosing balls."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K

#: relative tolerance used by the per-cell minimizer (times the cell's bbox diameter)
DEFAULT_TOL = float(os.environ.get("FRECHETCX_TOL", "1e-10"))
MAX_ITER = 10_000
AFFINE_RTOL = 1e-10
BARY_SLACK = 1e-12


class GeometryError(ValueError):
    pass


class MinimizationError(RuntimeError):
    """Raised when the cell minimizer hits its iteration cap without a certificate."""

    def __init__(self, message, best_value, witness=None, gap=None):
        super().__init__(message)
        self.best_value = best_value
        self.witness = witness
        self.gap = gap


def as_point(p) -> np.ndarray:
    arr = np.asarray(p, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise GeometryError(f"non-finite coordinates: {arr}")
    return arr


def distance(p, q) -> float:
    """Euclidean distance between two points of equal dimension."""
    p = as_point(p)
    q = as_point(q)
    if p.shape != q.shape:
        raise GeometryError(f"dimension mismatch: {p.shape[0]} vs {q.shape[0]}")
    return float(np.linalg.norm(p - q))


def affinely_independent(vertices: np.ndarray, rtol: float = AFFINE_RTOL) -> bool:
    if vertices.shape[0] <= 1:
        return True
    diff = vertices[1:] - vertices[0]
    if diff.shape[0] > diff.shape[1]:
        return False
    sv = np.linalg.svd(diff, compute_uv=False)
    return bool(sv[-1] >= rtol * sv[0]) and sv[0] > 0


@dataclass(frozen=True, eq=False)
class Simplex:
    """Realized simplex: ``m + 1`` affinely independent points in R^d."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=np.float64, ndmin=2)
        if v.ndim != 2 or v.shape[0] == 0:
            raise GeometryError("a simplex needs at least one vertex")
        if not np.all(np.isfinite(v)):
            raise GeometryError("non-finite simplex vertex")
        if v.shape[0] - 1 > v.shape[1]:
            raise GeometryError(f"{v.shape[0]} vertices cannot be independent in R^{v.shape[1]}")
        if not affinely_independent(v):
            raise GeometryError("simplex vertices are affinely dependent")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @property
    def dim(self) -> int:
        return self.vertices.shape[0] - 1

    @property
    def ambient_dim(self) -> int:
        return self.vertices.shape[1]

    def point(self, bary) -> np.ndarray:
        b = np.asarray(bary, dtype=np.float64)
        return b @ self.vertices

    def barycentric(self, x) -> np.ndarray:
        """Barycentric coordinates of the projection of ``x`` onto the affine hull."""
        x = as_point(x)
        if self.dim == 0:
            return np.ones(1)
        D = (self.vertices[1:] - self.vertices[0]).T
        lam, *_ = np.linalg.lstsq(D, x - self.vertices[0], rcond=None)
        return np.concatenate([[1.0 - lam.sum()], lam])

    def contains(self, x, tol: float = 1e-9) -> bool:
        b = self.barycentric(x)
        scale = max(1.0, float(np.ptp(self.vertices, axis=0).max(initial=0.0)))
        return bool(b.min() >= -tol and np.linalg.norm(self.point(b) - as_point(x)) <= tol * scale)

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        b = rng.dirichlet(np.ones(self.dim + 1))
        return self.point(b)


@dataclass(frozen=True)
class SimplexDistance:
    value: float
    witness_a: np.ndarray
    witness_b: np.ndarray
    bary_a: np.ndarray
    bary_b: np.ndarray


def _clean_bary(b: np.ndarray) -> np.ndarray:
    b = np.where(b < 0.0, 0.0, b)
    return b / b.sum()


def simplex_distance(A: Simplex, B: Simplex) -> SimplexDistance:
    """Distance between two realized simplices with witnesses in both coordinate systems.

    Symmetric by construction: the pair is always solved in a canonical order.
    """
    if A.ambient_dim != B.ambient_dim:
        raise GeometryError("simplices live in different dimensions")
    swap = (B.dim, B.vertices.tobytes()) < (A.dim, A.vertices.tobytes())
    X, Y = (B, A) if swap else (A, B)
    val, bx, by = K.simplex_distance(X.vertices, X.dim, Y.vertices, Y.dim)
    bx = _clean_bary(bx)
    by = _clean_bary(by)
    if swap:
        bx, by = by, bx
    return SimplexDistance(float(val), A.point(bx), B.point(by), bx, by)


@dataclass(frozen=True, eq=False)
class Ball:
    center: np.ndarray
    radius: float

    def contains(self, p, tol: float = 1e-9) -> bool:
        return float(np.linalg.norm(as_point(p) - self.center)) <= self.radius + tol


def _circumball(support: list[np.ndarray]) -> Ball:
    """Smallest ball with every support point on its boundary."""
    s0 = support[0]
    if len(support) == 1:
        return Ball(s0.copy(), 0.0)
    D = np.array([p - s0 for p in support[1:]])
    G = D @ D.T
    rhs = 0.5 * np.diag(G)
    lam, *_ = np.linalg.lstsq(G, rhs, rcond=None)
    c = s0 + lam @ D
    r = max(float(np.linalg.norm(p - c)) for p in support)
    return Ball(c, r)


def min_enclosing_ball(points) -> Ball:
    """Smallest enclosing ball (move-to-front Welzl, any dimension).

    Recursion depth is bounded by the number of support points, at most d + 1.
    A fixed shuffle keeps the result deterministic.
    """
    P = np.array(points, dtype=np.float64, ndmin=2)
    if P.shape[0] == 0 or P.size == 0:
        raise GeometryError("min_enclosing_ball of an empty set")
    if not np.all(np.isfinite(P)):
        raise GeometryError("non-finite point")
    d = P.shape[1]
    scale = float(np.ptp(P, axis=0).max(initial=0.0))
    slack = 1e-12 * max(scale, 1e-300)
    order = np.random.default_rng(0).permutation(P.shape[0])
    pts = [P[i] for i in order]

    def mtf(n: int, support: list[np.ndarray]) -> Ball:
        ball = _circumball(support) if support else Ball(pts[0].copy(), 0.0)
        if len(support) == d + 1:
            return ball
        i = 0 if support else 1
        while i < n:
            p = pts[i]
            if np.linalg.norm(p - ball.center) > ball.radius + slack:
                ball = mtf(i, support + [p])
                pts.insert(0, pts.pop(i))
            i += 1
        return ball

    ball = mtf(len(pts), [])
    # final radius is the true max distance from the center
    r = float(np.max(np.linalg.norm(P - ball.center, axis=1)))
    return Ball(ball.center, r)


def cell_arrays(cell: list[Simplex]) -> tuple[np.ndarray, np.ndarray]:
    """Pack a product cell into the (verts, mdims) layout used by the kernels."""
    k = len(cell)
    d = cell[0].ambient_dim
    M = max(s.dim for s in cell) + 1
    verts = np.zeros((k, M, d))
    mdims = np.zeros(k, dtype=np.int64)
    for i, s in enumerate(cell):
        if s.ambient_dim != d:
            raise GeometryError("cell simplices live in different dimensions")
        verts[i, : s.dim + 1] = s.vertices
        mdims[i] = s.dim
    return verts, mdims


def bbox_scale(cell: list[Simplex]) -> float:
    P = np.concatenate([s.vertices for s in cell])
    return float(np.linalg.norm(np.ptp(P, axis=0)))


def minimize_cost_over_cell(cost, cell: list[Simplex], tol: float | None = None):
    """Minimum of ``cost`` over the product of the simplices in ``cell``.

    Returns ``(value, witness)`` with one witness point per simplex.
    """
    return cost.minimize(list(cell), tol=tol)


def hull_perimeter(points) -> float:
    P = np.array(points, dtype=np.float64, ndmin=2)
    if P.shape[1] != 2:
        raise GeometryError("hull perimeter needs planar points")
    idx = K.hull_order(P)
    if len(idx) < 2:
        return 0.0
    H = P[idx]
    return float(np.sum(np.linalg.norm(H - np.roll(H, -1, axis=0), axis=1)))


__all__ = [
    "Ball",
    "GeometryError",
    "MinimizationError",
    "Simplex",
    "SimplexDistance",
    "as_point",
    "bbox_scale",
    "cell_arrays",
    "distance",
    "hull_perimeter",
    "min_enclosing_ball",
    "minimize_cost_over_cell",
    "simplex_distance",
]
