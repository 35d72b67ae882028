"""Convex cost functionals on k-tuples of points and their per-cell minimization.

A cost maps a stack of ``k`` points in R^d to a nonnegative real and must be
convex on every product of simplices. Builtin kinds are evaluated and
minimized inside compiled kernels; subclasses can supply their own oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .geometry import (
    DEFAULT_TOL,
    MAX_ITER,
    GeometryError,
    MinimizationError,
    Simplex,
    cell_arrays,
    min_enclosing_ball,
)

_EMPTY_I = np.zeros(1, dtype=np.int64)
_EMPTY_F = np.zeros(0)


@dataclass(frozen=True)
class CellMinimum:
    value: float
    witness: np.ndarray  # (k, d)
    gap: float
    loose: bool = False

    def __iter__(self):
        # allows ``value, witness = cost.minimize(cell)``
        yield self.value
        yield self.witness


class CostFunction:
    """Base class. Subclasses either set ``code`` (builtin kernel) or override
    :meth:`oracle` with a value-and-subgradient routine."""

    name = "custom"
    code = -1
    needs_center = False

    def iparams(self) -> np.ndarray:
        return _EMPTY_I

    def fparams(self) -> np.ndarray:
        return _EMPTY_F

    def check_arity(self, k: int, d: int) -> None:
        if k < 1:
            raise ValueError("cost needs at least one point")

    # -- evaluation -------------------------------------------------------
    def oracle(self, points: np.ndarray, center: np.ndarray):
        """Return ``(value, grad_points, grad_center)`` at ``points``."""
        gp = np.zeros_like(points)
        gc = np.zeros(points.shape[1])
        f = K.builtin_oracle(self.code, points, center, self.iparams(), self.fparams(), gp, gc)
        return f, gp, gc

    def value(self, points) -> float:
        P = np.array(points, dtype=np.float64, ndmin=2)
        self.check_arity(*P.shape)
        f, _, _ = self.oracle(P, np.zeros(P.shape[1]))
        return float(f)

    # -- per-cell minimization -------------------------------------------
    def minimize(self, cell: list[Simplex], tol: float | None = None) -> CellMinimum:
        verts, mdims = cell_arrays(cell)
        self.check_arity(verts.shape[0], verts.shape[2])
        return self.minimize_arrays(verts, mdims, tol)

    def minimize_arrays(self, verts, mdims, tol=None) -> CellMinimum:
        tol = DEFAULT_TOL if tol is None else tol
        if self.code >= 0:
            status, f, pts, gap = K.cell_minimize(
                self.code, verts, mdims, self.iparams(), self.fparams(), tol, MAX_ITER
            )
        else:
            status, f, pts, gap = self._python_minimize(verts, mdims, tol)
        if status == K.FAILED:
            raise MinimizationError(
                f"{self.name}: no certificate after {MAX_ITER} iterations (gap {gap:.3g})",
                best_value=float(f), witness=pts, gap=gap,
            )
        return CellMinimum(float(f), pts, float(gap), status == K.OK_LOOSE)

    def _python_minimize(self, verts, mdims, tol):
        cost = self

        def py_oracle(kind, pts, center, ip, fp, gpts, gcenter):
            f, gp, gc = cost.oracle(pts, center)
            gpts[:, :] = gp
            gcenter[:] = gc
            return f

        core = K.make_ellipsoid(py_oracle)
        scale = float(np.linalg.norm(np.ptp(verts.reshape(-1, verts.shape[2]), axis=0))) or 1.0
        status, f, pts, _center, gap, _ = core(
            -1, verts, mdims, self.iparams(), self.fparams(), self.needs_center,
            tol * scale, MAX_ITER,
        )
        return status, f, pts, gap

    def __repr__(self):
        return f"{type(self).__name__}()"


class PairwiseDistance(CostFunction):
    """``||p_0 - p_1||``; the weak Fréchet elevation."""

    name = "pairwise-distance"
    code = K.PAIRWISE

    def check_arity(self, k, d):
        if k != 2:
            raise ValueError("pairwise-distance takes exactly two points")


@dataclass(repr=True)
class StarMax(CostFunction):
    """Longest leash from the handler: ``max_i ||p_h - p_i||``."""

    handler: int = 0
    name = "star-max"
    code = K.STAR_MAX

    def iparams(self):
        return np.array([self.handler], dtype=np.int64)

    def check_arity(self, k, d):
        if not 0 <= self.handler < k:
            raise ValueError(f"handler {self.handler} out of range for k={k}")


@dataclass(repr=True)
class WeightedSum(CostFunction):
    """Weighted sum of distances over dependency edges ``(i, j, w)`` with ``w >= 0``."""

    edges: tuple = ()
    name = "weighted-sum"
    code = K.WEIGHTED_SUM

    def __post_init__(self):
        cleaned = []
        for e in self.edges:
            i, j, w = int(e[0]), int(e[1]), float(e[2]) if len(e) > 2 else 1.0
            if w < 0 or not np.isfinite(w):
                raise ValueError(f"weight must be finite and nonnegative, got {w}")
            if i == j:
                raise ValueError("dependency edge must join two different points")
            if w > 0:
                cleaned.append((i, j, w))
        self.edges = tuple(cleaned)
        self._ip = np.array([v for i, j, _ in self.edges for v in (i, j)] or [0], dtype=np.int64)
        self._fp = np.array([w for *_, w in self.edges], dtype=np.float64)

    @classmethod
    def complete(cls, k: int, weight: float = 1.0):
        return cls(tuple((i, j, weight) for i in range(k) for j in range(i + 1, k)))

    def iparams(self):
        return self._ip

    def fparams(self):
        return self._fp

    def check_arity(self, k, d):
        for i, j, _ in self.edges:
            if not (0 <= i < k and 0 <= j < k):
                raise ValueError(f"edge ({i},{j}) out of range for k={k}")


class MEBRadius(CostFunction):
    """Radius of the smallest ball enclosing the k points (mean-curve cost)."""

    name = "meb-radius"
    code = K.MEB_RADIUS
    needs_center = True

    def value(self, points) -> float:
        return float(min_enclosing_ball(points).radius)


class HullPerimeter(CostFunction):
    """Perimeter of the planar convex hull of the k points."""

    name = "hull-perimeter"
    code = K.HULL_PERIMETER

    def check_arity(self, k, d):
        if d != 2:
            raise GeometryError("hull-perimeter cost is only defined in the plane")


REGISTRY = {
    PairwiseDistance.name: PairwiseDistance,
    StarMax.name: StarMax,
    WeightedSum.name: WeightedSum,
    MEBRadius.name: MEBRadius,
    HullPerimeter.name: HullPerimeter,
}


def make_cost(name: str, **params) -> CostFunction:
    try:
        cls = REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown cost {name!r}; choose from {sorted(REGISTRY)}") from None
    return cls(**params)
