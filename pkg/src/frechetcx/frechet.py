"""Lowest paths in product cell graphs: weak Fréchet, k-complex costs, mean curves."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .bottleneck import bottleneck_path, lazy_bottleneck, prim_path
from .cellgraph import CellGraph
from .complex import Curve, SimplicialComplex, SimplicialPath, project_path
from .costs import CostFunction, HullPerimeter, MEBRadius, PairwiseDistance, StarMax
from .geometry import DEFAULT_TOL, MAX_ITER, MinimizationError


@dataclass
class ProductPath:
    """Walk through the cell graph together with a realization.

    ``witnesses[i]`` is a ``(k, d)`` array, the cost minimizer inside
    ``cells[i]``. The polyline through the witnesses (in R^{kd}) is the
    synchronized motion; ``breakpoints`` are its normalized arc-length
    parameters.
    """

    cells: list
    witnesses: list
    elevations: np.ndarray
    value: float
    complexes: list = field(repr=False, default_factory=list)
    explored: int = 0

    def __post_init__(self):
        self.elevations = np.asarray(self.elevations, dtype=np.float64)
        W = np.array([np.asarray(w).reshape(-1) for w in self.witnesses]) if self.witnesses else np.zeros((0, 0))
        if len(W) <= 1:
            self.breakpoints = np.zeros(len(W))
        else:
            seg = np.linalg.norm(np.diff(W, axis=0), axis=1)
            total = seg.sum()
            if total > 0:
                self.breakpoints = np.concatenate([[0.0], np.cumsum(seg) / total])
                self.breakpoints[-1] = 1.0
            else:
                self.breakpoints = np.linspace(0.0, 1.0, len(W))

    def __len__(self):
        return len(self.cells)

    @property
    def k(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    def projection(self, which: int) -> SimplicialPath:
        return project_path(self, which)

    @property
    def projections(self) -> list[SimplicialPath]:
        return [project_path(self, i) for i in range(self.k)]

    def positions(self, t) -> np.ndarray:
        """Points of all k walkers at parameter ``t`` in [0, 1]."""
        W = np.array(self.witnesses)
        if len(W) == 1:
            return W[0].copy()
        j = int(np.clip(np.searchsorted(self.breakpoints, t, side="right") - 1, 0, len(W) - 2))
        a, b = self.breakpoints[j], self.breakpoints[j + 1]
        lam = 0.0 if b <= a else (t - a) / (b - a)
        return (1 - lam) * W[j] + lam * W[j + 1]

    def max_sampled_cost(self, cost: CostFunction, samples: int = 3) -> float:
        """Largest cost seen at witnesses and interior points of each step."""
        W = np.array(self.witnesses)
        best = max(cost.value(w) for w in W)
        for a, b in zip(W, W[1:]):
            for lam in np.linspace(0, 1, samples + 2)[1:-1]:
                best = max(best, cost.value((1 - lam) * a + lam * b))
        return best


def _as_curve_vertex(c: SimplicialComplex, v, last: bool):
    if v is None:
        if isinstance(c, Curve):
            return c.n - 1 if last else 0
        raise ValueError("start/end vertex required for non-curve complexes")
    return c.vertex_id(v)


def _endpoints(complexes, starts, ends):
    k = len(complexes)
    starts = [None] * k if starts is None else list(starts)
    ends = [None] * k if ends is None else list(ends)
    if len(starts) != k or len(ends) != k:
        raise ValueError("need one start and one end vertex per complex")
    s = [_as_curve_vertex(c, v, False) for c, v in zip(complexes, starts)]
    t = [_as_curve_vertex(c, v, True) for c, v in zip(complexes, ends)]
    return s, t


def _grid_eligible(complexes, cost, s, t):
    return (cost.code >= 0 and all(isinstance(c, Curve) for c in complexes)
            and all(v == 0 for v in s) and all(v == c.n - 1 for v, c in zip(t, complexes)))


def curve_arrays(curves):
    """Pad k curves into a ``(k, nmax, d)`` coordinate block plus lengths."""
    lens = np.array([c.n for c in curves], dtype=np.int64)
    d = curves[0].dim
    coords = np.zeros((len(curves), int(lens.max()), d))
    for i, c in enumerate(curves):
        coords[i, : c.n] = c.points
    return coords, lens


def grid_ids(lin_path, lens):
    """Linear grid indices back to cell ids (feature tuples)."""
    sizes = 2 * np.asarray(lens) - 1
    return [tuple(int(x) for x in np.unravel_index(int(i), tuple(sizes))) for i in lin_path]


def _grid_prim(graph: CellGraph, bound=np.inf, tol=None):
    coords, lens = curve_arrays(graph.complexes)
    cost = graph.cost
    status, reached, value, lin, explored, _ = K.curve_prim(
        coords, lens, cost.code, cost.iparams(), cost.fparams(), bound,
        DEFAULT_TOL if tol is None else tol, MAX_ITER)
    if status == K.FAILED:
        raise MinimizationError("cell minimization failed during grid search", best_value=np.nan)
    return reached, value, grid_ids(lin, lens), explored


def _build_path(graph: CellGraph, cells, explored) -> ProductPath:
    verts = [graph.vertex(c) for c in cells]
    elev = np.array([v.elevation for v in verts])
    return ProductPath(list(cells), [v.witness for v in verts], elev, float(elev.max()),
                       graph.complexes, explored)


def lowest_path(graph: CellGraph, source, target, method: str = "lazy", bound=np.inf):
    """Lowest path between two cells of a cell graph, or ``None`` if none stays under ``bound``."""
    source, target = tuple(source), tuple(target)
    if method == "lazy":
        base = max(graph.elevation(source), graph.elevation(target))

        def expand(x):
            ex = graph.elevation(x)
            return [(max(ex, graph.elevation(y)), y) for y in graph.neighbors(x)]

        if base > bound:
            return None
        res = lazy_bottleneck(expand, source, target, bound=bound)
        if not res.reachable:
            return None
        return _build_path(graph, res.path, res.touched)
    if method == "explicit":
        g, ids = graph.materialize()
        pos = {v: i for i, v in enumerate(ids)}
        res = bottleneck_path(g, pos[source], pos[target])
        if not res.reachable:
            return None
        # the median recursion fixes the value; Prim on the same graph gives a
        # path whose every subpath is minimax as well
        tree = prim_path(g, pos[source], pos[target])
        assert tree.value == res.value, (tree.value, res.value)
        path = _build_path(graph, [ids[i] for i in tree.path], g.n)
        if path.value > bound:
            return None
        return path
    raise ValueError(f"unknown method {method!r}")


def k_complex_paths(complexes, starts=None, ends=None, cost: CostFunction | None = None,
                    method: str = "lazy", tol=None) -> ProductPath:
    """Lowest synchronized motion through k complexes under a convex cost.

    ``method="lazy"`` explores the implicit cell graph best-first (a compiled
    grid search when every input is a curve traversed end to end);
    ``"explicit"`` materializes the whole graph and runs the median recursion.
    """
    complexes = list(complexes)
    if len(complexes) < 2:
        raise ValueError("need at least two complexes")
    cost = cost if cost is not None else PairwiseDistance()
    s, t = _endpoints(complexes, starts, ends)
    graph = CellGraph(complexes, cost, tol=tol)
    src = graph.start_id(s)
    dst = graph.start_id(t)
    if method == "lazy" and _grid_eligible(complexes, cost, s, t):
        reached, value, cells, explored = _grid_prim(graph, tol=tol)
        if not reached:
            raise RuntimeError("end cell unreachable; complexes are not connected")
        path = _build_path(graph, cells, explored)
        assert path.value == value
        return path
    path = lowest_path(graph, src, dst, method=method)
    if path is None:
        raise RuntimeError("end cell unreachable; complexes are not connected")
    return path


def weak_frechet_paths(C1, C2, s1=None, t1=None, s2=None, t2=None,
                       method: str = "lazy") -> ProductPath:
    """Paths in two complexes between the given vertices minimizing their weak Fréchet distance."""
    return k_complex_paths([C1, C2], [s1, s2], [t1, t2], PairwiseDistance(), method=method)


def weak_frechet(C1, C2, **kw) -> float:
    return weak_frechet_paths(C1, C2, **kw).value


@dataclass
class MeanCurveResult:
    value: float
    mean: Curve
    path: ProductPath

    def __iter__(self):
        yield self.value
        yield self.mean
        yield self.path


def centers_along(path: ProductPath, resolution: int = 16) -> np.ndarray:
    """Enclosing-ball centers sampled along each step of the motion."""
    return K.centers_along(np.array(path.witnesses, dtype=np.float64), int(resolution))


def mean_curve(curves, resolution: int = 16, method: str = "lazy") -> MeanCurveResult:
    """Curve minimizing the largest weak Fréchet distance to all inputs.

    The optimum equals the lowest motion under the enclosing-ball radius;
    the mean curve follows the ball center along that motion.
    """
    curves = [c if isinstance(c, Curve) else Curve(c) for c in curves]
    if len(curves) < 2:
        raise ValueError("mean curve needs at least two curves")
    path = k_complex_paths(curves, cost=MEBRadius(), method=method)
    mean = Curve(centers_along(path, resolution), name="mean")
    return MeanCurveResult(path.value, mean, path)


def walk_dogs(complexes, starts=None, ends=None, handler: int = 0,
              method: str = "lazy") -> ProductPath:
    """One handler walking k-1 dogs: minimize the longest leash."""
    return k_complex_paths(complexes, starts, ends, StarMax(handler), method=method)


def min_perimeter_motion(complexes, starts=None, ends=None, method: str = "lazy") -> ProductPath:
    """Planar motion keeping the convex-hull perimeter of the walkers small."""
    complexes = list(complexes)
    if len(complexes) < 3:
        raise ValueError("perimeter motion needs k >= 3")
    if any(c.dim != 2 for c in complexes):
        raise ValueError("perimeter motion is planar (d = 2)")
    return k_complex_paths(complexes, starts, ends, HullPerimeter(), method=method)
