"""Simplicial complexes with a realization, plus curves and DAG complexes."""

from __future__ import annotations

import heapq
import itertools
import warnings
from dataclasses import dataclass, field

import numpy as np

from .geometry import GeometryError, Simplex, affinely_independent


class ValidationError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class Violation:
    rule: str
    simplex: tuple
    message: str

    def __str__(self):
        return f"[{self.rule}] simplex {self.simplex}: {self.message}"


def _proper_faces(s: tuple):
    for r in range(1, len(s)):
        yield from itertools.combinations(s, r)


class SimplicialComplex:
    """Abstract simplicial complex on indexed points together with its realization.

    Simplices are sorted vertex-index tuples; simplex ids are positions in
    :attr:`simplices`. The face lattice (all proper faces and cofaces of each
    simplex that are present) is precomputed.
    """

    kind = "complex"

    def __init__(self, points, simplices, name: str = "", complete: bool = False,
                 vertex_names=None):
        P = np.array(points, dtype=np.float64, ndmin=2)
        if P.size == 0:
            raise GeometryError("complex needs at least one point")
        if not np.all(np.isfinite(P)):
            raise GeometryError("non-finite vertex coordinates")
        P.setflags(write=False)
        self.points = P
        self.name = name
        seen: dict[tuple, None] = {}
        for s in simplices:
            t = tuple(sorted(int(v) for v in s))
            if len(t) == 0:
                continue
            if len(set(t)) != len(t):
                raise GeometryError(f"simplex {tuple(s)} repeats a vertex")
            for v in t:
                if not 0 <= v < len(P):
                    raise GeometryError(f"simplex {t} references unknown vertex {v}")
            seen.setdefault(t)
        if complete:
            missing = []
            for t in list(seen):
                for f in _proper_faces(t):
                    if f not in seen:
                        seen[f] = None
                        missing.append(f)
            if missing:
                warnings.warn(f"completed {len(missing)} missing faces for downward closure",
                              stacklevel=2)
        self.simplices: list[tuple] = self._order(list(seen))
        self.index = {s: i for i, s in enumerate(self.simplices)}
        self.vertex_names = list(vertex_names) if vertex_names is not None else [
            str(i) for i in range(len(P))]
        self._build_lattice()
        self._geom: dict[int, Simplex] = {}

    @staticmethod
    def _order(simps):
        return sorted(simps, key=lambda t: (len(t), t))

    def _build_lattice(self):
        n = len(self.simplices)
        faces = [[] for _ in range(n)]
        cofaces = [[] for _ in range(n)]
        for i, s in enumerate(self.simplices):
            for f in _proper_faces(s):
                j = self.index.get(f)
                if j is not None:
                    faces[i].append(j)
                    cofaces[j].append(i)
        self.faces = [tuple(sorted(x)) for x in faces]
        self.cofaces = [tuple(sorted(x)) for x in cofaces]

    # -- basic queries ----------------------------------------------------
    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self):
        return len(self.simplices)

    def vertex_simplex(self, v: int) -> int:
        """Simplex id of the 0-simplex ``(v,)``."""
        try:
            return self.index[(int(v),)]
        except KeyError:
            raise KeyError(f"vertex {v} is not a 0-simplex of {self.name or 'complex'}") from None

    def vertex_id(self, name) -> int:
        if isinstance(name, (int, np.integer)):
            return int(name)
        try:
            return self.vertex_names.index(str(name))
        except ValueError:
            raise KeyError(f"no vertex named {name!r}") from None

    def simplex_dim(self, sid: int) -> int:
        return len(self.simplices[sid]) - 1

    def adjacent(self, sid: int) -> tuple:
        """Faces and cofaces of a simplex, sorted by id."""
        return tuple(sorted(self.faces[sid] + self.cofaces[sid]))

    def geometry(self, sid: int) -> Simplex:
        g = self._geom.get(sid)
        if g is None:
            g = Simplex(self.points[list(self.simplices[sid])])
            self._geom[sid] = g
        return g

    def vertex_array(self, sid: int) -> np.ndarray:
        return self.points[list(self.simplices[sid])]

    # -- validation -------------------------------------------------------
    def validate(self) -> list[Violation]:
        out: list[Violation] = []
        present = self.index
        for s in self.simplices:
            for f in _proper_faces(s):
                if f not in present:
                    out.append(Violation("downward closure", s, f"missing face {f}"))
        for s in self.simplices:
            V = self.points[list(s)]
            if len(s) - 1 > self.dim or not affinely_independent(V):
                out.append(Violation("affine independence", s,
                                     "vertices are affinely dependent"))
        out.extend(self._check_local_consistency())
        out.extend(self._check_connectivity())
        return out

    def _check_local_consistency(self) -> list[Violation]:
        # Shared faces are realized from the same vertex table, so each face's
        # vertex and midpoint samples must coincide when seen from its cofaces.
        out = []
        for i, s in enumerate(self.simplices):
            if len(s) == 1:
                continue
            V = self.points[list(s)]
            for j in self.faces[i]:
                f = self.simplices[j]
                pos = [s.index(v) for v in f]
                bary = np.zeros(len(s))
                bary[pos] = 1.0 / len(f)
                mid_from_coface = bary @ V
                mid_face = self.points[list(f)].mean(axis=0)
                if not np.allclose(mid_from_coface, mid_face, rtol=0, atol=1e-12 * (1 + np.abs(V).max())):
                    out.append(Violation("local consistency", s, f"face {f} realized differently"))
        return out

    def _check_connectivity(self) -> list[Violation]:
        n = len(self.points)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in self.simplices:
            for v in s[1:]:
                a, b = find(s[0]), find(v)
                if a != b:
                    parent[a] = b
        roots = sorted({find(v) for v in range(n)})
        if len(roots) > 1:
            return [Violation("connectivity", (), f"{len(roots)} connected components")]
        return []

    def validated(self):
        bad = self.validate()
        if bad:
            raise ValidationError(bad)
        return self

    def __repr__(self):
        return (f"{type(self).__name__}(name={self.name!r}, points={len(self.points)}, "
                f"simplices={len(self.simplices)})")


class Curve(SimplicialComplex):
    """Polygonal curve as a 1-dimensional complex.

    Simplex ids follow the curve: id ``2i`` is vertex ``i`` and id ``2i+1`` the
    segment from vertex ``i`` to ``i+1``. Consecutive duplicate vertices are
    collapsed; :attr:`collapsed` counts how many were dropped.
    """

    kind = "curve"

    def __init__(self, vertices, name: str = "", vertex_names=None):
        V = np.array(vertices, dtype=np.float64, ndmin=2)
        if V.size == 0:
            raise GeometryError("a curve needs at least one vertex")
        keep = [0] + [i for i in range(1, len(V)) if not np.array_equal(V[i], V[i - 1])]
        self.collapsed = len(V) - len(keep)
        V = V[keep]
        if vertex_names is not None:
            vertex_names = [list(vertex_names)[i] for i in keep]
        n = len(V)
        simps = []
        for i in range(n):
            simps.append((i,))
            if i + 1 < n:
                simps.append((i, i + 1))
        self._curve_order = simps
        super().__init__(V, simps, name=name, vertex_names=vertex_names)

    def _order(self, simps):
        return list(self._curve_order)

    @property
    def vertices(self) -> np.ndarray:
        return self.points

    @property
    def n(self) -> int:
        return len(self.points)

    def length(self) -> float:
        return float(np.sum(np.linalg.norm(np.diff(self.points, axis=0), axis=1)))

    def reversed(self) -> "Curve":
        return Curve(self.points[::-1], name=self.name)

    def vertex_simplex(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise KeyError(f"vertex {v} out of range")
        return 2 * v

    def _check_local_consistency(self):
        # every face is an endpoint drawn from the same vertex table
        return []


def curve_to_complex(vertices, name: str = "") -> Curve:
    return Curve(vertices, name=name)


class DagComplex(SimplicialComplex):
    """Straight-line DAG in R^d. Undirected structure doubles as a 1-complex."""

    kind = "dag"

    def __init__(self, points, edges, name: str = "", vertex_names=None):
        P = np.array(points, dtype=np.float64, ndmin=2)
        self.edges = [(int(a), int(b)) for a, b in edges]
        for a, b in self.edges:
            if a == b:
                raise GeometryError(f"self-loop at vertex {a}")
        if len(set(self.edges)) != len(self.edges):
            raise GeometryError("duplicate directed edge")
        und = {tuple(sorted(e)) for e in self.edges}
        if len(und) != len(self.edges):
            raise GeometryError("antiparallel edges create a 2-cycle")
        simps = [(i,) for i in range(len(P))] + [tuple(sorted(e)) for e in self.edges]
        super().__init__(P, simps, name=name, vertex_names=vertex_names)
        self.out_edges = [[] for _ in range(len(P))]
        self.in_edges = [[] for _ in range(len(P))]
        for j, (a, b) in enumerate(self.edges):
            self.out_edges[a].append(j)
            self.in_edges[b].append(j)
        self.order = self._toposort()

    def _toposort(self):
        n = len(self.points)
        indeg = [len(self.in_edges[v]) for v in range(n)]
        heap = [v for v in range(n) if indeg[v] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            v = heapq.heappop(heap)
            order.append(v)
            for j in self.out_edges[v]:
                w = self.edges[j][1]
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(heap, w)
        return order if len(order) == n else None

    @property
    def acyclic(self) -> bool:
        return self.order is not None

    def validate(self):
        out = super().validate()
        if self.order is None:
            out.append(Violation("acyclicity", (), "directed edges contain a cycle"))
        return out

    @classmethod
    def from_curve(cls, curve, name: str | None = None) -> "DagComplex":
        V = curve.points if isinstance(curve, Curve) else Curve(curve).points
        return cls(V, [(i, i + 1) for i in range(len(V) - 1)],
                   name=name if name is not None else getattr(curve, "name", ""))


@dataclass
class SimplicialPath:
    """Path through one complex: simplex ids, one witness point per step,
    and the parameter value at which each witness is reached."""

    simplices: list
    witnesses: np.ndarray
    breakpoints: np.ndarray

    def __len__(self):
        return len(self.simplices)

    def check(self, complex_: SimplicialComplex, tol: float = 1e-9) -> list[str]:
        errs = []
        for a, b in zip(self.simplices, self.simplices[1:]):
            if a != b and b not in complex_.adjacent(a):
                errs.append(f"steps {a}->{b} are not adjacent")
        for sid, w in zip(self.simplices, self.witnesses):
            if not complex_.geometry(sid).contains(w, tol=tol):
                errs.append(f"witness {w} outside simplex {sid}")
        return errs

    def polyline(self) -> np.ndarray:
        """Witness points with consecutive repeats removed."""
        W = np.asarray(self.witnesses)
        if len(W) == 0:
            return W
        keep = [0] + [i for i in range(1, len(W)) if not np.array_equal(W[i], W[i - 1])]
        return W[keep]


def project_path(path, which: int) -> SimplicialPath:
    """Component ``which`` of a product path, sharing its parameter breakpoints."""
    k = len(path.cells[0]) if len(path.cells) else 0
    if not 0 <= which < k:
        raise IndexError(f"complex index {which} out of range for k={k}")
    return SimplicialPath(
        [c[which] for c in path.cells],
        np.array([w[which] for w in path.witnesses]),
        np.array(path.breakpoints, dtype=np.float64),
    )
