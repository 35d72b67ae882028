"""Implicit cell graph of a product of simplicial complexes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .complex import SimplicialComplex
from .costs import CostFunction, PairwiseDistance

CellId = tuple


@dataclass(frozen=True)
class CellGraphVertex:
    id: CellId
    elevation: float
    witness: np.ndarray  # (k, d), one point per complex


class CellGraph:
    """Vertices are k-tuples of simplex ids; two tuples are adjacent when they
    differ in one coordinate and the simplices there are a face/coface pair.

    Vertex elevations are computed on first access and memoized.
    """

    def __init__(self, complexes, cost: CostFunction | None = None, tol: float | None = None):
        self.complexes: list[SimplicialComplex] = list(complexes)
        if len(self.complexes) < 1:
            raise ValueError("need at least one complex")
        dims = {c.dim for c in self.complexes}
        if len(dims) != 1:
            raise ValueError(f"complexes live in different dimensions: {sorted(dims)}")
        self.d = dims.pop()
        self.k = len(self.complexes)
        self.cost = cost if cost is not None else PairwiseDistance()
        self.cost.check_arity(self.k, self.d)
        self.tol = tol
        self._store: dict[CellId, CellGraphVertex] = {}

    # -- structure --------------------------------------------------------
    def check_id(self, v) -> CellId:
        v = tuple(int(x) for x in v)
        if len(v) != self.k:
            raise KeyError(f"cell id {v} has {len(v)} coordinates, expected {self.k}")
        for c, x in zip(self.complexes, v):
            if not 0 <= x < len(c):
                raise KeyError(f"cell id {v}: simplex {x} not in {c.name or 'complex'}")
        return v

    def neighbors(self, v) -> list[CellId]:
        v = self.check_id(v)
        out = []
        for j, c in enumerate(self.complexes):
            for s in c.adjacent(v[j]):
                out.append(v[:j] + (s,) + v[j + 1:])
        out.sort()
        return out

    def are_adjacent(self, u, v) -> bool:
        u = self.check_id(u)
        v = self.check_id(v)
        diff = [j for j in range(self.k) if u[j] != v[j]]
        if len(diff) != 1:
            return False
        j = diff[0]
        return v[j] in self.complexes[j].adjacent(u[j])

    def num_vertices(self) -> int:
        return int(np.prod([len(c) for c in self.complexes], dtype=object))

    def all_ids(self):
        return itertools.product(*(range(len(c)) for c in self.complexes))

    def start_id(self, vertices) -> CellId:
        return tuple(c.vertex_simplex(v) for c, v in zip(self.complexes, vertices))

    # -- elevations -------------------------------------------------------
    def cell_arrays(self, v: CellId):
        M = max(len(c.simplices[x]) for c, x in zip(self.complexes, v))
        verts = np.zeros((self.k, M, self.d))
        mdims = np.zeros(self.k, dtype=np.int64)
        for i, (c, x) in enumerate(zip(self.complexes, v)):
            V = c.vertex_array(x)
            verts[i, : len(V)] = V
            mdims[i] = len(V) - 1
        return verts, mdims

    def vertex(self, v) -> CellGraphVertex:
        v = tuple(v)
        hit = self._store.get(v)
        if hit is not None:
            return hit
        v = self.check_id(v)
        verts, mdims = self.cell_arrays(v)
        res = self.cost.minimize_arrays(verts, mdims, self.tol)
        out = CellGraphVertex(v, res.value, res.witness)
        self._store.setdefault(v, out)
        return self._store[v]

    def elevation(self, v) -> float:
        return self.vertex(v).elevation

    def edge_elevation(self, u, v) -> float:
        if not self.are_adjacent(u, v):
            raise ValueError(f"cells {tuple(u)} and {tuple(v)} are not adjacent")
        return max(self.elevation(u), self.elevation(v))

    def evict(self):
        self._store.clear()

    @property
    def materialized(self) -> int:
        return len(self._store)

    # -- eager form -------------------------------------------------------
    def materialize(self):
        """Explicit weighted graph over all cells.

        Returns ``(graph, ids)`` where ``ids[i]`` is the cell of graph vertex ``i``.
        Edge weights are the larger endpoint elevation.
        """
        from .bottleneck import WeightedGraph

        ids = list(self.all_ids())
        pos = {v: i for i, v in enumerate(ids)}
        elev = np.array([self.elevation(v) for v in ids])
        us, vs = [], []
        for i, v in enumerate(ids):
            for w in self.neighbors(v):
                j = pos[w]
                if j > i:
                    us.append(i)
                    vs.append(j)
        us = np.array(us, dtype=np.int64)
        vs = np.array(vs, dtype=np.int64)
        w = np.maximum(elev[us], elev[vs]) if len(us) else np.zeros(0)
        return WeightedGraph(len(ids), us, vs, w), ids
