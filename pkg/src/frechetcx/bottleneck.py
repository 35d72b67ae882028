"""Minimax (bottleneck) paths.

``bottleneck_path`` is the linear-time median recursion on an explicit graph;
``lazy_bottleneck`` is Prim's algorithm on an implicit graph, stopped as soon
as the target joins the tree.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

BRUTE_FORCE_EDGES = 16


@dataclass
class WeightedGraph:
    """Undirected graph on vertices ``0..n-1`` given by parallel edge arrays."""

    n: int
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        self.u = np.asarray(self.u, dtype=np.int64).reshape(-1)
        self.v = np.asarray(self.v, dtype=np.int64).reshape(-1)
        self.w = np.asarray(self.w, dtype=np.float64).reshape(-1)
        if not (len(self.u) == len(self.v) == len(self.w)):
            raise ValueError("edge arrays differ in length")
        if len(self.w) and (not np.all(np.isfinite(self.w)) or self.w.min() < 0):
            raise ValueError("edge weights must be finite and nonnegative")
        if len(self.u) and (min(self.u.min(), self.v.min()) < 0
                            or max(self.u.max(), self.v.max()) >= self.n):
            raise ValueError("edge endpoint out of range")

    @classmethod
    def from_edges(cls, n, edges):
        edges = list(edges)
        if not edges:
            return cls(n, [], [], [])
        u, v, w = zip(*edges)
        return cls(n, u, v, w)

    @property
    def m(self) -> int:
        return len(self.w)

    def add_edge(self, a, b, w) -> "WeightedGraph":
        return WeightedGraph(self.n, np.append(self.u, a), np.append(self.v, b),
                             np.append(self.w, w))


@dataclass
class BottleneckResult:
    value: float
    path: list = field(default_factory=list)
    touched: int = 0

    @property
    def reachable(self) -> bool:
        return np.isfinite(self.value)


def _components(n, u, v):
    if n == 0:
        return 0, np.zeros(0, dtype=np.int64)
    A = coo_matrix((np.ones(len(u), dtype=np.int8), (u, v)), shape=(n, n))
    nc, lab = connected_components(A, directed=False)
    return nc, lab.astype(np.int64)


def _compact(n, u, v, keep_a, keep_b):
    """Drop isolated vertices (except the terminals) and relabel."""
    used = np.zeros(n, dtype=bool)
    used[u] = True
    used[v] = True
    used[keep_a] = True
    used[keep_b] = True
    newid = np.cumsum(used) - 1
    return int(used.sum()), newid[u], newid[v], int(newid[keep_a]), int(newid[keep_b])


def _brute(n, u, v, w, order_key, s, t):
    """Kruskal until s and t meet; ties broken by ``order_key``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in np.lexsort((order_key, w)):
        a, b = find(int(u[e])), find(int(v[e]))
        if a != b:
            parent[a] = b
            if find(s) == find(t):
                return float(w[e])
    return np.inf


def _median_value(n, u, v, w, key, s, t, counter):
    """Bottleneck value by median splitting. ``key`` holds original edge indices."""
    while True:
        m = len(w)
        counter[0] += m
        if m <= BRUTE_FORCE_EDGES:
            return _brute(n, u, v, w, key, s, t)
        mid = (m - 1) // 2
        wm = np.partition(w, mid)[mid]
        light = w < wm
        need = mid + 1 - int(light.sum())
        eq = np.flatnonzero(w == wm)
        # equal weights: lower edge index is lighter; arrays stay index-sorted
        light[eq[:need]] = True
        nc, lab = _components(n, u[light], v[light])
        if lab[s] == lab[t]:
            comp = lab[s]
            sel = light & (lab[u] == comp)
            n, u, v, s, t = _compact(n, u[sel], v[sel], s, t)
            w, key = w[sel], key[sel]
        else:
            heavy = ~light
            cu, cv = lab[u[heavy]], lab[v[heavy]]
            loop = cu == cv
            cu, cv = cu[~loop], cv[~loop]
            w, key = w[heavy][~loop], key[heavy][~loop]
            n, u, v, s, t = _compact(nc, cu, cv, int(lab[s]), int(lab[t]))


def _bfs_path(n, u, v, w, value, s, t):
    sel = w <= value
    adj = [[] for _ in range(n)]
    for a, b in zip(u[sel].tolist(), v[sel].tolist()):
        adj[a].append(b)
        adj[b].append(a)
    prev = [-1] * n
    prev[s] = s
    q = deque([s])
    while q:
        x = q.popleft()
        if x == t:
            break
        for y in sorted(adj[x]):
            if prev[y] < 0:
                prev[y] = x
                q.append(y)
    path = [t]
    while path[-1] != s:
        path.append(prev[path[-1]])
    return path[::-1]


def bottleneck_path(g: WeightedGraph, s: int, t: int) -> BottleneckResult:
    """Path from ``s`` to ``t`` minimizing the largest edge weight.

    The value comes from the median recursion: split edges at the median
    weight, recurse into the light subgraph if it already joins ``s`` and ``t``,
    otherwise contract its components and recurse on the heavy edges.
    ``touched`` counts edges scanned over all stages.
    """
    s, t = int(s), int(t)
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise IndexError("terminal out of range")
    if s == t:
        return BottleneckResult(0.0, [s], 0)
    counter = [g.m]
    nc, lab = _components(g.n, g.u, g.v)
    if lab[s] != lab[t]:
        return BottleneckResult(np.inf, [], counter[0])
    key = np.arange(g.m, dtype=np.int64)
    value = _median_value(g.n, g.u, g.v, g.w, key, s, t, counter)
    path = _bfs_path(g.n, g.u, g.v, g.w, value, s, t)
    return BottleneckResult(value, path, counter[0])


def prim_path(g: WeightedGraph, s: int, t: int, bound: float = np.inf) -> BottleneckResult:
    """Prim's tree path on an explicit graph (locally minimax)."""
    adj = [[] for _ in range(g.n)]
    for a, b, w in zip(g.u.tolist(), g.v.tolist(), g.w.tolist()):
        adj[a].append((w, b))
        adj[b].append((w, a))
    return lazy_bottleneck(lambda x: adj[x], s, t, bound=bound)


def lazy_bottleneck(expand, s, t, bound: float = np.inf) -> BottleneckResult:
    """Prim's algorithm from ``s`` on an implicit graph until ``t`` is reached.

    ``expand(x)`` yields ``(weight, neighbor)`` pairs. Vertices must be
    hashable and mutually orderable (ties in the heap fall back to them).
    Every subpath of the returned tree path is itself a minimax path.
    ``touched`` is the number of vertices added to the tree.
    """
    if s == t:
        return BottleneckResult(0.0, [s], 1)
    parent = {}
    key_of = {}
    heap = [(0.0, s, s)]
    popped = 0
    while heap:
        key, x, p = heapq.heappop(heap)
        if x in parent:
            continue
        if key > bound:
            break
        parent[x] = p
        key_of[x] = key
        popped += 1
        if x == t:
            path = [t]
            while path[-1] != s:
                path.append(parent[path[-1]])
            path.reverse()
            value = max(key_of[y] for y in path[1:])
            return BottleneckResult(value, path, popped)
        for w, y in expand(x):
            if y not in parent and w <= bound:
                heapq.heappush(heap, (w, y, x))
    return BottleneckResult(np.inf, [], popped)
