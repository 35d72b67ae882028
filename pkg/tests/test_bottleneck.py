import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frechetcx import oracles
from frechetcx.bottleneck import WeightedGraph, bottleneck_path, lazy_bottleneck, prim_path


def _path_value(g, path):
    best = 0.0
    for a, b in zip(path, path[1:]):
        m = (((g.u == a) & (g.v == b)) | ((g.u == b) & (g.v == a)))
        assert m.any(), f"{a}-{b} not an edge"
        best = max(best, g.w[m].min())
    return best


def random_graph(rng, n, m, integer=False):
    u = rng.integers(0, n, m)
    v = rng.integers(0, n, m)
    w = rng.integers(0, 10, m).astype(float) if integer else rng.random(m)
    return WeightedGraph(n, u, v, w)


def test_example_triangle():
    g = WeightedGraph.from_edges(3, [(0, 1, 5), (1, 2, 3), (0, 2, 7)])
    r = bottleneck_path(g, 0, 2)
    assert r.value == 5 and r.path == [0, 1, 2]
    assert oracles.simple_path_bottleneck(3, [(0, 1, 5), (1, 2, 3), (0, 2, 7)], 0, 2) == 5
    adj = {0: [(5, 1), (7, 2)], 1: [(5, 0), (3, 2)], 2: [(3, 1), (7, 0)]}
    assert lazy_bottleneck(lambda x: adj[x], 0, 2).value == 5


def test_single_edge_and_trivial():
    g = WeightedGraph.from_edges(2, [(0, 1, 2.5)])
    assert bottleneck_path(g, 0, 1).value == 2.5
    assert bottleneck_path(g, 1, 1).path == [1]
    r = lazy_bottleneck(lambda x: [], "a", "a")
    assert r.value == 0 and r.path == ["a"]


def test_disconnected():
    g = WeightedGraph.from_edges(4, [(0, 1, 1.0), (2, 3, 1.0)])
    assert bottleneck_path(g, 0, 3).value == math.inf
    assert not prim_path(g, 0, 3).reachable


def test_validation():
    with pytest.raises(ValueError):
        WeightedGraph(2, [0], [1], [-1.0])
    with pytest.raises(ValueError):
        WeightedGraph(2, [0], [2], [1.0])
    with pytest.raises(IndexError):
        bottleneck_path(WeightedGraph(2, [0], [1], [1.0]), 0, 5)


@pytest.mark.parametrize("seed", range(100))
def test_lazy_matches_median(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 51))
    g = random_graph(rng, n, int(rng.integers(1, 4 * n)), integer=seed % 2 == 0)
    s, t = 0, n - 1
    a = bottleneck_path(g, s, t)
    b = prim_path(g, s, t)
    assert a.value == b.value
    if a.reachable:
        assert _path_value(g, a.path) == a.value
        assert _path_value(g, b.path) == b.value


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 9).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1),
                                   st.sampled_from([0.0, 1.0, 2.0, 2.0, 3.5, 7.0])),
                         min_size=0, max_size=20))))
def test_matches_exhaustive(case):
    n, edges = case
    g = WeightedGraph.from_edges(n, edges)
    want = oracles.simple_path_bottleneck(n, edges, 0, n - 1)
    assert bottleneck_path(g, 0, n - 1).value == want
    assert oracles.threshold_bottleneck(n, edges, 0, n - 1) == want


def test_bound_cuts_search():
    g = WeightedGraph.from_edges(3, [(0, 1, 1.0), (1, 2, 9.0)])
    assert not prim_path(g, 0, 2, bound=5.0).reachable
    assert prim_path(g, 0, 2, bound=9.0).value == 9.0


def test_prim_subpaths_are_minimax():
    rng = np.random.default_rng(11)
    g = random_graph(rng, 30, 90)
    r = prim_path(g, 0, 29)
    if not r.reachable:
        pytest.skip("disconnected draw")
    for i in range(1, len(r.path)):
        sub = r.path[: i + 1]
        assert _path_value(g, sub) == bottleneck_path(g, 0, sub[-1]).value


def test_touched_linear():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(10, 200))
        g = random_graph(rng, n, int(rng.integers(n, 5 * n)))
        r = bottleneck_path(g, 0, n - 1)
        assert r.touched <= 8 * g.m
