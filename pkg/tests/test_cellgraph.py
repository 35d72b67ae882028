import numpy as np
import pytest

from frechetcx import oracles
from frechetcx.cellgraph import CellGraph
from frechetcx.complex import Curve, SimplicialComplex
from frechetcx.costs import MEBRadius, PairwiseDistance
from frechetcx.geometry import min_enclosing_ball


def test_vertex_pair_neighbors():
    A = Curve([(0, 0), (1, 0)])
    B = Curve([(0, 1), (1, 1)])
    g = CellGraph([A, B])
    assert g.neighbors((0, 0)) == [(0, 1), (1, 0)]


def test_segment_pair_neighbors():
    A = Curve([(0, 0), (1, 0), (2, 0), (3, 0)])
    B = Curve([(0, 1), (1, 1), (2, 1), (3, 1)])
    g = CellGraph([A, B])
    assert len(g.neighbors((3, 3))) == 4


def _random_complex(rng, n):
    P = rng.random((n, 2))
    simps = [(i,) for i in range(n)] + [(i, i + 1) for i in range(n - 1)]
    if n >= 3:
        simps += [(0, 2), (0, 1, 2)]
    return SimplicialComplex(P, simps)


@pytest.mark.parametrize("seed", range(5))
def test_neighbors_vs_bruteforce(seed):
    rng = np.random.default_rng(seed)
    cs = [_random_complex(rng, 3), _random_complex(rng, 2)]
    g = CellGraph(cs)
    brute = oracles.adjacency_bruteforce(cs)
    mine = {(x, y) for x in g.all_ids() for y in g.neighbors(x)}
    assert mine == brute
    assert all(g.are_adjacent(x, y) for x, y in brute)


def test_point_pair_elevation():
    g = CellGraph([Curve([(0, 0)]), Curve([(3, 4)])])
    assert g.elevation((0, 0)) == pytest.approx(5.0)


def test_segment_point_elevation():
    g = CellGraph([Curve([(0, 0), (2, 0)]), Curve([(1, 1)])])
    v = g.vertex((1, 0))
    assert v.elevation == pytest.approx(1.0)
    np.testing.assert_allclose(v.witness, [[1, 0], [1, 1]], atol=1e-9)


def test_meb_elevation_three_points():
    P = [(0, 0), (1, 0), (0.5, 0.8)]
    g = CellGraph([Curve([p]) for p in P], MEBRadius())
    assert g.elevation((0, 0, 0)) == pytest.approx(min_enclosing_ball(P).radius, abs=1e-12)


def test_edge_elevation_and_eviction():
    A = Curve([(0, 0), (2, 0)])
    B = Curve([(0, 1), (0, 3)])
    g = CellGraph([A, B])
    assert g.edge_elevation((0, 2), (0, 1)) == pytest.approx(3.0)
    assert g.edge_elevation((0, 0), (0, 1)) == pytest.approx(1.0)
    before = g.edge_elevation((2, 1), (2, 2))
    assert g.materialized > 0
    g.evict()
    assert g.materialized == 0
    assert g.edge_elevation((2, 1), (2, 2)) == before
    with pytest.raises(ValueError):
        g.edge_elevation((0, 0), (2, 2))


def test_bad_ids():
    g = CellGraph([Curve([(0, 0), (1, 0)]), Curve([(0, 1)])])
    with pytest.raises(KeyError):
        g.vertex((5, 0))
    with pytest.raises(KeyError):
        g.vertex((0,))


def test_materialize_counts():
    A = Curve([(0, 0), (1, 0), (2, 0)])
    B = Curve([(0, 1), (1, 1)])
    g = CellGraph([A, B], PairwiseDistance())
    wg, ids = g.materialize()
    assert wg.n == g.num_vertices() == 15
    brute = oracles.adjacency_bruteforce([A, B])
    assert wg.m == len(brute) // 2
