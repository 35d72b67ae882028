import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frechetcx import oracles
from frechetcx.costs import (REGISTRY, HullPerimeter, MEBRadius, PairwiseDistance, StarMax,
                             WeightedSum, make_cost)
from frechetcx.geometry import (GeometryError, MinimizationError, Simplex, distance,
                                hull_perimeter, min_enclosing_ball, minimize_cost_over_cell,
                                simplex_distance)

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def pts(n, d=2):
    return st.lists(st.lists(coord, min_size=d, max_size=d), min_size=n, max_size=n).map(np.array)


@pytest.mark.parametrize("p,q,val", [((0, 0), (3, 4), 5.0), ((1, 1), (1, 1), 0.0),
                                     ((0, 0, 0), (1, 1, 1), math.sqrt(3))])
def test_distance(p, q, val):
    assert distance(p, q) == pytest.approx(val, abs=1e-15)


def test_distance_rejects_mismatch_and_nan():
    with pytest.raises(GeometryError):
        distance((0, 0), (0, 0, 0))
    with pytest.raises(GeometryError):
        distance((0, np.nan), (0, 0))


def test_simplex_rejects_dependent_vertices():
    with pytest.raises(GeometryError):
        Simplex([[0, 0], [1, 1], [2, 2]])


def test_segment_point_projection():
    r = simplex_distance(Simplex([[0, 0], [1, 0]]), Simplex([[0.5, 1]]))
    assert r.value == pytest.approx(1.0)
    np.testing.assert_allclose(r.witness_a, [0.5, 0], atol=1e-12)


def test_point_point():
    r = simplex_distance(Simplex([[1, 2]]), Simplex([[4, 6]]))
    assert r.value == pytest.approx(5.0)


def test_triangle_segment_against_grid():
    T = [[0, 0], [2, 0], [0, 2]]
    S = [[3, 0], [3, 3]]
    r = simplex_distance(Simplex(T), Simplex(S))
    assert r.value == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(r.witness_a, [2, 0], atol=1e-9)
    np.testing.assert_allclose(r.witness_b, [3, 0], atol=1e-9)
    assert abs(oracles.grid_simplex_distance(T, S, steps=40) - r.value) < 1e-6


@settings(max_examples=60, deadline=None)
@given(pts(3), pts(2))
def test_simplex_distance_vs_grid(A, B):
    try:
        SA, SB = Simplex(A), Simplex(B)
    except GeometryError:
        return
    r = simplex_distance(SA, SB)
    grid = oracles.grid_simplex_distance(A, B, steps=30)
    span = max(np.ptp(A, axis=0).max(), np.ptp(B, axis=0).max())
    assert r.value <= grid + 1e-9
    assert grid - r.value <= span / 30 * 2 + 1e-9
    assert distance(r.witness_a, r.witness_b) == pytest.approx(r.value, abs=1e-9)
    assert SA.contains(r.witness_a) and SB.contains(r.witness_b)


@settings(max_examples=40, deadline=None)
@given(pts(2), pts(2))
def test_simplex_distance_symmetric(A, B):
    try:
        SA, SB = Simplex(A), Simplex(B)
    except GeometryError:
        return
    assert simplex_distance(SA, SB).value == simplex_distance(SB, SA).value


@pytest.mark.parametrize("P,c,r", [([(-1, 0), (1, 0)], (0, 0), 1.0), ([(2, 3)], (2, 3), 0.0),
                                   ([(0, 0), (2, 0), (1, 3)], (1, 4 / 3), 5 / 3)])
def test_meb_examples(P, c, r):
    b = min_enclosing_ball(P)
    assert b.radius == pytest.approx(r, abs=1e-12)
    np.testing.assert_allclose(b.center, c, atol=1e-12)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: pts(n)))
def test_meb_vs_exhaustive(P):
    b = min_enclosing_ball(P)
    _, r = oracles.meb_exhaustive(P)
    assert b.radius == pytest.approx(r, rel=1e-9, abs=1e-9)
    assert all(b.contains(p, tol=1e-9) for p in P)


def test_meb_3d():
    P = np.random.default_rng(0).random((12, 3))
    b = min_enclosing_ball(P)
    _, r = oracles.meb_exhaustive(P)
    assert b.radius == pytest.approx(r, rel=1e-9)


def test_cell_minimum_points_only():
    p, q = Simplex([[0, 0]]), Simplex([[3, 4]])
    val, wit = minimize_cost_over_cell(PairwiseDistance(), [p, q])
    assert val == pytest.approx(5.0)
    np.testing.assert_allclose(wit, [[0, 0], [3, 4]])


def test_cell_minimum_segments_match_simplex_distance():
    rng = np.random.default_rng(3)
    for _ in range(20):
        A, B = Simplex(rng.random((2, 2))), Simplex(rng.random((2, 2)))
        val, _ = PairwiseDistance().minimize([A, B])
        assert val == pytest.approx(simplex_distance(A, B).value, abs=1e-9)
        assert val == pytest.approx(oracles.seg_seg_2d(*A.vertices, *B.vertices), abs=1e-9)


def test_meb_cost_on_points():
    P = [[0, 0], [1, 0], [0.5, math.sqrt(3) / 2]]
    val, _ = MEBRadius().minimize([Simplex([p]) for p in P])
    assert val == pytest.approx(min_enclosing_ball(P).radius, abs=1e-12)


def test_registry_and_params():
    assert set(REGISTRY) == {"pairwise-distance", "star-max", "weighted-sum", "meb-radius",
                             "hull-perimeter"}
    with pytest.raises(ValueError):
        make_cost("nope")
    with pytest.raises(ValueError):
        WeightedSum([(0, 1, -1.0)])
    with pytest.raises(GeometryError):
        HullPerimeter().value(np.zeros((3, 3)))


def test_cost_values():
    P = np.array([[0, 0], [3, 0], [0, 4]], float)
    assert StarMax(0).value(P) == pytest.approx(4.0)
    assert WeightedSum([(0, 1, 2.0), (1, 2, 1.0)]).value(P) == pytest.approx(2 * 3 + 5)
    assert MEBRadius().value(P) == pytest.approx(2.5)
    assert HullPerimeter().value(P) == pytest.approx(12.0)
    assert hull_perimeter(P) == pytest.approx(12.0)


def test_custom_python_cost():
    from frechetcx.costs import CostFunction

    class SquaredLeash(CostFunction):
        name = "sq"

        def oracle(self, points, center):
            d = points[0] - points[1]
            g = np.zeros_like(points)
            g[0], g[1] = 2 * d, -2 * d
            return float(d @ d), g, np.zeros(points.shape[1])

    m = SquaredLeash().minimize([Simplex([[0, 0], [2, 0]]), Simplex([[1, 1]])])
    assert m.value == pytest.approx(1.0, abs=1e-7)


def test_minimization_error_carries_best():
    e = MinimizationError("x", best_value=1.5, gap=0.1)
    assert e.best_value == 1.5 and e.gap == 0.1
