import numpy as np
import pytest

from frechetcx import oracles
from frechetcx.complex import Curve
from frechetcx.costs import HullPerimeter, MEBRadius, StarMax, WeightedSum
from frechetcx.frechet import (centers_along, k_complex_paths, mean_curve, min_perimeter_motion,
                               walk_dogs, weak_frechet, weak_frechet_paths)
from frechetcx.geometry import hull_perimeter


def test_identical_curves():
    c = Curve([(0, 0), (1, 2), (3, 1)])
    assert weak_frechet(c, c) == 0


def test_parallel_segments():
    A, B = Curve([(0, 0), (1, 0)]), Curve([(0, 1), (1, 1)])
    assert weak_frechet(A, B) == pytest.approx(1.0)


def test_two_segment_example():
    P, Q = [(0, 0), (2, 0), (2, 2)], [(0, 1), (2, 1)]
    for method in ("lazy", "explicit"):
        v = weak_frechet(Curve(P), Curve(Q), method=method)
        assert v == pytest.approx(oracles.weak_frechet_cells(P, Q), abs=1e-12)
        assert v == pytest.approx(1.0)


def test_weak_below_monotone():
    rng = np.random.default_rng(2)
    for _ in range(10):
        P, Q = rng.random((5, 2)), rng.random((4, 2))
        assert weak_frechet(Curve(P), Curve(Q)) <= oracles.monotone_frechet_curves(P, Q) + 1e-12


def test_path_structure():
    rng = np.random.default_rng(4)
    A, B = Curve(rng.random((5, 2))), Curve(rng.random((6, 2)))
    path = weak_frechet_paths(A, B)
    assert path.cells[0] == (0, 0) and path.cells[-1] == (8, 10)
    for x, y in zip(path.cells, path.cells[1:]):
        assert sum(a != b for a, b in zip(x, y)) == 1
    assert path.value == path.elevations.max()
    assert path.max_sampled_cost(__import__("frechetcx").PairwiseDistance()) <= path.value + 1e-9
    assert path.breakpoints[0] == 0 and path.breakpoints[-1] == 1
    np.testing.assert_allclose(path.positions(0.0), path.witnesses[0])


def test_kpath_pairwise_equals_weak():
    rng = np.random.default_rng(1)
    A, B = Curve(rng.random((4, 2))), Curve(rng.random((5, 2)))
    assert k_complex_paths([A, B]).value == weak_frechet(A, B)


def test_star_identical():
    c = Curve([(0, 0), (1, 1), (2, 0)])
    # interior cells go through the iterative minimizer, accurate to its tolerance
    assert k_complex_paths([c, c, c], cost=StarMax(0)).value == pytest.approx(0, abs=1e-9)
    assert walk_dogs([c, c, c]).value == pytest.approx(0, abs=1e-9)


@pytest.mark.parametrize("cost", [MEBRadius(), StarMax(1), WeightedSum.complete(3), HullPerimeter()],
                         ids=lambda c: c.name)
def test_lazy_equals_explicit(cost):
    rng = np.random.default_rng(7)
    cs = [Curve(rng.random((3, 2))) for _ in range(3)]
    a = k_complex_paths(cs, cost=cost, method="lazy").value
    b = k_complex_paths(cs, cost=cost, method="explicit").value
    assert a == b


def test_k2_dogs_is_weak():
    rng = np.random.default_rng(9)
    A, B = Curve(rng.random((4, 2))), Curve(rng.random((4, 2)))
    assert walk_dogs([A, B]).value == pytest.approx(weak_frechet(A, B), abs=1e-12)


def test_mean_offset_segments():
    A, B = Curve([(0, 0), (1, 0)]), Curve([(0, 2), (1, 2)])
    res = mean_curve([A, B])
    assert res.value == pytest.approx(1.0)
    np.testing.assert_allclose(res.mean.points[0], [0, 1], atol=1e-9)
    np.testing.assert_allclose(res.mean.points[-1], [1, 1], atol=1e-9)
    assert np.allclose(res.mean.points[:, 1], 1.0)


def test_mean_identical():
    c = Curve([(0, 0), (1, 2), (3, 3)])
    res = mean_curve([c, c, c])
    assert res.value == pytest.approx(0, abs=1e-9)
    assert weak_frechet(res.mean, c) == pytest.approx(0, abs=1e-9)


def test_mean_curve_within_value():
    rng = np.random.default_rng(12)
    cs = [Curve(rng.random((4, 2))) for _ in range(3)]
    res = mean_curve(cs)
    for c in cs:
        assert weak_frechet(res.mean, c) <= res.value + 1e-7
    C = centers_along(res.path, 4)
    assert C.shape[1] == 2


def test_perimeter_fixed_points():
    P = [(0, 0), (3, 0), (0, 4)]
    path = min_perimeter_motion([Curve([p]) for p in P])
    assert path.value == pytest.approx(hull_perimeter(P))
    q = [(1, 1)] * 3
    assert min_perimeter_motion([Curve([p]) for p in q]).value == pytest.approx(0, abs=1e-9)
    with pytest.raises(ValueError):
        min_perimeter_motion([Curve([(0, 0)]), Curve([(1, 1)])])


def test_endpoints_required_for_complexes():
    from frechetcx.complex import SimplicialComplex
    c = SimplicialComplex([(0, 0), (1, 0)], [(0,), (1,), (0, 1)])
    with pytest.raises(ValueError):
        weak_frechet_paths(c, c)
    assert weak_frechet_paths(c, c, 0, 1, 0, 1).value == 0


def test_complex_endpoints_any_vertices():
    from frechetcx.complex import SimplicialComplex
    with pytest.warns(UserWarning):
        T = SimplicialComplex([(0, 0), (2, 0), (0, 2)], [(0, 1, 2)], complete=True)
    c = Curve([(3, 0), (3, 3)])
    path = weak_frechet_paths(T, c, 0, 2, 0, 1)
    exp = weak_frechet_paths(T, c, 0, 2, 0, 1, method="explicit")
    assert path.value == exp.value
