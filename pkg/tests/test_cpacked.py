import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frechetcx import oracles
from frechetcx.complex import Curve
from frechetcx.cpacked import (approx_distances, aprx_mean, decider, length_in_ball,
                               measure_packedness, search_interval, simplify, solver)
from frechetcx.frechet import mean_curve
from frechetcx.generators import gen_cpacked, gen_cpacked_family


def test_simplify_line_example():
    c = Curve([(0, 0), (0.5, 0), (1.1, 0), (2.3, 0)])
    s = simplify(c, 1.0)
    assert s.marked.tolist() == [0, 2, 3]
    np.testing.assert_allclose(s.curve.points[:, 0], [0, 1.1, 2.3])


def test_simplify_keeps_endpoints_and_rejects_bad_mu():
    c = Curve([(0, 0), (0.1, 0), (0.2, 0)])
    assert simplify(c, 5.0).marked.tolist() == [0, 2]
    assert simplify(Curve([(1, 1)]), 1.0).marked.tolist() == [0]
    with pytest.raises(ValueError):
        simplify(c, 0.0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.floats(0.05, 1.0))
def test_simplify_bound(seed, mu):
    P = np.random.default_rng(seed).random((7, 2))
    s = simplify(Curve(P), mu)
    # consecutive kept vertices are at least mu apart, except possibly the last
    gaps = np.linalg.norm(np.diff(s.curve.points[:-1], axis=0), axis=1)
    assert np.all(gaps >= mu)
    assert oracles.monotone_frechet_curves(s.original.points, s.curve.points) <= mu + 1e-9


def _pair():
    return [Curve([(0, 0), (4, 0)]), Curve([(0, 2), (4, 2)])]


def test_decider_tags():
    cs = _pair()  # optimum is 1
    assert decider(0.5, 0.2, cs).tag == "above"
    assert decider(3.0, 0.2, cs).tag == "below"
    out = decider(1.0, 0.2, cs)
    assert out.approx and 1.0 <= out.value <= 1.2
    assert out.path is not None and out.explored > 0
    with pytest.raises(ValueError):
        decider(-1, 0.2, cs)
    with pytest.raises(ValueError):
        decider(1, 0, cs)


def test_approx_distances_sandwich():
    rng = np.random.default_rng(3)
    for n in (2, 5, 30, 120):
        P = rng.random((n, 2)) * 10
        Z = approx_distances(P)
        assert len(Z) <= 4 * n * 10
        assert oracles.check_candidate_sandwich(P, Z.values)
    with pytest.raises(ValueError):
        approx_distances([[0, 0]])
    with pytest.raises(ValueError):
        approx_distances(np.zeros((3, 2)) + [[0, 0], [1, 0], [0, 1]], separation=2)


def test_approx_distances_duplicates():
    P = np.array([[0, 0], [0, 0], [1, 0], [1, 0], [3, 0]], float)
    assert oracles.check_candidate_sandwich(P, approx_distances(P).values)


def test_search_interval_brackets():
    cs = _pair()
    r = search_interval(0.5, 2.0, 0.2, cs)
    assert r.value is not None and 1.0 <= r.value <= 1.2 + 1e-12
    miss = search_interval(2.0, 4.0, 0.2, cs)
    assert miss.value is None
    miss = search_interval(0.1, 0.5, 0.2, cs)
    assert miss.value is None


def test_solver_upper_bound():
    cs = _pair()
    val, explored = solver(0.5, 2.0, cs)
    assert val >= 1.0 - 1e-9 and explored > 0


@pytest.mark.parametrize("eps", [0.5, 0.1])
def test_aprx_mean_guarantee(eps):
    cs = gen_cpacked_family(2, 8, 4.0, seed=1)
    exact = mean_curve(cs).value
    res = aprx_mean(eps, cs)
    assert exact - 1e-7 <= res.value <= (1 + eps) * exact + 1e-7
    assert res.mean is not None and res.step in "CDEG" or res.step == "exact"


def test_aprx_mean_identical_curves():
    c = gen_cpacked(6, 4.0, seed=2)
    res = aprx_mean(0.25, [c, c])
    assert res.value == pytest.approx(0, abs=1e-9) and res.step == "exact"
    with pytest.raises(ValueError):
        aprx_mean(0.25, [c])


def test_length_in_ball():
    P = np.array([[-5, 0], [5, 0]], float)
    assert length_in_ball(P, np.zeros(2), 1.0) == pytest.approx(2.0)
    assert length_in_ball(P, np.array([0, 3.0]), 1.0) == 0.0


def test_generated_curves_are_packed():
    for seed in range(3):
        c = gen_cpacked(200, 4.0, seed=seed)
        assert measure_packedness(c, balls=300, seed=seed) <= 4.0 * 1.2
    for c in gen_cpacked_family(3, 100, 4.0, seed=5):
        assert measure_packedness(c, balls=300) <= 4.0 * 1.2
    line = Curve([(0, 0), (1, 0), (2, 0), (10, 0)])
    assert measure_packedness(line) <= 2.0 + 1e-9


def test_generators_deterministic():
    a = gen_cpacked_family(2, 20, 4.0, seed=9)
    b = gen_cpacked_family(2, 20, 4.0, seed=9)
    for x, y in zip(a, b):
        assert np.array_equal(x.points, y.points)
    assert not np.array_equal(gen_cpacked(20, 4, seed=1).points, gen_cpacked(20, 4, seed=2).points)
    with pytest.raises(ValueError):
        gen_cpacked(10, 1.5)
