import numpy as np
import pytest

from frechetcx.complex import (Curve, DagComplex, SimplicialComplex, ValidationError,
                               curve_to_complex, project_path)
from frechetcx.frechet import weak_frechet_paths
from frechetcx.geometry import GeometryError

TRI = np.array([[0, 0], [1, 0], [0, 1]], float)


def rules(c):
    return [v.rule for v in c.validate()]


def test_full_triangle_is_valid():
    c = SimplicialComplex(TRI, [(0,), (1,), (2,), (0, 1), (1, 2), (0, 2), (0, 1, 2)])
    assert c.validate() == []
    assert c.validated() is c


def test_missing_edge_flags_downward_closure():
    c = SimplicialComplex(TRI, [(0,), (1,), (2,), (1, 2), (0, 2), (0, 1, 2)])
    assert rules(c) == ["downward closure"]
    with pytest.raises(ValidationError):
        c.validated()


def test_completion_warns_and_fixes():
    with pytest.warns(UserWarning):
        c = SimplicialComplex(TRI, [(0, 1, 2)], complete=True)
    assert c.validate() == []
    assert len(c) == 7


def test_two_components():
    P = [[0, 0], [1, 0], [5, 5], [6, 5]]
    c = SimplicialComplex(P, [(0,), (1,), (2,), (3,), (0, 1), (2, 3)])
    assert rules(c) == ["connectivity"]


def test_affine_dependence():
    P = [[0, 0], [1, 1], [2, 2]]
    c = SimplicialComplex(P, [(0,), (1,), (2,), (0, 1), (1, 2), (0, 2), (0, 1, 2)])
    assert "affine independence" in rules(c)


def test_bad_references():
    with pytest.raises(GeometryError):
        SimplicialComplex(TRI, [(0, 7)])
    with pytest.raises(GeometryError):
        SimplicialComplex(TRI, [(0, 0)])


@pytest.mark.parametrize("V,count", [([(0, 0), (1, 0)], 3), ([(0, 0)], 1),
                                     ([(0, 0), (1, 0), (2, 0)], 5)])
def test_curve_counts(V, count):
    c = curve_to_complex(V)
    assert len(c.simplices) == count
    assert c.validate() == []


def test_curve_ids_and_duplicates():
    c = Curve([(0, 0), (0, 0), (1, 0), (1, 1)])
    assert c.collapsed == 1 and c.n == 3
    assert [c.vertex_simplex(i) for i in range(3)] == [0, 2, 4]
    assert c.simplices[1] == (0, 1) and c.simplices[3] == (1, 2)
    assert c.adjacent(1) == (0, 2)
    assert c.length() == pytest.approx(2.0)


def test_dag_checks():
    P = np.random.default_rng(0).random((4, 2))
    with pytest.raises(GeometryError):
        DagComplex(P, [(0, 0)])
    with pytest.raises(GeometryError):
        DagComplex(P, [(0, 1), (1, 0)])
    g = DagComplex(P, [(0, 1), (1, 2), (2, 3), (3, 1)])
    assert not g.acyclic and "acyclicity" in rules(g)
    h = DagComplex(P, [(0, 2), (0, 1), (1, 3), (2, 3)])
    assert h.order == [0, 1, 2, 3] and h.validate() == []


def test_vertex_names():
    c = Curve([(0, 0), (1, 0)], vertex_names=["s", "t"])
    assert c.vertex_id("t") == 1 and c.vertex_id(0) == 0
    with pytest.raises(KeyError):
        c.vertex_id("zz")


def test_projection_lockstep():
    c = Curve([(0, 0), (1, 0), (2, 1)])
    path = weak_frechet_paths(c, c)
    assert path.value == 0
    for i in range(2):
        proj = project_path(path, i)
        verts = [s // 2 for s in proj.simplices if s % 2 == 0]
        assert verts[0] == 0 and verts[-1] == 2
        assert sorted(set(verts)) == [0, 1, 2]
        assert proj.check(c) == []


def test_projection_two_segment_example():
    A = Curve([(0, 0), (2, 0), (2, 2)])
    B = Curve([(0, 1), (2, 1)])
    path = weak_frechet_paths(A, B)
    pa, pb = path.projections
    assert pa.check(A) == [] and pb.check(B) == []
    np.testing.assert_allclose(pa.polyline()[0], [0, 0])
    np.testing.assert_allclose(pa.polyline()[-1], [2, 2])
    np.testing.assert_allclose(pb.polyline()[-1], [2, 1])
    with pytest.raises(IndexError):
        project_path(path, 2)


def test_single_vertex_path():
    c = Curve([(1, 1)])
    path = weak_frechet_paths(c, c)
    assert len(path) == 1
    assert project_path(path, 0).simplices == [0]
