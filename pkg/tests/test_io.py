import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frechetcx.complex import Curve, DagComplex, SimplicialComplex, ValidationError
from frechetcx.costs import PairwiseDistance
from frechetcx.frechet import weak_frechet_paths
from frechetcx.io import ParseError, ResultRecord, dumps, parse, read_complex, to_file, write_complex

COMPLEX = """\
cplx 1
kind complex
dim 2
name tri   # a filled triangle with a tail
vertices 4
a 0.0 0.0
b 1.0 0.0
c 0.0 1.0
d 2.0 2.0
simplices 2
a b c
c d
start a
end d
"""

DAG = """\
cplx 1
kind dag
dim 2
vertices 3
p 0 0
q 1 1
r 2 0
edges 2
p q
q r
start p
end r
"""


def test_parse_complex():
    cf = parse(COMPLEX)
    assert cf.kind == "complex" and cf.name == "tri" and cf.start == "a" and cf.end == "d"
    with pytest.warns(UserWarning):
        c = cf.build()
    assert c.validate() == []
    assert (0, 1, 2) in c.simplices and (2, 3) in c.simplices


def test_parse_dag():
    cf = parse(DAG)
    g = cf.build()
    assert isinstance(g, DagComplex) and g.edges == [(0, 1), (1, 2)]


def test_strict_refuses_completion(tmp_path):
    p = tmp_path / "t.cplx"
    p.write_text(COMPLEX)
    with pytest.raises(ValidationError):
        read_complex(p, strict=True)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.floats(-1e6, 1e6, allow_nan=False), st.floats(-1e6, 1e6, allow_nan=False)),
                min_size=2, max_size=8, unique=True))
def test_curve_roundtrip_bit_exact(pts):
    P = np.array(pts)
    if np.any(np.all(P[1:] == P[:-1], axis=1)):
        return
    c = Curve(P, name="x")
    text = dumps(to_file(c, 0, len(P) - 1))
    back = parse(text).build()
    assert np.array_equal(back.points, c.points)
    assert dumps(parse(text)) == text


def test_file_roundtrip(tmp_path):
    with pytest.warns(UserWarning):
        c = parse(COMPLEX).build()
    write_complex(tmp_path / "c.cplx", c, "a", "d")
    c2, cf = read_complex(tmp_path / "c.cplx", strict=True)
    assert sorted(c2.simplices) == sorted(c.simplices) and cf.start == "a"
    g = parse(DAG).build()
    write_complex(tmp_path / "g.cplx", g)
    g2, _ = read_complex(tmp_path / "g.cplx")
    assert g2.edges == g.edges and np.array_equal(g2.points, g.points)


def _significant(text):
    return [i for i, ln in enumerate(text.splitlines()) if ln.split("#")[0].strip()]


def _corpus():
    """(label, text, expected line or None) for deliberately broken inputs."""
    out = []
    for base_name, base in (("complex", COMPLEX), ("dag", DAG)):
        lines = base.splitlines()
        sig = _significant(base)
        for i in sig:
            mod = list(lines)
            mod[i] = mod[i].split("#")[0] + " junk"
            out.append((f"{base_name}-extra-{i + 1}", "\n".join(mod), i + 1))
        for i in sig:
            toks = lines[i].split()
            if len(toks) == 3 and toks[0] in "abcdpqr":
                for bad in ("nan", "1e999", "1.2.3"):
                    mod = list(lines)
                    mod[i] = f"{toks[0]} {bad} {toks[2]}"
                    out.append((f"{base_name}-coord-{i + 1}-{bad}", "\n".join(mod), i + 1))
        table_end = sig.index(next(i for i in sig if lines[i].startswith("start")))
        for k in sig[:table_end]:
            out.append((f"{base_name}-cut-{k + 1}", "\n".join(lines[:k]), None))
    out.append(("empty", "", None))
    out.append(("version", COMPLEX.replace("cplx 1", "cplx 2"), 1))
    out.append(("kind", COMPLEX.replace("kind complex", "kind blob"), 2))
    out.append(("neg-count", DAG.replace("edges 2", "edges -2"), 8))
    out.append(("self-loop", DAG.replace("q r", "q q"), 10))
    out.append(("dup-vertex", DAG.replace("r 2 0", "q 2 0"), 7))
    out.append(("dup-start", DAG + "start q\n", 13))
    out.append(("simplex-repeat", COMPLEX.replace("c d\n", "c c\n"), 12))
    return out


CORPUS = _corpus()


def test_corpus_is_large():
    assert len(CORPUS) >= 50


@pytest.mark.parametrize("label,text,line", CORPUS, ids=[c[0] for c in CORPUS])
def test_corrupted_rejected(label, text, line):
    with pytest.raises(ParseError) as ei:
        parse(text, source=label)
    e = ei.value
    assert e.line >= 1 and e.col >= 1 and e.source == label
    if line is not None:
        assert e.line == line
    assert f"{label}:{e.line}:{e.col}" in str(e)


def test_curve_with_repeated_vertex_rejected(tmp_path):
    p = tmp_path / "r.cplx"
    p.write_text("cplx 1\nkind curve\ndim 1\nvertices 2\na 0\nb 0\n")
    with pytest.raises(ParseError):
        read_complex(p)


def test_result_record_roundtrip():
    A, B = Curve([(0, 0), (2, 0), (2, 2)]), Curve([(0, 1), (2, 1)])
    path = weak_frechet_paths(A, B)
    rec = ResultRecord.from_product_path("weak", path, seed=3, wall_time=0.5, version="x")
    back = ResultRecord.from_json(rec.to_json())
    assert back == rec
    assert back.max_cost(PairwiseDistance()) <= rec.value + 1e-9
    assert len(rec.polylines) == 2 and len(rec.polylines[0]) == len(rec.params)
    d = json.loads(rec.to_json(deterministic=True))
    assert "wall_time" not in d
    assert ResultRecord.from_json(json.dumps(d)).wall_time == 0.0


def test_complex_to_file_kinds():
    S = SimplicialComplex([(0, 0), (1, 0)], [(0,), (1,), (0, 1)])
    assert to_file(S).kind == "complex"
    assert to_file(Curve([(0, 0), (1, 0)])).kind == "curve"
