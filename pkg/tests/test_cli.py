import json
import subprocess
import sys
from pathlib import Path

import pytest

from frechetcx.cli import main
from frechetcx.complex import Curve
from frechetcx.io import ResultRecord
from frechetcx.svg import export_svg

DATA = Path(__file__).parent / "data"
P, Q = str(DATA / "p.cplx"), str(DATA / "q.cplx")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def record(text):
    d = json.loads(text)
    d.pop("wall_time", None)
    return d


def test_weak_and_dag(capsys):
    code, out, _ = run(capsys, "weak", P, Q)
    assert code == 0 and json.loads(out)["value"] == pytest.approx(1.0)
    code, out, _ = run(capsys, "dag", P, Q, "--seed", 4)
    assert code == 0
    d = json.loads(out)
    assert d["value"] == pytest.approx(1.0) and d["seed"] == 4
    assert d["extra"]["interval"][0] <= d["value"] <= d["extra"]["interval"][1]


def test_deterministic_output(capsys):
    a = record(run(capsys, "dag", P, Q, "--seed", 7)[1])
    b = record(run(capsys, "dag", P, Q, "--seed", 7)[1])
    assert a == b
    a = record(run(capsys, "mean", P, Q)[1])
    b = record(run(capsys, "mean", P, Q)[1])
    assert a == b


def test_kpath_costs(capsys):
    for cost in ("pairwise-distance", "meb-radius", "hull-perimeter"):
        code, out, _ = run(capsys, "kpath", P, Q, "--cost", cost)
        assert code == 0, cost
    code, out, _ = run(capsys, "kpath", P, Q, P, "--cost", "weighted-sum", "--weights", "0:1:2", "1:2:1")
    assert code == 0
    code, _, _ = run(capsys, "kpath", P, Q, "--starts", "p0")
    assert code == 2


def test_mean_and_dogs(capsys):
    code, out, _ = run(capsys, "mean", P, Q)
    mean = json.loads(out)["value"]
    code2, out2, _ = run(capsys, "mean-approx", P, Q, "--eps", 0.25)
    assert code == code2 == 0
    assert mean - 1e-7 <= json.loads(out2)["value"] <= 1.25 * mean + 1e-7
    code, out, _ = run(capsys, "dogs", P, Q, Q)
    assert code == 0


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "nosuchcommand")[0] == 2
    assert run(capsys, "weak", P)[0] == 2
    assert run(capsys, "weak", P, str(tmp_path / "missing.cplx"))[0] == 1
    bad = tmp_path / "bad.cplx"
    bad.write_text("cplx 1\nkind curve\ndim 2\nvertices 1\na 0\n")
    code, _, err = run(capsys, "weak", P, str(bad))
    assert code == 1 and ":5:" in err
    code, _, err = run(capsys, "weak", P, Q, "--s1", "zz")
    assert code == 2


def test_validate(capsys):
    code, out, err = run(capsys, "validate", str(DATA / "broken.cplx"))
    assert code == 1 and "downward closure" in err
    assert json.loads(out)["valid"] is False
    code, out, _ = run(capsys, "validate", P)
    assert code == 0 and json.loads(out)["valid"]


def test_strict_loading(capsys):
    code, _, _ = run(capsys, "weak", str(DATA / "broken.cplx"), Q, "--strict", "--s1", "a", "--t1", "c")
    assert code == 1
    code, _, err = run(capsys, "weak", str(DATA / "broken.cplx"), Q, "--s1", "a", "--t1", "c")
    assert code == 0 and "warning" in err


def test_gen_writes_files(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--n", 20, "--k", 2, "--seed", 3, "--outdir", tmp_path)
    files = json.loads(out)["files"]
    assert code == 0 and len(files) == 2
    assert run(capsys, "weak", *files)[0] == 0


def test_svg_golden(tmp_path, capsys):
    out = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "export-svg", P, Q, "--result", DATA / "weak_pq.json", "--out", out)
    assert code == 0
    assert out.read_text() == (DATA / "golden_weak_pq.svg").read_text()


def test_svg_structure():
    A, B = Curve([(0, 0), (1, 0)]), Curve([(0, 1), (1, 1)])
    empty = ResultRecord("weak", 1.0, [], [])
    assert 'class="solution"' not in export_svg(empty, [A, B])
    rec = ResultRecord("weak", 1.0, [[[0, 0], [1, 0]], [[0, 1], [1, 1]]], [0, 1])
    svg = export_svg(rec, [A, B])
    assert svg.count('class="solution"') == 2 and 'class="leash"' in svg
    with pytest.raises(ValueError):
        export_svg(None, [Curve([(0, 0, 0), (1, 0, 0)])])


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "frechetcx", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip()
