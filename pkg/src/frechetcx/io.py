"""Line-oriented text format for complexes, and JSON result records.

::

    cplx 1
    kind curve            # curve | complex | dag
    dim 2
    name river            # optional
    vertices 3
    a 0.0 0.0
    b 1.0 0.0
    c 1.0 1.0
    simplices 1           # complex only: one simplex per line, by vertex name
    a b
    edges 2               # dag only: directed edges tail head
    a b
    b c
    start a               # optional
    end c                 # optional

Blank lines and ``#`` comments are ignored. Coordinates are written with
``repr`` so a write/read cycle is bit-exact.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .complex import Curve, DagComplex, SimplicialComplex

FORMAT_VERSION = 1
KINDS = ("curve", "complex", "dag")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0, source: str = "<text>"):
        self.message, self.line, self.col, self.source = message, line, col, source
        super().__init__(f"{source}:{line}:{col}: {message}")


@dataclass
class ComplexFile:
    kind: str
    dim: int
    names: list
    coords: np.ndarray
    simplices: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    name: str = ""
    start: str | None = None
    end: str | None = None

    def build(self, strict: bool = False, complete: bool = True) -> SimplicialComplex:
        """Instantiate the complex. ``strict`` refuses to fill in missing faces."""
        if self.kind == "curve":
            c = Curve(self.coords, name=self.name, vertex_names=self.names)
            if c.collapsed:
                raise ParseError("curve repeats a vertex consecutively", source=self.name)
            return c
        if self.kind == "dag":
            return DagComplex(self.coords, self.edges, name=self.name, vertex_names=self.names)
        simps = [(i,) for i in range(len(self.names))] + list(self.simplices)
        fill = complete and not strict
        return SimplicialComplex(self.coords, simps, name=self.name, complete=fill,
                                 vertex_names=self.names)


def _tokens(text: str):
    """Yield (line_no, [(col, token), ...]) for significant lines."""
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks, col, i = [], 0, 0
        while i < len(body):
            if body[i].isspace():
                i += 1
                continue
            j = i
            while j < len(body) and not body[j].isspace():
                j += 1
            toks.append((i + 1, body[i:j]))
            i = j
        if toks:
            yield no, toks


def _count(toks, no, src, key):
    if len(toks) != 2 or toks[0][1] != key:
        raise ParseError(f"expected '{key} <count>'", no, toks[0][0], src)
    try:
        n = int(toks[1][1])
    except ValueError:
        raise ParseError(f"bad count {toks[1][1]!r}", no, toks[1][0], src) from None
    if n < 0:
        raise ParseError("negative count", no, toks[1][0], src)
    return n


def parse(text: str, source: str = "<text>") -> ComplexFile:
    lines = list(_tokens(text))
    it = iter(lines)

    def take(what):
        try:
            return next(it)
        except StopIteration:
            last = lines[-1][0] if lines else 0
            raise ParseError(f"unexpected end of file, expected {what}", last + 1, 1, source) from None

    no, toks = take("header")
    if [t for _, t in toks] != ["cplx", str(FORMAT_VERSION)]:
        raise ParseError(f"expected header 'cplx {FORMAT_VERSION}'", no, toks[0][0], source)
    no, toks = take("kind")
    if len(toks) != 2 or toks[0][1] != "kind" or toks[1][1] not in KINDS:
        raise ParseError(f"expected 'kind' one of {KINDS}", no, toks[0][0], source)
    kind = toks[1][1]
    no, toks = take("dim")
    dim = _count(toks, no, source, "dim")
    if dim < 1:
        raise ParseError("dimension must be positive", no, toks[1][0], source)
    name = ""
    no, toks = take("vertices")
    if toks[0][1] == "name":
        if len(toks) != 2:
            raise ParseError("name takes exactly one token", no, toks[0][0], source)
        name = toks[1][1]
        no, toks = take("vertices")
    nv = _count(toks, no, source, "vertices")
    names, coords, where = [], [], {}
    for _ in range(nv):
        no, toks = take("vertex line")
        if len(toks) != dim + 1:
            raise ParseError(f"vertex needs a name and {dim} coordinates", no, toks[0][0], source)
        nm = toks[0][1]
        if nm in where:
            raise ParseError(f"duplicate vertex name {nm!r}", no, toks[0][0], source)
        row = []
        for col, t in toks[1:]:
            try:
                x = float(t)
            except ValueError:
                raise ParseError(f"bad coordinate {t!r}", no, col, source) from None
            if not np.isfinite(x):
                raise ParseError("non-finite coordinate", no, col, source)
            row.append(x)
        where[nm] = len(names)
        names.append(nm)
        coords.append(row)
    if nv == 0:
        raise ParseError("no vertices", no, 1, source)

    def ref(col, t, no):
        if t not in where:
            raise ParseError(f"unknown vertex {t!r}", no, col, source)
        return where[t]

    simplices, edges = [], []
    start = end = None
    rest = list(it)
    k = 0
    if kind == "complex":
        if k >= len(rest):
            raise ParseError("expected 'simplices <count>'", no + 1, 1, source)
        no, toks = rest[k]
        k += 1
        for _ in range(_count(toks, no, source, "simplices")):
            if k >= len(rest):
                raise ParseError("unexpected end of simplex table", no + 1, 1, source)
            no, toks = rest[k]
            k += 1
            ids = [ref(c, t, no) for c, t in toks]
            if len(set(ids)) != len(ids):
                raise ParseError("simplex repeats a vertex", no, toks[0][0], source)
            simplices.append(tuple(ids))
    elif kind == "dag":
        if k >= len(rest):
            raise ParseError("expected 'edges <count>'", no + 1, 1, source)
        no, toks = rest[k]
        k += 1
        for _ in range(_count(toks, no, source, "edges")):
            if k >= len(rest):
                raise ParseError("unexpected end of edge table", no + 1, 1, source)
            no, toks = rest[k]
            k += 1
            if len(toks) != 2:
                raise ParseError("edge needs exactly two vertices", no, toks[0][0], source)
            a, b = (ref(c, t, no) for c, t in toks)
            if a == b:
                raise ParseError("self-loop", no, toks[1][0], source)
            edges.append((a, b))
    for no, toks in rest[k:]:
        key = toks[0][1]
        if key in ("start", "end") and len(toks) == 2:
            ref(toks[1][0], toks[1][1], no)
            if key == "start":
                if start is not None:
                    raise ParseError("start given twice", no, 1, source)
                start = toks[1][1]
            else:
                if end is not None:
                    raise ParseError("end given twice", no, 1, source)
                end = toks[1][1]
        else:
            raise ParseError(f"unexpected line starting with {key!r}", no, toks[0][0], source)
    return ComplexFile(kind, dim, names, np.array(coords, dtype=np.float64).reshape(nv, dim),
                       simplices, edges, name, start, end)


def _fmt(x: float) -> str:
    return repr(float(x))


def dumps(cf: ComplexFile) -> str:
    """Canonical text form."""
    out = [f"cplx {FORMAT_VERSION}", f"kind {cf.kind}", f"dim {cf.dim}"]
    if cf.name:
        out.append(f"name {cf.name}")
    out.append(f"vertices {len(cf.names)}")
    for nm, row in zip(cf.names, cf.coords):
        out.append(" ".join([nm] + [_fmt(x) for x in row]))
    if cf.kind == "complex":
        simps = sorted({tuple(sorted(s)) for s in cf.simplices if len(s) > 1}, key=lambda t: (len(t), t))
        out.append(f"simplices {len(simps)}")
        out.extend(" ".join(cf.names[i] for i in s) for s in simps)
    elif cf.kind == "dag":
        out.append(f"edges {len(cf.edges)}")
        out.extend(f"{cf.names[a]} {cf.names[b]}" for a, b in cf.edges)
    if cf.start is not None:
        out.append(f"start {cf.start}")
    if cf.end is not None:
        out.append(f"end {cf.end}")
    return "\n".join(out) + "\n"


def to_file(c: SimplicialComplex, start=None, end=None) -> ComplexFile:
    names = list(c.vertex_names)
    if isinstance(c, Curve):
        kind, simps, edges = "curve", [], []
    elif isinstance(c, DagComplex):
        kind, simps, edges = "dag", [], list(c.edges)
    else:
        kind, simps, edges = "complex", [s for s in c.simplices if len(s) > 1], []
    cf = ComplexFile(kind, c.dim, names, np.array(c.points), simps, edges, c.name or "")
    cf.start = None if start is None else names[c.vertex_id(start)]
    cf.end = None if end is None else names[c.vertex_id(end)]
    return cf


def read_complex(path, strict: bool = False, validate: bool = True):
    """Read a complex file; returns ``(complex, ComplexFile)``.

    Missing faces are completed with a warning unless ``strict``; in strict
    mode and with ``validate`` the complex must pass every validation rule.
    """
    path = Path(path)
    cf = parse(path.read_text(encoding="utf-8"), source=str(path))
    if not cf.name:
        cf.name = path.stem
    try:
        c = cf.build(strict=strict)
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(str(e), 0, 0, str(path)) from None
    if strict and validate:
        c.validated()
    return c, cf


def write_complex(path, c: SimplicialComplex, start=None, end=None) -> None:
    Path(path).write_text(dumps(to_file(c, start, end)), encoding="utf-8")


# ---------------------------------------------------------------------------
# results


@dataclass
class ResultRecord:
    command: str
    value: float
    polylines: list
    params: list
    explored: int = 0
    wall_time: float = 0.0
    seed: int | None = None
    version: str = ""
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_product_path(cls, command, path, **kw):
        W = np.array(path.witnesses, dtype=np.float64)
        polys = [W[:, i, :].tolist() for i in range(W.shape[1])] if len(W) else []
        return cls(command, float(path.value), polys, np.asarray(path.breakpoints).tolist(),
                   explored=int(path.explored), **kw)

    @classmethod
    def from_witness(cls, command, value, witness, **kw):
        p1, p2 = witness.points1, witness.points2
        t = np.linspace(0.0, 1.0, len(p1)).tolist()
        return cls(command, float(value), [p1.tolist(), p2.tolist()], t, **kw)

    def max_cost(self, cost) -> float:
        """Largest cost over the recorded synchronized positions."""
        W = np.array(self.polylines, dtype=np.float64)  # (k, steps, d)
        if W.size == 0:
            return float("nan")
        return max(cost.value(W[:, j, :]) for j in range(W.shape[1]))

    def to_json(self, deterministic: bool = False) -> str:
        d = asdict(self)
        if deterministic:
            d.pop("wall_time")
        return json.dumps(d, sort_keys=True, indent=1, allow_nan=True)

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        d = json.loads(text)
        d.setdefault("wall_time", 0.0)
        return cls(**d)


def warn_completion(action):
    """Run ``action`` and return (result, list of warning messages)."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        res = action()
    return res, [str(w.message) for w in caught]
