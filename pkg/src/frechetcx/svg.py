"""Static SVG figures for planar inputs and solution motions."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .complex import DagComplex

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _f(x: float) -> str:
    return f"{x:.3f}"


def export_svg(result, complexes, size: int = 480, margin: float = 20.0, leashes: bool = True) -> str:
    """Draw complexes as wireframes, the solution as polylines, leashes at breakpoints.

    ``result`` is a :class:`~frechetcx.io.ResultRecord` (or ``None`` for
    inputs only). Each solution polyline is one ``<path class="solution">``.
    """
    complexes = list(complexes)
    if any(c.dim != 2 for c in complexes):
        raise ValueError("SVG export is planar only (d = 2)")
    polys = [np.asarray(p, dtype=np.float64).reshape(-1, 2) for p in (result.polylines if result else [])]
    polys = [p for p in polys if len(p)]
    allp = np.concatenate([c.points for c in complexes] + polys) if complexes or polys else np.zeros((1, 2))
    lo, hi = allp.min(axis=0), allp.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    s = (size - 2 * margin) / span

    def xy(p):
        # flip y so the figure reads like a plot
        return _f(margin + (p[0] - lo[0]) * s), _f(size - margin - (p[1] - lo[1]) * s)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           '<rect width="100%" height="100%" fill="white"/>']
    for ci, c in enumerate(complexes):
        col = PALETTE[ci % len(PALETTE)]
        out.append(f'<g class="complex" id="{escape(c.name or f"c{ci}")}" stroke="{col}" '
                   f'stroke-opacity="0.5" fill="{col}" fill-opacity="0.08">')
        for sm in c.simplices:
            pts = [xy(c.points[v]) for v in sm]
            if len(sm) == 1:
                out.append(f'<circle cx="{pts[0][0]}" cy="{pts[0][1]}" r="2"/>')
            elif len(sm) == 2:
                arrow = ' stroke-dasharray="4 2"' if isinstance(c, DagComplex) else ""
                out.append(f'<line x1="{pts[0][0]}" y1="{pts[0][1]}" x2="{pts[1][0]}" '
                           f'y2="{pts[1][1]}"{arrow}/>')
            elif len(sm) == 3:
                out.append('<polygon points="' + " ".join(f"{x},{y}" for x, y in pts) + '"/>')
        out.append("</g>")
    for i, p in enumerate(polys):
        col = PALETTE[i % len(PALETTE)]
        d = " ".join(("M" if j == 0 else "L") + " ".join(xy(q)) for j, q in enumerate(p))
        out.append(f'<path class="solution" d="{d}" fill="none" stroke="{col}" stroke-width="2.5"/>')
    if leashes and len(polys) >= 2 and len({len(p) for p in polys}) == 1:
        out.append('<g class="leash" stroke="#555" stroke-width="0.8">')
        for j in range(len(polys[0])):
            for i in range(1, len(polys)):
                (x1, y1), (x2, y2) = xy(polys[0][j]), xy(polys[i][j])
                out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        out.append("</g>")
    if result is not None:
        out.append(f'<text x="{_f(margin)}" y="{_f(margin * 0.8)}" font-size="12">'
                   f'{escape(result.command)} value = {result.value:.6g}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
