"""Seeded synthetic inputs."""

from __future__ import annotations

import math

import numpy as np

from .complex import Curve, DagComplex


def _headings(n, c, rng):
    if c < 2:
        raise ValueError("c-packed walks need c >= 2 (a segment is already 2-packed)")
    phi = math.acos(2.0 / c)
    return rng.uniform(-phi, phi, size=n - 1), phi


def gen_cpacked(n: int, c: float, seed: int = 0, d: int = 2) -> Curve:
    """Random walk whose headings stay within arccos(2/c) of the x-axis.

    The walk is x-monotone with slope bounded by that angle, so the length
    inside any ball of radius r is at most 2r / cos(phi) = c r.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rng = np.random.default_rng(seed)
    theta, _ = _headings(n, c, rng)
    steps = rng.uniform(0.5, 1.5, size=n - 1)
    V = np.zeros((n, d))
    V[1:, 0] = np.cumsum(steps * np.cos(theta))
    V[1:, 1] = np.cumsum(steps * np.sin(theta))
    return Curve(V, name=f"cpacked-{seed}")


def gen_cpacked_family(k: int, n: int, c: float, seed: int = 0, spread: float = 1.0) -> list[Curve]:
    """k c-packed curves around a shared base walk.

    The base keeps headings within phi/2; each curve adds vertical offsets
    small enough that every segment slope stays below tan(phi), so each
    member is x-monotone and c-packed. Offsets do not accumulate, hence the
    curves stay within a bounded distance of each other for every n.
    ``spread`` in (0, 1] scales the offsets.
    """
    if not 0 < spread <= 1:
        raise ValueError("spread must lie in (0, 1]")
    rng = np.random.default_rng(seed)
    _, phi = _headings(2, c, rng)
    theta = rng.uniform(-phi / 2, phi / 2, size=n - 1)
    steps = rng.uniform(0.5, 1.5, size=n - 1)
    base = np.zeros((n, 2))
    base[1:, 0] = np.cumsum(steps * np.cos(theta))
    base[1:, 1] = np.cumsum(steps * np.sin(theta))
    # smallest x-advance times the slope headroom, split between two endpoints
    dx_min = 0.5 * math.cos(phi / 2)
    amp = spread * 0.5 * dx_min * (math.tan(phi) - math.tan(phi / 2))
    out = []
    for i in range(k):
        V = base.copy()
        V[:, 1] += rng.uniform(-amp, amp, size=n)
        out.append(Curve(V, name=f"cpacked-{seed}-{i}"))
    return out


def random_curve(n: int, d: int = 2, seed=None, scale: float = 1.0) -> Curve:
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return Curve(rng.random((n, d)) * scale)


def random_dag(n: int, extra: int = 0, d: int = 2, seed=None) -> DagComplex:
    """A spine path 0 -> 1 -> ... -> n-1 plus ``extra`` random forward edges."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    P = rng.random((n, d))
    edges = {(i, i + 1) for i in range(n - 1)}
    tries = 0
    while len(edges) < n - 1 + extra and tries < 100 * (extra + 1):
        a, b = sorted(rng.choice(n, 2, replace=False).tolist())
        edges.add((a, b))
        tries += 1
    return DagComplex(P, sorted(edges))
