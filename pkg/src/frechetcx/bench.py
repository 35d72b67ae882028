"""Scaling harness for the approximate mean-curve pipeline."""

from __future__ import annotations

import platform
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .cpacked import aprx_mean, decider
from .generators import gen_cpacked_family


@dataclass
class BenchConfig:
    sizes: tuple = tuple(2 ** e for e in range(7, 14))
    c: float = 4.0
    k: int = 2
    eps: float = 0.25
    seed: int = 0
    # probe the decider at these multiples of the approximate optimum
    probes: tuple = (1.0,)


@dataclass
class BenchRow:
    n: int
    explored: int
    seconds: float
    value: float
    decider_calls: int


@dataclass
class BenchReport:
    config: BenchConfig
    rows: list = field(default_factory=list)
    environment: dict = field(default_factory=dict)

    def slope(self) -> float:
        """Least-squares exponent of explored cells against n (log-log)."""
        n = np.array([r.n for r in self.rows], float)
        e = np.array([max(r.explored, 1) for r in self.rows], float)
        return float(np.polyfit(np.log(n), np.log(e), 1)[0])

    def as_dict(self) -> dict:
        return {"config": asdict(self.config), "rows": [asdict(r) for r in self.rows],
                "environment": self.environment, "slope": self.slope()}


def environment() -> dict:
    import numba
    import scipy

    return {"python": platform.python_version(), "numpy": np.__version__,
            "scipy": scipy.__version__, "numba": numba.__version__,
            "machine": platform.machine()}


def run_bench(cfg: BenchConfig = BenchConfig(), log=None) -> BenchReport:
    rep = BenchReport(cfg, environment=environment())
    for i, n in enumerate(cfg.sizes):
        curves = gen_cpacked_family(cfg.k, n, cfg.c, seed=cfg.seed + i)
        t0 = time.perf_counter()
        res = aprx_mean(cfg.eps, curves)
        dt = time.perf_counter() - t0
        explored = max(decider(res.value * p, cfg.eps, curves).explored for p in cfg.probes)
        row = BenchRow(n, int(explored), dt, float(res.value), int(res.decider_calls))
        rep.rows.append(row)
        if log is not None:
            log(row)
    return rep
