"""Explored cells and wall time of the approximate mean pipeline versus n.

    python3 scripts/scaling.py --max-exp 13 --out scaling.json
"""

import argparse
import json
import sys

from frechetcx.bench import BenchConfig, run_bench


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-exp", type=int, default=7)
    ap.add_argument("--max-exp", type=int, default=13)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--c", type=float, default=4.0)
    ap.add_argument("--eps", type=float, default=0.25)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out")
    a = ap.parse_args()
    cfg = BenchConfig(sizes=tuple(2 ** e for e in range(a.min_exp, a.max_exp + 1)), c=a.c, k=a.k,
                      eps=a.eps, seed=a.seed, probes=(0.9, 1.0, 1.1))
    rep = run_bench(cfg, log=lambda r: print(f"{r.n:>7d} {r.explored:>9d} {r.seconds:8.2f}s "
                                             f"value={r.value:.4f}", file=sys.stderr))
    print(f"log-log slope of explored cells: {rep.slope():.3f}", file=sys.stderr)
    if a.out:
        with open(a.out, "w") as fh:
            json.dump(rep.as_dict(), fh, indent=1)


if __name__ == "__main__":
    main()
