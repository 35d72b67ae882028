"""Distribution of critical events left in the atomic interval after sampling."""

import argparse
import math

import numpy as np

from frechetcx.complex import Curve
from frechetcx.dagfrechet import comp_fr, event_counts


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 80])
    ap.add_argument("--runs", type=int, default=50)
    a = ap.parse_args()
    print(f"{'n':>4} {'events':>8} {'median':>7} {'p95':>6} {'max':>5} {'6 n ln n':>9} {'calls':>6}")
    for n in a.sizes:
        got, calls = [], []
        for seed in range(a.runs):
            rng = np.random.default_rng(seed)
            A, B = Curve(rng.random((n, 2))), Curve(rng.random((n, 2)))
            r = comp_fr(A, B, seed=seed)
            got.append(r.interval_events)
            calls.append(r.decider_calls)
        total = sum(event_counts(A, B).values())
        print(f"{n:>4} {total:>8} {np.median(got):>7.1f} {np.percentile(got, 95):>6.0f} "
              f"{max(got):>5} {6 * n * math.log(n):>9.0f} {np.mean(calls):>6.1f}")


if __name__ == "__main__":
    main()
