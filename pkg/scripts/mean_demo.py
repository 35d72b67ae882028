"""Exact vs approximate mean of a small c-packed family, drawn to SVG."""

import argparse

from frechetcx.cpacked import aprx_mean
from frechetcx.frechet import mean_curve, weak_frechet
from frechetcx.generators import gen_cpacked_family
from frechetcx.io import ResultRecord
from frechetcx.svg import export_svg


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--eps", type=float, default=0.25)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--svg", default="mean_demo.svg")
    a = ap.parse_args()

    curves = gen_cpacked_family(a.k, a.n, 4.0, seed=a.seed, spread=1.0)
    exact = mean_curve(curves)
    approx = aprx_mean(a.eps, curves)
    print(f"exact  {exact.value:.6f}")
    print(f"approx {approx.value:.6f}  (ratio {approx.value / exact.value:.4f}, step {approx.step}, "
          f"{approx.decider_calls} decider calls)")
    for i, c in enumerate(curves):
        print(f"  weak(mean, curve {i}) = {weak_frechet(exact.mean, c):.6f}")
    rec = ResultRecord("mean", exact.value, [exact.mean.points.tolist()], [])
    with open(a.svg, "w") as fh:
        fh.write(export_svg(rec, curves))
    print(f"wrote {a.svg}")


if __name__ == "__main__":
    main()
