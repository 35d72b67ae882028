"""Command-line entry point.

Exit codes: 0 success, 1 invalid input (parse or validation failure),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from pathlib import Path


from . import __version__
from .bench import BenchConfig, run_bench
from .complex import ValidationError
from .costs import REGISTRY, WeightedSum, make_cost
from .cpacked import aprx_mean
from .dagfrechet import comp_fr
from .frechet import k_complex_paths, mean_curve, min_perimeter_motion, walk_dogs
from .generators import gen_cpacked, gen_cpacked_family
from .io import ParseError, ResultRecord, parse, read_complex, write_complex
from .svg import export_svg


class UsageError(Exception):
    pass


def _load(paths, strict):
    out = []
    for p in paths:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            c, cf = read_complex(p, strict=strict)
        for w in caught:
            print(f"warning: {p}: {w.message}", file=sys.stderr)
        out.append((c, cf))
    return out


def _ends(loaded, starts, ends):
    k = len(loaded)
    if starts is not None and len(starts) != k:
        raise UsageError(f"--starts needs {k} names")
    if ends is not None and len(ends) != k:
        raise UsageError(f"--ends needs {k} names")
    s = [starts[i] if starts else cf.start for i, (_, cf) in enumerate(loaded)]
    t = [ends[i] if ends else cf.end for i, (_, cf) in enumerate(loaded)]
    return s, t


def _emit(rec: ResultRecord, args):
    text = rec.to_json()
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    print(text)


def _csv(s):
    return [x for x in s.split(",") if x] if s else None


def cmd_weak(args):
    loaded = _load([args.a, args.b], args.strict)
    s = [args.s1 or loaded[0][1].start, args.s2 or loaded[1][1].start]
    t = [args.t1 or loaded[0][1].end, args.t2 or loaded[1][1].end]
    t0 = time.perf_counter()
    path = k_complex_paths([c for c, _ in loaded], s, t, make_cost("pairwise-distance"),
                           method=args.method)
    return ResultRecord.from_product_path("weak", path, wall_time=time.perf_counter() - t0,
                                          version=__version__)


def _cost_from(args, k):
    if args.cost == "star-max":
        return make_cost("star-max", handler=args.handler)
    if args.cost == "weighted-sum":
        if args.weights:
            edges = []
            for item in args.weights:
                i, j, w = item.split(":")
                edges.append((int(i), int(j), float(w)))
            return WeightedSum(edges)
        return WeightedSum.complete(k)
    return make_cost(args.cost)


def cmd_kpath(args):
    loaded = _load(args.files, args.strict)
    s, t = _ends(loaded, _csv(args.starts), _csv(args.ends))
    cost = _cost_from(args, len(loaded))
    t0 = time.perf_counter()
    path = k_complex_paths([c for c, _ in loaded], s, t, cost, method=args.method)
    rec = ResultRecord.from_product_path("kpath", path, wall_time=time.perf_counter() - t0,
                                         version=__version__)
    rec.extra["cost"] = cost.name
    return rec


def cmd_mean(args):
    loaded = _load(args.files, args.strict)
    t0 = time.perf_counter()
    res = mean_curve([c for c, _ in loaded], resolution=args.resolution, method=args.method)
    rec = ResultRecord.from_product_path("mean", res.path, wall_time=time.perf_counter() - t0,
                                         version=__version__)
    rec.extra["mean"] = res.mean.points.tolist()
    return rec


def cmd_mean_approx(args):
    loaded = _load(args.files, args.strict)
    if not 0 < args.eps <= 1:
        raise UsageError("--eps must lie in (0, 1]")
    t0 = time.perf_counter()
    res = aprx_mean(args.eps, [c for c, _ in loaded], resolution=args.resolution)
    dt = time.perf_counter() - t0
    if res.path is not None:
        rec = ResultRecord.from_product_path("mean-approx", res.path, wall_time=dt, version=__version__)
        rec.value = float(res.value)
    else:
        rec = ResultRecord("mean-approx", float(res.value), [], [], wall_time=dt, version=__version__)
    rec.extra.update(step=res.step, decider_calls=res.decider_calls, eps=args.eps,
                     mean=None if res.mean is None else res.mean.points.tolist())
    return rec


def cmd_dogs(args):
    loaded = _load(args.files, args.strict)
    s, t = _ends(loaded, _csv(args.starts), _csv(args.ends))
    t0 = time.perf_counter()
    path = walk_dogs([c for c, _ in loaded], s, t, handler=args.handler, method=args.method)
    return ResultRecord.from_product_path("dogs", path, wall_time=time.perf_counter() - t0,
                                          version=__version__)


def cmd_perimeter(args):
    loaded = _load(args.files, args.strict)
    s, t = _ends(loaded, _csv(args.starts), _csv(args.ends))
    t0 = time.perf_counter()
    path = min_perimeter_motion([c for c, _ in loaded], s, t, method=args.method)
    return ResultRecord.from_product_path("perimeter", path, wall_time=time.perf_counter() - t0,
                                          version=__version__)


def cmd_dag(args):
    loaded = _load([args.a, args.b], args.strict)
    (c1, f1), (c2, f2) = loaded
    t0 = time.perf_counter()
    res = comp_fr(c1, c2, args.s1 or f1.start, args.t1 or f1.end, args.s2 or f2.start,
                  args.t2 or f2.end, seed=args.seed)
    rec = ResultRecord.from_witness("dag", res.value, res.witness, seed=args.seed,
                                    wall_time=time.perf_counter() - t0, version=__version__)
    rec.extra.update(interval=list(res.interval), interval_events=res.interval_events,
                     decider_calls=res.decider_calls)
    return rec


def cmd_gen(args):
    if args.k == 1:
        curves = [gen_cpacked(args.n, args.c, seed=args.seed)]
    else:
        curves = gen_cpacked_family(args.k, args.n, args.c, seed=args.seed)
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    files = []
    for i, c in enumerate(curves):
        p = out / f"{args.prefix}{i}.cplx"
        write_complex(p, c)
        files.append(str(p))
    print(json.dumps({"files": files, "n": args.n, "c": args.c, "seed": args.seed}))
    return None


def cmd_bench(args):
    cfg = BenchConfig(sizes=tuple(args.sizes), c=args.c, k=args.k, eps=args.eps, seed=args.seed)
    rep = run_bench(cfg, log=lambda r: print(f"n={r.n} explored={r.explored} "
                                             f"time={r.seconds:.3f}s", file=sys.stderr))
    text = json.dumps(rep.as_dict(), indent=1)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    print(text)
    return None


def cmd_validate(args):
    p = Path(args.file)
    cf = parse(p.read_text(encoding="utf-8"), source=str(p))
    try:
        c = cf.build(strict=True)
    except ValueError as e:
        print(f"{p}: {e}", file=sys.stderr)
        return 1
    bad = c.validate()
    for v in bad:
        print(f"{p}: {v}", file=sys.stderr)
    print(json.dumps({"file": str(p), "valid": not bad, "violations": [str(v) for v in bad]}))
    return 1 if bad else 0


def cmd_export_svg(args):
    rec = ResultRecord.from_json(Path(args.result).read_text(encoding="utf-8")) if args.result else None
    loaded = _load(args.files, strict=False)
    svg = export_svg(rec, [c for c, _ in loaded])
    Path(args.out).write_text(svg, encoding="utf-8")
    return None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="frechetcx", description="Fréchet-type distances between complexes")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, files=True):
        if files:
            p.add_argument("files", nargs="+", help="complex files")
        p.add_argument("--strict", action="store_true", help="do not complete missing faces")
        p.add_argument("--out", help="also write the JSON record here")

    def ends(p):
        p.add_argument("--starts", help="comma-separated start vertex names")
        p.add_argument("--ends", help="comma-separated end vertex names")
        p.add_argument("--method", choices=["lazy", "explicit"], default="lazy")

    for name in ("weak", "dag"):
        p = sub.add_parser(name)
        p.add_argument("a")
        p.add_argument("b")
        for flag in ("--s1", "--t1", "--s2", "--t2"):
            p.add_argument(flag)
        common(p, files=False)
        if name == "weak":
            p.add_argument("--method", choices=["lazy", "explicit"], default="lazy")
        else:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("kpath")
    common(p)
    ends(p)
    p.add_argument("--cost", choices=sorted(REGISTRY), default="pairwise-distance")
    p.add_argument("--handler", type=int, default=0)
    p.add_argument("--weights", nargs="*", help="weighted-sum terms i:j:w")

    p = sub.add_parser("mean")
    common(p)
    p.add_argument("--resolution", type=int, default=16)
    p.add_argument("--method", choices=["lazy", "explicit"], default="lazy")

    p = sub.add_parser("mean-approx")
    common(p)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--resolution", type=int, default=16)

    p = sub.add_parser("dogs")
    common(p)
    ends(p)
    p.add_argument("--handler", type=int, default=0)

    p = sub.add_parser("perimeter")
    common(p)
    ends(p)

    p = sub.add_parser("gen")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, default=4.0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--outdir", default=".")
    p.add_argument("--prefix", default="curve")

    p = sub.add_parser("bench")
    p.add_argument("--sizes", type=int, nargs="+", default=[2 ** e for e in range(7, 12)])
    p.add_argument("--c", type=float, default=4.0)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--eps", type=float, default=0.25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("validate")
    p.add_argument("file")

    p = sub.add_parser("export-svg")
    p.add_argument("files", nargs="+")
    p.add_argument("--result", help="JSON record produced by another command")
    p.add_argument("--out", required=True)
    return ap


COMMANDS = {
    "weak": cmd_weak, "kpath": cmd_kpath, "mean": cmd_mean, "mean-approx": cmd_mean_approx,
    "dogs": cmd_dogs, "perimeter": cmd_perimeter, "dag": cmd_dag, "gen": cmd_gen,
    "bench": cmd_bench, "validate": cmd_validate, "export-svg": cmd_export_svg,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        out = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValidationError as e:
        for v in e.violations:
            print(f"error: {v}", file=sys.stderr)
        return 1
    except (KeyError, IndexError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if isinstance(out, ResultRecord):
        _emit(out, args)
        return 0
    return int(out or 0)


if __name__ == "__main__":
    sys.exit(main())
