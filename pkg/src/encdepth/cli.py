"""``encdepth`` command line: depth, gen, verify, bench.

Exit codes: 0 success, 1 verification mismatch, 2 degenerate input,
3 unreadable input, 4 instance too large for the brute-force oracle.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import kernels
from .exact_geom import DegeneracyError, validate_instance
from .general import enclosing_depth_general
from .generate import generate_instance, random_instances
from .io import ParseError, ResultReport, dumps_instance, instance_to_dict, load_instance, save_instance
from .planar import enclosing_depth_planar
from .reference import GuardError, enclosing_depth_bruteforce, oracle_limit, tukey_depth_planar
from .result import DepthResult, Stats
from .verify import witness_is_sound

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_DEGENERATE = 2
EXIT_PARSE = 3
EXIT_GUARD = 4


def compute(inst, algorithm="auto", jobs=1, prune=True) -> DepthResult:
    d = inst.dimension
    validate_instance(inst, "planar" if d == 2 else "general")
    if algorithm == "auto":
        algorithm = "planar" if d == 2 else "general"
    if algorithm == "planar":
        if d != 2:
            raise GuardError("the planar algorithm needs d = 2")
        return enclosing_depth_planar(inst)
    if algorithm == "general":
        return enclosing_depth_general(inst, prune=prune, jobs=jobs)
    if algorithm == "oracle":
        start = time.perf_counter()
        depth = enclosing_depth_bruteforce(inst)
        return DepthResult(depth, "oracle", None, Stats(wall_ms=(time.perf_counter() - start) * 1000.0))
    raise ValueError(f"unknown algorithm {algorithm!r}")


def _table(report: ResultReport) -> str:
    lines = [f"depth      {report.depth}", f"algorithm  {report.algorithm}"]
    for key, val in report.stats.items():
        lines.append(f"{key:<10} {val}")
    if report.witness:
        for i, s in enumerate(report.witness.get("sets", []), start=1):
            lines.append(f"S_{i:<8} {' '.join(map(str, s))}")
    return "\n".join(lines)


def cmd_depth(args) -> int:
    inst = load_instance(args.infile, args.format, args.query)
    res = compute(inst, args.algorithm, jobs=args.jobs)
    report = ResultReport.from_result(res, include_witness=not args.no_witness)
    print(_table(report) if args.table else report.to_json())
    return EXIT_OK


def cmd_gen(args) -> int:
    inst = generate_instance(args.n, args.d, args.seed, args.shape)
    if args.out:
        save_instance(inst, args.out)
    else:
        sys.stdout.write(dumps_instance(inst))
    return EXIT_OK


def verify_instances(n_max, d, trials, seed, log=None):
    """Differential run over seeded instances; returns ``(summary, failure or None)``."""
    limit = oracle_limit(d)
    if n_max > limit:
        raise GuardError(f"n_max={n_max} exceeds the oracle limit {limit} for d={d}")
    n_min = d + 1 if d >= 2 else 2
    summary = {"trials": trials, "agree": 0, "d": d, "n_max": n_max, "seed": seed}
    if trials <= 0:
        return summary, None
    if n_max < n_min:
        raise GuardError(f"n_max must be at least {n_min} in dimension {d}")
    for label, inst in random_instances(trials, n_min, n_max, d, seed):
        values = {"oracle": enclosing_depth_bruteforce(inst)}
        results = {"general": enclosing_depth_general(inst)}
        if d == 2:
            results["planar"] = enclosing_depth_planar(inst)
        values.update({k: r.depth for k, r in results.items()})
        problems = []
        if len(set(values.values())) != 1:
            problems.append("depth mismatch")
        for name, r in results.items():
            if not witness_is_sound(inst, r):
                problems.append(f"{name} witness fails the transversal check")
        if d == 2:
            tukey = tukey_depth_planar(inst)
            values["tukey"] = tukey
            if values["planar"] > tukey:
                problems.append("enclosing depth exceeds Tukey depth")
        if problems:
            return summary, {
                "label": label,
                "problems": problems,
                "values": values,
                "instance": instance_to_dict(inst),
            }
        summary["agree"] += 1
        if log:
            log(f"{label}: {values}")
    return summary, None


def cmd_verify(args) -> int:
    log = (lambda s: print(s, file=sys.stderr)) if args.verbose else None
    summary, failure = verify_instances(args.n_max, args.d, args.trials, args.seed, log)
    print(json.dumps({"summary": summary, "failure": failure}, indent=2))
    return EXIT_MISMATCH if failure else EXIT_OK


def bench_rows(sizes, seed, shape="annulus"):
    rows = []
    for n in sizes:
        inst = generate_instance(n, 2, seed, shape)
        res = enclosing_depth_planar(inst)
        bound = math.ceil(math.log2(n // 3 + 1)) + 1
        rows.append({
            "n": n,
            "depth": res.depth,
            "wall_ms": round(res.stats.wall_ms, 3),
            "subroutine_calls": res.stats.subroutine_calls,
            "call_bound": bound,
            "within_bound": res.stats.subroutine_calls <= bound,
            "backend": kernels.backend_name(),
        })
    return rows


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()] if args.sizes else []
    if args.backend:
        kernels.set_backend(args.backend)
    rows = bench_rows(sizes, args.seed)
    if args.table:
        print(f"{'n':>9} {'depth':>7} {'wall_ms':>10} {'calls':>6} {'bound':>6}")
        for r in rows:
            print(f"{r['n']:>9} {r['depth']:>7} {r['wall_ms']:>10.1f} {r['subroutine_calls']:>6} {r['call_bound']:>6}")
    else:
        print(json.dumps(rows, indent=2))
    return EXIT_OK if all(r["within_bound"] for r in rows) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="encdepth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("depth", help="enclosing depth of an instance file")
    d.add_argument("--in", dest="infile", required=True)
    d.add_argument("--format", choices=("csv", "json"))
    d.add_argument("--query", help='query point for CSV input, e.g. "0,0"')
    d.add_argument("--algorithm", default="auto", choices=("auto", "planar", "general", "oracle"))
    d.add_argument("--no-witness", action="store_true")
    d.add_argument("--table", action="store_true", help="human-readable output")
    d.add_argument("--jobs", type=int, default=1, help="worker processes for the general driver")
    d.set_defaults(func=cmd_depth)

    g = sub.add_parser("gen", help="generate a seeded instance")
    g.add_argument("--n", type=int)
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--shape", default="annulus", help="annulus, gaussian or clusters:K")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="differential test against the brute-force oracle")
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--d", type=int, default=2)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="planar scaling benchmark")
    b.add_argument("--sizes", default="1000,10000,100000")
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--backend", choices=("python", "compiled"))
    b.add_argument("--table", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen" and args.n is None and not args.shape.startswith("clusters"):
        parser.error("gen needs --n unless the shape is clusters:K")
    try:
        return args.func(args)
    except DegeneracyError as exc:
        print(f"degenerate input: {exc} (indices {list(exc.indices)})", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ParseError, OSError) as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
