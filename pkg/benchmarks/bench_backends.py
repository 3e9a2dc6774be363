"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_backends.py --sizes 1000,10000,100000 --plane 12,20,30 --space 8,10,12
"""
import argparse
import json
import time

from encdepth import Instance, enclosing_depth_general, enclosing_depth_planar, generate_instance, kernels


def timed(fn, inst, repeat):
    best, res = None, None
    for _ in range(repeat):
        fresh = Instance(inst.points, inst.query)  # drop the cached integer frame
        t = time.perf_counter()
        res = fn(fresh)
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return best, res


def run(kind, fn, instances, repeat):
    rows = []
    for label, inst in instances:
        row = {"kind": kind, "case": label}
        depths = set()
        for backend in ("python", "compiled"):
            if backend == "compiled" and not kernels.compiled_available():
                row[backend] = None
                continue
            with kernels.use_backend(backend):
                secs, res = timed(fn, inst, repeat)
            row[backend] = round(secs * 1000, 2)
            depths.add(res.depth)
        row["depth"] = depths.pop() if len(depths) == 1 else sorted(depths)
        if row.get("compiled"):
            row["speedup"] = round(row["python"] / row["compiled"], 1)
        rows.append(row)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="1000,10000,100000", help="planar n ladder")
    ap.add_argument("--plane", default="12,20,30", help="n ladder for the general driver with d=2")
    ap.add_argument("--space", default="8,10,12", help="n ladder for the general driver with d=3")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = run("planar", enclosing_depth_planar,
               [(f"n={n}", generate_instance(n, 2, args.seed, "annulus")) for n in sizes], args.repeat)
    cases = []
    for d, ladder in ((2, args.plane), (3, args.space)):
        for n in (int(s) for s in ladder.split(",") if s):
            cases.append((f"d={d} n={n}", generate_instance(n, d, args.seed, "gaussian")))
    rows += run("general", enclosing_depth_general, cases, args.repeat)

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'kind':<8} {'case':<12} {'depth':>6} {'python ms':>11} {'compiled ms':>12} {'speedup':>8}")
    for r in rows:
        comp = "-" if r["compiled"] is None else f"{r['compiled']:.2f}"
        print(f"{r['kind']:<8} {r['case']:<12} {str(r['depth']):>6} {r['python']:>11.2f} {comp:>12} {r.get('speedup', '-'):>8}")


if __name__ == "__main__":
    main()
