"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``[criterion N] PASS|FAIL ...`` line that stays
visible under output capture.
"""
import json
import math
import re
import time

import pytest

from encdepth import (
    DegeneracyError,
    Instance,
    check_enclosing,
    enclosing_depth_bruteforce,
    enclosing_depth_general,
    enclosing_depth_planar,
    generate_instance,
    kernels,
    radial_order,
    tukey_depth_planar,
)
from encdepth.cli import main
from encdepth.generate import random_instances
from encdepth.io import save_instance
from encdepth.verify import witness_is_sound


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def plane_runs():
    out = []
    for label, inst in random_instances(300, 3, 12, 2, seed=42):
        out.append((label, inst, enclosing_depth_planar(inst), enclosing_depth_general(inst),
                    enclosing_depth_bruteforce(inst)))
    return out


@pytest.fixture(scope="module")
def space_runs():
    out = []
    for label, inst in random_instances(100, 4, 8, 3, seed=42):
        out.append((label, inst, enclosing_depth_general(inst), enclosing_depth_bruteforce(inst)))
    return out


@pytest.fixture(scope="module")
def cluster_runs():
    out = []
    for k in range(1, 21):
        inst = generate_instance(3 * k, 2, k, f"clusters:{k}")
        out.append((k, inst, enclosing_depth_planar(inst)))
    return out


def test_criterion_1_plane_oracle_equivalence(capsys, plane_runs):
    bad = [label for label, _, p, g, o in plane_runs if not p.depth == g.depth == o]
    depths = sorted({o for *_, o in plane_runs})
    report(capsys, 1, len(plane_runs) == 300 and not bad,
           f"{300 - len(bad)}/300 planar = general = oracle, depths seen {depths}, mismatches {bad[:3]}")


def test_criterion_2_space_oracle_equivalence(capsys, space_runs):
    bad = [label for label, _, g, o in space_runs if g.depth != o]
    depths = sorted({o for *_, o in space_runs})
    report(capsys, 2, len(space_runs) == 100 and not bad,
           f"{100 - len(bad)}/100 general = oracle in 3-D, depths seen {depths}, mismatches {bad[:3]}")


def test_criterion_3_cluster_ground_truth(capsys, cluster_runs):
    bad = [(k, r.depth) for k, _, r in cluster_runs if r.depth != k]
    report(capsys, 3, not bad, f"clusters k=1..20 give depth k; wrong: {bad}")


def test_criterion_4_witness_soundness(capsys, plane_runs, space_runs, cluster_runs):
    checked, bad = 0, []
    for label, inst, p, g, _ in plane_runs:
        for r in (p, g):
            checked += 1
            if not witness_is_sound(inst, r):
                bad.append(f"{label}/{r.algorithm}")
    for label, inst, g, _ in space_runs:
        checked += 1
        if not witness_is_sound(inst, g):
            bad.append(f"{label}/general")
    for k, inst, r in cluster_runs:
        checked += 1
        if not witness_is_sound(inst, r):
            bad.append(f"clusters:{k}")
    report(capsys, 4, not bad, f"{checked - len(bad)}/{checked} witnesses pass the full transversal check")


def test_criterion_5_tukey_upper_bound(capsys):
    bad = []
    count = 0
    for label, inst in random_instances(500, 3, 40, 2, seed=5):
        count += 1
        ed = enclosing_depth_planar(inst).depth
        td = tukey_depth_planar(inst)
        if ed > td:
            bad.append((label, ed, td))
    report(capsys, 5, count == 500 and not bad, f"{count - len(bad)}/{count} with planar depth <= Tukey depth")


def test_criterion_6_monotone_subroutine(capsys):
    bad = []
    count = 0
    for label, inst in random_instances(100, 3, 30, 2, seed=6):
        count += 1
        ro = radial_order(inst)
        ok = [check_enclosing(ro, k) is not None for k in range(inst.n // 3)]
        if ok != sorted(ok, reverse=True):
            bad.append(label)
    report(capsys, 6, count == 100 and not bad, f"{count - len(bad)}/{count} success sets are prefixes")


def test_criterion_7_planar_scaling(capsys):
    n = 100_000
    inst = generate_instance(n, 2, 1, "annulus")
    bound = math.ceil(math.log2(n // 3 + 1)) + 1
    lines, ok = [], True
    backends = ["compiled", "python"] if kernels.compiled_available() else ["python"]
    for name in backends:
        fresh = Instance(inst.points, inst.query)
        with kernels.use_backend(name):
            t = time.perf_counter()
            res = enclosing_depth_planar(fresh)
            secs = time.perf_counter() - t
        calls = res.stats.subroutine_calls
        ok = ok and secs < 10 and calls <= bound
        lines.append(f"{name}: {secs:.2f}s, {calls} calls (bound {bound}), depth {res.depth}")
    report(capsys, 7, ok, f"n=100000; " + "; ".join(lines))


DEGENERATE = {
    "duplicate point": ((1, 2), (3, -1), (-2, 1), (1, 2)),
    "query in S": ((1, 2), (0, 0), (3, -1), (-2, 1)),
    "collinear pair": ((1, 2), (2, 4), (3, -1), (-2, 1)),
    "antipodal pair": ((1, 2), (-2, -4), (3, -1), (-2, 1)),
}


def test_criterion_8_degeneracy_contract(capsys, tmp_path):
    bad = []
    for name, pts in DEGENERATE.items():
        inst = Instance(pts, (0, 0))
        for fn in (enclosing_depth_planar, enclosing_depth_general):
            try:
                value = fn(inst)
            except DegeneracyError:
                continue
            bad.append(f"{name}: {fn.__name__} returned {value.depth}")
        path = tmp_path / f"{name.replace(' ', '_')}.json"
        save_instance(inst, path)
        for algo in ("auto", "planar", "general", "oracle"):
            code = main(["depth", "--in", str(path), "--algorithm", algo])
            if code != 2:
                bad.append(f"{name}: {algo} exit {code}")
    capsys.readouterr()
    report(capsys, 8, not bad, f"4 crafted degeneracies raise in both drivers and exit 2 for all 4 algorithms; problems {bad}")


def _strip_timing(text):
    return re.sub(r'"wall_ms": [0-9.eE+-]+', '"wall_ms": _', text)


def test_criterion_9_determinism(capsys, tmp_path):
    problems = []
    cases = [(generate_instance(40, 2, 3, "gaussian"), "auto"),
             (generate_instance(12, 2, 8, "annulus"), "general"),
             (generate_instance(8, 3, 2, "gaussian"), "auto")]
    for t, (inst, algo) in enumerate(cases):
        path = tmp_path / f"case{t}.json"
        save_instance(inst, path)
        outs = []
        for _ in range(2):
            capsys.readouterr()
            main(["depth", "--in", str(path), "--algorithm", algo])
            outs.append(capsys.readouterr().out)
        if _strip_timing(outs[0]) != _strip_timing(outs[1]):
            problems.append(f"case {t} reports differ")
        rep = json.loads(outs[0])
        if rep["depth"] and not rep["witness"]:
            problems.append(f"case {t} has no witness")
    for d, n, seed in [(2, 14, 1), (2, 16, 2), (3, 8, 3)]:
        inst = generate_instance(n, d, seed, "gaussian")
        one = enclosing_depth_general(inst, jobs=1)
        two = enclosing_depth_general(inst, jobs=2)
        if (one.depth, one.witness) != (two.depth, two.witness):
            problems.append(f"parallel differs for d={d} n={n}")
    report(capsys, 9, not problems, f"byte-identical reports and parallel = sequential; problems {problems}")
