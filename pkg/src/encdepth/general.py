"""Enclosing depth in any dimension by enumerating halfspaces through q and d-1 data points."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import kernels
from .exact_geom import (
    DegeneracyError,
    Instance,
    OrientedHyperplane,
    hyperplane_normal,
    validate_instance,
)
from .result import DepthResult, Stats


@dataclass(frozen=True)
class GeneralWitness:
    halfspaces: tuple  # d+1 OrientedHyperplane
    sets: tuple  # d+1 tuples of point indices
    k: int

    def as_dict(self) -> dict:
        return {
            "kind": "general",
            "k": self.k,
            "halfspaces": [
                {"defining": list(h.defining), "side": "+" if h.side > 0 else "-"}
                for h in self.halfspaces
            ],
            "sets": [list(s) for s in self.sets],
        }


def affine_weights(normals):
    """Solve sum_i w_i a_i = 0, sum_i w_i = 1 exactly; None if the system is singular.

    Gaussian elimination over Fractions with full pivoting.
    """
    m = len(normals)
    d = len(normals[0])
    if m != d + 1:
        raise ValueError(f"need {d + 1} normals in R^{d}, got {m}")
    # rows: d coordinate equations, then the normalisation row
    a = [[Fraction(normals[col][row]) for col in range(m)] + [Fraction(0)] for row in range(d)]
    a.append([Fraction(1)] * m + [Fraction(1)])
    perm = list(range(m))
    for k in range(m):
        piv_r, piv_c, best = -1, -1, Fraction(0)
        for r in range(k, m):
            for c in range(k, m):
                v = abs(a[r][c])
                if v > best:
                    piv_r, piv_c, best = r, c, v
        if piv_r < 0:
            return None
        a[k], a[piv_r] = a[piv_r], a[k]
        if piv_c != k:
            for row in a:
                row[k], row[piv_c] = row[piv_c], row[k]
            perm[k], perm[piv_c] = perm[piv_c], perm[k]
        pivot = a[k][k]
        for r in range(k + 1, m):
            f = a[r][k] / pivot
            if f:
                for c in range(k, m + 1):
                    a[r][c] -= f * a[k][c]
    x = [Fraction(0)] * m
    for k in range(m - 1, -1, -1):
        s = a[k][m] - sum(a[k][c] * x[c] for c in range(k + 1, m))
        x[k] = s / a[k][k]
    out = [Fraction(0)] * m
    for k in range(m):
        out[perm[k]] = x[k]
    return tuple(out)


def normals_positively_span(normals) -> bool:
    w = affine_weights(normals)
    return w is not None and all(x > 0 for x in w)


def cone_is_trivial(hs, inst: Instance) -> bool:
    """True iff the closed halfspaces ``hs`` meet only in the query point."""
    hs = list(hs)
    d = inst.dimension
    if len(hs) != d + 1:
        raise ValueError(f"need {d + 1} halfspaces in R^{d}")
    normals = [hyperplane_normal(h, inst) for h in hs]
    for a in range(len(normals)):
        for b in range(a + 1, len(normals)):
            u, v = normals[a], normals[b]
            if all(u[i] * v[j] == u[j] * v[i] for i in range(d) for j in range(i + 1, d)):
                raise DegeneracyError(
                    "two selected hyperplanes coincide", hs[a].defining + hs[b].defining
                )
    return normals_positively_span(normals)


def sets_in_cones(normals, inst: Instance) -> list:
    """Like :func:`count_sets` for halfspaces through q given by inward normals."""
    q = inst.query
    sides = [
        [sum(a * (c - qc) for a, c, qc in zip(nv, p, q)) for p in inst.points]
        for nv in normals
    ]
    m = len(normals)
    return [
        [x for x in range(inst.n) if all(sides[j][x] >= 0 for j in range(m) if j != i)]
        for i in range(m)
    ]


def count_sets(hs, inst: Instance) -> list:
    """For each i, the indices of points lying in every closed halfspace except the i-th."""
    return sets_in_cones([hyperplane_normal(h, inst) for h in hs], inst)


def _support_tables(inst: Instance):
    """Normals and closed-side bitmasks for every hyperplane through q and d-1 points."""
    d, n = inst.dimension, inst.n
    frame = inst.frame
    supports = list(combinations(range(n), d - 1))
    normals, pos, neg = [], [], []
    calls = 0
    for sup in supports:
        normal = hyperplane_normal(OrientedHyperplane(sup, 1), inst)
        p = m = 0
        for x, v in enumerate(frame):
            calls += 1
            s = sum(a * b for a, b in zip(normal, v))
            bit = 1 << x
            if x in sup:
                p |= bit
                m |= bit
            elif s > 0:
                p |= bit
            elif s < 0:
                m |= bit
            else:
                raise DegeneracyError(
                    f"point {x} lies on the hyperplane through q and points {list(sup)}",
                    sup + (x,),
                )
        normals.append(normal)
        pos.append(p)
        neg.append(m)
    return supports, normals, pos, neg, calls


def _scan(args):
    return kernels.best_selection(*args)


def _chunks(T, parts):
    # ranges of the first support index; early indices own more combinations
    parts = max(1, min(parts, T))
    bounds = [round(T * (1 - (1 - t / parts) ** 0.5)) for t in range(parts + 1)]
    bounds[-1] = T
    out = []
    for lo, hi in zip(bounds, bounds[1:]):
        if hi > lo:
            out.append((lo, hi))
    return out


def analytic_depth_1d(inst: Instance) -> DepthResult:
    """On a line, k-enclosing means k points on each side of q."""
    q = inst.query[0]
    below = [i for i, p in enumerate(inst.points) if p[0] < q]
    above = [i for i, p in enumerate(inst.points) if p[0] > q]
    k = min(len(below), len(above))
    witness = None
    if k:
        witness = GeneralWitness((), (tuple(below), tuple(above)), k)
    stats = Stats(predicate_calls=inst.n)
    return DepthResult(k, "analytic", witness, stats)


def enclosing_depth_general(inst: Instance, prune: bool = True, jobs: int = 1) -> DepthResult:
    """Largest min_i |S_i| over all selections of d+1 halfspaces with a trivial cone."""
    start = time.perf_counter()
    validate_instance(inst, "general")
    d, n = inst.dimension, inst.n
    if d == 1:
        res = analytic_depth_1d(inst)
        res.stats.wall_ms = (time.perf_counter() - start) * 1000.0
        return res
    stats = Stats()
    supports, normals, pos, neg, calls = _support_tables(inst)
    stats.predicate_calls += calls
    T = len(supports)
    if T < d + 1:
        stats.wall_ms = (time.perf_counter() - start) * 1000.0
        return DepthResult(0, "general", None, stats)
    tasks = [(normals, pos, neg, d, n, lo, hi, prune) for lo, hi in _chunks(T, jobs)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan, tasks))
    else:
        results = [_scan(tasks[0][:5] + (0, T, prune))]
    best, combo, signs = 0, None, None
    for k, c, s, used in results:
        stats.predicate_calls += used
        stats.subroutine_calls += 1
        if k > best:
            best, combo, signs = k, c, s
    witness = None
    if best > 0:
        hs = tuple(OrientedHyperplane(supports[t], sg) for t, sg in zip(combo, signs))
        sets = count_sets(hs, inst)
        if min(len(s) for s in sets) != best:
            raise AssertionError("kernel count disagrees with exact recount")
        witness = GeneralWitness(hs, tuple(tuple(s) for s in sets), best)
    stats.wall_ms = (time.perf_counter() - start) * 1000.0
    return DepthResult(best, "general", witness, stats)
