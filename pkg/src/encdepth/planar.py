"""Planar enclosing depth in O(n log n): canonical interval triples plus a search over k."""
from __future__ import annotations

import time
from dataclasses import dataclass

from . import kernels
from .exact_geom import Instance, validate_instance
from .radial import Interval, RadialOrder, radial_order
from .result import DepthResult, Stats


@dataclass(frozen=True)
class PlanarWitness:
    intervals: tuple  # three Interval values over the radial order
    k_plus_1: int
    sets: tuple  # original point indices of each interval, counter-clockwise

    def as_dict(self) -> dict:
        return {
            "kind": "planar",
            "size": self.k_plus_1,
            "intervals": [[iv.start, iv.end] for iv in self.intervals],
            "sets": [list(s) for s in self.sets],
        }


def _witness(ro: RadialOrder, i: int, k: int) -> PlanarWitness:
    n = ro.n
    r = ro.right_neighbors()
    j = r[i]
    m = (r[(i + k) % n] + 1) % n
    ivs = (Interval(i, i + k, n), Interval(j - k, j, n), Interval(m, m + k, n))
    sets = tuple(tuple(ro.order[t] for t in iv.ranks()) for iv in ivs)
    return PlanarWitness(ivs, k + 1, sets)


def check_enclosing(ro: RadialOrder, k: int, stats: Stats | None = None):
    """Witness that some canonical triple of (k+1)-intervals encloses q, or None.

    Scans ranks in increasing order and reports the first success.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n = ro.n
    if stats is not None:
        stats.subroutine_calls += 1
    if n < 3 or 3 * (k + 1) > n:
        return None
    r = ro.right_neighbors()
    sx, sy = ro.sorted_frame
    i, calls = kernels.check_enclosing(sx, sy, r, k)
    if stats is not None:
        stats.predicate_calls += calls
    if i < 0:
        return None
    return _witness(ro, i, k)


def depth_from_order(ro: RadialOrder, stats: Stats | None = None):
    """Largest k+1 whose canonical check succeeds, with its witness."""
    stats = stats if stats is not None else Stats()
    n = ro.n
    if n < 3:
        return 0, None
    r = ro.right_neighbors()
    sx, sy = ro.sorted_frame
    mod, sx, sy = kernels.planar_module(sx, sy)

    def probe(k):
        stats.subroutine_calls += 1
        i, calls = mod.check_enclosing(sx, sy, r, k)
        stats.predicate_calls += calls
        return i

    first = probe(0)
    if first < 0:
        return 0, None
    # predicate "k succeeds" is monotone: lo succeeds, hi is known to fail
    lo, lo_rank, hi = 0, first, n // 3
    while hi - lo > 1:
        mid = (lo + hi) // 2
        i = probe(mid)
        if i >= 0:
            lo, lo_rank = mid, i
        else:
            hi = mid
    return lo + 1, _witness(ro, lo_rank, lo)


def enclosing_depth_planar(inst: Instance) -> DepthResult:
    if inst.dimension != 2:
        raise ValueError("the planar algorithm needs a 2-dimensional instance")
    start = time.perf_counter()
    validate_instance(inst, "general")
    stats = Stats()
    if inst.n < 3:
        depth, witness = 0, None
        if inst.n:
            validate_instance(inst, "planar")
    else:
        ro = radial_order(inst, validate=False)
        depth, witness = depth_from_order(ro, stats)
        stats.predicate_calls += ro.predicate_calls
    stats.wall_ms = (time.perf_counter() - start) * 1000.0
    return DepthResult(depth, "planar", witness, stats)
