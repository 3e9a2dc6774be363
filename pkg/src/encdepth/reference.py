"""Slow, definition-level oracles used to cross-check the fast drivers."""
from __future__ import annotations

from itertools import combinations, product

from .exact_geom import BOUNDARY, INSIDE, DegeneracyError, Instance, point_in_simplex, validate_instance

# Largest n the partition enumeration is allowed to attempt, per dimension.
ORACLE_GUARD = {1: 16, 2: 12, 3: 8}


class GuardError(ValueError):
    """Instance too large for exhaustive enumeration."""


def oracle_limit(d: int) -> int:
    return ORACLE_GUARD.get(d, 2 * (d + 1))


def encloses(blocks, q) -> bool:
    """True iff every transversal simplex of ``blocks`` contains ``q`` (boundary counts)."""
    blocks = [list(b) for b in blocks]
    if any(not b for b in blocks):
        return False
    for simplex in product(*blocks):
        try:
            where = point_in_simplex(list(simplex), q)
        except DegeneracyError:
            # a flat transversal contains q only if q lies in its hull; treat as failure
            return False
        if where not in (INSIDE, BOUNDARY):
            return False
    return True


def unordered_partitions(items, blocks, size):
    """All ways to split ``items`` into ``blocks`` unlabelled groups of ``size``."""
    items = tuple(items)
    if blocks == 0:
        if not items:
            yield ()
        return
    head, rest = items[0], items[1:]
    for mates in combinations(rest, size - 1):
        block = (head,) + mates
        remaining = tuple(x for x in rest if x not in mates)
        for tail in unordered_partitions(remaining, blocks - 1, size):
            yield (block,) + tail


def enclosing_depth_bruteforce(inst: Instance, guard: bool = True) -> int:
    """Largest k admitting d+1 disjoint k-blocks of S whose transversals all contain q."""
    validate_instance(inst, "general")
    d, n = inst.dimension, inst.n
    if guard and n > oracle_limit(d):
        raise GuardError(f"brute force refuses n={n} in dimension {d} (limit {oracle_limit(d)})")
    pts = inst.points
    q = inst.query
    memo = {}

    def contains(idx):
        key = tuple(sorted(idx))
        hit = memo.get(key)
        if hit is None:
            try:
                hit = point_in_simplex([pts[i] for i in key], q) in (INSIDE, BOUNDARY)
            except DegeneracyError:
                hit = False
            memo[key] = hit
        return hit

    def good(partition):
        return all(contains(t) for t in product(*partition))

    for k in range(n // (d + 1), 0, -1):
        for chosen in combinations(range(n), (d + 1) * k):
            for partition in unordered_partitions(chosen, d + 1, k):
                if good(partition):
                    return k
    return 0


def _ccw_counts(frame, s):
    """Points strictly left/right of the line through the origin and ``s``, and on its two rays."""
    left = right = same = opposite = 0
    sx, sy = s
    for x, y in frame:
        cr = sx * y - sy * x
        if cr > 0:
            left += 1
        elif cr < 0:
            right += 1
        elif sx * x + sy * y > 0:
            same += 1
        else:
            opposite += 1
    return left, right, same, opposite


def tukey_depth_planar(inst: Instance) -> int:
    """Minimum number of points of S in a closed halfplane with q on its boundary.

    The minimum is attained by an open halfplane whose boundary avoids S, so it
    suffices to nudge each line through q and a data point both ways.  Uses
    the radial order when the instance is in general position and falls back
    to a quadratic count otherwise.
    """
    if inst.dimension != 2:
        raise ValueError("planar Tukey depth needs d = 2")
    validate_instance(inst, "general")
    n = inst.n
    if n == 0:
        return 0
    try:
        from .radial import radial_order

        ro = radial_order(inst, validate=False)
        r = ro.right_neighbors()
    except DegeneracyError:
        return _tukey_quadratic(inst)
    best = n
    for rank in range(n):
        left = (r[rank] - rank) % n
        best = min(best, left, n - 1 - left)
    return best


def _tukey_quadratic(inst: Instance) -> int:
    frame = inst.frame
    best = inst.n
    for s in frame:
        left, right, same, opposite = _ccw_counts(frame, s)
        # rotating the line slightly counter-clockwise sends the ray through s to the right
        best = min(best, left + opposite, right + same, left + same, right + opposite)
    return best
