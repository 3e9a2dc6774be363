"""Seeded instance generation on integer grids.

Randomness comes from :class:`random.Random` seeded with a string, which is
reproducible across platforms, and only integer draws are used.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb

from .exact_geom import DegeneracyError, Instance, integer_det, validate_instance

SHAPES = ("annulus", "gaussian", "clusters")
MAX_ATTEMPTS = 1000
_FULL_CHECK_BUDGET = 200_000


def parse_shape(shape):
    """``"clusters:4"`` -> ``("clusters", 4)``; plain names get ``None``."""
    if isinstance(shape, tuple):
        return shape
    name, _, arg = shape.partition(":")
    name = name.strip().lower()
    if name == "gaussian-like":
        name = "gaussian"
    if name not in SHAPES:
        raise ValueError(f"unknown shape {shape!r}")
    if name == "clusters":
        if not arg:
            raise ValueError("clusters needs a size, e.g. clusters:4")
        k = int(arg)
        if k < 1:
            raise ValueError("cluster size must be positive")
        return name, k
    return name, None


def in_general_position(inst: Instance) -> bool:
    """No d+1 points of S plus q are affinely dependent (skipped for huge n)."""
    d, n = inst.dimension, inst.n
    if comb(n + 1, d + 1) > _FULL_CHECK_BUDGET:
        return True
    vecs = [tuple([0] * d)] + list(inst.frame)
    for group in combinations(vecs, d + 1):
        base = group[0]
        rows = [[a - b for a, b in zip(v, base)] for v in group[1:]]
        if integer_det(rows) == 0:
            return False
    return True


def _annulus(rng, n, d):
    outer = 250 if n <= 64 else 1_000_000
    inner = outer // 2
    pts = []
    while len(pts) < n:
        v = tuple(rng.randint(-outer, outer) for _ in range(d))
        r2 = sum(c * c for c in v)
        if inner * inner <= r2 <= outer * outer:
            pts.append(v)
    q = tuple(rng.randint(-inner // 4, inner // 4) for _ in range(d))
    return pts, q


def _gaussian(rng, n, d):
    # Irwin-Hall sum of four uniforms, halved to exercise non-integer rationals
    def draw():
        return Fraction(sum(rng.randint(-40, 40) for _ in range(4)), 2)

    pts = [tuple(draw() for _ in range(d)) for _ in range(n)]
    q = tuple(Fraction(rng.randint(-12, 12), 2) for _ in range(d))
    return pts, q


def _cluster_directions(d):
    if d == 2:
        return [(0, 1000), (-866, -500), (866, -500)]
    if d == 1:
        return [(1000,), (-1000,)]
    dirs = []
    for i in range(d):
        e = [0] * d
        e[i] = 200
        dirs.append(tuple(e))
    dirs.append(tuple([-200] * d))
    return dirs


def _clusters(rng, k, d):
    pts = []
    if d == 2:
        for bx, by in _cluster_directions(2):
            # perpendicular jitter keeps each cluster within about 6 degrees of its axis
            for _ in range(k):
                t = rng.randint(-10_000, 10_000)
                s = rng.randint(90, 110)
                pts.append((bx * s - by * t // 1000, by * s + bx * t // 1000))
        return pts, (0, 0)
    spread = 20
    for base in _cluster_directions(d):
        for _ in range(k):
            pts.append(tuple(c + rng.randint(-spread, spread) for c in base))
    return pts, tuple([0] * d)


def _transversals_enclose(inst, k, d):
    if k ** (d + 1) > 20_000:
        return True
    from .reference import encloses

    blocks = [inst.points[c * k:(c + 1) * k] for c in range(d + 1)]
    return encloses(blocks, inst.query)


def generate_instance(n, d, seed, shape="annulus") -> Instance:
    """Deterministic general-position instance for ``(n, d, seed, shape)``."""
    name, k = parse_shape(shape)
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if name == "clusters":
        if n is None:
            n = (d + 1) * k
        if n != (d + 1) * k:
            raise ValueError(f"clusters:{k} in dimension {d} has exactly {(d + 1) * k} points")
    if n < 0:
        raise ValueError("n must be non-negative")
    for attempt in range(MAX_ATTEMPTS):
        rng = random.Random(f"encdepth:{name}:{k}:{n}:{d}:{seed}:{attempt}")
        if name == "annulus":
            pts, q = _annulus(rng, n, d)
        elif name == "gaussian":
            pts, q = _gaussian(rng, n, d)
        else:
            pts, q = _clusters(rng, k, d)
        inst = Instance(tuple(pts), q, d)
        try:
            validate_instance(inst, "planar" if d == 2 else "general")
        except DegeneracyError:
            continue
        if not in_general_position(inst):
            continue
        if name == "clusters" and not _transversals_enclose(inst, k, d):
            continue
        return inst
    raise RuntimeError(f"no general-position instance after {MAX_ATTEMPTS} attempts")


def random_instances(count, n_min, n_max, d, seed, shapes=("annulus", "gaussian")):
    """Seeded stream of ``(label, instance)`` pairs with n drawn from [n_min, n_max]."""
    rng = random.Random(f"encdepth:stream:{seed}:{d}:{n_min}:{n_max}")
    for t in range(count):
        n = rng.randint(n_min, n_max)
        shape = shapes[t % len(shapes)]
        sub = rng.getrandbits(32)
        yield f"{shape}/n={n}/seed={sub}", generate_instance(n, d, sub, shape)

