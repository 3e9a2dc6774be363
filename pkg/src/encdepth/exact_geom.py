"""Exact rational points, instances and the orientation-based predicates.

All coordinates are :class:`fractions.Fraction`; nothing in this module rounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

Rational = Fraction
Point = tuple  # tuple[Fraction, ...]

INSIDE = "inside"
BOUNDARY = "boundary"
OUTSIDE = "outside"


class DegeneracyError(ValueError):
    """Input violates general position; ``indices`` names the offending points.

    Index ``-1`` stands for the query point.
    """

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


def to_rational(value) -> Fraction:
    """Exact conversion of ints, Fractions and literals like ``"0.25"`` or ``"3/4"``.

    Floats are refused: a binary float is rarely the number the user typed.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(f"float coordinate {value!r} is not exact; pass a string literal")
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty coordinate literal")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as a rational coordinate")


def make_point(coords) -> Point:
    return tuple(to_rational(c) for c in coords)


def _det(rows):
    """Fraction-free Bareiss determinant of a square integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def integer_det(rows) -> int:
    return _det(rows)


def rational_det(rows) -> Fraction:
    """Exact determinant of a square matrix of rationals."""
    rows = [[Fraction(x) for x in r] for r in rows]
    den = math.lcm(*(x.denominator for r in rows for x in r)) if rows else 1
    scaled = [[x.numerator * (den // x.denominator) for x in r] for r in rows]
    return Fraction(_det(scaled), den ** len(rows))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def orientation(*points) -> int:
    """Sign of the homogeneous determinant of d+1 points in R^d."""
    d = len(points[0])
    if len(points) != d + 1:
        raise ValueError(f"orientation in R^{d} needs {d + 1} points, got {len(points)}")
    if any(len(p) != d for p in points):
        raise ValueError("dimension mismatch among points")
    base = points[0]
    rows = [[Fraction(p[c]) - Fraction(base[c]) for c in range(d)] for p in points[1:]]
    return _sign(rational_det(rows))


def point_in_simplex(vertices: Sequence[Point], x: Point) -> str:
    """Classify ``x`` as inside, on the boundary of, or outside a d-simplex."""
    vertices = list(vertices)
    d = len(x)
    if len(vertices) != d + 1 or any(len(v) != d for v in vertices):
        raise ValueError("simplex needs d+1 vertices of the query's dimension")
    ref = orientation(*vertices)
    if ref == 0:
        raise DegeneracyError("degenerate simplex")
    zero = False
    for i in range(d + 1):
        swapped = vertices[:i] + [x] + vertices[i + 1:]
        s = orientation(*swapped)
        if s == -ref:
            return OUTSIDE
        if s == 0:
            zero = True
    return BOUNDARY if zero else INSIDE


@dataclass(frozen=True)
class Instance:
    """A data set ``points`` in R^d together with a query point."""

    points: tuple
    query: tuple
    dimension: int = field(default=0)

    def __post_init__(self):
        points = tuple(make_point(p) for p in self.points)
        query = make_point(self.query)
        d = self.dimension or len(query)
        if d < 1:
            raise ValueError("dimension must be at least 1")
        if len(query) != d:
            raise ValueError(f"query has {len(query)} coordinates, expected {d}")
        for i, p in enumerate(points):
            if len(p) != d:
                raise ValueError(f"point {i} has {len(p)} coordinates, expected {d}")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "query", query)
        object.__setattr__(self, "dimension", d)

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def frame(self) -> list:
        """Integer vectors ``L * (s - q)`` sharing one positive scale ``L``.

        Every sign predicate that only involves q and points of S is
        unchanged by translating q to the origin and scaling positively.
        """
        q = self.query
        scale = math.lcm(1, *(c.denominator for c in q),
                         *{c.denominator for p in self.points for c in p})
        if scale == 1:
            qn = [c.numerator for c in q]
            return [tuple(c.numerator - b for c, b in zip(p, qn)) for p in self.points]
        qn = [c.numerator * (scale // c.denominator) for c in q]
        return [
            tuple(c.numerator * (scale // c.denominator) - b for c, b in zip(p, qn))
            for p in self.points
        ]


@dataclass(frozen=True)
class OrientedHyperplane:
    """Closed halfspace bounded by the hyperplane through q and d-1 points of S.

    ``side`` is +1 for the side where ``det[p_1-q, ..., p_{d-1}-q, x-q] >= 0``
    and -1 for the opposite one.
    """

    defining: tuple
    side: int = 1

    def __post_init__(self):
        object.__setattr__(self, "defining", tuple(sorted(self.defining)))
        if self.side not in (1, -1):
            raise ValueError("side must be +1 or -1")
        if len(set(self.defining)) != len(self.defining):
            raise ValueError("defining indices must be distinct")

    def flipped(self) -> "OrientedHyperplane":
        return OrientedHyperplane(self.defining, -self.side)


def hyperplane_normal(h: OrientedHyperplane, inst: Instance) -> tuple:
    """Inward normal of ``h`` in the instance's integer frame."""
    d = inst.dimension
    if len(h.defining) != d - 1:
        raise ValueError(f"a hyperplane through q in R^{d} needs {d - 1} defining points")
    frame = inst.frame
    rows = [frame[i] for i in h.defining]
    normal = []
    for c in range(d):
        unit = [0] * d
        unit[c] = 1
        normal.append(h.side * _det(rows + [unit]))
    if not any(normal):
        raise DegeneracyError(
            "defining points and q are affinely dependent", h.defining
        )
    return tuple(normal)


def side_of_hyperplane(h: OrientedHyperplane, x: Point, inst: Instance) -> int:
    """+1 strictly inside the closed halfspace ``h``, 0 on its boundary, -1 outside."""
    normal = hyperplane_normal(h, inst)
    q = inst.query
    diff = [Fraction(a) - b for a, b in zip(make_point(x), q)]
    return _sign(sum(a * b for a, b in zip(normal, diff)))


def validate_instance(inst: Instance, mode: str = "general") -> None:
    """Raise :class:`DegeneracyError` if ``inst`` is unusable in ``mode``.

    ``planar`` checks every general-position condition the planar driver
    relies on; ``general`` only looks for duplicates and ``q in S`` and
    leaves the rest to the general driver.
    """
    if mode not in ("planar", "general"):
        raise ValueError(f"unknown validation mode {mode!r}")
    seen = {}
    for i, v in enumerate(inst.frame):
        if not any(v):
            raise DegeneracyError(f"point {i} coincides with the query point", (i, -1))
        j = seen.setdefault(v, i)
        if j != i:
            raise DegeneracyError(f"points {j} and {i} coincide", (j, i))
    if mode == "planar":
        if inst.dimension != 2:
            raise ValueError("planar validation needs a 2-dimensional instance")
        from .radial import radial_order

        radial_order(inst, validate=False).right_neighbors()
