"""Counter-clockwise order of a planar data set around the query point."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .exact_geom import DegeneracyError, Instance, validate_instance


@dataclass(frozen=True)
class Interval:
    """Ranks ``start, start+1, ..., end`` taken modulo ``modulus``."""

    start: int
    end: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("empty radial order")
        object.__setattr__(self, "start", self.start % self.modulus)
        object.__setattr__(self, "end", self.end % self.modulus)

    @property
    def size(self) -> int:
        return (self.end - self.start) % self.modulus + 1

    def ranks(self) -> list:
        return [(self.start + t) % self.modulus for t in range(self.size)]

    def __contains__(self, rank) -> bool:
        return (rank - self.start) % self.modulus < self.size


def intervals_pairwise_disjoint(*intervals: Interval) -> bool:
    for a in range(len(intervals)):
        for b in range(a + 1, len(intervals)):
            x, y = intervals[a], intervals[b]
            if x.modulus != y.modulus:
                raise ValueError("intervals over different radial orders")
            n = x.modulus
            if (y.start - x.start) % n < x.size or (x.start - y.start) % n < y.size:
                return False
    return True


@dataclass(frozen=True)
class RadialOrder:
    instance: Instance
    order: tuple
    position: tuple
    predicate_calls: int = 0
    _right: list = field(default_factory=list, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.order)

    def point(self, rank):
        return self.instance.points[self.order[rank % self.n]]

    @property
    def sorted_frame(self):
        frame = self.instance.frame
        return [frame[i][0] for i in self.order], [frame[i][1] for i in self.order]

    def rotated(self, shift: int) -> "RadialOrder":
        """Same circular sequence, listed from rank ``shift`` onwards."""
        n = self.n
        order = tuple(self.order[(shift + t) % n] for t in range(n))
        position = [0] * n
        for rank, idx in enumerate(order):
            position[idx] = rank
        return RadialOrder(self.instance, order, tuple(position), self.predicate_calls)

    def right_neighbors(self) -> list:
        """Rank of s^(r) for every rank; computed once, raises on antipodal pairs."""
        if not self._right and self.n:
            sx, sy = self.sorted_frame
            r, bad, calls = kernels.right_neighbors(sx, sy)
            object.__setattr__(self, "predicate_calls", self.predicate_calls + calls)
            if bad >= 0:
                other = (r[bad] + 1) % self.n
                raise DegeneracyError(
                    f"points {self.order[bad]} and {self.order[other]} are antipodal around the query",
                    (self.order[bad], self.order[other]),
                )
            self._right.extend(r)
        return self._right


def radial_order(inst: Instance, validate: bool = True) -> RadialOrder:
    """Sort S counter-clockwise around q, starting from the direction of +x.

    Raises :class:`DegeneracyError` when two points lie on a common ray from q.
    """
    if inst.dimension != 2:
        raise ValueError("radial order needs a planar instance")
    if validate:
        validate_instance(inst, "general")
    frame = inst.frame
    xs = [v[0] for v in frame]
    ys = [v[1] for v in frame]
    order, calls = kernels.radial_sort(xs, ys)
    sx = [xs[i] for i in order]
    sy = [ys[i] for i in order]
    tie = kernels.find_tie(sx, sy)
    if tie >= 0:
        a, b = order[tie], order[tie + 1]
        raise DegeneracyError(f"points {a} and {b} are collinear with the query", (a, b))
    position = [0] * len(order)
    for rank, idx in enumerate(order):
        position[idx] = rank
    return RadialOrder(inst, tuple(order), tuple(position), calls + len(order))


def opposite_neighbors(ro: RadialOrder, rank: int):
    """Ranks of (s^(r), s^(l)) for the point at ``rank``, by one binary search.

    Ranks after s stay strictly left of the directed line q->s until the
    antipodal direction is crossed, so "strictly left" is monotone there.
    """
    n = ro.n
    if n < 2:
        raise ValueError("opposite neighbours need at least two points")
    p = rank % n
    frame = ro.instance.frame
    px, py = frame[ro.order[p]]

    def cross(t):
        x, y = frame[ro.order[t % n]]
        return px * y - py * x

    lo, hi = 0, n - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if cross(p + mid) > 0:
            lo = mid
        else:
            hi = mid - 1
    r, l = (p + lo) % n, (p + lo + 1) % n
    if l != p and cross(l) == 0:
        raise DegeneracyError(
            f"points {ro.order[p]} and {ro.order[l]} are antipodal around the query",
            (ro.order[p], ro.order[l]),
        )
    return r, l
