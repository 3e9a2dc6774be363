"""Pure-Python hot loops. Inputs are integer coordinates with the query at the origin.

Every function returns the number of orientation evaluations it performed
alongside its result; the compiled core in ``_ckernels`` mirrors these
signatures one to one.
"""
from functools import cmp_to_key
from itertools import combinations

from .exact_geom import integer_det

NAME = "python"


def radial_sort(xs, ys):
    """Counter-clockwise order of vectors, starting at the positive x-axis."""
    n = len(xs)
    calls = 0

    def half(i):
        y = ys[i]
        return 0 if y > 0 or (y == 0 and xs[i] > 0) else 1

    halves = [half(i) for i in range(n)]

    def cmp(a, b):
        nonlocal calls
        ha, hb = halves[a], halves[b]
        if ha != hb:
            return ha - hb
        calls += 1
        cr = xs[a] * ys[b] - ys[a] * xs[b]
        if cr > 0:
            return -1
        if cr < 0:
            return 1
        return a - b

    order = sorted(range(n), key=cmp_to_key(cmp))
    return order, calls


def find_tie(sx, sy):
    """First rank whose successor lies on the same ray from the origin, else -1."""
    n = len(sx)
    for p in range(n - 1):
        ax, ay, bx, by = sx[p], sy[p], sx[p + 1], sy[p + 1]
        if ax * by - ay * bx == 0 and ax * bx + ay * by > 0:
            return p
    return -1


def right_neighbors(sx, sy):
    """Rank of the last point strictly left of each directed line origin->s.

    Returns ``(r, bad, calls)`` where ``bad`` is a rank with an antipodal
    partner, or -1.
    """
    n = len(sx)
    r = [0] * n
    bad = -1
    calls = 0
    for p in range(n):
        px, py = sx[p], sy[p]
        # ranks p+1 .. p+n-1: left of the line, then not
        lo, hi = 0, n - 1
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            t = (p + mid) % n
            calls += 1
            if px * sy[t] - py * sx[t] > 0:
                lo = mid
            else:
                hi = mid - 1
        r[p] = (p + lo) % n
        nxt = (p + lo + 1) % n
        if bad < 0 and nxt != p:
            calls += 1
            if px * sy[nxt] - py * sx[nxt] == 0:
                bad = p
    return r, bad, calls


def _disjoint(a, b, size, n):
    return (b - a) % n >= size and (a - b) % n >= size


def check_enclosing(sx, sy, r, k):
    """Smallest rank whose canonical three intervals of size k+1 enclose the origin."""
    n = len(sx)
    size = k + 1
    calls = 0
    for i in range(n):
        i2 = (i + k) % n
        j = r[i]
        j1 = (j - k) % n
        m = (r[i2] + 1) % n
        m2 = (m + k) % n
        if not (_disjoint(i, j1, size, n) and _disjoint(i, m, size, n)
                and _disjoint(j1, m, size, n)):
            continue
        A = ((sx[i], sy[i]), (sx[i2], sy[i2]))
        B = ((sx[j1], sy[j1]), (sx[j], sy[j]))
        C = ((sx[m], sy[m]), (sx[m2], sy[m2]))
        ok = True
        for ax, ay in A:
            for bx, by in B:
                ab = ax * by - ay * bx
                calls += 1
                if ab == 0:
                    ok = False
                    break
                for cx, cy in C:
                    bc = bx * cy - by * cx
                    ca = cx * ay - cy * ax
                    calls += 2
                    if not ((ab > 0 and bc > 0 and ca > 0) or (ab < 0 and bc < 0 and ca < 0)):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return i, calls
    return -1, calls


def _det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def _kernel_vector(cols, det):
    """Signed cofactors c with sum_i c_i * cols[i] = 0."""
    d1 = len(cols)
    out = []
    for i in range(d1):
        minor = det(*(cols[:i] + cols[i + 1:]))
        out.append(-minor if i & 1 else minor)
    return out


def _detn(*cols):
    return integer_det(cols)


def best_selection(normals, pos, neg, d, n, t_lo, t_hi, prune):
    """Scan (d+1)-sets of hyperplane supports whose first index is in [t_lo, t_hi).

    For each support set only the two sign patterns that make the inward
    normals positively dependent can bound a trivial cone; both are tried,
    the one giving the first hyperplane a '+' side first.  Returns
    ``(best_k, combo, signs, calls)`` with ``best_k`` 0 when nothing beats 0.
    """
    det = {2: _det2, 3: _det3}.get(d, _detn)
    T = len(normals)
    cap = n // (d + 1)
    best = 0
    best_combo = None
    best_signs = None
    calls = 0
    for first in range(t_lo, t_hi):
        for rest in combinations(range(first + 1, T), d):
            combo = (first,) + rest
            cols = [normals[t] for t in combo]
            c = _kernel_vector(cols, det)
            calls += d + 1
            if 0 in c:
                continue
            base = [1 if ci > 0 else -1 for ci in c]
            if base[0] < 0:
                base = [-s for s in base]
            for signs in (base, [-s for s in base]):
                masks = [pos[t] if s > 0 else neg[t] for t, s in zip(combo, signs)]
                kmin = None
                for i in range(d + 1):
                    acc = -1
                    for j in range(d + 1):
                        if j != i:
                            acc &= masks[j]
                    size = acc.bit_count()
                    if kmin is None or size < kmin:
                        kmin = size
                    if prune and kmin <= best:
                        break
                if kmin > best:
                    best = kmin
                    best_combo = combo
                    best_signs = tuple(signs)
                    if prune and best >= cap:
                        return best, best_combo, best_signs, calls
    return best, best_combo, best_signs, calls
