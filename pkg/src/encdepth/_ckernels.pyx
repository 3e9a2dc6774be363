# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops over int64 coordinates.

Callers guarantee the magnitude bounds checked in ``kernels.py`` so that no
product below can overflow; see ``PLANAR_LIMIT`` and ``GENERAL_LIMIT`` there.
"""
from libc.stdlib cimport malloc, free

ctypedef long long i64
ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long)

NAME = "compiled"


cdef inline int _half(i64 x, i64 y) nogil:
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


cdef inline bint _before(const i64* xs, const i64* ys, const int* halves,
                         Py_ssize_t a, Py_ssize_t b, i64* calls) nogil:
    cdef i64 cr
    if halves[a] != halves[b]:
        return halves[a] < halves[b]
    calls[0] += 1
    cr = xs[a] * ys[b] - ys[a] * xs[b]
    if cr != 0:
        return cr > 0
    return a < b


def radial_sort(const i64[:] xs, const i64[:] ys):
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, width, lo, mid, hi, a, b, out
    cdef i64 calls = 0
    cdef int* hv = <int*> malloc(max(n, 1) * sizeof(int))
    cdef Py_ssize_t* src = <Py_ssize_t*> malloc(max(n, 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* dst = <Py_ssize_t*> malloc(max(n, 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* tmp
    if n == 0:
        free(hv); free(src); free(dst)
        return [], 0
    cdef const i64* xp = &xs[0]
    cdef const i64* yp = &ys[0]
    if hv == NULL or src == NULL or dst == NULL:
        free(hv); free(src); free(dst)
        raise MemoryError()
    try:
        for i in range(n):
            hv[i] = _half(xs[i], ys[i])
            src[i] = i
        width = 1
        with nogil:
            while width < n:
                lo = 0
                while lo < n:
                    mid = min(lo + width, n)
                    hi = min(lo + 2 * width, n)
                    a = lo
                    b = mid
                    out = lo
                    while a < mid and b < hi:
                        if _before(xp, yp, hv, src[b], src[a], &calls):
                            dst[out] = src[b]
                            b += 1
                        else:
                            dst[out] = src[a]
                            a += 1
                        out += 1
                    while a < mid:
                        dst[out] = src[a]
                        a += 1
                        out += 1
                    while b < hi:
                        dst[out] = src[b]
                        b += 1
                        out += 1
                    lo = hi
                tmp = src
                src = dst
                dst = tmp
                width *= 2
        order = [src[i] for i in range(n)]
    finally:
        free(hv); free(src); free(dst)
    return order, calls


def find_tie(const i64[:] sx, const i64[:] sy):
    cdef Py_ssize_t n = sx.shape[0], p
    for p in range(n - 1):
        if (sx[p] * sy[p + 1] - sy[p] * sx[p + 1] == 0
                and sx[p] * sx[p + 1] + sy[p] * sy[p + 1] > 0):
            return p
    return -1


def right_neighbors(const i64[:] sx, const i64[:] sy):
    cdef Py_ssize_t n = sx.shape[0], p, lo, hi, mid, t, nxt
    cdef Py_ssize_t bad = -1
    cdef i64 calls = 0, px, py
    r = [0] * n
    for p in range(n):
        px = sx[p]
        py = sy[p]
        lo = 0
        hi = n - 1
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


cdef inline bint _disjoint(Py_ssize_t a, Py_ssize_t b, Py_ssize_t size, Py_ssize_t n) nogil:
    return (b - a + n) % n >= size and (a - b + n) % n >= size


def check_enclosing(const i64[:] sx, const i64[:] sy, r_in, Py_ssize_t k):
    cdef Py_ssize_t n = sx.shape[0]
    cdef Py_ssize_t size = k + 1
    cdef Py_ssize_t i, i2, j, j1, m, m2, u, v, w
    cdef i64 calls = 0, ab, bc, ca
    cdef Py_ssize_t ia[2]
    cdef Py_ssize_t ib[2]
    cdef Py_ssize_t ic[2]
    cdef bint ok
    cdef Py_ssize_t found = -1
    cdef Py_ssize_t* r = <Py_ssize_t*> malloc(max(n, 1) * sizeof(Py_ssize_t))
    if r == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            r[i] = r_in[i]
        with nogil:
            for i in range(n):
                i2 = (i + k) % n
                j = r[i]
                j1 = (j - k % n + n) % n
                m = (r[i2] + 1) % n
                m2 = (m + k) % n
                if not (_disjoint(i, j1, size, n) and _disjoint(i, m, size, n)
                        and _disjoint(j1, m, size, n)):
                    continue
                ia[0] = i; ia[1] = i2
                ib[0] = j1; ib[1] = j
                ic[0] = m; ic[1] = m2
                ok = True
                for u in range(2):
                    for v in range(2):
                        ab = sx[ia[u]] * sy[ib[v]] - sy[ia[u]] * sx[ib[v]]
                        calls += 1
                        if ab == 0:
                            ok = False
                            break
                        for w in range(2):
                            bc = sx[ib[v]] * sy[ic[w]] - sy[ib[v]] * sx[ic[w]]
                            ca = sx[ic[w]] * sy[ia[u]] - sy[ic[w]] * sx[ia[u]]
                            calls += 2
                            if not ((ab > 0 and bc > 0 and ca > 0)
                                    or (ab < 0 and bc < 0 and ca < 0)):
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
                if ok:
                    found = i
                    break
    finally:
        free(r)
    return found, calls


cdef inline i64 _d2(const i64* a, const i64* b) nogil:
    return a[0] * b[1] - a[1] * b[0]


cdef inline i64 _d3(const i64* a, const i64* b, const i64* c) nogil:
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


cdef bint _next_combo(Py_ssize_t* idx, Py_ssize_t r, Py_ssize_t T, Py_ssize_t lo) nogil:
    """Advance idx[lo:r] to the next combination over the range (idx[lo-1], T)."""
    cdef Py_ssize_t p = r - 1
    while p >= lo and idx[p] == T - r + p:
        p -= 1
    if p < lo:
        return False
    idx[p] += 1
    p += 1
    while p < r:
        idx[p] = idx[p - 1] + 1
        p += 1
    return True


def best_selection(const i64[:, :] normals, const u64[:] pos, const u64[:] neg,
                   int d, Py_ssize_t n, Py_ssize_t t_lo, Py_ssize_t t_hi, bint prune):
    if d != 2 and d != 3:
        raise ValueError("compiled enumeration supports d = 2 and d = 3 only")
    cdef Py_ssize_t T = normals.shape[0]
    cdef Py_ssize_t r = d + 1
    cdef Py_ssize_t first, i, j, s
    cdef Py_ssize_t idx[4]
    cdef Py_ssize_t best_idx[4]
    cdef int sg[4]
    cdef int best_sg[4]
    cdef i64 c[4]
    cdef u64 masks[4]
    cdef u64 acc
    cdef i64 calls = 0
    cdef Py_ssize_t best = 0, kmin, size, cap = n // (d + 1)
    cdef bint zero, more, done = False
    cdef i64 row[4][3]
    for first in range(t_lo, t_hi):
        if done:
            break
        if T - first < r:
            break
        idx[0] = first
        for i in range(1, r):
            idx[i] = first + i
        more = True
        while more:
            for i in range(r):
                for j in range(d):
                    row[i][j] = normals[idx[i], j]
            if d == 2:
                c[0] = _d2(row[1], row[2])
                c[1] = -_d2(row[0], row[2])
                c[2] = _d2(row[0], row[1])
            else:
                c[0] = _d3(row[1], row[2], row[3])
                c[1] = -_d3(row[0], row[2], row[3])
                c[2] = _d3(row[0], row[1], row[3])
                c[3] = -_d3(row[0], row[1], row[2])
            calls += r
            zero = False
            for i in range(r):
                if c[i] == 0:
                    zero = True
            if not zero:
                for i in range(r):
                    sg[i] = 1 if c[i] > 0 else -1
                if sg[0] < 0:
                    for i in range(r):
                        sg[i] = -sg[i]
                for s in range(2):
                    for i in range(r):
                        masks[i] = pos[idx[i]] if sg[i] > 0 else neg[idx[i]]
                    kmin = -1
                    for i in range(r):
                        acc = <u64> -1
                        for j in range(r):
                            if j != i:
                                acc &= masks[j]
                        size = __builtin_popcountll(acc)
                        if kmin < 0 or size < kmin:
                            kmin = size
                        if prune and kmin <= best:
                            break
                    if kmin > best:
                        best = kmin
                        for i in range(r):
                            best_idx[i] = idx[i]
                            best_sg[i] = sg[i]
                        if prune and best >= cap:
                            done = True
                            break
                    for i in range(r):
                        sg[i] = -sg[i]
            if done:
                break
            more = _next_combo(idx, r, T, 1)
    if best == 0:
        return 0, None, None, calls
    return (best, tuple(best_idx[i] for i in range(r)),
            tuple(best_sg[i] for i in range(r)), calls)
