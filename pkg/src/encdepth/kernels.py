"""Backend selection for the hot loops.

The compiled core is used when it imported and the integer inputs are small
enough for int64 arithmetic to be exact; otherwise the pure-Python kernels
run on unbounded ints.  ``ENCDEPTH_BACKEND=python`` forces the fallback.
"""
import os
from array import array
from contextlib import contextmanager

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

# |coordinate| < PLANAR_LIMIT keeps every 2x2 cross product below 2**61.
PLANAR_LIMIT = 1 << 30
# Bounds on |normal| that keep the d x d cofactors below 2**62.
GENERAL_LIMIT = {2: 1 << 30, 3: 1 << 19}
MAX_MASK_BITS = 64

_forced = os.environ.get("ENCDEPTH_BACKEND", "").strip().lower() or None


def compiled_available() -> bool:
    return _ckernels is not None


def backend_name() -> str:
    if _forced == "python" or _ckernels is None:
        return "python"
    return "compiled"


def set_backend(name):
    """Force ``"python"`` or ``"compiled"``; ``None`` restores automatic choice."""
    global _forced
    if name not in (None, "python", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _ckernels is None:
        raise RuntimeError("compiled kernels are not built")
    _forced = name


@contextmanager
def use_backend(name):
    global _forced
    saved = _forced
    set_backend(name)
    try:
        yield
    finally:
        _forced = saved


def _fits(values, limit):
    return not values or (-limit < min(values) and max(values) < limit)


def planar_module(xs, ys):
    """Kernel module for planar loops over these coordinates, plus converted inputs."""
    if backend_name() == "compiled" and _fits(xs, PLANAR_LIMIT) and _fits(ys, PLANAR_LIMIT):
        return _ckernels, array("q", xs), array("q", ys)
    return _pykernels, list(xs), list(ys)


def radial_sort(xs, ys):
    mod, xs, ys = planar_module(xs, ys)
    return mod.radial_sort(xs, ys)


def find_tie(sx, sy):
    mod, sx, sy = planar_module(sx, sy)
    return mod.find_tie(sx, sy)


def right_neighbors(sx, sy):
    mod, sx, sy = planar_module(sx, sy)
    return mod.right_neighbors(sx, sy)


def check_enclosing(sx, sy, r, k):
    mod, sx, sy = planar_module(sx, sy)
    return mod.check_enclosing(sx, sy, r, k)


def best_selection(normals, pos, neg, d, n, t_lo, t_hi, prune=True):
    """Best (k, support combo, signs, calls) over support sets starting in [t_lo, t_hi)."""
    limit = GENERAL_LIMIT.get(d)
    if (backend_name() == "compiled" and limit is not None and n <= MAX_MASK_BITS
            and all(_fits(v, limit) for v in normals)):
        flat = array("q", [c for v in normals for c in v])
        mat = memoryview(flat).cast("B").cast("q", (len(normals), d)) if normals else None
        if mat is None:
            return 0, None, None, 0
        return _ckernels.best_selection(
            mat, array("Q", pos), array("Q", neg), d, n, t_lo, t_hi, bool(prune)
        )
    return _pykernels.best_selection(normals, pos, neg, d, n, t_lo, t_hi, prune)
