"""The compiled core must agree with the pure-Python kernels bit for bit."""
import random
from array import array

import pytest
from hypothesis import given, strategies as st

from encdepth import enclosing_depth_general, enclosing_depth_planar, generate_instance, kernels
from encdepth import _pykernels

needs_compiled = pytest.mark.skipif(not kernels.compiled_available(), reason="extension not built")
seeds = st.integers(0, 10**6)


def planar_arrays(seed, n):
    inst = generate_instance(n, 2, seed, "annulus")
    xs = [v[0] for v in inst.frame]
    ys = [v[1] for v in inst.frame]
    return xs, ys


@needs_compiled
@given(seeds, st.integers(0, 60))
def test_sort_and_neighbours_agree(seed, n):
    from encdepth import _ckernels as ck

    xs, ys = planar_arrays(seed, n)
    po, _ = _pykernels.radial_sort(xs, ys)
    co, _ = ck.radial_sort(array("q", xs), array("q", ys))
    assert list(co) == list(po)
    sx = [xs[i] for i in po]
    sy = [ys[i] for i in po]
    assert ck.find_tie(array("q", sx), array("q", sy)) == _pykernels.find_tie(sx, sy)
    pr, pbad, _ = _pykernels.right_neighbors(sx, sy)
    cr, cbad, _ = ck.right_neighbors(array("q", sx), array("q", sy))
    assert (list(cr), cbad) == (list(pr), pbad)
    for k in range(n // 3):
        got = ck.check_enclosing(array("q", sx), array("q", sy), pr, k)[0]
        assert got == _pykernels.check_enclosing(sx, sy, pr, k)[0]


@needs_compiled
def test_ties_and_antipodes_agree():
    from encdepth import _ckernels as ck

    rng = random.Random(3)
    for _ in range(200):
        pts = {(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(8)} - {(0, 0)}
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        po, _ = _pykernels.radial_sort(xs, ys)
        co, _ = ck.radial_sort(array("q", xs), array("q", ys))
        sx = [xs[i] for i in po]
        sy = [ys[i] for i in po]
        # equal-angle points may come in either order; the tie position must not
        assert ck.find_tie(array("q", sx), array("q", sy)) == _pykernels.find_tie(sx, sy)
        if _pykernels.find_tie(sx, sy) < 0:
            assert list(co) == list(po)
            assert ck.right_neighbors(array("q", sx), array("q", sy))[1] == _pykernels.right_neighbors(sx, sy)[1]


@needs_compiled
@given(seeds, st.integers(3, 40), st.sampled_from(["annulus", "gaussian"]))
def test_planar_driver_agrees(seed, n, shape):
    inst = generate_instance(n, 2, seed, shape)
    with kernels.use_backend("python"):
        a = enclosing_depth_planar(inst)
    with kernels.use_backend("compiled"):
        b = enclosing_depth_planar(inst)
    assert (a.depth, a.witness) == (b.depth, b.witness)
    assert a.stats.subroutine_calls == b.stats.subroutine_calls


@needs_compiled
@given(seeds, st.integers(3, 12), st.sampled_from([2, 3]), st.booleans())
def test_general_driver_agrees(seed, n, d, prune):
    inst = generate_instance(max(n, d + 1), d, seed, "gaussian")
    with kernels.use_backend("python"):
        a = enclosing_depth_general(inst, prune=prune)
    with kernels.use_backend("compiled"):
        b = enclosing_depth_general(inst, prune=prune)
    assert (a.depth, a.witness) == (b.depth, b.witness)


def test_large_coordinates_fall_back():
    xs = [1 << 40, -(1 << 40), 5]
    mod, _, _ = kernels.planar_module(xs, [1, 2, 3])
    assert mod is _pykernels


def test_backend_switching():
    with kernels.use_backend("python"):
        assert kernels.backend_name() == "python"
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")
