import numpy as np
import pytest

from padiv import kernels
from padiv.algebra import TdParams, build_td
from padiv.oracles import numeric_det_minimum
from padiv.units import units_bruteforce

from helpers import EXAMPLE2, example1_table

needs_numba = pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")


def test_flag_read_per_call(monkeypatch):
    monkeypatch.setenv("PADIV_DISABLE_NUMBA", "1")
    assert not kernels.use_numba()
    monkeypatch.delenv("PADIV_DISABLE_NUMBA")
    assert kernels.use_numba() == kernels.HAVE_NUMBA


@needs_numba
@pytest.mark.parametrize("seed", range(5))
def test_det_grid_paths_agree(seed):
    rng = np.random.default_rng(seed)
    pq = rng.normal(size=6)
    th = np.linspace(0, np.pi / 2, 37)
    ps = np.linspace(0, np.pi, 23, endpoint=False)
    a = kernels._det_grid_numba(pq, th, ps)
    b = kernels._det_grid_numpy(pq, th, ps)
    assert np.allclose(a, b, rtol=1e-13, atol=1e-14)


@needs_numba
@pytest.mark.parametrize("seed", range(5))
def test_direction_search_paths_agree(seed):
    rng = np.random.default_rng(seed)
    C = rng.integers(-3, 4, size=(3, 3, 4))
    others = np.array([1, 2, 3])
    for H in (1, 3, 5):
        assert np.array_equal(kernels._parallel_numba(C, others, H), kernels._parallel_numpy(C, others, H))


def test_end_to_end_results_independent_of_backend(monkeypatch):
    t = build_td(TdParams(-2, 2))
    monkeypatch.setenv("PADIV_DISABLE_NUMBA", "1")
    slow = (numeric_det_minimum(EXAMPLE2), [tuple(u) for u in units_bruteforce(t, 6).units],
            [tuple(u) for u in units_bruteforce(example1_table(), 6).units])
    monkeypatch.setenv("PADIV_DISABLE_NUMBA", "0")
    fast = (numeric_det_minimum(EXAMPLE2), [tuple(u) for u in units_bruteforce(t, 6).units],
            [tuple(u) for u in units_bruteforce(example1_table(), 6).units])
    assert slow[0] == pytest.approx(fast[0], rel=1e-9, abs=1e-12)
    assert slow[1:] == fast[1:]
