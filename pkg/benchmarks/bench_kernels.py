"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both paths are checked for identical output before timing.  The numba
timings exclude the first (compiling) call.
"""

import argparse
import time

import numpy as np

from padiv import kernels


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_det_grid(repeat, n=400):
    pq = np.array([2.0, 0.0, 1.0, 1.0, 0.0, 0.25])
    th = np.linspace(0, np.pi / 2, n)
    ps = np.linspace(0, np.pi, n, endpoint=False)
    a = kernels._det_grid_numba(pq, th, ps)
    b = kernels._det_grid_numpy(pq, th, ps)
    assert np.allclose(a, b, rtol=1e-13, atol=1e-15)
    return (_time(lambda: kernels._det_grid_numpy(pq, th, ps), repeat),
            _time(lambda: kernels._det_grid_numba(pq, th, ps), repeat))


def bench_directions(repeat, H=12):
    # integer table with i^2 = -1, j^2 = k^2 = -3 and a sphere of units
    C = np.zeros((3, 3, 4), dtype=np.int64)
    C[0, 0, 0] = -1
    C[0, 1, 3], C[1, 0, 3] = 1, -1
    C[0, 2, 2], C[2, 0, 2] = -1, 1
    C[1, 1, 0] = C[2, 2, 0] = -3
    C[1, 2, 1], C[2, 1, 1] = -1, 1
    others = np.array([1, 2, 3])
    a = kernels._parallel_numba(C, others, H)
    b = kernels._parallel_numpy(C, others, H)
    assert np.array_equal(a, b)
    return (_time(lambda: kernels._parallel_numpy(C, others, H), repeat),
            _time(lambda: kernels._parallel_numba(C, others, H), repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed")
    print(f"{'kernel':<24}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}")
    for name, fn in (("det_grid 400x400", bench_det_grid), ("directions H=12", bench_directions)):
        t_np, t_nb = fn(args.repeat)
        print(f"{name:<24}{1e3 * t_np:>12.2f}{1e3 * t_nb:>12.2f}{t_np / t_nb:>10.1f}")


if __name__ == "__main__":
    main()
