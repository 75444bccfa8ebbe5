"""Benchmark the fiber-interval kernel: numba jit vs pure numpy.

Run:  python3 benchmarks/bench_kernels.py
"""
import time

import numpy as np

from circlesweep import kernels


def time_fn(fn, *args, repeats=5):
    fn(*args)  # warmup (jit compile / cache load)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def setup(n_ts, n_circles, seed=0):
    rng = np.random.default_rng(seed)
    cx = rng.uniform(-1, 1, n_circles)
    cy = rng.uniform(-1, 1, n_circles)
    r = rng.uniform(0.1, 1.5, n_circles)
    sign = rng.choice([-1.0, 1.0], n_circles)
    ts = rng.uniform(-2, 2, n_ts)
    return ts, cx, cy, r, sign


def main():
    print(f"numba available: {kernels.HAVE_NUMBA}   dispatch uses numba: {kernels.USE_NUMBA}")
    print(f"{'T':>8} {'C':>4} {'numpy':>12} {'numba':>12} {'speedup':>8}")
    for n_ts, n_circles in [(100, 4), (1000, 8), (10000, 8), (50000, 16)]:
        args = setup(n_ts, n_circles)
        t_np = time_fn(kernels.fiber_intervals_numpy, *args, 1e-9)
        if kernels.HAVE_NUMBA:
            t_nb = time_fn(kernels.fiber_intervals_numba, *args, 1e-9)
            print(f"{n_ts:>8} {n_circles:>4} {t_np * 1e3:>10.2f}ms {t_nb * 1e3:>10.2f}ms {t_np / t_nb:>7.1f}x")
        else:
            print(f"{n_ts:>8} {n_circles:>4} {t_np * 1e3:>10.2f}ms {'n/a':>12} {'':>8}")

    # sanity: both paths agree bit-for-bit on counts
    args = setup(5000, 8, seed=3)
    out_np = kernels.fiber_intervals_numpy(*args, 1e-9)
    if kernels.HAVE_NUMBA:
        out_nb = kernels.fiber_intervals_numba(*args, 1e-9)
        assert np.array_equal(out_np[0], out_nb[0])
        assert np.allclose(out_np[1], out_nb[1], equal_nan=True)
        print("agreement check: ok")


if __name__ == "__main__":
    main()
