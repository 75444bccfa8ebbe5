"""Batch kernels for fiber-line crossings and sign-cell intervals.

The sweep, the cross-section oracle, and the fuzzer all reduce to one hot
inner loop: intersect a transverse line with every circle, sort the
crossings, and keep the sub-intervals whose midpoints satisfy every
region-side constraint. That loop runs here, jitted with numba when
available; set ``CIRCLESWEEP_PURE_NUMPY=1`` to force the numpy fallback.

Both implementations are importable directly (``fiber_intervals_numpy``,
``fiber_intervals_numba``) so tests and benchmarks can compare them.
"""
from __future__ import annotations

import math
import os

import numpy as np

PURE_NUMPY = os.environ.get("CIRCLESWEEP_PURE_NUMPY", "").lower() in ("1", "true", "yes")

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not PURE_NUMPY


def pack_circles(circles) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Column arrays (cx, cy, r, sign) for a sequence of circles."""
    cx = np.array([c.cx for c in circles], dtype=np.float64)
    cy = np.array([c.cy for c in circles], dtype=np.float64)
    r = np.array([c.r for c in circles], dtype=np.float64)
    sign = np.array([c.sign for c in circles], dtype=np.float64)
    return cx, cy, r, sign


def fiber_intervals_numpy(ts, cx, cy, r, sign, eps):
    """Sign-cell intervals of the vertical line x=t for each regular t.

    Returns (counts, bounds, arc_circle, arc_branch):
      counts[i]          number of intervals at ts[i]
      bounds[i,k]        (lo, hi) transverse coordinates of interval k
      arc_circle[i,k]    circle index bounding each endpoint
      arc_branch[i,k]    -1 for the lower branch, +1 for the upper branch
    """
    ts = np.asarray(ts, dtype=np.float64)
    T, C = ts.size, cx.size
    M = C + 1
    counts = np.zeros(T, dtype=np.int64)
    bounds = np.full((T, M, 2), np.nan, dtype=np.float64)
    arc_circle = np.full((T, M, 2), -1, dtype=np.int32)
    arc_branch = np.zeros((T, M, 2), dtype=np.int8)
    if C == 0:
        return counts, bounds, arc_circle, arc_branch

    dx = ts[:, None] - cx[None, :]
    d2 = r[None, :] ** 2 - dx**2
    act = d2 > 0.0
    root = np.sqrt(np.where(act, d2, 0.0))
    los = cy[None, :] - root
    his = cy[None, :] + root

    for i in range(T):
        idx = np.nonzero(act[i])[0]
        if idx.size == 0:
            continue
        ys = np.concatenate([los[i, idx], his[i, idx]])
        cs = np.concatenate([idx, idx]).astype(np.int32)
        brs = np.concatenate(
            [np.full(idx.size, -1, np.int8), np.full(idx.size, 1, np.int8)]
        )
        order = np.argsort(ys, kind="stable")
        ys, cs, brs = ys[order], cs[order], brs[order]
        k = 0
        for j in range(ys.size - 1):
            lo, hi = ys[j], ys[j + 1]
            if hi - lo <= 0.0:
                continue
            ym = 0.5 * (lo + hi)
            margins = sign * (r - np.hypot(ts[i] - cx, ym - cy))
            if np.all(margins > eps):
                bounds[i, k, 0], bounds[i, k, 1] = lo, hi
                arc_circle[i, k, 0], arc_circle[i, k, 1] = cs[j], cs[j + 1]
                arc_branch[i, k, 0], arc_branch[i, k, 1] = brs[j], brs[j + 1]
                k += 1
        counts[i] = k
    return counts, bounds, arc_circle, arc_branch


if HAVE_NUMBA:

    @njit(cache=True)
    def _fiber_intervals_jit(ts, cx, cy, r, sign, eps):  # pragma: no cover - jitted
        T = ts.size
        C = cx.size
        M = C + 1
        counts = np.zeros(T, dtype=np.int64)
        bounds = np.full((T, M, 2), np.nan, dtype=np.float64)
        arc_circle = np.full((T, M, 2), -1, dtype=np.int32)
        arc_branch = np.zeros((T, M, 2), dtype=np.int8)
        ys = np.empty(2 * C, dtype=np.float64)
        cs = np.empty(2 * C, dtype=np.int32)
        brs = np.empty(2 * C, dtype=np.int8)
        for i in range(T):
            t = ts[i]
            n = 0
            for j in range(C):
                dxj = t - cx[j]
                d2 = r[j] * r[j] - dxj * dxj
                if d2 > 0.0:
                    root = math.sqrt(d2)
                    ys[n] = cy[j] - root
                    cs[n] = j
                    brs[n] = -1
                    n += 1
                    ys[n] = cy[j] + root
                    cs[n] = j
                    brs[n] = 1
                    n += 1
            if n == 0:
                continue
            # insertion sort by y (n is small)
            for a in range(1, n):
                vy, vc, vb = ys[a], cs[a], brs[a]
                b = a - 1
                while b >= 0 and ys[b] > vy:
                    ys[b + 1], cs[b + 1], brs[b + 1] = ys[b], cs[b], brs[b]
                    b -= 1
                ys[b + 1], cs[b + 1], brs[b + 1] = vy, vc, vb
            k = 0
            for j in range(n - 1):
                lo, hi = ys[j], ys[j + 1]
                if hi - lo <= 0.0:
                    continue
                ym = 0.5 * (lo + hi)
                ok = True
                for m in range(C):
                    margin = sign[m] * (r[m] - math.hypot(t - cx[m], ym - cy[m]))
                    if margin <= eps:
                        ok = False
                        break
                if ok:
                    bounds[i, k, 0], bounds[i, k, 1] = lo, hi
                    arc_circle[i, k, 0], arc_circle[i, k, 1] = cs[j], cs[j + 1]
                    arc_branch[i, k, 0], arc_branch[i, k, 1] = brs[j], brs[j + 1]
                    k += 1
            counts[i] = k
        return counts, bounds, arc_circle, arc_branch

    def fiber_intervals_numba(ts, cx, cy, r, sign, eps):
        ts = np.ascontiguousarray(ts, dtype=np.float64)
        return _fiber_intervals_jit(ts, cx, cy, r, sign, eps)

else:  # pragma: no cover - exercised only without numba installed
    fiber_intervals_numba = None


def fiber_intervals(ts, cx, cy, r, sign, eps):
    """Dispatch to the jitted kernel or the numpy fallback."""
    if USE_NUMBA:
        return fiber_intervals_numba(ts, cx, cy, r, sign, eps)
    return fiber_intervals_numpy(ts, cx, cy, r, sign, eps)


def warmup() -> None:
    """Trigger jit compilation once so timed paths run steady-state."""
    ts = np.array([0.0, 0.5])
    one = np.array([0.0]), np.array([0.0]), np.array([1.0]), np.array([1.0])
    fiber_intervals(ts, *one, 1e-9)
