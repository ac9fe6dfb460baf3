"""Hot loops with a numba implementation and a pure-numpy twin.

Set ``PADIV_DISABLE_NUMBA=1`` to force the numpy versions.  The flag is read
on every call, so tests can flip it with ``monkeypatch.setenv``.  Both paths
must return identical results; ``benchmarks/bench_kernels.py`` times them.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def use_numba() -> bool:
    return HAVE_NUMBA and os.environ.get("PADIV_DISABLE_NUMBA", "") not in ("1", "true", "yes")


# det(L_x) over a (theta, psi) grid of unit directions

def _det_grid_numpy(pq: np.ndarray, thetas: np.ndarray, psis: np.ndarray) -> np.ndarray:
    p11, p12, p22, q11, q12, q22 = pq
    r = np.cos(thetas)[:, None]
    s = np.sin(thetas)[:, None]
    g = s * np.cos(psis)[None, :]
    d = s * np.sin(psis)[None, :]
    u = r * r
    pv = p11 * g * g + 2 * p12 * g * d + p22 * d * d
    qv = q11 * g * g + 2 * q12 * g * d + q22 * d * d
    return u * u + pv * u + qv * (s * s)


if HAVE_NUMBA:

    @njit(cache=True)
    def _det_grid_numba(pq, thetas, psis):
        p11, p12, p22, q11, q12, q22 = pq[0], pq[1], pq[2], pq[3], pq[4], pq[5]
        out = np.empty((thetas.shape[0], psis.shape[0]))
        cp = np.cos(psis)
        sp = np.sin(psis)
        for a in range(thetas.shape[0]):
            r = np.cos(thetas[a])
            s = np.sin(thetas[a])
            u = r * r
            n = s * s
            for b in range(psis.shape[0]):
                g = s * cp[b]
                d = s * sp[b]
                pv = p11 * g * g + 2.0 * p12 * g * d + p22 * d * d
                qv = q11 * g * g + 2.0 * q12 * g * d + q22 * d * d
                out[a, b] = u * u + pv * u + qv * n
        return out


def det_grid(pq, thetas, psis) -> np.ndarray:
    """det(L_x) at x = (cos t, 0, sin t cos s, sin t sin s) for t in thetas, s in psis.

    ``pq`` holds the matrix entries (p11, p12, p22, q11, q12, q22).
    """
    pq = np.ascontiguousarray(pq, dtype=np.float64)
    thetas = np.ascontiguousarray(thetas, dtype=np.float64)
    psis = np.ascontiguousarray(psis, dtype=np.float64)
    if use_numba():
        return _det_grid_numba(pq, thetas, psis)
    return _det_grid_numpy(pq, thetas, psis)


# integer directions d whose square has its non-unit part parallel to d

def _all_directions(m: int, H: int) -> np.ndarray:
    axes = [np.arange(-H, H + 1, dtype=np.int64)] * m
    D = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, m)
    nz = D != 0
    has = nz.any(axis=1)
    first = np.where(has, D[np.arange(len(D)), nz.argmax(axis=1)], 0)
    D = D[first > 0]
    g = np.gcd.reduce(np.abs(D), axis=1)
    return D[g == 1]


def _parallel_numpy(C: np.ndarray, others: np.ndarray, H: int) -> np.ndarray:
    m = len(others)
    D = _all_directions(m, H)
    sq = np.einsum("ka,kb,abn->kn", D, D, C)
    tau = sq[:, others]
    ok = np.ones(len(D), dtype=bool)
    for a in range(m):
        for b in range(a + 1, m):
            ok &= tau[:, a] * D[:, b] == tau[:, b] * D[:, a]
    return D[ok]


if HAVE_NUMBA:

    @njit(cache=True)
    def _gcd(a, b):
        a = abs(a)
        b = abs(b)
        while b:
            a, b = b, a % b
        return a

    @njit(cache=True)
    def _parallel_numba(C, others, H):
        m = others.shape[0]
        n = C.shape[2]
        side = 2 * H + 1
        total = side ** m
        out = np.empty((total, m), dtype=np.int64)
        count = 0
        d = np.empty(m, dtype=np.int64)
        sq = np.empty(n, dtype=np.int64)
        for idx in range(total):
            rem = idx
            for a in range(m - 1, -1, -1):
                d[a] = rem % side - H
                rem //= side
            first = 0
            g = 0
            for a in range(m):
                if first == 0 and d[a] != 0:
                    first = d[a]
                g = _gcd(g, d[a])
            if first <= 0 or g != 1:
                continue
            for k in range(n):
                acc = 0
                for a in range(m):
                    if d[a] == 0:
                        continue
                    for b in range(m):
                        acc += d[a] * d[b] * C[a, b, k]
                sq[k] = acc
            ok = True
            for a in range(m):
                for b in range(a + 1, m):
                    if sq[others[a]] * d[b] != sq[others[b]] * d[a]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out[count, :] = d
                count += 1
        return out[:count]


def parallel_square_directions(C, others, H: int) -> np.ndarray:
    """Primitive d in [-H, H]^m (first nonzero entry positive) with d*d parallel to d
    off the unit coordinate.

    ``C[a, b, :]`` is the integer-scaled product of the non-unit basis
    vectors ``others[a]`` and ``others[b]``.  Rows come out in lexicographic order.
    """
    C = np.ascontiguousarray(C, dtype=np.int64)
    others = np.ascontiguousarray(others, dtype=np.int64)
    if use_numba():
        return _parallel_numba(C, others, int(H))
    return _parallel_numpy(C, others, int(H))
