"""Exact linear algebra over Q on numpy object arrays of Fractions.

Elimination is fraction-free (Bareiss): rows are scaled to integers first,
so intermediate entries stay integral minors of the input.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, SingularMatrix


def exact_array(values) -> np.ndarray:
    """Object array of Fractions with the same shape as ``values``."""
    arr = np.asarray(values, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = v if isinstance(v, Fraction) else Fraction(v)
    return out


def identity(n: int) -> np.ndarray:
    eye = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            eye[i, j] = Fraction(int(i == j))
    return eye


def is_exact(arr: np.ndarray) -> bool:
    return np.asarray(arr).dtype == object


def _integer_rows(M) -> tuple[list[list[int]], list[int]]:
    rows, scales = [], []
    for row in M:
        row = [Fraction(v) for v in row]
        den = 1
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
        rows.append([int(v * den) for v in row])
        scales.append(den)
    return rows, scales


def _bareiss(A: list[list[int]]) -> tuple[list[list[int]], list[int], int]:
    """In-place fraction-free row echelon form.  Returns (A, pivot_cols, swaps)."""
    n = len(A)
    m = len(A[0]) if n else 0
    prev = 1
    r = 0
    pivots: list[int] = []
    swaps = 0
    for col in range(m):
        if r == n:
            break
        p = next((i for i in range(r, n) if A[i][col] != 0), None)
        if p is None:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
            swaps += 1
        piv = A[r][col]
        for i in range(r + 1, n):
            aic = A[i][col]
            Ai, Ar = A[i], A[r]
            for j in range(col + 1, m):
                Ai[j] = (piv * Ai[j] - aic * Ar[j]) // prev
            Ai[col] = 0
        # entries left of the pivot in rows below are already zero
        prev = piv
        pivots.append(col)
        r += 1
    return A, pivots, swaps


def det(M) -> Fraction:
    M = np.asarray(M, dtype=object)
    n, m = M.shape
    if n != m:
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    A, scales = _integer_rows(M)
    A, pivots, swaps = _bareiss(A)
    if len(pivots) < n:
        return Fraction(0)
    d = Fraction(A[n - 1][n - 1])
    for s in scales:
        d /= s
    return -d if swaps % 2 else d


def rank(M) -> int:
    M = np.asarray(M, dtype=object)
    if M.size == 0:
        return 0
    A, _ = _integer_rows(M)
    return len(_bareiss(A)[1])


def nullspace(M) -> list[np.ndarray]:
    """Basis of {x : M x = 0} as exact vectors, one per free column."""
    M = np.asarray(M, dtype=object)
    n, m = M.shape
    A, _ = _integer_rows(M)
    A, pivots, _ = _bareiss(A)
    free = [j for j in range(m) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * m
        x[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            acc = sum((A[k][j] * x[j] for j in range(pc + 1, m)), Fraction(0))
            x[pc] = -acc / A[k][pc]
        basis.append(exact_array(x))
    return basis


def inverse(M) -> np.ndarray:
    """Gauss-Jordan inverse over Q."""
    M = exact_array(M)
    n, m = M.shape
    if n != m:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = [list(M[i]) + list(identity(n)[i]) for i in range(n)]
    for col in range(n):
        p = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if p is None:
            raise SingularMatrix("matrix is not invertible")
        aug[col], aug[p] = aug[p], aug[col]
        piv = aug[col][col]
        aug[col] = [v / piv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return exact_array([row[n:] for row in aug])


def solve(M, b) -> np.ndarray:
    return inverse(M).dot(exact_array(b))


def in_span(vectors, x) -> bool:
    """Whether x lies in the span of the given exact vectors."""
    if not len(vectors):
        return all(v == 0 for v in x)
    A = np.column_stack(list(vectors))
    return rank(A) == rank(np.column_stack([A, np.asarray(x, dtype=object)]))
