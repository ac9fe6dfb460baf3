"""Slow numeric cross-checks for the exact classifiers."""

from __future__ import annotations

import numpy as np
from scipy.optimize import minimize

from .algebra import TpParams
from .forms import forms_pq
from .kernels import det_grid

ZERO_TOL = 1e-9


def _pq_vector(params: TpParams) -> np.ndarray:
    p, q = forms_pq(params)
    return np.array([float(v) for v in (p.m11, p.m12, p.m22, q.m11, q.m12, q.m22)])


def numeric_det_minimum(params: TpParams, n: int = 100, polish: int = 5) -> float:
    """Minimum of det(L_x) over unit vectors x, from an n x n direction grid.

    Only |x| = 1 matters since det(L_x) is homogeneous of degree 4, and only
    alpha^2 + beta^2 enters, so directions are (theta, psi) with
    cos(theta) = sqrt(alpha^2 + beta^2).  The best ``polish`` grid points are
    refined with Nelder-Mead.
    """
    pq = _pq_vector(params)
    thetas = np.linspace(0.0, np.pi / 2, n)
    psis = np.linspace(0.0, np.pi, n, endpoint=False)
    vals = det_grid(pq, thetas, psis)
    best = float(vals.min())
    order = np.argsort(vals, axis=None)[:polish]

    def f(z):
        return float(det_grid(pq, z[:1], z[1:])[0, 0])

    for flat in order:
        a, b = np.unravel_index(flat, vals.shape)
        res = minimize(f, [thetas[a], psis[b]], method="Nelder-Mead",
                       options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 400})
        best = min(best, float(res.fun))
    return best


def numeric_is_division(params: TpParams, n: int = 100) -> bool:
    return numeric_det_minimum(params, n) >= ZERO_TOL
