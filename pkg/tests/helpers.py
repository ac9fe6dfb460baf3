"""Shared fixtures: worked tables and random rational generators."""

from fractions import Fraction

import numpy as np

from padiv.algebra import TdParams, TpParams, table_from_products

EXAMPLE2 = TpParams(-1, 1, 0, -1, Fraction(1, 2), 0, -1, Fraction(1, 2))
EXAMPLE3 = TpParams(-2, 2, 0, -1, 0, 1, -1, 2)
EXAMPLE4 = TpParams(-5, 2, -5, -1, 3, -1, -5, 3)

# p = -y^2 < 0 somewhere, yet no real direction kills det(L_x)
SUFFICIENT2 = TpParams(-1, -3, 3, 2, -2, 0, 0, -4)
# s indefinite with both null lines carrying units
TWO_CIRCLES = TpParams(-4, 0, 1, -3, 5, 2, Fraction(-5, 2), 2)

TD_DIVISION = [TdParams(-2, 2), TdParams(-5, 3), TdParams(-3, 1), TdParams(-1, 0),
               TdParams(-1, 1), TdParams(Fraction(-1, 2), Fraction(1, 3))]


def example1_table():
    """Three-dimensional table on {1, i, x}: i^2 = -1, ix = xi = i, x^2 = x."""
    return table_from_products(3, {(1, 1): [-1, 0, 0], (1, 2): [0, 1, 0],
                                   (2, 1): [0, 1, 0], (2, 2): [0, 0, 1]})


def rand_frac(rng, lo, hi, dens=(1, 2, 3, 4)) -> Fraction:
    m = int(rng.choice(dens))
    return Fraction(int(rng.integers(int(lo * m), int(hi * m) + 1)), m)


def rand_tp(rng, bound=5) -> TpParams:
    return TpParams(*(rand_frac(rng, -bound, bound) for _ in range(8)))


def rand_td_division(rng, nonzero_h=False) -> TdParams:
    """Division (g, h) with g in [-4, -1/4], h in [-3, 3], g + h^2/4 < 0."""
    while True:
        g = rand_frac(rng, -4, Fraction(-1, 4))
        h = rand_frac(rng, -3, 3)
        if g + h * h / 4 < 0 and not (nonzero_h and h == 0) and not (h == 0 and g != -1):
            return TdParams(g, h)


def rand_element(rng, dim=4, bound=5) -> np.ndarray:
    out = np.empty(dim, dtype=object)
    for k in range(dim):
        out[k] = rand_frac(rng, -bound, bound)
    return out
