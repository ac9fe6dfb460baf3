from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from padiv import linalg
from padiv.errors import SingularMatrix
from padiv.exact import (QuadSurd, sign_sqrt_expr, sign_two_sqrt_expr, sqrt_exact,
                         sqrt_rational)

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=9)
radicands = st.sampled_from([2, 3, 5, 6, 7, 10, 11])


def _sym(x):
    return sympy.Rational(x.numerator, x.denominator)


def _sym_surd(x, D):
    # results with a zero surd part come back as plain Fractions
    if isinstance(x, QuadSurd):
        return _sym(Fraction(x.a)) + _sym(Fraction(x.b)) * sympy.sqrt(D)
    return _sym(Fraction(x))


@given(fracs, fracs, fracs, fracs, radicands)
def test_surd_arithmetic_matches_sympy(a, b, c, d, D):
    x, y = QuadSurd(a, b, D), QuadSurd(c, d, D)
    sx = _sym(a) + _sym(b) * sympy.sqrt(D)
    sy = _sym(c) + _sym(d) * sympy.sqrt(D)
    for got, want in ((x + y, sx + sy), (x - y, sx - sy), (x * y, sx * sy)):
        assert sympy.simplify(_sym_surd(got, D) - want) == 0
    assert (x.sign() if isinstance(x, QuadSurd) else sympy.sign(_sym(x))) == sympy.sign(sx)


@given(fracs, fracs, st.fractions(min_value=0, max_value=30, max_denominator=7))
def test_sign_sqrt_expr(a, b, x):
    want = sympy.sign(_sym(a) + _sym(b) * sympy.sqrt(_sym(x)))
    assert sign_sqrt_expr(a, b, x) == want


@given(fracs, fracs, st.integers(0, 30), fracs, st.integers(0, 30))
def test_sign_two_sqrt_expr(a, b, x, c, y):
    want = sympy.sign(_sym(a) + _sym(b) * sympy.sqrt(x) + _sym(c) * sympy.sqrt(y))
    assert sign_two_sqrt_expr(a, b, x, c, y) == want


def test_sqrt_helpers():
    assert sqrt_rational(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_rational(Fraction(2)) is None
    r = sqrt_exact(Fraction(8))
    assert isinstance(r, QuadSurd) and r * r == 8


@pytest.mark.parametrize("seed", range(10))
def test_det_inverse_against_sympy(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 6))
    rows = [[Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 4))) for _ in range(n)] for _ in range(n)]
    M = linalg.exact_array(rows)
    S = sympy.Matrix(n, n, [_sym(v) for row in rows for v in row])
    assert _sym(linalg.det(M)) == S.det()
    assert linalg.rank(M) == S.rank()
    if S.det() != 0:
        assert np.array_equal(M.dot(linalg.inverse(M)), linalg.identity(n))
    else:
        with pytest.raises(SingularMatrix):
            linalg.inverse(M)
        for v in linalg.nullspace(M):
            assert all(x == 0 for x in M.dot(v))


def test_nullspace_dimension():
    M = linalg.exact_array([[1, 2, 3], [2, 4, 6], [0, 0, 0]])
    ns = linalg.nullspace(M)
    assert len(ns) == 2 and linalg.rank(M) == 1
