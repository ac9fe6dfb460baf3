from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import EXAMPLE2, example1_table
from padiv import linalg
from padiv.algebra import (I, J, K, StructureTable, TdParams, TpParams, associator, build_td, build_tp,
                           change_of_basis, commutator, element, is_zero, mul_operator, multiply,
                           tp_from_table)
from padiv.errors import DimensionMismatch, SingularMatrix

fr = st.fractions(min_value=-5, max_value=5, max_denominator=4)
vec4 = st.lists(fr, min_size=4, max_size=4).map(lambda v: linalg.exact_array(v))
params8 = st.lists(fr, min_size=8, max_size=8)
QUAT = build_td(TdParams(-1, 0))


def _tp(vals):
    return build_tp(TpParams(*vals))


@settings(max_examples=60)
@given(params8, vec4, vec4, vec4, fr)
def test_product_is_bilinear(vals, x, y, z, s):
    t = _tp(vals)
    assert np.array_equal(multiply(t, x + s * y, z), multiply(t, x, z) + s * multiply(t, y, z))
    assert np.array_equal(multiply(t, z, x + s * y), multiply(t, z, x) + s * multiply(t, z, y))


@settings(max_examples=60)
@given(params8, vec4, vec4)
def test_commutator_antisymmetric(vals, x, y):
    t = _tp(vals)
    assert np.array_equal(commutator(t, x, y), -commutator(t, y, x))
    assert is_zero(commutator(t, x, x))


@settings(max_examples=40)
@given(params8, st.lists(st.integers(-3, 3), min_size=9, max_size=9), vec4, vec4)
def test_change_of_basis_roundtrip(vals, entries, x, y):
    t = _tp(vals)
    B = linalg.identity(4)
    B[1:, 1:] = linalg.exact_array(np.array(entries).reshape(3, 3))
    if linalg.det(B) == 0:
        return
    t2 = change_of_basis(t, B)
    assert t2.unit_index == 0
    assert change_of_basis(t2, linalg.inverse(B)) == t
    # products agree after mapping coordinates
    Binv = linalg.inverse(B)
    assert np.array_equal(Binv.dot(multiply(t, B.dot(x), B.dot(y))), multiply(t2, x, y))


@settings(max_examples=40)
@given(vec4, vec4, vec4)
def test_quaternions_associative(x, y, z):
    assert is_zero(associator(QUAT, x, y, z))


def test_td_multiplication_rules():
    t = build_td(TdParams(-2, 3))
    i, j, k = t.basis(I), t.basis(J), t.basis(K)
    assert np.array_equal(multiply(t, i, j), -k)
    assert np.array_equal(multiply(t, j, i), k)
    assert np.array_equal(multiply(t, k, k), element(-2, 3, 0, 0))
    assert np.array_equal(commutator(t, j, i), 2 * k)


def test_example2_table_and_readback():
    t = build_tp(EXAMPLE2)
    w = t.basis(2)
    assert np.array_equal(multiply(t, w, w), element(-1, 1, 0, 0))
    assert tp_from_table(t) == EXAMPLE2


def test_example1_associator():
    t = example1_table()
    i, x = t.basis(1), t.basis(2)
    assert np.array_equal(associator(t, i, i, x), element(1, 0, -1))


def test_mul_operator_columns():
    t = build_td(TdParams(-2, 2))
    x = element(1, 2, 3, 4)
    L = mul_operator(t, x, "left").matrix
    R = mul_operator(t, x, "right").matrix
    for k in range(4):
        assert np.array_equal(L[:, k], multiply(t, x, t.basis(k)))
        assert np.array_equal(R[:, k], multiply(t, t.basis(k), x))


def test_float_and_exact_agree():
    t = build_tp(EXAMPLE2)
    x, y = element(1, 2, Fraction(1, 3), -1), element(0, 1, 2, 3)
    exact = multiply(t, x, y).astype(float)
    approx = multiply(t.to_float(), x.astype(float), y.astype(float))
    assert np.allclose(exact, approx)


def test_errors():
    with pytest.raises(DimensionMismatch):
        StructureTable(np.zeros((2, 3, 3)))
    with pytest.raises(DimensionMismatch):
        multiply(QUAT, element(1, 0, 0), element(1, 0, 0, 0))
    with pytest.raises(ValueError):
        StructureTable(np.zeros((2, 2, 2)), unit_index=0)
    with pytest.raises(SingularMatrix):
        change_of_basis(QUAT.to_float(), np.zeros((4, 4)))
