"""Structure-constant algebras: tables, elements, products and basis changes.

An element is a 1-d numpy array of coordinates in the table's basis: an
object array of Fractions (or QuadSurds, or polynomials) for exact work, a
float64 array for numeric work.  All operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Literal, Optional

import numpy as np

from . import linalg
from .errors import DimensionMismatch, SingularMatrix

# basis order: T_p uses {1, i, w, v}, T_d uses {1, i, j, k}; unit at index 0
ONE, I, W, V = 0, 1, 2, 3
J, K = W, V


@dataclass(frozen=True, eq=False)
class StructureTable:
    """``c[i, j, k]`` is the k-th coordinate of ``basis_i * basis_j``."""

    c: np.ndarray
    unit_index: Optional[int] = None

    def __post_init__(self):
        c = np.asarray(self.c)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]) or c.shape[0] < 1:
            raise DimensionMismatch(f"structure tensor must be n x n x n, got {c.shape}")
        if c.dtype != object:
            c = c.astype(np.float64)
        object.__setattr__(self, "c", c)
        if self.unit_index is not None:
            u = self.unit_index
            if not 0 <= u < self.dim:
                raise DimensionMismatch(f"unit index {u} out of range")
            eye = np.eye(self.dim)
            ok = (
                np.array_equal(c[u], eye) and np.array_equal(c[:, u], eye)
                if self.exact
                else np.allclose(c[u].astype(float), eye, atol=1e-9)
                and np.allclose(c[:, u].astype(float), eye, atol=1e-9)
            )
            if not ok:
                raise ValueError(f"basis element {u} is not a two-sided unit")

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    @property
    def exact(self) -> bool:
        return self.c.dtype == object

    def __eq__(self, other):
        if not isinstance(other, StructureTable):
            return NotImplemented
        return (
            self.unit_index == other.unit_index
            and self.c.shape == other.c.shape
            and bool(np.all(self.c == other.c))
        )

    __hash__ = None

    def to_float(self) -> "StructureTable":
        return StructureTable(self.c.astype(np.float64), self.unit_index)

    def basis(self, k: int) -> np.ndarray:
        return basis_element(self.dim, k, exact=self.exact)

    def unit(self) -> np.ndarray:
        if self.unit_index is None:
            raise ValueError("table has no designated unit")
        return self.basis(self.unit_index)


@dataclass(frozen=True)
class TpParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction
    g: Fraction
    h: Fraction

    def __post_init__(self):
        for fld in fields(self):
            object.__setattr__(self, fld.name, Fraction(getattr(self, fld.name)))

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f, self.g, self.h)

    def as_dict(self) -> dict[str, Fraction]:
        return {fld.name: getattr(self, fld.name) for fld in fields(self)}


@dataclass(frozen=True)
class TdParams:
    g: Fraction
    h: Fraction

    def __post_init__(self):
        object.__setattr__(self, "g", Fraction(self.g))
        object.__setattr__(self, "h", Fraction(self.h))

    def as_tp(self) -> TpParams:
        """The same algebra read through T_p with w = j, v = k."""
        return TpParams(-1, 0, 0, -1, 0, 1, self.g, self.h)

    def as_dict(self) -> dict[str, Fraction]:
        return {"g": self.g, "h": self.h}


@dataclass(frozen=True, eq=False)
class MulOperator:
    matrix: np.ndarray
    side: Literal["left", "right"]


def basis_element(dim: int, k: int, exact: bool = True) -> np.ndarray:
    if exact:
        x = linalg.exact_array([0] * dim)
        x[k] = Fraction(1)
        return x
    x = np.zeros(dim)
    x[k] = 1.0
    return x


def element(*coords) -> np.ndarray:
    """Exact element from rational coordinates."""
    return linalg.exact_array(list(coords))


def _check(t: StructureTable, *xs: np.ndarray) -> None:
    for x in xs:
        if np.ndim(x) != 1 or len(x) != t.dim:
            raise DimensionMismatch(f"element of length {np.shape(x)} does not fit a {t.dim}-dim table")


def _coerce(t: StructureTable, x):
    x = np.asarray(x)
    if not t.exact and x.dtype == object:
        try:
            return x.astype(np.float64)
        except TypeError:
            return x
    return x


def multiply(t: StructureTable, x, y) -> np.ndarray:
    """Bilinear product sum_ij x_i y_j c[i, j, :]."""
    x, y = _coerce(t, x), _coerce(t, y)
    _check(t, x, y)
    c = t.c
    if x.dtype == object or y.dtype == object:
        c = c if c.dtype == object else c.astype(object)
        x = x.astype(object)
        y = y.astype(object)
    return np.tensordot(y, np.tensordot(x, c, axes=(0, 0)), axes=(0, 0))


def associator(t: StructureTable, x, y, z) -> np.ndarray:
    """(xy)z - x(yz)."""
    return multiply(t, multiply(t, x, y), z) - multiply(t, x, multiply(t, y, z))


def commutator(t: StructureTable, x, y) -> np.ndarray:
    return multiply(t, x, y) - multiply(t, y, x)


def mul_operator(t: StructureTable, x, side: Literal["left", "right"] = "left") -> MulOperator:
    """Matrix of L_x (column j = x*e_j) or R_x (column j = e_j*x)."""
    x = _coerce(t, x)
    _check(t, x)
    c = t.c if (t.exact or x.dtype != object) else t.c.astype(object)
    if side == "left":
        m = np.tensordot(x, c, axes=(0, 0))
    elif side == "right":
        m = np.tensordot(x, c, axes=(0, 1))
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return MulOperator(np.ascontiguousarray(m.T), side)


def change_of_basis(t: StructureTable, B) -> StructureTable:
    """Table in the basis given by the columns of ``B`` (old coordinates).

    ``new(e_i, e_j) = B^-1 old(B e_i, B e_j)``.  Exact tables with exact
    ``B`` stay exact; a float ``B`` gives a float table.
    """
    B = np.asarray(B)
    n = t.dim
    if B.shape != (n, n):
        raise DimensionMismatch(f"basis matrix must be {n}x{n}, got {B.shape}")
    if B.dtype == object and t.exact:
        Binv = linalg.inverse(B)
        c = t.c
    else:
        B = B.astype(np.float64)
        if abs(np.linalg.det(B)) < 1e-300:
            raise SingularMatrix("basis matrix is singular")
        Binv = np.linalg.inv(B)
        c = t.c.astype(np.float64)
    # c'[a,b,:] = Binv @ sum_ij B[i,a] B[j,b] c[i,j,:]
    tmp = np.tensordot(B, c, axes=(0, 0))        # [a, j, k]
    tmp = np.tensordot(B, tmp, axes=(0, 1))      # [b, a, k]
    tmp = np.transpose(tmp, (1, 0, 2))           # [a, b, k]
    new_c = np.tensordot(tmp, Binv, axes=(2, 1))  # [a, b, k']
    return StructureTable(new_c, _new_unit(t, B, new_c))


def _new_unit(t: StructureTable, B, new_c) -> Optional[int]:
    n = t.dim
    if t.unit_index is not None:
        target = basis_element(n, t.unit_index, exact=B.dtype == object)
        for col in range(n):
            if np.array_equal(B[:, col], target) or (
                B.dtype != object and np.allclose(B[:, col], target, atol=1e-12)
            ):
                return col
    eye = np.eye(n)
    for u in range(n):
        if new_c.dtype == object:
            if np.array_equal(new_c[u], eye) and np.array_equal(new_c[:, u], eye):
                return u
        elif np.allclose(new_c[u], eye, atol=1e-9) and np.allclose(new_c[:, u], eye, atol=1e-9):
            return u
    return None


def table_from_products(dim: int, products: dict[tuple[int, int], list], unit_index: Optional[int] = 0) -> StructureTable:
    """Build a table from a dict {(i, j): coords of e_i*e_j}; the unit rows are filled in."""
    c = linalg.exact_array(np.zeros((dim, dim, dim), dtype=int))
    if unit_index is not None:
        for j in range(dim):
            c[unit_index, j, j] = Fraction(1)
            c[j, unit_index, j] = Fraction(1)
    for (i, j), coords in products.items():
        c[i, j, :] = linalg.exact_array(coords)
    return StructureTable(c, unit_index)


def build_tp(params: TpParams) -> StructureTable:
    a, b, c, d, e, f, g, h = params.as_tuple()
    return table_from_products(
        4,
        {
            (I, I): [-1, 0, 0, 0],
            (I, W): [0, 0, 0, -1],
            (I, V): [0, 0, 1, 0],
            (W, I): [0, 0, 0, 1],
            (V, I): [0, 0, -1, 0],
            (W, W): [a, b, 0, 0],
            (W, V): [c, d, 0, 0],
            (V, W): [e, f, 0, 0],
            (V, V): [g, h, 0, 0],
        },
    )


def build_td(params: TdParams) -> StructureTable:
    return build_tp(params.as_tp())


def tp_from_table(t: StructureTable) -> TpParams:
    """Read the eight constants off a table in T_p shape; ValueError otherwise."""
    if t.dim != 4 or not t.exact:
        raise ValueError("T_p shape needs an exact 4-dimensional table")
    c = t.c
    params = TpParams(c[W, W, 0], c[W, W, 1], c[W, V, 0], c[W, V, 1],
                      c[V, W, 0], c[V, W, 1], c[V, V, 0], c[V, V, 1])
    if t.unit_index != 0 or not t == build_tp(params):
        raise ValueError("table is not in T_p shape")
    return params


def is_tp_shaped(t: StructureTable) -> bool:
    try:
        tp_from_table(t)
    except ValueError:
        return False
    return True


def is_zero(x) -> bool:
    return all(v == 0 for v in np.asarray(x).ravel())
