"""Partial alternativity: the associator identities restricted to imaginary units.

For a unit u and every y:

    left:      (u, u, y) = 0
    flexible:  (u, y, u) = 0
    right:     (y, u, u) = 0

Each identity is linear in y, so checking basis elements suffices.  Finite
unit sets are checked point by point; circle and sphere families are checked
once, symbolically, with coordinates in a ConstrainedPoly ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

import numpy as np

from . import linalg
from .algebra import StructureTable, associator, is_zero, mul_operator, multiply
from .errors import DimensionMismatch, InvalidUnits, NucleusViolation
from .units import UnitSet, _require_unit, eigen_decompose, verify_unit_set

IDENTITIES = ("left_alt", "flexible", "right_alt")


@dataclass(frozen=True, eq=False)
class Counterexample:
    unit: np.ndarray
    y: np.ndarray
    identity: str
    associator: np.ndarray


@dataclass(frozen=True, eq=False)
class PAReport:
    left_alt: bool
    flexible: bool
    right_alt: bool
    counterexample: Optional[Counterexample] = None

    @property
    def partially_alternative(self) -> bool:
        return self.left_alt and self.flexible and self.right_alt

    def flags(self) -> tuple[bool, bool, bool]:
        return self.left_alt, self.flexible, self.right_alt


def _associators(t: StructureTable, u, y) -> dict:
    return {
        "left_alt": associator(t, u, u, y),
        "flexible": associator(t, u, y, u),
        "right_alt": associator(t, y, u, u),
    }


def _first_nonzero(t: StructureTable, points, which: str) -> Optional[Counterexample]:
    for u in points:
        for k in range(t.dim):
            y = t.basis(k)
            a = _associators(t, u, y)[which]
            if not is_zero(a):
                return Counterexample(u, y, which, a)
    return None


def _sample_points(family, count: int = 40):
    ts = [Fraction(n, d) for d in (1, 2, 3, 5) for n in range(-6, 7)]
    if len(family.weights) == 3:
        return family.rational_points(list(product(ts[:7], ts[:7]))[:count * 2])
    return family.rational_points(ts[:count])


def check_pa(t: StructureTable, units: UnitSet) -> PAReport:
    if t.unit_index is None:
        raise InvalidUnits("partial alternativity needs a unital table")
    if not verify_unit_set(t, units):
        raise InvalidUnits("a listed unit does not square to -1")
    ok = {name: True for name in IDENTITIES}
    witness: Optional[Counterexample] = None

    for name in IDENTITIES:
        cx = _first_nonzero(t, units.points, name)
        if cx is not None:
            ok[name] = False
            witness = witness or cx

    for fam in units.families:
        u = fam.symbolic()
        for k in range(t.dim):
            y = t.basis(k)
            for name, a in _associators(t, u, y).items():
                if ok[name] and not is_zero(a):
                    ok[name] = False
                    if witness is None:
                        witness = _first_nonzero(t, _sample_points(fam), name)

    return PAReport(ok["left_alt"], ok["flexible"], ok["right_alt"], witness)


def check_complex_structure(t: StructureTable, i) -> tuple[bool, bool, bool]:
    """(L_i^2 = -id, L_i R_i = R_i L_i, R_i^2 = -id)."""
    i = _require_unit(t, i)
    L = mul_operator(t, i, "left").matrix
    R = mul_operator(t, i, "right").matrix
    minus = -linalg.identity(t.dim)
    return (
        bool(np.array_equal(L.dot(L), minus)),
        bool(np.array_equal(L.dot(R), R.dot(L))),
        bool(np.array_equal(R.dot(R), minus)),
    )


def general_pa_table_check(t: StructureTable, i) -> bool:
    """Whether some basis {1, i, j, ij} has i(ij) = -j, ji = -ij and (ij)i = j.

    j is taken from the anticommuting eigenspace of x -> i(xi).  Raises
    NucleusViolation when i commutes with the whole algebra.
    """
    if t.dim != 4:
        raise DimensionMismatch("the {1, i, j, ij} table needs a 4-dimensional algebra")
    dec = eigen_decompose(t, i)
    i = dec.unit_used
    if len(dec.minus_basis) == 4:
        raise NucleusViolation("i commutes with every element")
    if len(dec.plus_basis) != 2:
        return False
    j = dec.plus_basis[0]
    ij = multiply(t, i, j)
    one = t.unit()
    if linalg.rank(np.column_stack([one, i, j, ij])) != 4:
        return False
    checks = [
        multiply(t, i, ij) + j,   # i(ij) = -j
        multiply(t, j, i) + ij,   # ji = -ij
        multiply(t, ij, i) - j,   # (ij)i = j
    ]
    return all(is_zero(c) for c in checks)
