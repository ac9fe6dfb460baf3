"""Imaginary units: their sets, eigenspaces of x -> i(xi), commutation checks.

In a T_p algebra every imaginary unit lies in span{i, w, v}, and

    (x*i + y*w + z*v)^2 = (-x^2 + r(y, z)) * 1 + s(y, z) * i,

so the units are the solutions of s(y, z) = 0, x^2 - r(y, z) = 1.  A definite
s leaves only +-i; a rank-one s gives a conic; s = 0 gives a quadric surface.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import linalg
from .algebra import (StructureTable, TdParams, TpParams, commutator, is_tp_shaped, is_zero,
                      mul_operator, multiply, tp_from_table)
from .errors import NotDivision, NotImaginaryUnit, NotInvolution
from .exact import sqrt_exact, sqrt_rational
from .forms import Definiteness, definiteness, division_td, division_tp, forms_rs
from .kernels import parallel_square_directions
from .mpoly import ConstrainedPoly, Relation


class UnitKind(enum.Enum):
    TwoPoints = "TwoPoints"
    Circle = "Circle"
    TwoCircles = "TwoCircles"
    Sphere = "Sphere"
    FiniteOther = "FiniteOther"


@dataclass(frozen=True, eq=False)
class UnitFamily:
    """{sum_k c_k * basis[k] : sum_k weights[k] * c_k^2 = 1}."""

    basis: tuple
    weights: tuple

    @property
    def relation(self) -> Relation:
        return Relation(tuple(self.weights))

    def symbolic(self) -> np.ndarray:
        """Generic member with ConstrainedPoly coordinates."""
        cs = ConstrainedPoly.variables(self.relation)
        dim = len(self.basis[0])
        out = np.empty(dim, dtype=object)
        for k in range(dim):
            out[k] = sum((c * b[k] for c, b in zip(cs, self.basis)), ConstrainedPoly.constant(0, len(cs), self.relation))
        return out

    def point(self, coeffs) -> np.ndarray:
        return sum((c * b for c, b in zip(coeffs, self.basis)), np.zeros(len(self.basis[0]), dtype=object))

    def rational_points(self, ts) -> list[np.ndarray]:
        """Exact members from rational parameters.

        Circle: (1 - k t^2, 2t) / (1 + k t^2) on c0^2 + k c1^2 = 1 (needs w0 = 1).
        Sphere: stereographic projection from -e0 with t = (t1, t2).
        """
        w = self.weights
        if w[0] != 1:
            raise ValueError("rational parametrization needs the first weight to be 1")
        pts = []
        for t in ts:
            t = (t,) if not isinstance(t, tuple) else t
            t = tuple(Fraction(v) for v in t)
            S = sum((wk * tk * tk for wk, tk in zip(w[1:], t)), Fraction(0))
            if S == -1:
                continue
            coeffs = [(1 - S) / (1 + S)] + [2 * tk / (1 + S) for tk in t]
            pts.append(self.point(coeffs))
        return pts

    def coefficients(self, x) -> Optional[list]:
        """Coordinates of x in this family's basis, or None outside the span."""
        A = np.column_stack(list(self.basis))
        rows = [k for k in range(A.shape[0]) if any(v != 0 for v in A[k])]
        # basis vectors are independent; solve on a nonsingular row subset
        n = A.shape[1]
        for sub in itertools.combinations(rows, n):
            M = A[list(sub)]
            if _det_generic(M) != 0:
                sol = _solve_generic(M, [x[k] for k in sub])
                recon = self.point(sol)
                if all(recon[k] == x[k] for k in range(len(x))):
                    return sol
                return None
        return None

    def contains(self, x) -> bool:
        cs = self.coefficients(x)
        if cs is None:
            return False
        return sum((w * c * c for w, c in zip(self.weights, cs)), Fraction(0)) == 1


def _det_generic(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    return sum(((-1) ** j * M[0][j] * _det_generic(np.delete(M[1:], j, axis=1)) for j in range(n)), 0)


def _solve_generic(M, b):
    """Cramer's rule; works over Q(sqrt(D)) too."""
    d = _det_generic(M)
    out = []
    for j in range(len(M)):
        Mj = np.array(M, dtype=object)
        Mj[:, j] = b
        out.append(_det_generic(Mj) / d)
    return out


@dataclass(frozen=True, eq=False)
class UnitSet:
    kind: UnitKind
    dim: int
    points: tuple = ()
    families: tuple = ()

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=object)
        if any(all(a == b for a, b in zip(p, x)) for p in self.points):
            return True
        return any(f.contains(x) for f in self.families)

    def representatives(self, n: int = 4) -> list[np.ndarray]:
        """A few exact members: the points, or rational points on each family."""
        reps = list(self.points)
        ts = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-2, 3), Fraction(3)][:n]
        for f in self.families:
            try:
                if len(f.weights) == 3:
                    reps += f.rational_points([(t, Fraction(k, 3)) for k, t in enumerate(ts)])
                else:
                    reps += f.rational_points(ts)
            except ValueError:
                reps.append(f.basis[0])
        return reps


def _normalize_weight(vec: np.ndarray, w):
    """Absorb a square weight into the vector: w * c^2 = (s*c)^2 with vec / s."""
    if isinstance(w, Fraction):
        s = sqrt_rational(w)
        if s is not None and s != 0:
            return np.array([v / s for v in vec], dtype=object), Fraction(1)
    return vec, w


def _vec(*coords) -> np.ndarray:
    out = np.empty(len(coords), dtype=object)
    for k, v in enumerate(coords):
        out[k] = Fraction(v) if isinstance(v, int) else v
    return out


def _units_from_forms(params: TpParams) -> UnitSet:
    r, s = forms_rs(params)
    ds = definiteness(s)
    i_vec = _vec(0, 1, 0, 0)
    if ds.definite:
        return UnitSet(UnitKind.TwoPoints, 4, points=(i_vec, -i_vec))
    if ds == Definiteness.Zero:
        # x^2 + (-r)(y, z) = 1; LDL of -r: m11*(y + m12/m11 z)^2 + (det/m11) z^2
        m11, m12, m22 = -r.m11, -r.m12, -r.m22
        if m11 == 0:
            raise NotDivision("w squares to a real scalar >= 0")
        w2 = _vec(0, 0, 1, 0)
        w3 = _vec(0, 0, -m12 / m11, 1)
        d2, d3 = m11, (m11 * m22 - m12 * m12) / m11
        if m11 < 0 or d3 <= 0:
            raise NotDivision("w, v span a non-definite square form")
        w2, d2 = _normalize_weight(w2, d2)
        w3, d3 = _normalize_weight(w3, d3)
        return UnitSet(UnitKind.Sphere, 4, families=(UnitFamily((i_vec, w2, w3), (Fraction(1), d2, d3)),))
    fams = []
    for y0, z0 in _null_directions(s):
        kappa = -r(y0, z0)
        if kappa <= 0:
            raise NotDivision(f"(y*w + z*v)^2 = {-kappa} >= 0 along a null line of s")
        n = _vec(0, 0, y0, z0)
        n, kappa = _normalize_weight(n, kappa)
        fams.append(UnitFamily((i_vec, n), (Fraction(1), kappa)))
    kind = UnitKind.Circle if len(fams) == 1 else UnitKind.TwoCircles
    return UnitSet(kind, 4, families=tuple(fams))


def _null_directions(s) -> list:
    """The null lines of a singular or indefinite binary form, exact."""
    if s.det() == 0:
        if s.m11 != 0:
            return [(-s.m12 / s.m11, Fraction(1))]
        return [(Fraction(1), Fraction(0))]
    if s.m11 == 0:
        # s = z*(2*m12*y + m22*z)
        return [(Fraction(1), Fraction(0)), (-s.m22, 2 * s.m12)]
    root = sqrt_exact(-s.det())
    return [((root - s.m12) / s.m11, Fraction(1)), ((-root - s.m12) / s.m11, Fraction(1))]


def unit_set_tp(params: TpParams) -> UnitSet:
    if not division_tp(params).is_division:
        raise NotDivision("unit sets are only classified for division algebras")
    return _units_from_forms(params)


def unit_set_td(params: TdParams) -> UnitSet:
    if not division_td(params).is_division:
        raise NotDivision(f"g + h^2/4 = {params.g + params.h ** 2 / 4} is not negative")
    return _units_from_forms(params.as_tp())


def verify_unit_set(t: StructureTable, units: UnitSet) -> bool:
    """Every point squares to -1 and every family does so identically on its relation."""
    minus_one = -t.unit()
    for p in units.points:
        if not all(a == b for a, b in zip(multiply(t, p, p), minus_one)):
            return False
    for f in units.families:
        u = f.symbolic()
        sq = multiply(t, u, u)
        if not all((a - b) == 0 for a, b in zip(sq, minus_one)):
            return False
    return True


# brute force

@dataclass(frozen=True, eq=False)
class BruteforceResult:
    units: list
    height: int
    symbolic: Optional[UnitSet] = None


def _scaled_products(t: StructureTable, others: list[int]):
    c = t.c[np.ix_(others, others, range(t.dim))]
    den = 1
    for v in c.ravel():
        den = den * Fraction(v).denominator // math.gcd(den, Fraction(v).denominator)
    C = np.array([[[int(Fraction(v) * den) for v in row] for row in mat] for mat in c], dtype=np.int64)
    return C, den


def units_bruteforce(t: StructureTable, height: int = 12) -> BruteforceResult:
    """All rational units u = r*1 + lam*d with d a primitive integer direction of height <= ``height``.

    Writing d^2 = sigma*1 + tau, u^2 = -1 forces tau = mu*d,
    lam^2 = -1 / (sigma + mu^2/4) and r = -lam*mu/2.
    """
    if t.unit_index is None:
        raise ValueError("brute force needs a unital table")
    if not t.exact:
        raise ValueError("brute force needs an exact table")
    u0 = t.unit_index
    others = [k for k in range(t.dim) if k != u0]
    C, den = _scaled_products(t, others)
    dirs = parallel_square_directions(C, np.array(others), height)
    found = []
    for d in dirs:
        sq = [Fraction(int(v), den) for v in np.einsum("a,b,abn->n", d, d, C)]
        sigma = sq[u0]
        tau = [sq[k] for k in others]
        a = next(k for k, v in enumerate(d) if v != 0)
        mu = tau[a] / int(d[a])
        val = sigma + mu * mu / 4
        if val >= 0:
            continue
        lam = sqrt_rational(-1 / val)
        if lam is None:
            continue
        for sgn in (1, -1):
            u = np.empty(t.dim, dtype=object)
            u[u0] = -sgn * lam * mu / 2
            for k, dk in zip(others, d):
                u[k] = sgn * lam * int(dk)
            found.append(u)
    symbolic = None
    if t.dim == 4 and is_tp_shaped(t):
        try:
            symbolic = _units_from_forms(tp_from_table(t))
        except NotDivision:
            pass
    found.sort(key=lambda u: tuple(u))
    return BruteforceResult(found, height, symbolic)


# eigenspaces of x -> i(xi)

@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    plus_basis: list
    minus_basis: list
    unit_used: np.ndarray

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.plus_basis), len(self.minus_basis)


def _require_unit(t: StructureTable, i) -> np.ndarray:
    i = np.asarray(i, dtype=object)
    if not all(a == b for a, b in zip(multiply(t, i, i), -t.unit())):
        raise NotImaginaryUnit(f"{list(i)} does not square to -1")
    return i


def sandwich_matrix(t: StructureTable, i) -> np.ndarray:
    """Matrix of x -> i(xi), i.e. L_i R_i."""
    return mul_operator(t, i, "left").matrix.dot(mul_operator(t, i, "right").matrix)


def eigen_decompose(t: StructureTable, i) -> EigenDecomposition:
    i = _require_unit(t, i)
    M = sandwich_matrix(t, i)
    eye = linalg.identity(t.dim)
    if not np.array_equal(M.dot(M), eye):
        raise NotInvolution("x -> i(xi) is not an involution")
    plus = linalg.nullspace(M - eye)
    minus = linalg.nullspace(M + eye)
    return EigenDecomposition(plus, minus, i)


def project_plus(t: StructureTable, i, x) -> np.ndarray:
    """(x + i(xi))/2, the component with i(xi) = x; it anticommutes with i."""
    return (np.asarray(x, dtype=object) + multiply(t, i, multiply(t, x, i))) / 2


def project_minus(t: StructureTable, i, x) -> np.ndarray:
    """(x - i(xi))/2, the component with i(xi) = -x; it commutes with i."""
    return (np.asarray(x, dtype=object) - multiply(t, i, multiply(t, x, i))) / 2


def nucleus_check(t: StructureTable, units) -> bool:
    """True iff no listed unit commutes with every basis element."""
    for u in units:
        if all(is_zero(commutator(t, u, t.basis(k))) for k in range(t.dim)):
            return False
    return True


def span_dimension_check(t: StructureTable, i, x) -> int:
    i = _require_unit(t, i)
    x = np.asarray(x, dtype=object)
    xi = multiply(t, x, i)
    vecs = [x, multiply(t, i, x), xi, multiply(t, i, xi)]
    return linalg.rank(np.column_stack(vecs))
