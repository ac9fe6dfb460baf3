"""Canonical form A_{g,h}, isomorphisms, automorphisms and the commutator Lie algebra."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

import numpy as np

from . import linalg
from .algebra import (I, ONE, V, W, StructureTable, TdParams, TpParams, build_td, build_tp,
                      change_of_basis, commutator, multiply)
from .errors import (NotDivision, NotPartiallyAlternative, PreconditionViolated,
                     ResidualTooLarge, TooFewUnits)
from .exact import QuadSurd, sqrt_rational
from .forms import Definiteness, definiteness, division_td, division_tp, forms_pq, forms_rs
from .units import UnitKind, _null_directions, _units_from_forms

RESIDUAL_TOL = 1e-9


class Exactness(enum.Enum):
    Exact = "Exact"
    FloatRefined = "FloatRefined"


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    params: TdParams
    basis_change: np.ndarray
    exactness: Exactness
    residual: float = 0.0

    @property
    def normalized(self) -> tuple[Fraction, Fraction]:
        """(g, |h|): one representative per isomorphism class."""
        return self.params.g, abs(self.params.h)


# directions tried for a sphere of units, looking for -r(y, z) a rational square
_SPHERE_DIRECTIONS = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1),
                      (3, 4), (4, 3), (1, 3), (3, 1)]


def _vec(*coords) -> np.ndarray:
    out = np.empty(len(coords), dtype=object)
    for k, v in enumerate(coords):
        out[k] = Fraction(v) if isinstance(v, int) else v
    return out


def _pick_direction(params: TpParams, kind: UnitKind):
    r, s = forms_rs(params)
    if kind == UnitKind.Sphere:
        cands = [(Fraction(y), Fraction(z)) for y, z in _SPHERE_DIRECTIONS]
        for y, z in cands:
            if sqrt_rational(-r(y, z)) is not None:
                return y, z
        return cands[0]
    dirs = _null_directions(s)
    # a rational null line gives rational (g, h) and possibly an exact basis change
    for y, z in dirs:
        if not isinstance(y, QuadSurd) and not isinstance(z, QuadSurd):
            return y, z
    return dirs[0]


def canonicalize(params: TpParams) -> CanonicalForm:
    """Basis {1, i, j, k} of a T_p algebra with at least three units in which it reads T_d(g, h).

    w' = y*w + z*v along a null line of s, v' = w'*i, then both are divided by
    sqrt(-w'^2).  The rescaling is exact when -w'^2 is a rational square;
    otherwise the basis change is carried in floats and certified by residual.
    """
    if not division_tp(params).is_division:
        raise NotDivision("canonical form needs a division algebra")
    kind = _units_from_forms(params).kind
    if kind == UnitKind.TwoPoints:
        raise TooFewUnits("s is definite: the only imaginary units are +-i")
    y, z = _pick_direction(params, kind)
    t = build_tp(params)
    w1 = _vec(0, 0, y, z)
    v1 = multiply(t, w1, t.basis(I))
    ww, wv = multiply(t, w1, w1), multiply(t, w1, v1)
    vw, vv = multiply(t, v1, w1), multiply(t, v1, v1)
    a1 = ww[ONE]
    if ww[I] != 0 or any(x[W] != 0 or x[V] != 0 for x in (ww, wv, vw, vv)):
        raise NotPartiallyAlternative("rebased table leaves the T_p shape")
    if a1 >= 0:
        raise NotDivision("w'^2 >= 0")
    # after scaling by 1/sqrt(-a1): w''v'' = -i and v''w'' = i exactly when PA holds
    if not (wv[ONE] == 0 and wv[I] == a1 and vw[ONE] == 0 and vw[I] == -a1):
        raise NotPartiallyAlternative(
            "w'v' and v'w' do not reduce to -i and i; the algebra is not partially alternative")
    g, h = vv[ONE] / -a1, vv[I] / -a1
    if isinstance(g, QuadSurd) or isinstance(h, QuadSurd):
        raise NotPartiallyAlternative("canonical parameters are irrational")
    target = TdParams(g, h)

    sigma = sqrt_rational(-a1) if not isinstance(a1, QuadSurd) else None
    if sigma is not None:
        B = linalg.exact_array(np.eye(4, dtype=int))
        B[:, W] = w1 / sigma
        B[:, V] = v1 / sigma
        new = change_of_basis(t, B)
        if not new == build_td(target):
            raise NotPartiallyAlternative("exact basis change does not reach T_d")
        return CanonicalForm(target, B, Exactness.Exact, 0.0)

    sf = float(-a1) ** 0.5
    B = np.eye(4)
    B[:, W] = [float(x) / sf for x in w1]
    B[:, V] = [float(x) / sf for x in v1]
    new = change_of_basis(t.to_float(), B)
    residual = float(np.max(np.abs(new.c - build_td(target).to_float().c)))
    if residual >= RESIDUAL_TOL:
        raise ResidualTooLarge(f"float basis change leaves residual {residual:.3e}")
    return CanonicalForm(target, B, Exactness.FloatRefined, residual)


# homomorphism checks

def is_homomorphism(M, t1: StructureTable, t2: StructureTable) -> bool:
    """M(xy) = M(x)M(y) on every pair of basis vectors, exactly for exact M."""
    M = np.asarray(M)
    exact = M.dtype == object
    c1 = t1.c if exact or not t1.exact else t1.c.astype(float)
    # pairs without the unit first: they reject wrong candidates soonest
    pairs = sorted(product(range(t1.dim), repeat=2), key=lambda ab: t1.unit_index in ab)
    for a, b in pairs:
        lhs = M.dot(c1[a, b])
        rhs = multiply(t2, M[:, a], M[:, b])
        if exact:
            if not all(x == y for x, y in zip(lhs, rhs)):
                return False
        elif not np.allclose(lhs.astype(float), rhs.astype(float), atol=1e-9):
            return False
    return True


def _diag(*entries) -> np.ndarray:
    M = linalg.exact_array(np.zeros((len(entries), len(entries)), dtype=int))
    for k, e in enumerate(entries):
        M[k, k] = Fraction(e)
    return M


def _require_pa_division(p: TdParams) -> None:
    if not division_td(p).is_division:
        raise NotDivision(f"T_d({p.g}, {p.h}) is not a division algebra")
    if p.h == 0 and p.g != -1:
        raise NotPartiallyAlternative(f"T_d({p.g}, 0) is partially alternative only for g = -1")


@dataclass(frozen=True, eq=False)
class IsomorphismVerdict:
    isomorphic: bool
    witness: Optional[np.ndarray] = None

    def __bool__(self):
        return self.isomorphic


def isomorphic(p1: TdParams, p2: TdParams) -> IsomorphismVerdict:
    _require_pa_division(p1)
    _require_pa_division(p2)
    if p1.g != p2.g or abs(p1.h) != abs(p2.h):
        return IsomorphismVerdict(False)
    # h' = -h: i -> -i', j -> j', hence k = ji -> -k'
    M = _diag(1, 1, 1, 1) if p1.h == p2.h else _diag(1, -1, 1, -1)
    if not is_homomorphism(M, build_td(p1), build_td(p2)):
        raise AssertionError("constructed isomorphism failed verification")
    return IsomorphismVerdict(True, M)


class AutGroup(enum.Enum):
    SO3 = "SO3"
    Z2 = "Z2"


@dataclass(frozen=True, eq=False)
class AutomorphismReport:
    group: AutGroup
    nontrivial_generator: Optional[np.ndarray] = None
    sampled_rotations: tuple = ()


Z2_GENERATOR = (1, 1, -1, -1)

# unit quaternions a + b*i + c*j + d*k with integer entries; conjugation gives rational rotations
_SAMPLE_QUATERNIONS = [(1, 1, 0, 0), (1, 2, 3, 4), (2, -1, 1, 3)]


def quaternion_rotation(q) -> np.ndarray:
    """Matrix of x -> q x q^-1 in T_d(-1, 0), exact."""
    t = build_td(TdParams(-1, 0))
    q = linalg.exact_array(q)
    norm = sum(c * c for c in q)
    q_inv = linalg.exact_array([q[0], -q[1], -q[2], -q[3]]) / norm
    cols = [multiply(t, multiply(t, q, t.basis(k)), q_inv) for k in range(4)]
    return np.column_stack(cols)


def automorphism_group(params: TdParams) -> AutomorphismReport:
    _require_pa_division(params)
    t = build_td(params)
    if params.h != 0:
        M = _diag(*Z2_GENERATOR)
        if not is_homomorphism(M, t, t) or not np.array_equal(M.dot(M), linalg.identity(4)):
            raise AssertionError("Z2 generator failed verification")
        return AutomorphismReport(AutGroup.Z2, M)
    rots = tuple(quaternion_rotation(q) for q in _SAMPLE_QUATERNIONS)
    for R in rots:
        if not is_homomorphism(R, t, t):
            raise AssertionError("sampled rotation failed verification")
    return AutomorphismReport(AutGroup.SO3, None, rots)


def _bounded_rationals(height: int) -> list[Fraction]:
    vals = {Fraction(n, d) for d in range(1, height + 1) for n in range(-height, height + 1) if n}
    return sorted(vals)


def search_automorphisms(params: TdParams, height: int = 6) -> list[np.ndarray]:
    """Every automorphism with i -> b*i, j -> c*j for rational b, c of height <= ``height``.

    Slow oracle: k = ji must go to c*b*k, everything else is forced.
    """
    t = build_td(params)
    vals = _bounded_rationals(height)
    found = []
    for b, c in product(vals, vals):
        M = _diag(1, b, c, b * c)
        if is_homomorphism(M, t, t):
            found.append(M)
    return found


# Lie algebra of the commutator

class LieType(enum.Enum):
    G1xG37 = "G1xG37"
    G1xG35 = "G1xG35"
    G49 = "G49"


@dataclass(frozen=True)
class LieClassification:
    alpha: Fraction
    beta: Fraction
    type: LieType
    invariant_fingerprint: tuple

    @property
    def consistent(self) -> bool:
        """Whether the fingerprint is the one expected for the label."""
        return self.invariant_fingerprint in EXPECTED_FINGERPRINTS[self.type]


# (derived dim, center dim, Killing signature of the derived algebra as (pos, neg, zero))
EXPECTED_FINGERPRINTS = {
    LieType.G1xG37: {(3, 1, (0, 3, 0))},
    LieType.G1xG35: {(2, 1, (0, 0, 2))},
    LieType.G49: {(3, 1, (0, 0, 3))},
}


def bracket_constants(t: StructureTable) -> np.ndarray:
    """C[a, b, :] = coords of [e_a, e_b]."""
    n = t.dim
    C = np.empty((n, n, n), dtype=object)
    for a, b in product(range(n), repeat=2):
        C[a, b, :] = commutator(t, t.basis(a), t.basis(b))
    return C


def jacobi_holds(t: StructureTable) -> bool:
    n = t.dim
    br = lambda x, y: commutator(t, x, y)  # noqa: E731
    for a, b, c in product(range(n), repeat=3):
        x, y, z = t.basis(a), t.basis(b), t.basis(c)
        s = br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))
        if any(v != 0 for v in s):
            return False
    return True


def signature(S) -> tuple[int, int, int]:
    """(pos, neg, zero) inertia of a symmetric rational matrix, by congruence."""
    A = [list(row) for row in linalg.exact_array(S)]
    n = len(A)
    pos = neg = 0
    k = 0
    while k < n:
        # bring a nonzero diagonal entry to position k
        piv = next((j for j in range(k, n) if A[j][j] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            # row/col i += row/col j makes A[i][i] = 2*A[i][j] != 0
            for m in range(n):
                A[i][m] += A[j][m]
            for m in range(n):
                A[m][i] += A[m][j]
            piv = i
        A[k], A[piv] = A[piv], A[k]
        for row in A:
            row[k], row[piv] = row[piv], row[k]
        d = A[k][k]
        pos += d > 0
        neg += d < 0
        for i in range(k + 1, n):
            f = A[i][k] / d
            if f:
                for m in range(k, n):
                    A[i][m] -= f * A[k][m]
                for m in range(k, n):
                    A[m][i] -= f * A[m][k]
        k += 1
    return pos, neg, n - pos - neg


def lie_fingerprint(t: StructureTable) -> tuple:
    n = t.dim
    C = bracket_constants(t)
    span = np.column_stack([C[a, b] for a, b in product(range(n), repeat=2)])
    # basis of the derived algebra: independent columns
    D: list = []
    for col in span.T:
        if linalg.rank(np.column_stack(D + [col])) > len(D):
            D.append(col)
    center = linalg.nullspace(np.vstack([np.column_stack([C[a, b] for a in range(n)]) for b in range(n)]))
    m = len(D)
    if m == 0:
        return (0, len(center), (0, 0, 0))
    Dmat = np.column_stack(D)
    # ad_x restricted to D, written in D coordinates (least-squares free: D is closed under brackets)
    rows = [r for r in range(n) if any(v != 0 for v in Dmat[r])]
    pick: list = []
    for r in rows:
        if linalg.rank(Dmat[pick + [r]]) > len(pick):
            pick.append(r)
    Dinv = linalg.inverse(Dmat[pick])

    def ad(x):
        return np.column_stack([Dinv.dot(commutator(t, x, d)[pick]) for d in D])

    ads = [ad(d) for d in D]
    K = np.empty((m, m), dtype=object)
    for a, b in product(range(m), repeat=2):
        K[a, b] = np.trace(ads[a].dot(ads[b]))
    return (m, len(center), signature(K))


def lie_classify(params: TpParams) -> LieClassification:
    if not division_tp(params).is_division:
        raise NotDivision("Lie typing is stated for division algebras")
    alpha = params.e - params.c
    beta = params.f - params.d
    if beta != 0:
        kind = LieType.G1xG37
    elif alpha == 0:
        kind = LieType.G1xG35
    else:
        kind = LieType.G49
    return LieClassification(alpha, beta, kind, lie_fingerprint(build_tp(params)))


def g35_det_q(params: TpParams) -> Fraction:
    """4*det(Q) when c = e and d = f: 4(ad - bc)(ch - dg) - (ah - bg)^2."""
    a, b, c, d, e, f, g, h = params.as_tuple()
    return 4 * (a * d - b * c) * (c * h - d * g) - (a * h - b * g) ** 2


def lie_g35_impossibility_check(params: TpParams) -> bool:
    """True iff q fails to be positive definite (so [v, w] = 0 with definite s is never division)."""
    if params.c != params.e or params.d != params.f:
        raise PreconditionViolated("needs c = e and d = f")
    _, s = forms_rs(params)
    if not definiteness(s).definite:
        raise PreconditionViolated("needs s definite")
    _, q = forms_pq(params)
    if 4 * q.det() != g35_det_q(params):
        raise AssertionError("closed form for det(Q) disagrees with the matrix")
    return definiteness(q) != Definiteness.PositiveDefinite
