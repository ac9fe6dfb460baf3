"""Exact scalars: rational helpers and the quadratic field Q(sqrt(D)).

Structure constants are always :class:`fractions.Fraction`.  A few places
need one square root of a rational (a unit ``k/sqrt(-g)``, a null direction
of an indefinite binary form); those values are carried exactly as
:class:`QuadSurd` numbers ``a + b*sqrt(D)`` instead of being rounded.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and rational strings ("3", "-2/5", "0.25")."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x!r}")
        # decimal reading of the float, so 0.1 -> 1/10
        return Fraction(repr(x))
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def format_rational(x: Fraction) -> str:
    return str(x)


def sign(x) -> int:
    if isinstance(x, QuadSurd):
        return x.sign()
    return (x > 0) - (x < 0)


def isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_rational(x: Fraction) -> Fraction | None:
    """Square root of ``x`` if it is a perfect rational square, else None."""
    x = Fraction(x)
    if x < 0:
        return None
    p = isqrt_exact(x.numerator)
    q = isqrt_exact(x.denominator)
    if p is None or q is None:
        return None
    return Fraction(p, q)


def _squarefree_split(n: int) -> tuple[int, int]:
    """Write n = m*m*k with k squarefree (trial division; inputs here are small)."""
    m, k = 1, n
    f = 2
    while f * f <= k:
        while k % (f * f) == 0:
            k //= f * f
            m *= f
        f += 1 if f == 2 else 2
    return m, k


def sqrt_exact(x) -> "Fraction | QuadSurd":
    """sqrt(x) for rational x >= 0, as a Fraction when possible."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("square root of a negative rational")
    r = sqrt_rational(x)
    if r is not None:
        return r
    # sqrt(p/q) = sqrt(p*q)/q, then pull squares out of p*q
    m, k = _squarefree_split(x.numerator * x.denominator)
    return QuadSurd(Fraction(0), Fraction(m, x.denominator), k)


def sign_sqrt_expr(a, b, x) -> int:
    """Exact sign of ``a + b*sqrt(x)`` for rationals a, b and x >= 0."""
    a, b, x = Fraction(a), Fraction(b), Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if b == 0 or x == 0:
        return sign(a)
    sb = sign(b)
    sa = sign(a)
    if sa == 0 or sa == sb:
        return sb
    d = a * a - b * b * x
    if d == 0:
        return 0
    return sa if d > 0 else sb


def sign_two_sqrt_expr(a, b, x, c, y) -> int:
    """Exact sign of ``a + b*sqrt(x) + c*sqrt(y)``; squares only when the
    two parts have opposite signs."""
    a, b, x, c, y = map(Fraction, (a, b, x, c, y))
    s1 = sign_sqrt_expr(a, b, x)
    if c == 0 or y == 0:
        return s1
    sc = sign(c)
    if s1 == 0:
        return sc
    if s1 == sc:
        return s1
    d = sign_sqrt_expr(a * a + b * b * x - c * c * y, 2 * a * b, x)
    if d == 0:
        return 0
    return s1 if d > 0 else sc


class QuadSurd:
    """Element ``a + b*sqrt(D)`` of Q(sqrt(D)), D a squarefree integer > 1.

    Mixed arithmetic with ints and Fractions is supported; combining two
    surds with different radicands raises ValueError.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b, D: int):
        if D <= 1:
            raise ValueError("radicand must be a squarefree integer > 1")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.D = int(D)

    @staticmethod
    def _lift(other, D):
        if isinstance(other, QuadSurd):
            if other.D != D:
                raise ValueError(f"incompatible radicands {D} and {other.D}")
            return other.a, other.b
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Fraction(other), Fraction(0)
        return None

    @staticmethod
    def _make(a, b, D):
        return a if b == 0 else QuadSurd(a, b, D)

    def __add__(self, other):
        o = self._lift(other, self.D)
        if o is None:
            return NotImplemented
        return self._make(self.a + o[0], self.b + o[1], self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.D)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other, self.D)
        if o is None:
            return NotImplemented
        return self._make(self.a - o[0], self.b - o[1], self.D)

    def __rsub__(self, other):
        o = self._lift(other, self.D)
        if o is None:
            return NotImplemented
        return self._make(o[0] - self.a, o[1] - self.b, self.D)

    def __mul__(self, other):
        o = self._lift(other, self.D)
        if o is None:
            return NotImplemented
        c, d = o
        return self._make(self.a * c + self.b * d * self.D, self.a * d + self.b * c, self.D)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.a, -self.b, self.D)

    def __truediv__(self, other):
        if isinstance(other, QuadSurd):
            return self * other.inverse()
        o = self._lift(other, self.D)
        if o is None:
            return NotImplemented
        return self._make(self.a / o[0], self.b / o[0], self.D)

    def __rtruediv__(self, other):
        o = self._lift(other, self.D)
        if o is None:
            return NotImplemented
        return self.inverse() * o[0]

    def inverse(self) -> "QuadSurd":
        n = self.norm()  # nonzero: sqrt(D) is irrational
        return QuadSurd(self.a / n, -self.b / n, self.D)

    def sign(self) -> int:
        return sign_sqrt_expr(self.a, self.b, self.D)

    def __eq__(self, other):
        if isinstance(other, QuadSurd):
            return self.D == other.D and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __repr__(self):
        return f"QuadSurd({self.a}, {self.b}, {self.D})"

    def __str__(self):
        return f"{self.a}+{self.b}*sqrt({self.D})"


def to_float(x) -> float:
    return float(x)


def format_scalar(x) -> str | float:
    """JSON-friendly form: rationals as "p/q", surds as "a+b*sqrt(D)", floats as-is."""
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return str(Fraction(x))
    if isinstance(x, QuadSurd):
        return str(x)
    return float(x)
