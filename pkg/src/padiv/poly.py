"""Dense univariate polynomials over Q and real-root isolation by Sturm chains.

A polynomial is a tuple of Fractions, constant term first; ``()`` is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Poly = tuple


def poly(coeffs: Sequence) -> Poly:
    return trim(tuple(Fraction(c) for c in coeffs))


def trim(p: Sequence[Fraction]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, scale(q, -1))


def scale(p: Poly, s) -> Poly:
    return trim(c * s for c in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = degree(q)
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    while len(r) - 1 >= dq and r:
        k = len(r) - 1 - dq
        f = r[-1] / lead
        quot[k] = f
        for i, b in enumerate(q):
            r[i + k] -= f * b
        r = list(trim(r))
    return trim(quot), trim(r)


def derivative(p: Poly) -> Poly:
    return trim(i * c for i, c in enumerate(p) if i)


def monic(p: Poly) -> Poly:
    return scale(p, 1 / p[-1]) if p else p


def gcd(p: Poly, q: Poly) -> Poly:
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def squarefree(p: Poly) -> Poly:
    """p divided by gcd(p, p'): same distinct roots, all simple."""
    if degree(p) < 1:
        return p
    return divmod_poly(p, gcd(p, derivative(p)))[0]


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_at(p: Poly, x) -> int:
    v = evaluate(p, x)
    return (v > 0) - (v < 0)


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, derivative(p)]
    while chain[-1]:
        r = divmod_poly(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append(scale(r, -1))
    return [c for c in chain if c]


def _variations(chain: list[Poly], x) -> int:
    signs = [s for s in (sign_at(c, x) for c in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: list[Poly], lo, hi) -> int:
    """Distinct real roots in (lo, hi]; ``lo`` must not be a root."""
    return _variations(chain, lo) - _variations(chain, hi)


def cauchy_bound(p: Poly) -> Fraction:
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootInterval:
    """Exactly one root of the owning polynomial lies in (lo, hi], or lo == hi is the root."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2


def isolate_roots(p: Poly) -> list[RootInterval]:
    """Isolating intervals for the distinct real roots of p, sorted."""
    p = squarefree(p)
    if degree(p) < 1:
        return []
    chain = sturm_chain(p)
    B = cauchy_bound(p)
    found: list[RootInterval] = []
    stack = [(-B, B, count_roots(chain, -B, B))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            found.append(RootInterval(lo, hi) if evaluate(p, hi) != 0 else RootInterval(hi, hi))
            continue
        mid = (lo + hi) / 2
        if evaluate(p, mid) == 0:
            found.append(RootInterval(mid, mid))
            d = (hi - lo) / 4
            while True:
                a, b = mid - d, mid + d
                if evaluate(p, a) != 0 and evaluate(p, b) != 0 and count_roots(chain, a, b) == 1:
                    break
                d /= 2
            stack.append((lo, a, count_roots(chain, lo, a)))
            stack.append((b, hi, count_roots(chain, b, hi)))
        else:
            stack.append((lo, mid, count_roots(chain, lo, mid)))
            stack.append((mid, hi, count_roots(chain, mid, hi)))
    return sorted(found, key=lambda iv: iv.lo)


def bisect(p: Poly, iv: RootInterval) -> RootInterval:
    """One bisection step on a simple root (p squarefree, sign change on the interval)."""
    if iv.exact:
        return iv
    mid = iv.mid
    sm = sign_at(p, mid)
    if sm == 0:
        return RootInterval(mid, mid)
    if sm == sign_at(p, iv.hi):
        return RootInterval(iv.lo, mid)
    return RootInterval(mid, iv.hi)


def refine(p: Poly, iv: RootInterval, width: Fraction) -> RootInterval:
    p = squarefree(p)
    while not iv.exact and iv.width > width:
        iv = bisect(p, iv)
    return iv
