"""Conformal levels: where the W-algebra central charge meets the Sugawara sum.

Polynomials are tuples of integer coefficients, lowest degree first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .qseries import as_rational

Poly = tuple


class PoleEvaluation(ZeroDivisionError):
    pass


def p_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def p_mul(a: Poly, b: Poly) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def p_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def p_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _trim(c) -> Poly:
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def primitive(p: Poly) -> Poly:
    g = 0
    for c in p:
        g = math.gcd(g, c)
    if g == 0:
        return p
    sign = -1 if p[-1] < 0 else 1
    return tuple(sign * c // g for c in p)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def deflate(p: Poly, r: Fraction) -> Poly:
    """Exact quotient of p by (den*k - num) for a root r = num/den."""
    # synthetic division by (k - r), then rescale to integer coefficients
    n = len(p) - 1
    q = [Fraction(0)] * n
    carry = Fraction(0)
    for i in range(n, 0, -1):
        carry = carry * r + p[i]
        q[i - 1] = carry
    assert carry * r + p[0] == 0, "deflation by a non-root"
    return _integral(q)


def _integral(q) -> Poly:
    den = math.lcm(*(Fraction(c).denominator for c in q))
    return primitive(tuple(int(Fraction(c) * den) for c in q))


def rational_roots(p: Poly) -> tuple[list[Fraction], Poly]:
    """All rational roots with multiplicity, and the remaining cofactor."""
    p = primitive(_trim(p))
    roots: list[Fraction] = []
    while len(p) > 1 and p[0] == 0:
        roots.append(Fraction(0))
        p = primitive(p[1:])
    changed = True
    while changed and len(p) > 1:
        changed = False
        for a in _divisors(p[0]):
            for b in _divisors(p[-1]):
                for r in (Fraction(a, b), Fraction(-a, b)):
                    if p_eval(p, r) == 0:
                        roots.append(r)
                        p = deflate(p, r)
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    return roots, p


@dataclass(frozen=True)
class RationalFunction:
    num: Poly
    den: Poly

    def __call__(self, k: Fraction) -> Fraction:
        d = p_eval(self.den, k)
        if d == 0:
            raise PoleEvaluation(f"pole at k = {k}")
        return p_eval(self.num, k) / d


@dataclass(frozen=True)
class LevelCase:
    """c_W(k) against c_sug(k) = sug[0](k) + sug[1](k)."""

    tag: str
    c_w: RationalFunction
    sug: tuple

    def poles(self) -> set[Fraction]:
        out = set()
        for f in (self.c_w,) + tuple(self.sug):
            out.update(rational_roots(f.den)[0])
        return out


F4 = LevelCase(
    "F4",
    RationalFunction((-252, -138, -18), (9, 1)),  # -6(3+k)(14+3k)/(9+k)
    (RationalFunction((120, 24), (42, 8)), RationalFunction((12, 3), (6, 1))),
)

E8 = LevelCase(
    "E8",
    RationalFunction((-74940, -6570, -144), (30, 1)),  # -6(12490+1095k+24k^2)/(30+k)
    (RationalFunction((1050, 45), (352, 15)), RationalFunction((66, 3), (24, 1))),
)

CASES = {"f4": F4, "e8": E8}


def w_charges(case: LevelCase, k) -> tuple[Fraction, Fraction]:
    k = as_rational(k)
    return case.c_w(k), sum((f(k) for f in case.sug), Fraction(0))


def cleared_polynomial(case: LevelCase) -> Poly:
    """Integer primitive numerator of c_W - c_sug over the product of denominators."""
    dens = [case.c_w.den] + [f.den for f in case.sug]
    total: Poly = (0,)
    nums = [case.c_w.num] + [p_neg(f.num) for f in case.sug]
    for i, num in enumerate(nums):
        t = num
        for j, d in enumerate(dens):
            if j != i:
                t = p_mul(t, d)
        total = p_add(total, t)
    return primitive(total)


@dataclass(frozen=True)
class LevelReport:
    case: str
    polynomial: Poly
    roots: frozenset
    discarded_poles: frozenset
    residual: Poly
    multiplicity: tuple = ()  # (root, multiplicity) pairs for kept roots

    @property
    def degree(self) -> int:
        return len(self.polynomial) - 1

    @property
    def residual_degree(self) -> int:
        return len(self.residual) - 1


def conformal_levels(case: LevelCase) -> LevelReport:
    poly = cleared_polynomial(case)
    roots, rest = rational_roots(poly)
    poles = case.poles()
    kept = frozenset(r for r in roots if r not in poles)
    mult = tuple(sorted((r, roots.count(r)) for r in kept))
    return LevelReport(
        case.tag, poly, kept, frozenset(r for r in roots if r in poles), rest, mult
    )
