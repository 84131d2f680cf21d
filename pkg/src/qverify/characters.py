"""Central charges, conformal weights and character q-series.

Most characters here have the shape ``q^pref * numerator / (q;q)_inf^power``
with a finite Laurent polynomial as numerator.  ``CharacterParts`` keeps
that shape exact so that products and sums of characters can be formed
before any truncation happens.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .modforms import eta_power, triangular_delta
from .qseries import EXACT, QSeries, as_rational, product_expand


class ZeroParameter(ValueError):
    pass


class EmptySum(ValueError):
    pass


def central_charge(p_prime: int, p: int) -> Fraction:
    """c_{p',p} = 1 - 6 (p - p')^2 / (p p')."""
    if p * p_prime == 0:
        raise ZeroParameter("p and p' must be nonzero")
    return 1 - Fraction(6 * (p - p_prime) ** 2, p * p_prime)


def conformal_weight(p_prime: int, p: int, r: int, s: int) -> Fraction:
    """h^{p',p}_{r,s} = ((s p - r p')^2 - (p - p')^2) / (4 p p')."""
    if p * p_prime == 0:
        raise ZeroParameter("p and p' must be nonzero")
    return Fraction((s * p - r * p_prime) ** 2 - (p - p_prime) ** 2, 4 * p * p_prime)


def cp_central_charge(n: int) -> Fraction:
    return Fraction(6 * (1 + n - n * n), n)


@dataclass(frozen=True)
class CharacterParts:
    """``q^pref * numerator * (q;q)_inf^(-power)`` with an exact numerator."""

    pref: Fraction
    numerator: QSeries
    power: int

    def __mul__(self, other: "CharacterParts") -> "CharacterParts":
        return CharacterParts(
            self.pref + other.pref, self.numerator * other.numerator, self.power + other.power
        )

    def min_exponent(self) -> Fraction:
        """Lowest exponent of the full character (numerator is never zero here)."""
        return self.pref + self.numerator.order()

    def series(self, N) -> QSeries:
        N = as_rational(N)
        num = self.numerator
        if num.is_zero:
            return QSeries.zero(N)
        rel = N - self.pref
        head = num.truncate(rel) if num.acc > rel else num
        denom = product_expand(1, 1, -self.power, rel - num.order())
        return (head * denom).shift(self.pref).truncate(N)


def sum_parts(parts: Iterable[CharacterParts], N) -> QSeries:
    """Sum characters sharing one prefactor and pochhammer power, truncated below N."""
    N = as_rational(N)
    parts = list(parts)
    if not parts:
        return QSeries.zero(N)
    pref, power = parts[0].pref, parts[0].power
    rel = N - pref
    total = QSeries.zero(rel)
    for pt in parts:
        if pt.pref != pref or pt.power != power:
            raise ValueError("summands must share prefactor and pochhammer power")
        num = pt.numerator
        total = total + (num.truncate(rel) if num.acc > rel else num)
    return CharacterParts(pref, total, power).series(N)


def _poly(pairs: Iterable[tuple]) -> QSeries:
    return QSeries.from_exponents(list(pairs), EXACT)


# Virasoro ------------------------------------------------------------------


def vir_char_parts(p: int, i: int) -> CharacterParts:
    """Character of L^Vir(c_{1,p}, h^{1,p}_{1,i})."""
    if i < 1:
        raise ValueError("i must be >= 1")
    pref = -central_charge(1, p) / 24
    num = _poly([(conformal_weight(1, p, 1, i), 1), (conformal_weight(1, p, 1, -i), -1)])
    return CharacterParts(pref, num, 1)


def vir_char(p: int, i: int, N) -> QSeries:
    return vir_char_parts(p, i).series(N)


# affine sl2 at negative level ----------------------------------------------

_AFFINE_PREFACTOR = {3: Fraction(-5, 24), 4: Fraction(-3, 16)}


def _affine_numerator(p: int, family: str, ell: int) -> list[tuple[Fraction, int]]:
    out: list[tuple[Fraction, int]] = []
    if family == "A":
        # level -p-2 module with highest weight 2p*ell*Lambda_1
        for i in range(ell + 1):
            out.append((Fraction(-i * (p * i + 1)), 2 * p * i + 1))
        for i in range(1, ell + 1):
            out.append((Fraction(-i * (p * i - 1)), -(2 * p * i - 1)))
        return out
    if p == 3:
        for i in range(1, ell + 1):
            out.append((Fraction(-(2 * i - 1) * (6 * i - 1), 4), 6 * i - 2))
            out.append((Fraction(-(2 * i - 1) * (6 * i - 5), 4), -(6 * i - 4)))
    else:
        for i in range(1, ell + 1):
            out.append((Fraction(-(2 * i - 1) * (4 * i - 1), 2), 8 * i - 3))
            out.append((Fraction(-(2 * i - 1) * (4 * i - 3), 2), -(8 * i - 5)))
    return out


def affine_neg_char_parts(p: int, family: str, ell: int) -> CharacterParts:
    """Characters of the level -p-2 sl2-modules of the two displayed families.

    Family A is L(-(p+2+2p*ell)Lambda_0 + 2p*ell*Lambda_1); family B is
    L(-(2+2p*ell)Lambda_0 + (2p*ell - p)Lambda_1), which needs ell >= 1.
    """
    if p not in _AFFINE_PREFACTOR:
        raise ValueError("only p = 3 and p = 4 are supported")
    if family not in ("A", "B"):
        raise ValueError("family must be 'A' or 'B'")
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    if family == "B" and ell == 0:
        raise EmptySum("family B needs ell >= 1")
    return CharacterParts(_AFFINE_PREFACTOR[p], _poly(_affine_numerator(p, family, ell)), 3)


def affine_neg_char(p: int, family: str, ell: int, N) -> QSeries:
    return affine_neg_char_parts(p, family, ell).series(N)


def decomposition_summand(p: int, ell: int) -> CharacterParts:
    """ell-th summand L(-(p+2+p*ell)Lambda_0 + p*ell*Lambda_1) x L^Vir(c_{1,p}, h_{1,ell+1}).

    Even ell uses family A at ell/2, odd ell family B at (ell+1)/2.
    """
    if ell % 2 == 0:
        aff = affine_neg_char_parts(p, "A", ell // 2)
    else:
        aff = affine_neg_char_parts(p, "B", (ell + 1) // 2)
    return aff * vir_char_parts(p, ell + 1)


def decomposition_sum(p: int, N) -> QSeries:
    """sum_ell of the decomposition summands, cut where a summand starts at >= N."""
    N = as_rational(N)
    parts = []
    last = None
    ell = 0
    while True:
        pt = decomposition_summand(p, ell)
        lo = pt.min_exponent()
        assert last is None or lo > last, "summand minimal exponents must increase"
        last = lo
        if lo >= N:
            break
        parts.append(pt)
        ell += 1
    return sum_parts(parts, N)


# other characters ----------------------------------------------------------


def admissible_char(n: int, ell: int, N) -> QSeries:
    """ch of L(-((2n-1)/n + ell)Lambda_0 + ell*Lambda_1)."""
    pref = Fraction(2 * n - 1, 8) + Fraction(n * ell * (ell + 2), 4)
    return CharacterParts(pref, QSeries.constant(ell + 1), 3).series(N)


def weyl_char(m: int, N) -> QSeries:
    """ch of the rank-m Weyl vertex algebra M_(m): q^(m/24) prod (1 - q^(n-1/2))^(-2m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    N = as_rational(N)
    pref = Fraction(m, 24)
    return product_expand(Fraction(1, 2), 1, -2 * m, N - pref).shift(pref)


def sl3_char(N) -> QSeries:
    """ch of L_{-3/2}(sl3) = q^(1/3) (q^2;q^2)^8 / (q;q)^8."""
    N = as_rational(N)
    rel = N - Fraction(1, 3)
    return (product_expand(2, 2, 8, rel) * product_expand(1, 1, -8, rel)).shift(Fraction(1, 3))


def sl3_char_via_delta(N) -> QSeries:
    """q^(1/3) Delta(q)^4 / (q;q)^4, the second displayed form."""
    N = as_rational(N)
    rel = N - Fraction(1, 3)
    return (triangular_delta(rel) ** 4 * product_expand(1, 1, -4, rel)).shift(Fraction(1, 3))


# monotone double-sum enumeration ------------------------------------------


def enumerate_block(
    exponent: Callable[[int, int], Fraction],
    coeff: Callable[[int, int], int],
    N: Fraction,
    out: dict,
    sign: int = 1,
) -> None:
    """Accumulate sign*coeff(k,i) q^exponent(k,i) over k, i >= 0 with exponent < N.

    The exponent must increase strictly in each index; this is checked on
    every visited point.
    """
    k = 0
    prev_row = None
    while True:
        e0 = exponent(k, 0)
        if prev_row is not None:
            assert e0 > prev_row, "block exponent not increasing in the outer index"
        prev_row = e0
        if e0 >= N:
            return
        i, e = 0, e0
        while e < N:
            out[e] = out.get(e, 0) + sign * coeff(k, i)
            nxt = exponent(k, i + 1)
            assert nxt > e, "block exponent not increasing in the inner index"
            i, e = i + 1, nxt
        k += 1


def cp_numerator(n: int, N, verbatim: bool = False) -> QSeries:
    """The four-block double sum equal to (q;q)^6 q^(c/24) ch[C_n], below N.

    The second block carries the factor (2n(i+1) - 1), which is what the
    even negative-i part of the signed (i, k) double sum produces.  With
    ``verbatim=True`` the printed factor (1 + 2in) is used instead; that
    variant differs from ch[M_(3)] for n = 2 starting at depth n + 1 and
    is kept only to document the discrepancy.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    N = as_rational(N)
    h = Fraction(1, 2)
    out: dict = {}
    enumerate_block(
        lambda k, i: Fraction(k * (k + 1) * n + i * (2 * k * n + n - 1)),
        lambda k, i: (1 + 2 * (i + k)) * (1 + 2 * i * n),
        N, out, 1,
    )
    enumerate_block(
        lambda k, i: Fraction(k * (1 + k) * n + (i + 1) * (1 + n + 2 * k * n)),
        (lambda k, i: (3 + 2 * (i + k)) * (1 + 2 * i * n))
        if verbatim
        else (lambda k, i: (3 + 2 * (i + k)) * (2 * n * (i + 1) - 1)),
        N, out, -1,
    )
    enumerate_block(
        lambda k, i: h + (k * k - h) * n + (1 + i) * (-1 + n + 2 * k * n),
        lambda k, i: 2 * (1 + i + k) * (1 + n + 2 * i * n),
        N, out, 1,
    )
    enumerate_block(
        lambda k, i: -h + (k * k - h) * n + (1 + i) * (1 + n + 2 * k * n),
        lambda k, i: 2 * (1 + i + k) * (-1 + n + 2 * i * n),
        N, out, -1,
    )
    return QSeries.from_exponents(out, N)


def cp_char(n: int, N) -> QSeries:
    """ch[C_n] = q^(-c_n/24) * (four-block sum) / (q;q)^6."""
    N = as_rational(N)
    pref = -cp_central_charge(n) / 24
    rel = N - pref
    return (cp_numerator(n, rel) * product_expand(1, 1, -6, rel)).shift(pref)


# series of the character-identity proofs -----------------------------------


def _triangle_sum(
    terms: Callable[[int], list[tuple[Fraction, int]]], start: int, N: Fraction, out: dict
) -> None:
    """Add the finite inner sums terms(ell) for ell = start, start+1, ...

    Stops at the first ell whose smallest exponent is >= N; smallest
    exponents must increase with ell.
    """
    last = None
    ell = start
    while True:
        ts = terms(ell)
        lo = min(e for e, _ in ts)
        assert last is None or lo > last, "row minima must increase"
        last = lo
        if lo >= N:
            return
        for e, c in ts:
            if e < N:
                out[e] = out.get(e, 0) + c
        ell += 1


def _bq_rows(N: Fraction, out: dict) -> None:
    F = Fraction

    def block1(l):
        ts = []
        for i in range(l + 1):
            ts.append((F(l * (3 * l + 2) - i * (3 * i + 1)), 6 * i + 1))
            ts.append((F((l + 1) * (3 * l + 1) - i * (3 * i + 1)), -(6 * i + 1)))
        return ts

    def block2(l):
        ts = []
        for i in range(1, l + 1):
            ts.append((F(l * (3 * l + 2) - i * (3 * i - 1)), -(6 * i - 1)))
            ts.append((F((l + 1) * (3 * l + 1) - i * (3 * i - 1)), 6 * i - 1))
        return ts

    def block3(l):
        ts = []
        for i in range(1, l + 1):
            ts.append((F((2 * l - 1) * (6 * l + 1) - (2 * i - 1) * (6 * i - 1), 4), 6 * i - 2))
            ts.append((F((2 * l + 1) * (6 * l - 1) - (2 * i - 1) * (6 * i - 1), 4), -(6 * i - 2)))
        return ts

    def block4(l):
        ts = []
        for i in range(1, l + 1):
            ts.append((F((2 * l - 1) * (6 * l + 1) - (2 * i - 1) * (6 * i - 5), 4), -(6 * i - 4)))
            ts.append((F((2 * l + 1) * (6 * l - 1) - (2 * i - 1) * (6 * i - 5), 4), 6 * i - 4))
        return ts

    _triangle_sum(block1, 0, N, out)
    _triangle_sum(block2, 1, N, out)
    _triangle_sum(block3, 1, N, out)
    _triangle_sum(block4, 1, N, out)


def bq_series(N) -> QSeries:
    """The four displayed double sums B[q] (quarter-integer exponents)."""
    N = as_rational(N)
    out: dict = {}
    _bq_rows(N, out)
    return QSeries.from_exponents(out, N)


def cq_series(N) -> QSeries:
    """The four displayed double sums C[q] (half-integer exponents)."""
    N = as_rational(N)
    F = Fraction
    out: dict = {}

    def block1(l):
        ts = []
        for i in range(l + 1):
            ts.append((F(l * (4 * l + 3) - i * (4 * i + 1)), 8 * i + 1))
            ts.append((F((l + 1) * (4 * l + 1) - i * (4 * i + 1)), -(8 * i + 1)))
        return ts

    def block2(l):
        ts = []
        for i in range(1, l + 1):
            ts.append((F(l * (4 * l + 3) - i * (4 * i - 1)), -(8 * i - 1)))
            ts.append((F((l + 1) * (4 * l + 1) - i * (4 * i - 1)), 8 * i - 1))
        return ts

    def block3(l):
        ts = []
        for i in range(1, l + 1):
            ts.append((F((2 * l - 1) * (4 * l + 1) - (2 * i - 1) * (4 * i - 1), 2), 8 * i - 3))
            ts.append((F((2 * l + 1) * (4 * l - 1) - (2 * i - 1) * (4 * i - 1), 2), -(8 * i - 3)))
        return ts

    def block4(l):
        ts = []
        for i in range(1, l + 1):
            ts.append((F((2 * l - 1) * (4 * l + 1) - (2 * i - 1) * (4 * i - 3), 2), -(8 * i - 5)))
            ts.append((F((2 * l + 1) * (4 * l - 1) - (2 * i - 1) * (4 * i - 3), 2), 8 * i - 5))
        return ts

    _triangle_sum(block1, 0, N, out)
    _triangle_sum(block2, 1, N, out)
    _triangle_sum(block3, 1, N, out)
    _triangle_sum(block4, 1, N, out)
    return QSeries.from_exponents(out, N)


def legendre_rhs(N) -> QSeries:
    """sum_{j,k>=0} (2k+1) q^(((2j+1)(2k+1)-1)/2) below N."""
    N = as_rational(N)
    out: dict = {}
    enumerate_block(
        lambda j, k: Fraction((2 * j + 1) * (2 * k + 1) - 1, 2),
        lambda j, k: 2 * k + 1,
        N, out,
    )
    return QSeries.from_exponents(out, N)


# eight-class partition of the Legendre lattice -----------------------------


def _is_nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def _is_neg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x < 0


@dataclass(frozen=True)
class PartitionClass:
    number: int
    condition: Callable[[int, int], bool]
    ell: Callable[[int, int], Fraction]
    i: Callable[[int, int], Fraction]
    # (k, j) rebuilt from (ell, i)
    rebuild: Callable[[Fraction, Fraction], tuple[Fraction, Fraction]]
    # signed weight expressed through i
    weight: Callable[[Fraction], Fraction]
    # q-exponent and first admissible i of the sum this class feeds
    exponent: Callable[[Fraction, Fraction], Fraction]
    i_min: int


def _classes() -> list[PartitionClass]:
    F = Fraction

    def e_a(l, i):  # l(3l+2) - i(3i+1)
        return l * (3 * l + 2) - i * (3 * i + 1)

    def e_b(l, i):  # (l+1)(3l+1) - i(3i+1)
        return (l + 1) * (3 * l + 1) - i * (3 * i + 1)

    def e_c(l, i):
        return l * (3 * l + 2) - i * (3 * i - 1)

    def e_d(l, i):
        return (l + 1) * (3 * l + 1) - i * (3 * i - 1)

    def e_e(l, i):
        return ((2 * l - 1) * (6 * l + 1) - (2 * i - 1) * (6 * i - 1)) / 4

    def e_f(l, i):
        return ((2 * l + 1) * (6 * l - 1) - (2 * i - 1) * (6 * i - 1)) / 4

    def e_g(l, i):
        return ((2 * l - 1) * (6 * l + 1) - (2 * i - 1) * (6 * i - 5)) / 4

    def e_h(l, i):
        return ((2 * l + 1) * (6 * l - 1) - (2 * i - 1) * (6 * i - 5)) / 4

    return [
        PartitionClass(1, lambda j, k: _is_nonneg_int(F(j, 2) - F(k, 6)),
                       lambda j, k: F(k, 6) + F(j, 2), lambda j, k: F(j, 2) - F(k, 6),
                       lambda l, i: (3 * (l - i), l + i), lambda i: 6 * i + 1, e_a, 0),
        PartitionClass(2, lambda j, k: _is_neg_int(F(j, 2) - F(k, 6)),
                       lambda j, k: F(k, 6) + F(j, 2), lambda j, k: F(k, 6) - F(j, 2),
                       lambda l, i: (3 * (l + i), l - i), lambda i: -(6 * i - 1), e_c, 1),
        PartitionClass(3, lambda j, k: _is_nonneg_int(F(k, 6) - F(j, 2) + F(1, 2)),
                       lambda j, k: F(k, 6) + F(j + 1, 2), lambda j, k: F(k, 6) - F(j - 1, 2),
                       lambda l, i: (3 * (l + i - 1), l - i), lambda i: -(6 * i - 4), e_g, 1),
        PartitionClass(4, lambda j, k: _is_neg_int(F(k, 6) - F(j, 2) + F(1, 2)),
                       lambda j, k: F(k, 6) + F(j + 1, 2), lambda j, k: F(j + 1, 2) - F(k, 6),
                       lambda l, i: (3 * (l - i), l + i - 1), lambda i: 6 * i - 2, e_e, 1),
        PartitionClass(5, lambda j, k: _is_nonneg_int(F(k, 6) - F(j, 2) - F(1, 3)),
                       lambda j, k: F(k + 1, 6) + F(j - 1, 2), lambda j, k: F(k + 1, 6) - F(j + 1, 2),
                       lambda l, i: (3 * (l + i) + 2, l - i), lambda i: -(6 * i + 1), e_b, 0),
        PartitionClass(6, lambda j, k: _is_neg_int(F(k, 6) - F(j, 2) - F(1, 3)),
                       lambda j, k: F(k + 1, 6) + F(j - 1, 2), lambda j, k: -F(k + 1, 6) + F(j + 1, 2),
                       lambda l, i: (3 * (l - i) + 2, l + i), lambda i: 6 * i - 1, e_d, 1),
        PartitionClass(7, lambda j, k: _is_nonneg_int(F(j, 2) - F(k, 6) + F(5, 6)),
                       lambda j, k: F(k + 1, 6) + F(j, 2), lambda j, k: F(j, 2) - F(k + 1, 6) + 1,
                       lambda l, i: (3 * (l - i) + 2, l + i - 1), lambda i: 6 * i - 4, e_h, 1),
        PartitionClass(8, lambda j, k: _is_neg_int(F(j, 2) - F(k, 6) + F(5, 6)),
                       lambda j, k: F(k + 1, 6) + F(j, 2), lambda j, k: F(k + 1, 6) - F(j, 2),
                       lambda l, i: (3 * (l + i) - 1, l - i), lambda i: -(6 * i - 2), e_f, 1),
    ]


PARTITION_CLASSES = _classes()


@dataclass
class PartitionReport:
    J: int
    K: int
    checked: int = 0
    # (j, k, matching class numbers) for pairs not in exactly one class
    violations: list = field(default_factory=list)
    # (j, k, class, what) where the table's (ell, i) data disagrees with (j, k)
    relation_failures: list = field(default_factory=list)
    # (j, k, class, ell, i) with i outside the index range of that class's sum
    range_notes: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.relation_failures


def partition_check(J: int, K: int) -> PartitionReport:
    """Check the eight-class table on 0 <= j <= J, 0 <= k <= K, k != 1 mod 3.

    For the unique class of each pair the reconstructed (ell, i) must be
    integers that rebuild (k, j), the row's signed weight must equal
    3j - k + 1, and the q-exponent of the matching sum term must equal
    ((2j+1)(2k+1) - 1)/4.  Index-range slips of the table are recorded in
    ``range_notes`` but are not violations.
    """
    rep = PartitionReport(J, K)
    for j in range(J + 1):
        for k in range(K + 1):
            if k % 3 == 1:
                continue
            rep.checked += 1
            hits = [c for c in PARTITION_CLASSES if c.condition(j, k)]
            if len(hits) != 1:
                rep.violations.append((j, k, tuple(c.number for c in hits)))
                continue
            c = hits[0]
            rep.counts[c.number] = rep.counts.get(c.number, 0) + 1
            ell, i = c.ell(j, k), c.i(j, k)
            if ell.denominator != 1 or i.denominator != 1:
                rep.relation_failures.append((j, k, c.number, "non-integral ell or i"))
                continue
            if c.rebuild(ell, i) != (k, j):
                rep.relation_failures.append((j, k, c.number, "(k, j) not rebuilt"))
            if c.weight(i) != 3 * j - k + 1:
                rep.relation_failures.append((j, k, c.number, "signed weight"))
            if c.exponent(ell, i) != Fraction((2 * j + 1) * (2 * k + 1) - 1, 4):
                rep.relation_failures.append((j, k, c.number, "q-exponent"))
            if not (c.i_min <= i <= ell):
                rep.range_notes.append((j, k, c.number, int(ell), int(i)))
    return rep


# parameterized character identifiers ---------------------------------------


@dataclass(frozen=True)
class CharId:
    """A character family with its parameters.

    family: ``vir`` (p, i) | ``affneg`` (p, fam, ell) | ``adm`` (n, ell) |
    ``weyl`` (m,) | ``sl3`` () | ``cp`` (n,)
    """

    family: str
    params: tuple = ()

    def __post_init__(self):
        f, ps = self.family, self.params
        if f == "vir" and (ps[0] < 2 or ps[1] < 1):
            raise ValueError("vir needs p >= 2 and i >= 1")
        if f == "affneg" and (ps[0] not in (3, 4) or ps[2] < 0 or (ps[1] == "B" and ps[2] < 1)):
            raise ValueError("affneg needs p in {3,4}, ell >= 0 (ell >= 1 for family B)")
        if f == "cp" and ps[0] < 2:
            raise ValueError("cp needs n >= 2")

    def series(self, N) -> QSeries:
        f, ps = self.family, self.params
        if f == "vir":
            return vir_char(ps[0], ps[1], N)
        if f == "affneg":
            return affine_neg_char(ps[0], ps[1], ps[2], N)
        if f == "adm":
            return admissible_char(ps[0], ps[1], N)
        if f == "weyl":
            return weyl_char(ps[0], N)
        if f == "sl3":
            return sl3_char(N)
        if f == "cp":
            return cp_char(ps[0], N)
        raise ValueError(f"unknown character family {f!r}")


def gauss_lhs(N) -> QSeries:
    """Delta(q) * (q;q)_inf."""
    return triangular_delta(N) * product_expand(1, 1, 1, N)


def gauss_rhs(N) -> QSeries:
    """(q^2;q^2)_inf^2."""
    return product_expand(2, 2, 2, N)


def a2_eta_quotient(N) -> QSeries:
    """eta(tau)^12 / eta(tau/2)^6."""
    N = as_rational(N)
    # eta(tau/2)^-6 starts at q^(-1/8); eta^12 at q^(1/2)
    return (eta_power(1, 12, N + Fraction(1, 8)) * eta_power(Fraction(1, 2), -6, N - Fraction(1, 2))).truncate(N)
