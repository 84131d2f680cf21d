"""Theta quotients, Appell-Lerch double series and five expansions of A_n.

Mixed derivatives at x = y = 1 are read off algebraically: substitute
x = 1 + e1, y = 1 + e2 with e1^2 = e2^2 = 0 and keep the e1*e2 coefficient.
Fractional powers x^t then reduce to 1 + t*e1, so no symbolic calculus is
needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .characters import cp_numerator, enumerate_block
from .modforms import eta_power
from .qseries import NonInvertibleLeadingCoefficient, QSeries, as_rational

METHODS = ("thm81", "indef1", "indef2", "closed", "appell")


class NonUnitBase(ValueError):
    pass


class DenominatorNotUnit(ArithmeticError):
    pass


class BiJet:
    """c0 + c1 e1 + c2 e2 + c12 e1 e2 with e1^2 = e2^2 = 0."""

    __slots__ = ("c0", "c1", "c2", "c12")

    def __init__(self, c0=0, c1=0, c2=0, c12=0):
        self.c0 = Fraction(c0)
        self.c1 = Fraction(c1)
        self.c2 = Fraction(c2)
        self.c12 = Fraction(c12)

    @staticmethod
    def _lift(x) -> "BiJet":
        return x if isinstance(x, BiJet) else BiJet(x)

    def __add__(self, o):
        if not isinstance(o, (BiJet, int, Fraction)):
            return NotImplemented
        o = self._lift(o)
        return BiJet(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2, self.c12 + o.c12)

    __radd__ = __add__

    def __neg__(self):
        return BiJet(-self.c0, -self.c1, -self.c2, -self.c12)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return BiJet(self.c0 * o, self.c1 * o, self.c2 * o, self.c12 * o)
        if not isinstance(o, BiJet):
            return NotImplemented
        return BiJet(
            self.c0 * o.c0,
            self.c0 * o.c1 + self.c1 * o.c0,
            self.c0 * o.c2 + self.c2 * o.c0,
            self.c0 * o.c12 + self.c1 * o.c2 + self.c2 * o.c1 + self.c12 * o.c0,
        )

    __rmul__ = __mul__

    def inverse(self) -> "BiJet":
        if self.c0 == 0:
            raise NonInvertibleLeadingCoefficient("bi-jet with zero constant part")
        a = 1 / self.c0
        # (c0 (1 + u))^-1 = a (1 - u + u^2), u^2 = 2 u1 u2 e1 e2
        u1, u2, u12 = self.c1 * a, self.c2 * a, self.c12 * a
        return BiJet(a, -a * u1, -a * u2, a * (2 * u1 * u2 - u12))

    def __truediv__(self, o):
        return self * self._lift(o).inverse()

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = BiJet(o)
        if not isinstance(o, BiJet):
            return NotImplemented
        return (self.c0, self.c1, self.c2, self.c12) == (o.c0, o.c1, o.c2, o.c12)

    def __hash__(self):
        return hash((self.c0, self.c1, self.c2, self.c12))

    def __repr__(self):
        return f"BiJet({self.c0}, {self.c1}, {self.c2}, {self.c12})"


def bijet_pow(j: BiJet, r) -> BiJet:
    """j^r by the binomial series, which terminates after u^2."""
    r = as_rational(r)
    if j.c0 == 0:
        raise NonUnitBase("base has zero constant part")
    if r.denominator != 1 and j.c0 != 1:
        raise NonUnitBase("fractional powers need constant part 1")
    scale = j.c0 ** r if r.denominator == 1 else Fraction(1)
    u1, u2, u12 = j.c1 / j.c0, j.c2 / j.c0, j.c12 / j.c0
    # (1+u)^r = 1 + r u + r(r-1)/2 u^2 with u^2 = 2 u1 u2 e1 e2
    return BiJet(1, r * u1, r * u2, r * u12 + r * (r - 1) * u1 * u2) * scale


@dataclass(frozen=True)
class MonomialArg:
    """x^ex y^ey, evaluated at x = 1 + e1, y = 1 + e2."""

    ex: Fraction = Fraction(0)
    ey: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "ex", as_rational(self.ex))
        object.__setattr__(self, "ey", as_rational(self.ey))

    def __add__(self, o: "MonomialArg") -> "MonomialArg":
        return MonomialArg(self.ex + o.ex, self.ey + o.ey)

    def __mul__(self, t) -> "MonomialArg":
        return MonomialArg(self.ex * t, self.ey * t)

    __rmul__ = __mul__

    def jet(self, power=1) -> BiJet:
        a, b = self.ex * power, self.ey * power
        return BiJet(1, a, b, a * b)


def e12_part(f: QSeries) -> QSeries:
    return f.map_coefficients(lambda j: j.c12)


def constant_part(f: QSeries) -> QSeries:
    return f.map_coefficients(lambda j: j.c0)


# theta functions -------------------------------------------------------------


def vartheta(n: int, a: int, arg: MonomialArg, N) -> QSeries:
    """sum_k (-1)^k q^((n/2)(k + a/2n)^2) arg^(k + a/2n), below N."""
    N = as_rational(N)
    shift = Fraction(a, 2 * n)
    # (n/2) t^2 < N  <=>  |t| < sqrt(2N/n)
    bound = math.isqrt(max(int(2 * N / n), 0)) + 2
    lo = math.floor(-shift) - bound
    hi = math.ceil(-shift) + bound
    for edge in (lo, hi):
        assert Fraction(n, 2) * (edge + shift) ** 2 >= N, "theta enumeration bound too small"
    terms = []
    for k in range(lo, hi + 1):
        t = k + shift
        e = Fraction(n, 2) * t * t
        if e < N:
            jet = arg.jet(t)
            terms.append((e, -jet if k % 2 else jet))
    return QSeries.from_exponents(terms, N)


# Appell-Lerch series -------------------------------------------------------


@dataclass(frozen=True)
class Shifted:
    """q^qexp times a monomial in x, y: one argument of kappa."""

    qexp: Fraction
    arg: MonomialArg


def kappa_double(ell: int, X: Shifted, Y: Shifted, s, N) -> QSeries:
    """(sum_{i,j>=0} - sum_{i,j<0}) X^(i+ell j) Y^i Q^(ell j^2/2 + i j), Q = q^s.

    Only valid as a formal series when both quadrants have exponents bounded
    below and growing; this is asserted during enumeration.
    """
    N, s = as_rational(N), as_rational(s)
    ell_h = Fraction(ell, 2)

    def expo(i, j):
        return X.qexp * (i + ell * j) + Y.qexp * i + s * (ell_h * j * j + i * j)

    def coeff(i, j):
        return (X.arg * (i + ell * j) + Y.arg * i).jet()

    out: dict = {}
    # enumerate_block walks (outer, inner) = (j, i)
    enumerate_block(lambda j, i: expo(i, j), lambda j, i: coeff(i, j), N, out, 1)
    enumerate_block(
        lambda j, i: expo(-1 - i, -1 - j), lambda j, i: coeff(-1 - i, -1 - j), N, out, -1
    )
    return QSeries.from_exponents(out, N)


def kappa_msum(ell: int, X: Shifted, Y: Shifted, s, N) -> QSeries:
    """sum_m Q^(ell m^2/2) X^(ell m) / (1 - X Y Q^m), each term expanded in q.

    1/(1-z) is expanded as sum_{i>=0} z^i when z carries a positive power of
    q and as -sum_{i>=1} z^(-i) when the power is negative.
    """
    N, s = as_rational(N), as_rational(s)
    XY = X.arg + Y.arg

    def z_exp(m):
        return X.qexp + Y.qexp + s * m

    def base(m):
        return s * ell * m * m / 2 + X.qexp * ell * m

    def lowest(m):
        z = z_exp(m)
        if z == 0:
            raise ValueError(f"geometric ratio is q-free at m = {m}")
        return base(m) + (0 if z > 0 else -z)

    vertex = -X.qexp / s  # base(m) is minimal near here
    out: dict = {}
    for direction in (1, -1):
        m = 0 if direction == 1 else -1
        prev = None
        while True:
            lo = lowest(m)
            past_vertex = (m - vertex) * direction >= 1
            if past_vertex and prev is not None:
                assert lo > prev, "m-sum not increasing"
            prev = lo if past_vertex else None
            if lo >= N and past_vertex:
                break
            z = z_exp(m)
            e0 = base(m)
            mono = X.arg * (ell * m)
            if z > 0:
                i, sign = 0, 1
            else:
                i, sign = 1, -1
            while True:
                step = i if z > 0 else -i
                e = e0 + z * step
                if e >= N:
                    break
                jet = (mono + XY * step).jet()
                out[e] = out.get(e, 0) + (jet if sign > 0 else -jet)
                i += 1
            m += direction
    return QSeries.from_exponents(out, N)


def _bn_args(n: int, mirror: bool) -> tuple[Shifted, Shifted]:
    h = Fraction(1, 2)
    if mirror:
        X = Shifted(-Fraction(n, 2), MonomialArg(-1, 0))
    else:
        X = Shifted(Fraction(n, 2), MonomialArg(1, 0))
    return X, Shifted(-h, MonomialArg(0, n))


def appell_Bn(n: int, N, mirror: bool = False) -> QSeries:
    """kappa_2(q^(n/2) x, q^(-1/2) y^n, q^n); mirror uses q^(-n/2) x^(-1).

    The quadrant double series diverges formally at the mirror point, so that
    case goes through the m-sum with per-m geometric expansion.
    """
    X, Y = _bn_args(n, mirror)
    if mirror:
        return kappa_msum(2, X, Y, n, N)
    return kappa_double(2, X, Y, n, N)


def mirror_parts(n: int, N) -> tuple[QSeries, QSeries]:
    """e1 e2-parts of xy B_n and of xy times its mirror."""
    xy = BiJet(1, 1, 1, 1)
    a = e12_part(appell_Bn(n, N).scale(xy))
    b = e12_part(appell_Bn(n, N, mirror=True).scale(xy))
    return a, b


# A_n = eta^6 ch[C_n] -------------------------------------------------------


def an_leading_exponent(n: int) -> Fraction:
    return Fraction(n, 4) - Fraction(1, 4 * n)


def _an_thm81(n: int, N: Fraction) -> QSeries:
    pref = an_leading_exponent(n)
    return cp_numerator(n, N - pref).shift(pref)


def _an_indef1(n: int, N: Fraction) -> QSeries:
    s1, s2 = Fraction(n - 1, 2 * n), Fraction(1, n)

    def expo(l1, l2):
        return n * l1 * l1 + n * l1 * l2

    def coeff(l1, l2):
        # (n/2) * (sgn l1 + sgn l2) * l2 (2 l1 + l2), sgn sum = +-2
        return n * l2 * (2 * l1 + l2)

    out: dict = {}
    enumerate_block(
        lambda a, b: expo(a + s1, b + s2), lambda a, b: coeff(a + s1, b + s2), N, out, 1
    )
    enumerate_block(
        lambda a, b: expo(-1 - a + s1, -1 - b + s2),
        lambda a, b: coeff(-1 - a + s1, -1 - b + s2),
        N, out, -1,
    )
    return QSeries.from_exponents(out, N)


def _an_indef2(n: int, N: Fraction) -> QSeries:
    q4 = Fraction(n, 4)
    inv = Fraction(1, n)
    out: dict = {}
    l1 = 0
    prev = None
    while True:
        low = q4 * (l1 + 1) ** 2 - q4 * (l1 + inv) ** 2
        assert prev is None or low > prev, "row minimum not increasing"
        prev = low
        if low >= N:
            break
        for l2 in range(-l1, l1 + 1, 2):
            e = q4 * (l1 + 1) ** 2 - q4 * (l2 + inv) ** 2
            if e < N:
                out[e] = out.get(e, 0) + (1 + l1) * (1 + n * l2)
        l1 += 1
    return QSeries.from_exponents(out, N)


def closed_form_parts(n: int, N) -> tuple[QSeries, QSeries]:
    """Numerator eta(n tau)^3 theta_{n,n}(x^2) and the product of the two
    denominator thetas, with accuracies chosen so the quotient is exact below N."""
    N = as_rational(N)
    t = Fraction(n, 8)  # order of eta(n tau)^3 and of theta_{n,n}(x^2)
    d = Fraction(1, 8 * n)  # order of each denominator theta
    # quotient accuracy is min(acc_num - 2d, acc_den - 4d + 2t)
    a_num = N + 2 * d - t
    a_den = N + 3 * d - 2 * t
    eta3 = eta_power(n, 3, a_num).map_coefficients(BiJet)
    num = eta3 * vartheta(n, n, MonomialArg(2, 0), a_num)
    den = vartheta(n, 2 * n - 1, MonomialArg(1, n), a_den) * vartheta(
        n, 2 * n + 1, MonomialArg(1, -n), a_den
    )
    return num, den


def _an_closed(n: int, N: Fraction) -> QSeries:
    num, den = closed_form_parts(n, N)
    lead = den.leading_term()[1]
    if lead.c0 == 0:
        raise DenominatorNotUnit(f"denominator leading jet {lead} is not a unit")
    quot = num * den.invert()
    return e12_part(quot).scale(Fraction(1, 2)).truncate(N)


def _an_appell(n: int, N: Fraction) -> QSeries:
    pref = an_leading_exponent(n)
    xy = BiJet(1, 1, 1, 1)
    return e12_part(appell_Bn(n, N - pref).scale(xy)).shift(pref)


def an_series(n: int, method: str, N) -> QSeries:
    """A_n = eta^6 ch[C_n] below N by the named construction."""
    if n < 2:
        raise ValueError("n must be >= 2")
    N = as_rational(N)
    fn = {
        "thm81": _an_thm81,
        "indef1": _an_indef1,
        "indef2": _an_indef2,
        "closed": _an_closed,
        "appell": _an_appell,
    }.get(method)
    if fn is None:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    out = fn(n, N)
    assert out.acc >= N
    return out.truncate(N)
