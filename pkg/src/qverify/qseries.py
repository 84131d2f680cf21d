"""Truncated formal series in fractional powers of q.

A ``QSeries`` stores integer exponent numerators over a per-series
denominator ``L`` together with an accuracy bound ``acc``: every
coefficient of an exponent strictly below ``acc`` is known exactly and
nothing at or above ``acc`` is stored.  ``acc`` may be ``EXACT`` for
finite Laurent polynomials that carry no truncation.

Coefficients live in any exact commutative ring supporting ``+``, ``*``,
unary ``-`` and equality with 0.  Inversion of a coefficient goes through
``coef_inverse``; objects that define ``inverse()`` (see ``appell.BiJet``)
use their own rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Mapping

EXACT = math.inf


class QSeriesError(ArithmeticError):
    pass


class ZeroLeadingTerm(QSeriesError):
    pass


class NonInvertibleLeadingCoefficient(QSeriesError):
    pass


class InsufficientAccuracy(QSeriesError):
    pass


class NonpositiveExponentStep(ValueError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact exponents")
    return Fraction(x)


def coef_inverse(c):
    inv = getattr(c, "inverse", None)
    if inv is not None:
        return inv()
    if c == 0:
        raise NonInvertibleLeadingCoefficient("zero coefficient")
    return Fraction(1) / c


def _is_zero(c) -> bool:
    return c == 0


def _min_acc(*accs):
    return min(accs)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


@dataclass(frozen=True)
class Equal:
    """Verdict of ``compare`` when the two series agree below the bound."""

    @property
    def equal(self) -> bool:
        return True


@dataclass(frozen=True)
class FirstMismatch:
    exponent: Fraction
    lhs: Any
    rhs: Any

    @property
    def equal(self) -> bool:
        return False


class QSeries:
    """Immutable truncated q-series with exact coefficients."""

    __slots__ = ("L", "terms", "acc")

    def __init__(self, terms: Mapping[int, Any] | None = None, L: int = 1, acc=EXACT):
        if L <= 0:
            raise ValueError("exponent denominator must be positive")
        if acc != EXACT:
            acc = as_rational(acc)
        bound = acc * L
        clean = {m: c for m, c in (terms or {}).items() if not _is_zero(c) and m < bound}
        # canonical denominator: the smallest L keeping every stored numerator integral
        g = L
        for m in clean:
            g = math.gcd(g, m)
            if g == 1:
                break
        if g > 1:
            clean = {m // g: c for m, c in clean.items()}
            L //= g
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "acc", acc)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # construction -----------------------------------------------------

    @classmethod
    def from_exponents(cls, coeffs: Mapping[Any, Any] | Iterable[tuple[Any, Any]], acc=EXACT) -> "QSeries":
        """Build from ``{exponent: coefficient}`` with rational exponents.

        Repeated exponents (when an iterable of pairs is given) are summed.
        """
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc_ = acc
        collected: dict[Fraction, Any] = {}
        for e, c in items:
            e = as_rational(e)
            if acc_ != EXACT and e >= acc_:
                continue
            if e in collected:
                collected[e] = collected[e] + c
            else:
                collected[e] = c
        L = 1
        for e in collected:
            L = _lcm(L, e.denominator)
        terms = {}
        for e, c in collected.items():
            terms[e.numerator * (L // e.denominator)] = c
        return cls(terms, L, acc)

    @classmethod
    def monomial(cls, coeff, exponent=0, acc=EXACT) -> "QSeries":
        return cls.from_exponents({exponent: coeff}, acc)

    @classmethod
    def constant(cls, c, acc=EXACT) -> "QSeries":
        return cls.from_exponents({0: c}, acc)

    @classmethod
    def zero(cls, acc=EXACT) -> "QSeries":
        return cls({}, 1, acc)

    # inspection -------------------------------------------------------

    def items(self) -> Iterator[tuple[Fraction, Any]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        for m in sorted(self.terms):
            yield Fraction(m, self.L), self.terms[m]

    def __iter__(self):
        return self.items()

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, exponent):
        e = as_rational(exponent)
        if e >= self.acc:
            raise InsufficientAccuracy(f"coefficient of q^{e} requested but accuracy is {self.acc}")
        num = e * self.L
        if num.denominator != 1:
            return 0
        return self.terms.get(int(num), 0)

    def __getitem__(self, exponent):
        return self.coefficient(exponent)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def order(self):
        """Lowest stored exponent; ``acc`` for the zero series."""
        if not self.terms:
            return self.acc
        return Fraction(min(self.terms), self.L)

    def leading_term(self) -> tuple[Fraction, Any]:
        if not self.terms:
            raise ZeroLeadingTerm("no term below the accuracy bound")
        m = min(self.terms)
        return Fraction(m, self.L), self.terms[m]

    def max_exponent(self):
        if not self.terms:
            return None
        return Fraction(max(self.terms), self.L)

    def _rescaled(self, L: int) -> dict[int, Any]:
        if L == self.L:
            return self.terms
        k = L // self.L
        return {m * k: c for m, c in self.terms.items()}

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        return QSeries.constant(other)

    def __add__(self, other) -> "QSeries":
        other = self._coerce(other)
        L = _lcm(self.L, other.L)
        acc = _min_acc(self.acc, other.acc)
        out = dict(self._rescaled(L))
        for m, c in other._rescaled(L).items():
            out[m] = out[m] + c if m in out else c
        return QSeries(out, L, acc)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries({m: -c for m, c in self.terms.items()}, self.L, self.acc)

    def __sub__(self, other) -> "QSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QSeries":
        return self._coerce(other) - self

    def scale(self, c) -> "QSeries":
        """Multiply every coefficient by the ring element ``c``."""
        if _is_zero(c):
            return QSeries.zero(self.acc)
        return QSeries({m: c * v for m, v in self.terms.items()}, self.L, self.acc)

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return self.scale(other)
        acc = _min_acc(self.acc + other.order(), other.acc + self.order())
        L = _lcm(self.L, other.L)
        a = sorted(self._rescaled(L).items())
        b = sorted(other._rescaled(L).items())
        if len(a) > len(b):
            a, b = b, a
        bound = acc * L
        out: dict[int, Any] = {}
        for ma, ca in a:
            for mb, cb in b:
                m = ma + mb
                if m >= bound:
                    break
                v = ca * cb
                out[m] = out[m] + v if m in out else v
        return QSeries(out, L, acc)

    def __rmul__(self, other) -> "QSeries":
        return self.scale(other)

    def __pow__(self, n: int) -> "QSeries":
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        if n < 0:
            return self.invert() ** (-n)
        result = QSeries.constant(1, EXACT)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def invert(self) -> "QSeries":
        """Multiplicative inverse; accuracy becomes ``acc - 2*order``."""
        if self.acc == EXACT:
            raise InsufficientAccuracy("truncate an exact polynomial before inverting it")
        if not self.terms:
            raise ZeroLeadingTerm("cannot invert a series with no term below its accuracy")
        v_num = min(self.terms)
        c0 = self.terms[v_num]
        try:
            c0_inv = coef_inverse(c0)
        except (ZeroDivisionError, NonInvertibleLeadingCoefficient) as exc:
            raise NonInvertibleLeadingCoefficient(str(exc)) from exc
        v = Fraction(v_num, self.L)
        acc = self.acc - 2 * v
        L = self.L
        # relative steps k correspond to exponent -v + k/L
        K = math.ceil((self.acc - v) * L)
        rel = sorted((m - v_num, c) for m, c in self.terms.items() if m != v_num)
        g: list[Any] = [c0_inv] + [0] * (K - 1) if K > 0 else []
        for k in range(1, K):
            s = 0
            for j, fj in rel:
                if j > k:
                    break
                gk = g[k - j]
                if not _is_zero(gk):
                    s = s + fj * gk
            g[k] = -(c0_inv * s) if not _is_zero(s) else 0
        return QSeries({k - v_num: c for k, c in enumerate(g)}, L, acc)

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return self * other.invert()
        return self.scale(coef_inverse(other))

    # reparameterization and calculus ----------------------------------

    def shift(self, e) -> "QSeries":
        """Multiply by the monomial q^e."""
        e = as_rational(e)
        L = _lcm(self.L, e.denominator)
        k = e.numerator * (L // e.denominator)
        return QSeries({m + k: c for m, c in self._rescaled(L).items()}, L, self.acc + e)

    def scale_exponents(self, s) -> "QSeries":
        """Substitute q -> q^s for a positive rational s."""
        s = as_rational(s)
        if s <= 0:
            raise ValueError("exponent scale must be positive")
        # exponent m/L becomes m*s.num/(L*s.den)
        L = self.L * s.denominator
        return QSeries({m * s.numerator: c for m, c in self.terms.items()}, L, self.acc * s)

    def q_derivative(self) -> "QSeries":
        """Apply q d/dq."""
        return QSeries(
            {m: Fraction(m, self.L) * c for m, c in self.terms.items()}, self.L, self.acc
        )

    def truncate(self, N) -> "QSeries":
        N = as_rational(N)
        if N > self.acc:
            raise InsufficientAccuracy(f"cannot truncate to {N}: accuracy is {self.acc}")
        return QSeries(self.terms, self.L, N)

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "QSeries":
        return QSeries({m: fn(c) for m, c in self.terms.items()}, self.L, self.acc)

    # comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            other = QSeries.constant(other)
        N = _min_acc(self.acc, other.acc)
        L = _lcm(self.L, other.L)
        bound = N * L
        a = {m: c for m, c in self._rescaled(L).items() if m < bound}
        b = {m: c for m, c in other._rescaled(L).items() if m < bound}
        if a.keys() != b.keys():
            return False
        return all(a[m] == b[m] for m in a)

    __hash__ = None

    def __repr__(self) -> str:
        shown = []
        for e, c in list(self.items())[:8]:
            shown.append(f"({c})*q^({e})")
        tail = " + ..." if len(self.terms) > 8 else ""
        body = " + ".join(shown) if shown else "0"
        return f"QSeries({body}{tail}; acc={self.acc})"


def compare(f: QSeries, g: QSeries, N) -> Equal | FirstMismatch:
    """Exact comparison of the coefficients of f and g below exponent N."""
    N = as_rational(N)
    if f.acc < N or g.acc < N:
        raise InsufficientAccuracy(
            f"comparison up to {N} needs both accuracies >= N (have {f.acc}, {g.acc})"
        )
    L = _lcm(f.L, g.L)
    a = f._rescaled(L)
    b = g._rescaled(L)
    bound = N * L
    for m in sorted(set(a) | set(b)):
        if m >= bound:
            break
        ca, cb = a.get(m, 0), b.get(m, 0)
        if ca != cb:
            return FirstMismatch(Fraction(m, L), ca, cb)
    return Equal()


def product_expand(a, b, e: int, N) -> QSeries:
    """Expand prod_{n>=1} (1 - q^(a + b(n-1)))^e below exponent N."""
    a, b, N = as_rational(a), as_rational(b), as_rational(N)
    if a <= 0 or b <= 0:
        raise NonpositiveExponentStep("factor exponents must start and step positively")
    if e == 0 or N <= 0:
        return QSeries.constant(1, N)
    L = _lcm(a.denominator, b.denominator)
    size = math.ceil(N * L)
    arr = [0] * size
    arr[0] = 1
    t = a
    while t < N:
        step = int(t * L)
        if e > 0:
            for _ in range(e):
                for m in range(size - 1, step - 1, -1):
                    arr[m] -= arr[m - step]
        else:
            for _ in range(-e):
                for m in range(step, size):
                    arr[m] += arr[m - step]
        t += b
    return QSeries({m: c for m, c in enumerate(arr) if c}, L, N)


def pochhammer_inf(N, power: int = 1, step=1) -> QSeries:
    """(q^s; q^s)_inf ** power below exponent N, s = step."""
    return product_expand(step, step, power, N)
