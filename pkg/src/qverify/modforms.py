"""Classical modular objects as truncated q-series.

Conventions:

* ``theta2 = sum_{n in Z+1/2} q^(n^2/2)`` and ``theta3 = sum_{n in Z} q^(n^2/2)``;
  ``Theta_{r,s} = theta2^(4r) * theta3^(4s)`` has weight ``2(r+s)``.
* ``E_{2k} = -B_{2k}/(2k)! + 2/(2k-1)! * sum_{n>=1} n^(2k-1) q^n/(1-q^n)``.
  This is the classical Eisenstein series times ``-B_{2k}/(2k)!``, so
  ``E_2`` here is ``-1/12`` times the classical one and ``q d/dq + k*E_2``
  is the usual weight-k Serre derivative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qseries import QSeries, as_rational, product_expand


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """B_m with B_1 = -1/2, from sum_{j<=m} C(m+1, j) B_j = 0."""
    if m < 0:
        raise ValueError("negative index")
    if m == 0:
        return Fraction(1)
    s = Fraction(0)
    for j in range(m):
        s += math.comb(m + 1, j) * bernoulli(j)
    return -s / (m + 1)


def eta(s=1, N=20) -> QSeries:
    """eta(s*tau) = q^(s/24) * prod_n (1 - q^(s n)), accurate below N."""
    s, N = as_rational(s), as_rational(N)
    if s <= 0:
        raise ValueError("eta scale must be positive")
    pref = s / 24
    return product_expand(s, s, 1, N - pref).shift(pref)


def eta_power(s, power: int, N) -> QSeries:
    """eta(s*tau)**power accurate below N (negative powers allowed)."""
    s, N = as_rational(s), as_rational(N)
    pref = s * power / 24
    return product_expand(s, s, power, N - pref).shift(pref)


def _half_lattice_theta(shift: Fraction, N: Fraction) -> QSeries:
    # sum over n in Z + shift of q^(n^2/2), exponents below N
    bound = math.isqrt(int(2 * N) + 1) + 2
    out: dict[Fraction, int] = {}
    for k in range(-bound - 1, bound + 2):
        n = k + shift
        e = n * n / 2
        if e < N:
            out[e] = out.get(e, 0) + 1
    first_excluded = (bound + 1 - abs(shift)) ** 2 / 2
    assert first_excluded >= N, "lattice enumeration bound too small"
    return QSeries.from_exponents(out, N)


def theta2(N) -> QSeries:
    return _half_lattice_theta(Fraction(1, 2), as_rational(N))


def theta3(N) -> QSeries:
    return _half_lattice_theta(Fraction(0), as_rational(N))


def theta_pow4(kind: str, N) -> QSeries:
    N = as_rational(N)
    if kind == "theta2":
        # theta2 starts at q^(1/8); three other factors need headroom 3/8
        base = theta2(N - Fraction(3, 8))
    elif kind == "theta3":
        base = theta3(N)
    else:
        raise ValueError(f"unknown theta kind {kind!r}")
    return (base ** 4).truncate(N)


def theta_rs(r: int, s: int, N) -> QSeries:
    """Theta_{r,s} = theta2^(4r) theta3^(4s) below N."""
    if r < 0 or s < 0:
        raise ValueError("theta_rs indices must be nonnegative")
    N = as_rational(N)
    # each theta2^4 factor starts at q^(1/2)
    t2 = theta_pow4("theta2", N) if r else None
    t3 = theta_pow4("theta3", N) if s else None
    out = QSeries.constant(1, N)
    for _ in range(r):
        out = out * t2
    for _ in range(s):
        out = out * t3
    return out.truncate(N) if out.acc >= N else out


def divisor_power_sums(power: int, n_max: int) -> list[int]:
    """sigma_power(n) for 0 <= n <= n_max by sieve (index 0 unused)."""
    sig = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dp = d ** power
        for m in range(d, n_max + 1, d):
            sig[m] += dp
    return sig


def eisenstein(k2: int, N) -> QSeries:
    """E_{k2} in the normalization of the module docstring, below N."""
    if k2 < 2 or k2 % 2:
        raise ValueError("Eisenstein weight must be even and >= 2")
    N = as_rational(N)
    n_max = math.ceil(N) - 1
    sig = divisor_power_sums(k2 - 1, max(n_max, 0))
    const = -bernoulli(k2) / math.factorial(k2)
    c = Fraction(2, math.factorial(k2 - 1))
    terms = {0: const}
    for n in range(1, n_max + 1):
        terms[n] = c * sig[n]
    return QSeries.from_exponents(terms, N)


def triangular_delta(N) -> QSeries:
    """sum_{n>=0} q^(n(n+1)/2) below N."""
    N = as_rational(N)
    out = {}
    n = 0
    while n * (n + 1) / 2 < N:
        out[Fraction(n * (n + 1), 2)] = 1
        n += 1
    return QSeries.from_exponents(out, N)


@dataclass(frozen=True)
class FormsGenerator:
    """A named generator of a ring of modular forms.

    ``tag`` is one of ``eta``, ``theta2p4``, ``theta3p4``, ``theta_rs``,
    ``eis``, ``delta``; ``params`` holds its integer/rational arguments.
    """

    tag: str
    params: tuple = ()

    @property
    def weight(self) -> Fraction:
        if self.tag == "eta":
            return Fraction(1, 2)
        if self.tag in ("theta2p4", "theta3p4"):
            return Fraction(2)
        if self.tag == "theta_rs":
            r, s = self.params
            return Fraction(2 * (r + s))
        if self.tag == "eis":
            return Fraction(self.params[0])
        if self.tag == "delta":
            return Fraction(1, 2)
        raise ValueError(self.tag)

    def series(self, N) -> QSeries:
        if self.tag == "eta":
            return eta(self.params[0] if self.params else 1, N)
        if self.tag == "theta2p4":
            return theta_pow4("theta2", N)
        if self.tag == "theta3p4":
            return theta_pow4("theta3", N)
        if self.tag == "theta_rs":
            return theta_rs(*self.params, N)
        if self.tag == "eis":
            return eisenstein(self.params[0], N)
        if self.tag == "delta":
            return triangular_delta(N)
        raise ValueError(self.tag)

    def __str__(self) -> str:
        if self.tag == "theta_rs":
            return f"Theta_{{{self.params[0]},{self.params[1]}}}"
        if self.tag == "eis":
            return f"E{self.params[0]}"
        return self.tag
