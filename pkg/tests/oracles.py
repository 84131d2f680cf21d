"""Independent reference computations, written without the package's series type.

Everything here works on plain dicts {Fraction exponent: coefficient} by
brute force, so a bug in QSeries arithmetic cannot hide in both places.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def partitions_upto(n_max: int) -> list[int]:
    """p(n) by the coin-change recurrence over part sizes."""
    p = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for m in range(part, n_max + 1):
            p[m] += p[m - part]
    return p


def pentagonal_euler(n_max: int) -> dict[int, int]:
    """(q;q)_inf = sum_k (-1)^k q^(k(3k-1)/2) over all integers k."""
    out: dict[int, int] = {}
    k = 0
    while True:
        hit = False
        for kk in {k, -k}:
            e = kk * (3 * kk - 1) // 2
            if e <= n_max:
                out[e] = out.get(e, 0) + (-1) ** (kk % 2)
                hit = True
        if not hit:
            break
        k += 1
    return {e: c for e, c in out.items() if c}


def sigma(power: int, n: int) -> int:
    return sum(d ** power for d in range(1, n + 1) if n % d == 0)


def neg_binomial_coeff(power: int, k: int) -> int:
    """coefficient of t^k in (1 - t)^(-power)."""
    return comb(power + k - 1, k)


def dict_mul(a: dict, b: dict, N) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            if e < N:
                out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def dict_product(factors: list[dict], N) -> dict:
    out = {Fraction(0): 1}
    for f in factors:
        out = dict_mul(out, f, N)
    return out


def pochhammer_dict(start, step, power: int, N) -> dict:
    """prod_{n>=1} (1 - q^(start + step(n-1)))^power by repeated dict products."""
    start, step, N = Fraction(start), Fraction(step), Fraction(N)
    out = {Fraction(0): 1}
    t = start
    while t < N:
        if power >= 0:
            factor = {Fraction(0): 1, t: -1}
            reps = power
        else:
            # (1 - q^t)^-1 = sum q^(jt)
            factor = {}
            j = 0
            while j * t < N:
                factor[j * t] = 1
                j += 1
            reps = -power
        for _ in range(reps):
            out = dict_mul(out, factor, N)
        t += step
    return out


def weyl_char_dict(m: int, N) -> dict:
    """q^(m/24) prod (1 - q^(n - 1/2))^(-2m) from dict arithmetic."""
    pref = Fraction(m, 24)
    base = pochhammer_dict(Fraction(1, 2), 1, -2 * m, Fraction(N) - pref)
    return {e + pref: c for e, c in base.items()}


def cp_signed_double_sum(n: int, N) -> dict:
    """(sum_{i,k>=0} - sum_{i,k<0}) (1+i+2k)(1+in) q^(k(k+1)n + (i/2)(2kn+n-1)).

    The parity-reorganized form of the four-block character numerator;
    enumerated by brute force over a box sized by the exponent bound below.
    """
    N = Fraction(N)
    out: dict = {}
    # exponent >= i(n-1)/2 >= i/2 on the positive quadrant, so i < 2N suffices
    box = 2 * int(N) + 4
    for sign, rng in ((1, range(0, box)), (-1, range(-box, 0))):
        for i in rng:
            for k in rng:
                e = k * (k + 1) * n + Fraction(i, 2) * (2 * k * n + n - 1)
                if e < N:
                    out[e] = out.get(e, 0) + sign * (1 + i + 2 * k) * (1 + i * n)
    return {e: c for e, c in out.items() if c}


def series_to_dict(f) -> dict:
    return {e: c for e, c in f.items()}
