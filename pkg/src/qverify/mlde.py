"""Serre derivatives and modular linear differential equations.

An operator of order k acts as ``D^(k) f + sum_r f_r D^(k-r) f`` where
``D^(j) = d_(2j-2) o ... o d_(2) o d_(0)`` and ``d_(w) = q d/dq + w E_2``.
Coefficients ``f_r`` are weight-2r modular forms, written as rational
combinations of generator monomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .characters import cp_char, cp_central_charge
from .modforms import FormsGenerator, eisenstein
from .qseries import InsufficientAccuracy, QSeries, as_rational

GAMMA1 = "gamma1"
GAMMA2 = "gamma2"


class UnsupportedN(ValueError):
    pass


def _need(f: QSeries, N: Fraction) -> None:
    if f.acc < N:
        raise InsufficientAccuracy(f"series known below {f.acc}, need {N}")


# modular-form coefficients --------------------------------------------------

Monomial = tuple  # sorted tuple of FormsGenerator


def _mono_key(m: Monomial):
    return tuple((g.tag, g.params) for g in m)


def E(k2: int) -> FormsGenerator:
    return FormsGenerator("eis", (k2,))


def Th(r: int, s: int) -> FormsGenerator:
    return FormsGenerator("theta_rs", (r, s))


@dataclass(frozen=True)
class ModFormExpr:
    """sum of coefficient * monomial, every monomial of the declared weight."""

    group: str
    weight: int
    terms: tuple = ()

    def __post_init__(self):
        if self.group not in (GAMMA1, GAMMA2):
            raise ValueError(f"unknown group {self.group!r}")
        norm = []
        for c, mono in self.terms:
            mono = tuple(sorted(mono, key=lambda g: (g.tag, g.params)))
            w = sum((g.weight for g in mono), Fraction(0))
            if w != self.weight:
                raise ValueError(f"monomial {mono} has weight {w}, expected {self.weight}")
            norm.append((as_rational(c), mono))
        object.__setattr__(self, "terms", tuple(norm))

    @classmethod
    def zero(cls, group: str, weight: int) -> "ModFormExpr":
        return cls(group, weight, ())

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c, _ in self.terms)

    def series(self, N, cache: dict | None = None) -> QSeries:
        N = as_rational(N)
        cache = {} if cache is None else cache
        out = QSeries.zero(N)
        for c, mono in self.terms:
            if c == 0:
                continue
            s = QSeries.constant(1, N)
            for g in mono:
                key = (g, N)
                if key not in cache:
                    cache[key] = g.series(N)
                s = s * cache[key]
            out = out + s.scale(c)
        return out.truncate(N)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for c, mono in self.terms:
            name = "*".join(str(g) for g in mono) or "1"
            parts.append(f"({c})*{name}")
        return " + ".join(parts)


@dataclass(frozen=True)
class MLDEOperator:
    """Monic D^(k) + f_1 D^(k-1) + ... + f_k, with weight(f_r) = 2r."""

    order: int
    group: str
    coeffs: tuple = field(default=())

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if len(self.coeffs) != self.order:
            raise ValueError("need exactly one coefficient per r = 1..k")
        for r, f in enumerate(self.coeffs, start=1):
            if f.weight != 2 * r or f.group != self.group:
                raise ValueError(f"f_{r} must be a {self.group} form of weight {2 * r}")


# derivatives ---------------------------------------------------------------


def serre_derivative(f: QSeries, k, N) -> QSeries:
    """(q d/dq + k E_2) f below N."""
    N, k = as_rational(N), as_rational(k)
    _need(f, N)
    f = f.truncate(N)
    out = f.q_derivative()
    if k != 0 and not f.is_zero:
        e2 = eisenstein(2, N - min(f.order(), 0))
        out = out + (e2 * f).scale(k)
    return out.truncate(N)


def dq_iter(f: QSeries, k: int, N) -> QSeries:
    """D^(k) f = d_(2k-2) o ... o d_(0) f; D^(0) f = f."""
    N = as_rational(N)
    _need(f, N)
    out = f.truncate(N)
    for j in range(k):
        out = serre_derivative(out, 2 * j, N)
    return out


def _dq_tower(f: QSeries, k: int, N: Fraction) -> list[QSeries]:
    tower = [f.truncate(N)]
    for j in range(k):
        tower.append(serre_derivative(tower[-1], 2 * j, N))
    return tower


def mlde_apply(op: MLDEOperator, f: QSeries, N) -> QSeries:
    """Residual of the operator applied to f, below N."""
    N = as_rational(N)
    _need(f, N)
    tower = _dq_tower(f, op.order, N)
    low = min(f.order(), 0) if not f.is_zero else 0
    cache: dict = {}
    out = tower[op.order]
    for r, fr in enumerate(op.coeffs, start=1):
        if fr.is_zero:
            continue
        out = out + fr.series(N - low, cache) * tower[op.order - r]
    return out.truncate(N)


# the operators annihilating ch[C_n] for n = 2..5 -----------------------------

F = Fraction


def builtin_mlde(n: int) -> MLDEOperator:
    if n == 2:
        return MLDEOperator(1, GAMMA2, (
            ModFormExpr(GAMMA2, 2, ((F(-1, 8), (Th(1, 0),)), (F(-1, 8), (Th(0, 1),)))),
        ))
    if n == 3:
        return MLDEOperator(2, GAMMA1, (
            ModFormExpr.zero(GAMMA1, 2),
            ModFormExpr(GAMMA1, 4, ((F(-75), (E(4),)),)),
        ))
    if n == 4:
        return MLDEOperator(3, GAMMA2, (
            ModFormExpr(GAMMA2, 2, ((F(-5, 16), (Th(1, 0),)), (F(5, 16), (Th(0, 1),)))),
            ModFormExpr(GAMMA2, 4, (
                (F(-77, 2304), (Th(2, 0),)),
                (F(-89, 1152), (Th(1, 1),)),
                (F(-17, 2304), (Th(0, 2),)),
            )),
            ModFormExpr(GAMMA2, 6, (
                (F(33, 4096), (Th(3, 0),)),
                (F(33, 4096), (Th(2, 1),)),
                (F(-197, 4096), (Th(1, 2),)),
                (F(3, 4096), (Th(0, 3),)),
            )),
        ))
    if n == 5:
        return MLDEOperator(6, GAMMA1, (
            ModFormExpr.zero(GAMMA1, 2),
            ModFormExpr(GAMMA1, 4, ((F(-161), (E(4),)),)),
            ModFormExpr(GAMMA1, 6, ((F(-28812, 75), (E(6),)),)),
            ModFormExpr(GAMMA1, 8, ((F(-8965187, 75), (E(8),)),)),
            ModFormExpr(GAMMA1, 10, ((F(-192787364, 125), (E(10),)),)),
            ModFormExpr(GAMMA1, 12, (
                (F(-5599287, 5), (E(4), E(4), E(4))),
                (F(-48993336, 25), (E(6), E(6))),
            )),
        ))
    raise UnsupportedN(f"no built-in operator for n = {n}")


def default_trunc(n: int, above: int = 15) -> Fraction:
    """Leading exponent of ch[C_n] plus ``above``."""
    return -cp_central_charge(n) / 24 + above


# search -----------------------------------------------------------------


def basis_monomials(group: str, weight: int) -> list[Monomial]:
    """Spanning monomials: E4^a E6^b for gamma1, Theta_{i,r-i} for gamma2."""
    if weight % 2:
        return []
    if group == GAMMA1:
        out = []
        for b in range(weight // 6 + 1):
            rest = weight - 6 * b
            if rest % 4 == 0:
                out.append(tuple([E(4)] * (rest // 4) + [E(6)] * b))
        return out
    if group == GAMMA2:
        r = weight // 2
        return [(Th(i, r - i),) for i in range(r, -1, -1)]
    raise ValueError(f"unknown group {group!r}")


@dataclass(frozen=True)
class Unique:
    operator: MLDEOperator
    equations: int
    unknowns: int


@dataclass(frozen=True)
class Inconsistent:
    equations: int
    unknowns: int


@dataclass(frozen=True)
class Ambiguous:
    dimension: int
    equations: int
    unknowns: int


def bareiss_solve(rows: list[list[int]], n_unknowns: int):
    """Solve an integer augmented system [A | b] exactly.

    Returns ``("unique", [Fraction])``, ``("inconsistent", None)`` or
    ``("ambiguous", nullity)``.
    """
    M = [list(r) for r in rows]
    m = len(M)
    prev = 1
    pivots: list[int] = []
    r = 0
    for c in range(n_unknowns):
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        for i in range(r + 1, m):
            for j in range(c + 1, n_unknowns + 1):
                num = piv * M[i][j] - M[i][c] * M[r][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss step must divide exactly"
                M[i][j] = q
            M[i][c] = 0
        # rows above the pivot row stay as they are; only later rows were updated
        prev = piv
        pivots.append(c)
        r += 1
        if r == m:
            break
    rank = len(pivots)
    for i in range(rank, m):
        if M[i][n_unknowns] != 0:
            return "inconsistent", None
    if rank < n_unknowns:
        return "ambiguous", n_unknowns - rank
    x = [Fraction(0)] * n_unknowns
    for i in range(rank - 1, -1, -1):
        c = pivots[i]
        s = Fraction(M[i][n_unknowns])
        for j in range(c + 1, n_unknowns):
            s -= M[i][j] * x[j]
        x[c] = s / M[i][c]
    return "unique", x


def find_mlde(f: QSeries, k: int, group: str, N):
    """Find f_1..f_k in the monomial spans making the residual vanish below N."""
    N = as_rational(N)
    _need(f, N)
    if k < 1:
        raise ValueError("order must be >= 1")
    tower = _dq_tower(f, k, N)
    low = min(f.order(), 0) if not f.is_zero else 0
    cache: dict = {}
    columns: list[tuple[int, Monomial, QSeries]] = []
    for r in range(1, k + 1):
        for mono in basis_monomials(group, 2 * r):
            form = ModFormExpr(group, 2 * r, ((1, mono),)).series(N - low, cache)
            columns.append((r, mono, (form * tower[k - r]).truncate(N)))
    rhs = -tower[k]
    exps = set(e for e, _ in rhs.items())
    for _, _, s in columns:
        exps.update(e for e, _ in s.items())
    exps = sorted(exps)
    n_eq, n_unk = len(exps), len(columns)
    if n_unk and n_eq <= n_unk:
        raise InsufficientAccuracy(
            f"{n_eq} equations for {n_unk} unknowns; raise the truncation"
        )
    rows = []
    for e in exps:
        row = [Fraction(s.coefficient(e)) for _, _, s in columns] + [Fraction(rhs.coefficient(e))]
        den = math.lcm(*(v.denominator for v in row))
        rows.append([int(v * den) for v in row])
    kind, val = bareiss_solve(rows, n_unk)
    if kind == "inconsistent":
        return Inconsistent(n_eq, n_unk)
    if kind == "ambiguous":
        return Ambiguous(val, n_eq, n_unk)
    coeffs = []
    for r in range(1, k + 1):
        terms = tuple(
            (x, mono) for x, (rr, mono, _) in zip(val, columns) if rr == r and x != 0
        )
        coeffs.append(ModFormExpr(group, 2 * r, terms))
    return Unique(MLDEOperator(k, group, tuple(coeffs)), n_eq, n_unk)


def same_operator(a: MLDEOperator, b: MLDEOperator, N) -> bool:
    """Equality of coefficient forms as q-series below N (atoms like E8 allowed)."""
    if a.order != b.order:
        return False
    return all(fa.series(N) == fb.series(N) for fa, fb in zip(a.coeffs, b.coeffs))


@dataclass(frozen=True)
class MLDEReport:
    n: int
    trunc: Fraction
    residual: QSeries
    found: object = None

    @property
    def annihilates(self) -> bool:
        return self.residual.is_zero


def verify_builtin(n: int, trunc=None) -> MLDEReport:
    """Apply builtin_mlde(n) to ch[C_n]; on failure also search at the same order."""
    op = builtin_mlde(n)
    N = default_trunc(n) if trunc is None else as_rational(trunc)
    ch = cp_char(n, N)
    res = mlde_apply(op, ch, N)
    found = None
    if not res.is_zero:
        found = find_mlde(ch, op.order, op.group, N)
    return MLDEReport(n, N, res, found)
