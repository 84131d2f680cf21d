"""Named identities, each reduced to an exact coefficient comparison."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import appell, characters as ch
from .modforms import triangular_delta
from .qseries import Equal, FirstMismatch, QSeries, as_rational, compare


@dataclass(frozen=True)
class Verdict:
    name: str
    order: Fraction
    result: Equal | FirstMismatch | None
    detail: str = ""
    ok: bool | None = None

    @property
    def equal(self) -> bool:
        if self.ok is not None:
            return self.ok
        return self.result.equal


def _pair(lhs: Callable, rhs: Callable):
    return lambda N: (lhs(N), rhs(N))


def _delta_half_pow4(N):
    N = as_rational(N)
    return (triangular_delta(2 * N) ** 4).truncate(2 * N).scale_exponents(Fraction(1, 2))


IDENTITIES: dict[str, Callable[[Fraction], tuple[QSeries, QSeries]]] = {
    "lemma71": _pair(lambda N: ch.weyl_char(2, N), lambda N: ch.decomposition_sum(3, N)),
    "lemma72": _pair(ch.sl3_char, lambda N: ch.decomposition_sum(4, N)),
    "gauss": _pair(ch.gauss_lhs, ch.gauss_rhs),
    "legendre": _pair(lambda N: (triangular_delta(N) ** 4).truncate(N), ch.legendre_rhs),
    "a2eta": _pair(lambda N: appell.an_series(2, "thm81", N), ch.a2_eta_quotient),
    "bq": _pair(ch.bq_series, _delta_half_pow4),
    "cq": _pair(ch.cq_series, lambda N: (triangular_delta(N) ** 4).truncate(N)),
    "sl3delta": _pair(ch.sl3_char, ch.sl3_char_via_delta),
    "cp2weyl3": _pair(lambda N: ch.cp_char(2, N), lambda N: ch.weyl_char(3, N)),
}


def known_names() -> list[str]:
    return sorted(IDENTITIES) + ["anconsist:n", "partition:J:K"]


class UnknownIdentity(KeyError):
    pass


def _an_consistency(n: int, N: Fraction) -> Verdict:
    series = {m: appell.an_series(n, m, N) for m in appell.METHODS}
    for a, b in combinations(appell.METHODS, 2):
        res = compare(series[a], series[b], N)
        if not res.equal:
            return Verdict(f"anconsist:{n}", N, res, f"{a} vs {b}")
    return Verdict(f"anconsist:{n}", N, Equal(), "all five methods agree")


def _partition(J: int, K: int, N: Fraction) -> Verdict:
    rep = ch.partition_check(J, K)
    detail = (
        f"{rep.checked} pairs, {len(rep.violations)} violations, "
        f"{len(rep.relation_failures)} relation failures, "
        f"{len(rep.range_notes)} index-range notes"
    )
    return Verdict(f"partition:{J}:{K}", N, None, detail, rep.ok)


def verify_named(name: str, N) -> Verdict:
    N = as_rational(N)
    parts = name.split(":")
    if parts[0] == "anconsist" and len(parts) == 2 and parts[1].isdigit():
        return _an_consistency(int(parts[1]), N)
    if parts[0] == "partition" and len(parts) == 3 and all(p.isdigit() for p in parts[1:]):
        return _partition(int(parts[1]), int(parts[2]), N)
    if name not in IDENTITIES:
        raise UnknownIdentity(name)
    lhs, rhs = IDENTITIES[name](N)
    return Verdict(name, N, compare(lhs, rhs, N))


def verify_pair(lhs: QSeries, rhs: QSeries, N, name: str = "lhs == rhs") -> Verdict:
    N = as_rational(N)
    return Verdict(name, N, compare(lhs, rhs, N))
