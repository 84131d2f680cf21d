"""Textual series specifications such as ``cp:3`` or ``an:closed:4``."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import appell, characters as ch, modforms as mf
from .qseries import QSeries

_RAT = re.compile(r"-?\d+(/\d+)?\Z")


class SpecError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def parse_rational(tok: str) -> Fraction:
    if not _RAT.match(tok):
        raise ValueError(f"not an exact rational: {tok!r}")
    return Fraction(tok)


@dataclass(frozen=True)
class Param:
    kind: str  # "int", "rat", or a tuple of allowed words
    name: str


_I = lambda name: Param("int", name)  # noqa: E731
_Q = lambda name: Param("rat", name)  # noqa: E731

# name -> (required params, optional params, builder(params, N))
_GRAMMAR: dict[str, tuple[list, list, Callable]] = {
    "eta": ([], [_Q("s")], lambda p, N: mf.eta(p[0] if p else 1, N)),
    "theta2p4": ([], [], lambda p, N: mf.theta_pow4("theta2", N)),
    "theta3p4": ([], [], lambda p, N: mf.theta_pow4("theta3", N)),
    "theta_rs": ([_I("r"), _I("s")], [], lambda p, N: mf.theta_rs(p[0], p[1], N)),
    "eis": ([_I("2k")], [], lambda p, N: mf.eisenstein(p[0], N)),
    "delta": ([], [], lambda p, N: mf.triangular_delta(N)),
    "vir": ([_I("p"), _I("i")], [], lambda p, N: ch.CharId("vir", tuple(p)).series(N)),
    "affneg": (
        [_I("p"), Param(("A", "B"), "fam"), _I("l")],
        [],
        lambda p, N: ch.CharId("affneg", tuple(p)).series(N),
    ),
    "adm": ([_I("n"), _I("l")], [], lambda p, N: ch.admissible_char(p[0], p[1], N)),
    "weyl": ([_I("m")], [], lambda p, N: ch.weyl_char(p[0], N)),
    "sl3": ([], [], lambda p, N: ch.sl3_char(N)),
    "cp": ([_I("n")], [], lambda p, N: ch.CharId("cp", (p[0],)).series(N)),
    "bq": ([], [], lambda p, N: ch.bq_series(N)),
    "cq": ([], [], lambda p, N: ch.cq_series(N)),
    "legendre": ([], [], lambda p, N: ch.legendre_rhs(N)),
    "an": (
        [Param(appell.METHODS, "method"), _I("n")],
        [],
        lambda p, N: appell.an_series(p[1], p[0], N),
    ),
}


@dataclass(frozen=True)
class SeriesSpec:
    text: str
    name: str
    params: tuple

    def build(self, N) -> QSeries:
        return _GRAMMAR[self.name][2](list(self.params), N)


def parse_spec(text: str) -> SeriesSpec:
    tokens, starts, pos = [], [], 0
    for tok in text.split(":"):
        tokens.append(tok)
        starts.append(pos)
        pos += len(tok) + 1
    name = tokens[0]
    if name not in _GRAMMAR:
        raise SpecError(f"unknown object {name!r}", text, 0)
    required, optional, _ = _GRAMMAR[name]
    args = tokens[1:]
    if len(args) < len(required):
        raise SpecError(
            f"{name} needs {len(required)} parameter(s) "
            f"({':'.join(p.name for p in required)})", text, len(text)
        )
    if len(args) > len(required) + len(optional):
        extra = len(required) + len(optional) + 1
        raise SpecError("too many parameters", text, starts[extra])
    params = []
    for k, (tok, spec) in enumerate(zip(args, required + optional), start=1):
        at = starts[k]
        if isinstance(spec.kind, tuple):
            if tok not in spec.kind:
                raise SpecError(f"{spec.name} must be one of {'|'.join(spec.kind)}", text, at)
            params.append(tok)
            continue
        try:
            val = parse_rational(tok)
        except ValueError:
            raise SpecError(f"{spec.name} must be a rational number", text, at) from None
        if spec.kind == "int":
            if val.denominator != 1:
                raise SpecError(f"{spec.name} must be an integer", text, at)
            val = int(val)
        params.append(val)
    return SeriesSpec(text, name, tuple(params))


def spec_names() -> list[str]:
    return list(_GRAMMAR)
