"""Check the built-in MLDEs for n = 2..5 and search one order below each.

Prints the residual status, the re-derived operator when the built-in one
fails, and the outcome of the lower-order searches.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from qverify.characters import cp_char
from qverify.mlde import builtin_mlde, default_trunc, find_mlde, verify_builtin


@dataclass(frozen=True)
class Config:
    ns: tuple = (2, 3, 4, 5)
    above: int = 15  # truncation, in exponent units above the leading term
    lower: int = 2  # how many orders below the built-in one to search


def run(cfg: Config) -> None:
    for n in cfg.ns:
        N = default_trunc(n, cfg.above)
        rep = verify_builtin(n, N)
        op = builtin_mlde(n)
        if rep.annihilates:
            status = "annihilates"
        else:
            e, c = rep.residual.leading_term()
            status = f"residual starts {c}*q^{e}"
        print(f"n={n}  order {op.order} over {op.group}, trunc {N}: {status}")
        if rep.found is not None:
            print(f"    search at order {op.order}: {type(rep.found).__name__}")
            for r, f in enumerate(getattr(rep.found, "operator", op).coeffs, start=1):
                print(f"      f_{r} = {f}")
        ch = cp_char(n, N)
        for k in range(max(1, op.order - cfg.lower), op.order):
            print(f"    order {k}: {type(find_mlde(ch, k, op.group, N)).__name__}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--above", type=int, default=Config.above)
    ap.add_argument("--lower", type=int, default=Config.lower)
    args = ap.parse_args()
    run(Config(above=args.above, lower=args.lower))


if __name__ == "__main__":
    main()
