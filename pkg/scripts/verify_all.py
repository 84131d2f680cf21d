"""Run every named identity and print one verdict per line.

    python3 scripts/verify_all.py --order 40
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from fractions import Fraction

from qverify.cli import render_verdict_text
from qverify.verify import IDENTITIES, verify_named


@dataclass(frozen=True)
class Config:
    order: Fraction = Fraction(30)
    an_range: tuple = (2, 3, 4, 5, 6)
    partition: tuple = (50, 50)
    names: tuple = field(default_factory=lambda: tuple(sorted(IDENTITIES)))


def run(cfg: Config) -> bool:
    names = list(cfg.names)
    names += [f"anconsist:{n}" for n in cfg.an_range]
    names.append("partition:{}:{}".format(*cfg.partition))
    ok = True
    for name in names:
        t0 = time.perf_counter()
        v = verify_named(name, cfg.order)
        ok &= v.equal
        print(f"{render_verdict_text(v)}  [{time.perf_counter() - t0:.2f}s]")
    return ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=Fraction, default=Config.order)
    args = ap.parse_args()
    return 0 if run(Config(order=args.order)) else 1


if __name__ == "__main__":
    raise SystemExit(main())
