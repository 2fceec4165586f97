"""Time the unit-ideal certificates for every chart Y_r, and report basis sizes."""

import argparse
import time
from dataclasses import dataclass, field

from sympsing.exactcore import Budget, groebner_basis
from sympsing.varieties import jacobian_minors, yr_relations


@dataclass(frozen=True)
class TimingConfig:
    d_min: int = 4
    d_max: int = 8
    budget: Budget = field(default_factory=Budget)


def run(cfg: TimingConfig) -> bool:
    ok = True
    for d in range(cfg.d_min, cfg.d_max + 1):
        for r in range(1, d):
            rels = yr_relations(d, r)
            gens = rels + jacobian_minors(rels)
            t = time.perf_counter()
            gb = groebner_basis(gens, budget=cfg.budget)
            unit = len(gb) == 1 and gb[0].is_constant()
            ok &= unit
            print(f"d={d} r={r}: {len(gens)} generators -> unit ideal {unit} ({time.perf_counter() - t:.3f}s)")
    return ok


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--d-min", type=int, default=4)
    p.add_argument("--d-max", type=int, default=8)
    a = p.parse_args()
    raise SystemExit(0 if run(TimingConfig(a.d_min, a.d_max)) else 1)


if __name__ == "__main__":
    main()
