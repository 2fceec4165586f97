"""Sigma_lambda(v), representation types and local quiver data for a range of d."""

import argparse
from dataclasses import dataclass

from sympsing.quiver import local_quiver, representation_types, sigma_lambda


@dataclass(frozen=True)
class CensusConfig:
    d_min: int = 4
    d_max: int = 8


def run(cfg: CensusConfig):
    for d in range(cfg.d_min, cfg.d_max + 1):
        sig = sigma_lambda(d)
        types = representation_types(d)
        L = local_quiver(d)
        print(f"d={d}: |Sigma|={len(sig)} types={len(types)} leaf dims={sorted(t['dimension'] for t in types)}")
        for b in sig:
            print("   ", b)
        print(f"    local quiver v={L['v']} w={L['w']} dim={L['dimension']}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--d-min", type=int, default=4)
    p.add_argument("--d-max", type=int, default=8)
    a = p.parse_args()
    run(CensusConfig(a.d_min, a.d_max))


if __name__ == "__main__":
    main()
