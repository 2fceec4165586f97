"""Print graded dimensions next to the closed-form series coefficients."""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from sympsing.hilbert import default_N, graded_dimension, series_coefficients


@dataclass(frozen=True)
class TableConfig:
    d_min: int = 4
    d_max: int = 7
    N: int | None = None
    as_json: bool = False


def run(cfg: TableConfig) -> list[dict]:
    rows = []
    for d in range(cfg.d_min, cfg.d_max + 1):
        N = cfg.N if cfg.N is not None else default_N(d)
        series = series_coefficients(d, N)
        t = time.perf_counter()
        computed = [graded_dimension(d, n) for n in range(N + 1)]
        rows.append({"d": d, "N": N, "computed": computed, "series": series,
                     "agree": computed == series, "seconds": round(time.perf_counter() - t, 2)})
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--d-min", type=int, default=4)
    p.add_argument("--d-max", type=int, default=7)
    p.add_argument("--N", type=int)
    p.add_argument("--json", action="store_true")
    a = p.parse_args()
    cfg = TableConfig(a.d_min, a.d_max, a.N, a.json)
    rows = run(cfg)
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    for r in rows:
        print(f"d={r['d']} N={r['N']} agree={r['agree']} ({r['seconds']}s)")
        print("  computed:", r["computed"])
        print("  series:  ", r["series"])


if __name__ == "__main__":
    main()
