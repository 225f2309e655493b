"""Time the valuation sweeps and the Hecke suite over growing bounds; prints a CSV table."""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from specfock.branching import duality_sweep, induction_sweep, restriction_sweep, weight_identity_sweep
from specfock.hecke import run_hecke_suite


@dataclass(frozen=True)
class Config:
    max_n: int = 12
    max_l: int = 8
    max_rank: int = 4
    seed: int = 0


SWEEPS = {
    "thm1": restriction_sweep,
    "thm3": induction_sweep,
    "duality": duality_sweep,
    "eq13": weight_identity_sweep,
}


def run(cfg: Config) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["suite", "bound", "rows", "failures", "seconds"])
    ls = range(2, cfg.max_l + 1)
    for name, fn in SWEEPS.items():
        for n in range(4, cfg.max_n + 1, 2):
            t0 = time.perf_counter()
            rows = fn(n, ls)
            w.writerow([name, n, len(rows), sum(not r.passed for r in rows), f"{time.perf_counter() - t0:.3f}"])
    for rank in range(2, cfg.max_rank + 1):
        t0 = time.perf_counter()
        rows = run_hecke_suite(rank, cfg.seed)
        w.writerow(["hecke", rank, len(rows), sum(not r.passed for r in rows), f"{time.perf_counter() - t0:.3f}"])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--max-l", type=int, default=Config.max_l)
    ap.add_argument("--max-rank", type=int, default=Config.max_rank)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    run(Config(a.max_n, a.max_l, a.max_rank, a.seed))


if __name__ == "__main__":
    main()
