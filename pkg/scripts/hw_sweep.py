"""Exhaustive sweep: highest weight vs totally periodic, over several (l, e, s).

    python scripts/hw_sweep.py --max-rank 6
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from fockcrystal.crystal import is_highest_weight
from fockcrystal.multipartition import format_charge, multipartitions
from fockcrystal.symbol import is_totally_periodic


@dataclass
class SweepConfig:
    max_rank: int = 6
    pools: list[tuple[int, tuple[int, ...]]] = field(
        default_factory=lambda: [(2, (0,)), (2, (0, 0)), (3, (0, 1)), (2, (0, 0, 1)), (3, (0, 1, 1)), (4, (0, 2))]
    )


def sweep(cfg: SweepConfig) -> int:
    mismatches = 0
    print(f"{'e':>2} {'s':<10} " + " ".join(f"n={n:<5}" for n in range(cfg.max_rank + 1)) + "  time")
    for e, s in cfg.pools:
        start = time.perf_counter()
        cells = []
        for n in range(cfg.max_rank + 1):
            hw = 0
            for lam in multipartitions(n, len(s)):
                a, b = is_highest_weight(lam, s, e), is_totally_periodic(lam, s, e)
                hw += a
                mismatches += a != b
            cells.append(f"{hw:<7}")
        print(f"{e:>2} {format_charge(s):<10} " + " ".join(cells) + f"  {time.perf_counter() - start:.2f}s")
    print(f"highest weight vertices per rank shown; mismatches: {mismatches}")
    return mismatches


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-rank", type=int, default=6)
    args = ap.parse_args()
    raise SystemExit(1 if sweep(SweepConfig(max_rank=args.max_rank)) else 0)


if __name__ == "__main__":
    main()
