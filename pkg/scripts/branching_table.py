"""Branching table: for each weight nu of an e-highest weight vertex in the
empty component, compare count_m / count_M with a direct enumeration.

    python scripts/branching_table.py --charge 0,1 --e 2 --max-rank 6
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from fockcrystal.crystal import is_highest_weight, node_contents, weight_inf
from fockcrystal.decomposition import canonical_decomposition, count_M, count_m, forced_node_counts
from fockcrystal.multipartition import multipartitions, multipartitions_upto, parse_charge
from fockcrystal.symbol import is_semistandard


@dataclass
class TableConfig:
    charge: tuple[int, ...] = (0, 1)
    e: int = 2
    max_rank: int = 6
    jobs: int = 1


def brute(s, nu, e) -> tuple[int, int]:
    want = forced_node_counts(s, nu)
    semi = full = 0
    for lam in multipartitions(sum(want.values()), len(s)):
        if dict(node_contents(lam, s)) == want and is_highest_weight(lam, s, e):
            full += 1
            semi += is_semistandard(lam, s)
    return semi, full


def table(cfg: TableConfig) -> int:
    s, e = cfg.charge, cfg.e
    weights = {}
    for lam in multipartitions_upto(cfg.max_rank, len(s)):
        if is_semistandard(lam, s) and is_highest_weight(lam, s, e):
            weights.setdefault(weight_inf(lam, s), lam)
    bad = 0
    print(f"{'nu':<34} {'t':<10} {'m':>4} {'brute':>6} {'M':>5} {'brute':>6}")
    start = time.perf_counter()
    for nu, lam in sorted(weights.items(), key=lambda kv: (kv[1].rank, str(kv[0]))):
        dec = canonical_decomposition(nu, len(s), e)
        m, big = count_m(s, nu, e), count_M(s, nu, e, jobs=cfg.jobs)
        bm, bM = brute(s, nu, e)
        bad += (m, big) != (bm, bM)
        print(f"{str(nu):<34} {str(dec.t):<10} {m:>4} {bm:>6} {big:>5} {bM:>6}")
    print(f"{len(weights)} weights, {bad} disagreements, {time.perf_counter() - start:.1f}s")
    return bad


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--charge", default="0,1")
    ap.add_argument("--e", type=int, default=2)
    ap.add_argument("--max-rank", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    cfg = TableConfig(parse_charge(args.charge), args.e, args.max_rank, args.jobs)
    raise SystemExit(1 if table(cfg) else 0)


if __name__ == "__main__":
    main()
