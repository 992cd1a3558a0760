"""Tabulate the subgroup-order spectrum of S_n for small n.

Data only: a handful of values says nothing about the limit of the degree as n grows.
"""

import argparse
import time
from dataclasses import dataclass

from cltgroups.spectrum import sn_report


@dataclass
class ExplorerConfig:
    max_n: int = 6
    allow_slow: bool = False
    workers: int = 1


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=ExplorerConfig.max_n)
    parser.add_argument("--allow-slow", action="store_true", help="include n = 7")
    parser.add_argument("--workers", type=int, default=ExplorerConfig.workers)
    a = parser.parse_args()
    cfg = ExplorerConfig(a.max_n, a.allow_slow, a.workers)

    print(f"{'n':>2} {'|S_n|':>6} {'tau':>4} {'D':>4} {'degree':>8} {'subgroups':>10} {'classes':>8}  seconds")
    for n in range(1, cfg.max_n + 1):
        start = time.perf_counter()
        rep = sn_report(n, allow_slow=cfg.allow_slow, workers=cfg.workers)
        deg = f"{rep.degree.numerator}/{rep.degree.denominator}"
        print(f"{n:>2} {rep.group_order:>6} {rep.tau:>4} {rep.D:>4} {deg:>8} {rep.subgroup_count:>10} "
              f"{rep.conjugacy_class_count:>8}  {time.perf_counter() - start:.2f}")
        if rep.missing_orders:
            print(f"   missing: {list(rep.missing_orders)}")


if __name__ == "__main__":
    main()
