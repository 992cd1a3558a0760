"""Approximate a grid of targets by CLT-degrees of explicit product groups."""

import argparse
import math
from dataclasses import dataclass
from fractions import Fraction

from cltgroups.density import approximate_target, witness_description


@dataclass
class DemoConfig:
    targets: tuple = ("1/10", "1/4", "1/3", "1/2", "2/3", "3/4", "9/10", "99/100")
    epsilon: str = "1/1000"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("targets", nargs="*", default=list(DemoConfig.targets))
    parser.add_argument("--eps", default=DemoConfig.epsilon)
    a = parser.parse_args()
    cfg = DemoConfig(tuple(a.targets), a.eps)
    eps = Fraction(cfg.epsilon)

    for raw in cfg.targets:
        t = Fraction(raw)
        r = approximate_target(t, eps)
        w = witness_description(r)
        shown = r.index_set if len(r.index_set) <= 8 else r.index_set[:8] + ("...",)
        print(f"t={raw:>7}  P-t={float(r.product - t):.2e}  |I|={len(r.index_set):>5}  "
              f"log10|G|={math.log10(r.witness_order):>9.1f}  {w.verified}  I={shown}")


if __name__ == "__main__":
    main()
