#!/usr/bin/env python3
"""Print, for each axiom, how many labeled spaces of each size satisfy it."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from finsep.axioms import Axiom
from finsep.census import count_by_axiom, count_topologies


@dataclass
class TableConfig:
    max_n: int = 4


def parse_args(argv: list[str] | None = None) -> TableConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4, help="largest size to tabulate")
    return TableConfig(parser.parse_args(argv).max_n)


def run(cfg: TableConfig) -> int:
    sizes = list(range(cfg.max_n + 1))
    tables = {n: count_by_axiom(n) for n in sizes}
    width = max(len(a.value) for a in Axiom)
    header = "AXIOM".ljust(width) + "".join(f"  n={n:<6}" for n in sizes)
    print(header)
    print("TOTAL".ljust(width) + "".join(f"  {count_topologies(n):<8}" for n in sizes))
    for axiom in Axiom:
        row = axiom.value.ljust(width)
        row += "".join(f"  {tables[n][axiom]:<8}" for n in sizes)
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(run(parse_args()))
