"""Tabulate support tau-tilting objects and tau-exceptional sequences.

    python3 scripts/count_sequences.py [--algebras gamma a2 a3 nakayama3] [--json out.json]
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from typing import List

from taux.fileio import bundled
from taux.catalog import knit
from taux.rigidity import exchange_graph, sttilt_enumerate
from taux.sequences import all_sequences, uniqueness_probe


@dataclass
class CountConfig:
    algebras: List[str] = field(default_factory=lambda: ["a1", "a2", "a3", "gamma", "nakayama3"])
    depth: int = 4


@dataclass
class Row:
    algebra: str
    indecomposables: int
    sttilt: int
    ordered: int
    signed: int
    unsigned: int
    graph_edges: int
    probe_violations: int
    seconds: float


def count(name: str, depth: int) -> Row:
    t0 = time.perf_counter()
    cat = knit(bundled(name), depth)
    st = sttilt_enumerate(cat)
    tab = all_sequences(cat)
    g = exchange_graph(cat)
    probe = uniqueness_probe(cat, tab)
    return Row(name, len(cat), len(st), len(tab.pairs), len(set(tab.signed)), len(tab.unsigned()),
               len(g.edges), len(probe.violations), round(time.perf_counter() - t0, 2))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--algebras", nargs="+")
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--json")
    ns = ap.parse_args()
    cfg = CountConfig(ns.algebras or CountConfig().algebras, ns.depth)
    rows = [count(a, cfg.depth) for a in cfg.algebras]
    cols = list(asdict(rows[0]))
    print("  ".join(f"{c:>15}" for c in cols))
    for r in rows:
        print("  ".join(f"{v:>15}" for v in asdict(r).values()))
    if ns.json:
        with open(ns.json, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": [asdict(r) for r in rows]}, fh, indent=2)


if __name__ == "__main__":
    main()
