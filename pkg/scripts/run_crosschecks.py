"""Crosscheck every decider against its witnesses and the bounded oracle.

Usage: python3 scripts/run_crosschecks.py [--vertices 4] [--samples N] [--fresh 2]

With 2 fresh vertices the planarity run reports the pairs (empty, single
edge): refuting them needs a K5 - e extension, i.e. 3 fresh vertices.  Those
records show witness_ok=true with oracle="exhausted" -- a budget limit, not a
decider disagreement.
"""

import argparse
import time
from dataclasses import dataclass

from strongeq.graphs import build_cycle, build_path, build_star
from strongeq.oracle import OracleBudget, all_graph_pairs, crosscheck, sampled_graph_pairs
from strongeq.properties import PropertySelector


@dataclass
class CrosscheckConfig:
    vertices: int = 4
    samples: int | None = None  # None: every pair of labeled graphs
    seed: int = 0
    fresh: int = 2
    max_edges: int | None = None
    refute: bool = True


def selectors():
    tri = build_cycle("pqr")
    yield PropertySelector.hamiltonian()
    yield PropertySelector.planarity()
    for pattern in (build_path("pqrs"), build_star("p", "qrs"), tri, build_cycle("pqrs")):
        yield PropertySelector.subgraph(pattern)
    for k in (1, 2, 3):
        yield PropertySelector.kcolor(k)
    yield PropertySelector.edge2color()
    for k in (1, 2, 3):
        yield PropertySelector.kconn(k)
        yield PropertySelector.kconn_psi(k)


def main(cfg: CrosscheckConfig) -> int:
    labels = "abcdefg"[:cfg.vertices]
    if cfg.samples is None:
        pairs = all_graph_pairs(labels)
    else:
        pairs = sampled_graph_pairs(labels, cfg.samples, cfg.seed)
    budget = OracleBudget(cfg.fresh, cfg.max_edges)
    failures = 0
    for prop in selectors():
        t0 = time.perf_counter()
        rep = crosscheck(prop, pairs, budget, refute=cfg.refute)
        print(f"{rep.summary()}  [{time.perf_counter() - t0:.1f}s]")
        for rec in rep.violations[:5]:
            print("   ", rec.to_json())
        failures += len(rep.violations)
    return 1 if failures else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, default=4)
    ap.add_argument("--samples", type=int)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--fresh", type=int, default=2)
    ap.add_argument("--max-edges", type=int)
    ap.add_argument("--no-refute", action="store_true")
    a = ap.parse_args()
    raise SystemExit(main(CrosscheckConfig(a.vertices, a.samples, a.seed, a.fresh, a.max_edges,
                                           not a.no_refute)))
