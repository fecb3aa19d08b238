"""Oracle status of (K, K - e) for complete graphs, per property.

Strengthening is the identity exactly when every such pair is separated, so
this table is a quick empirical probe of which properties are "identity-like".
"""

import argparse

from strongeq.oracle import OracleBudget, complete_graph_criterion
from strongeq.properties import PropertySelector

PROPS = [
    PropertySelector.hamiltonian(),
    PropertySelector.planarity(),
    PropertySelector.kcolor(2),
    PropertySelector.kcolor(3),
    PropertySelector.edge2color(),
    PropertySelector.kconn(1),
    PropertySelector.kconn(2),
]

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=5)
    ap.add_argument("--fresh", type=int, default=2)
    ap.add_argument("--max-edges", type=int, default=4)
    a = ap.parse_args()
    budget = OracleBudget(a.fresh, a.max_edges)
    for prop in PROPS:
        recs = complete_graph_criterion(prop, a.max_vertices, budget)
        cells = " ".join(f"K{r.n}:{r.status}" for r in recs)
        print(f"{str(prop):<12} {cells}")
