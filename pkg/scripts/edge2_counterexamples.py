"""List pairs where the endpoint/parity condition for edge 2-colorability
disagrees with the exact decider, each with the oracle's separating extension.
"""

import argparse
from itertools import combinations

from strongeq.deciders import decide_edge2color
from strongeq.graphs import all_graphs, serialize_graph
from strongeq.oracle import OracleBudget, refute_bounded
from strongeq.properties import PropertySelector


def flat(g):
    return serialize_graph(g).replace("\n", ",") or "-"


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, default=4)
    a = ap.parse_args()
    prop = PropertySelector.edge2color()
    count = 0
    for g, h in combinations(all_graphs("abcdef"[:a.vertices]), 2):
        if decide_edge2color(g, h, method="paths").verdict != decide_edge2color(g, h).verdict:
            f = refute_bounded(prop, g, h, OracleBudget(1, max_edges=2))
            print(f"G={flat(g):<16} H={flat(h):<16} F={flat(f)}")
            count += 1
    print(f"{count} disagreeing pairs")
