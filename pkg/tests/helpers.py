"""Shared graph strategies and small builders for the test suite."""

from itertools import combinations

from hypothesis import strategies as st

from strongeq.graphs import Graph

LABELS = "abcdef"


def G(*edges: str) -> Graph:
    return Graph.from_edges(edges)


def graphs(max_vertices: int = 5, labels: str = LABELS):
    pool = list(combinations(labels[:max_vertices], 2))
    return st.sets(st.sampled_from(pool)).map(lambda es: Graph(frozenset(es)))


def k(vertices: str) -> Graph:
    return Graph.from_edges(combinations(vertices, 2))


ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)
    print(line)
