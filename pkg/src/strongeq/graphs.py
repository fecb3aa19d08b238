"""Edge-set graphs, the union algebra, vertex deletion and standard builders.

A :class:`Graph` is nothing more than a finite set of undirected edges; its
vertex set is whatever the edges touch, so it can never hold an isolated
vertex.  Deleting vertices can strand vertices, which is why deletion results
are :class:`LabeledGraph` values with an explicit vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[str, str]

FRESH_PREFIX = "_"


class GraphFormatError(ValueError):
    """Raised for unparseable graph text."""

    def __init__(self, lineno: int, line: str, message: str):
        super().__init__(f"line {lineno}: {message}: {line!r}")
        self.lineno = lineno
        self.line = line


class MalformedLine(GraphFormatError):
    pass


class LoopEdge(GraphFormatError):
    pass


class ForeignVertex(ValueError):
    pass


class DegenerateSpec(ValueError):
    pass


def make_edge(u: str, v: str) -> Edge:
    if u == v:
        raise ValueError(f"loop edge on {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite set of undirected edges over string labels."""

    edges: frozenset[Edge] = field(default_factory=frozenset)

    @classmethod
    def from_edges(cls, pairs: Iterable[Iterable[str]]) -> "Graph":
        return cls(frozenset(make_edge(*pair) for pair in pairs))

    @classmethod
    def parse(cls, text: str) -> "Graph":
        return parse_graph(text)

    @cached_property
    def vertices(self) -> frozenset[str]:
        return frozenset(v for e in self.edges for v in e)

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def degree(self, v: str) -> int:
        return len(self.adjacency.get(v, ()))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges())

    def __len__(self) -> int:
        return len(self.edges)

    def __bool__(self) -> bool:
        return bool(self.edges)

    def __contains__(self, edge) -> bool:
        return make_edge(*edge) in self.edges

    def __or__(self, other: "Graph") -> "Graph":
        return Graph(self.edges | other.edges)

    def __sub__(self, other: "Graph") -> "Graph":
        return Graph(self.edges - other.edges)

    def __le__(self, other: "Graph") -> bool:
        return self.edges <= other.edges

    def __lt__(self, other: "Graph") -> bool:
        return self.edges < other.edges

    def __xor__(self, other: "Graph") -> "Graph":
        return Graph(self.edges ^ other.edges)

    def add(self, u: str, v: str) -> "Graph":
        return Graph(self.edges | {make_edge(u, v)})

    def remove(self, u: str, v: str) -> "Graph":
        return Graph(self.edges - {make_edge(u, v)})

    def __repr__(self) -> str:
        body = ", ".join(f"{u}{v}" if len(u) == len(v) == 1 else f"{u}-{v}"
                         for u, v in self.sorted_edges())
        return f"Graph({{{body}}})"


@dataclass(frozen=True)
class LabeledGraph:
    """Graph with an explicit vertex set; isolated vertices allowed."""

    vertices: frozenset[str]
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ForeignVertex(f"edge {u}-{v} leaves the vertex set")

    @classmethod
    def of(cls, g: Graph) -> "LabeledGraph":
        return cls(g.vertices, g.edges)

    def delete(self, removed: Iterable[str]) -> "LabeledGraph":
        removed = frozenset(removed)
        return LabeledGraph(
            self.vertices - removed,
            frozenset(e for e in self.edges if e[0] not in removed and e[1] not in removed),
        )

    def components(self) -> frozenset[frozenset[str]]:
        return connected_parts(self.vertices, self.edges)


ComponentFamily = frozenset  # frozenset[frozenset[str]]


def connected_parts(vertices: Iterable[str], edges: Iterable[Edge]) -> frozenset[frozenset[str]]:
    """Vertex sets of connected components (union-find)."""
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[str, set[str]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return frozenset(frozenset(s) for s in groups.values())


def components(g: Graph) -> frozenset[frozenset[str]]:
    return connected_parts(g.vertices, g.edges)


def components_after_deletion(g: Graph, c: Iterable[str]) -> frozenset[frozenset[str]]:
    """Component vertex sets of ``g - c``; stranded vertices are singleton parts."""
    c = frozenset(c)
    if not c <= g.vertices:
        raise ForeignVertex(f"vertices {sorted(c - g.vertices)} are not in the graph")
    return LabeledGraph.of(g).delete(c).components()


def graph_union(g: Graph, h: Graph) -> Graph:
    return g | h


def parse_graph(text: str) -> Graph:
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLine(lineno, raw, f"expected 2 tokens, got {len(tokens)}")
        u, v = tokens
        if u == v:
            raise LoopEdge(lineno, raw, "loop edge")
        edges.add(make_edge(u, v))
    return Graph(frozenset(edges))


def serialize_graph(g: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in g.sorted_edges())


def fresh_vertices(count: int, avoid: Iterable[str] = ()) -> list[str]:
    """``count`` distinct reserved labels ``_0, _1, ...`` not in ``avoid``."""
    if count < 0:
        raise ValueError("count must be non-negative")
    avoid = set(avoid)
    out = []
    i = 0
    while len(out) < count:
        label = f"{FRESH_PREFIX}{i}"
        if label not in avoid:
            out.append(label)
        i += 1
    return out


def build_complete(vertices: Iterable[str]) -> Graph:
    vs = sorted(set(vertices))
    if len(vs) < 2:
        raise DegenerateSpec("a complete graph needs at least 2 vertices")
    return Graph.from_edges(combinations(vs, 2))


def build_complete_multipartite(blocks: Iterable[Iterable[str]]) -> Graph:
    blocks = [frozenset(b) for b in blocks]
    if len(blocks) < 2 or any(not b for b in blocks):
        raise DegenerateSpec("need at least 2 nonempty blocks")
    seen: set[str] = set()
    for b in blocks:
        if seen & b:
            raise DegenerateSpec("blocks must be disjoint")
        seen |= b
    return Graph.from_edges(
        (u, v) for b1, b2 in combinations(blocks, 2) for u in b1 for v in b2
    )


def build_path(vertices: Iterable[str]) -> Graph:
    vs = list(vertices)
    return Graph.from_edges(zip(vs, vs[1:]))


def build_cycle(vertices: Iterable[str]) -> Graph:
    vs = list(vertices)
    if len(vs) < 3:
        raise DegenerateSpec("a cycle needs at least 3 vertices")
    return Graph.from_edges(zip(vs, vs[1:] + vs[:1]))


def build_star(center: str, leaves: Iterable[str]) -> Graph:
    return Graph.from_edges((center, leaf) for leaf in leaves)


def relabel(g: Graph, mapping: dict[str, str]) -> Graph:
    return Graph.from_edges((mapping.get(u, u), mapping.get(v, v)) for u, v in g.edges)


def all_graphs(vertices: Iterable[str]) -> list[Graph]:
    """Every edge subset of the complete graph on ``vertices`` (edgeless graph included)."""
    pool = list(combinations(sorted(set(vertices)), 2))
    out = []
    for mask in range(1 << len(pool)):
        out.append(Graph(frozenset(pool[i] for i in range(len(pool)) if mask >> i & 1)))
    return out
