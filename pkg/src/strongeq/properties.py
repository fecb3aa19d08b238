"""Exact predicates and enumerators for the graph properties under study.

Everything here is exact and exponential in the worst case (backtracking for
hamiltonicity, subgraph containment and colorings; subset enumeration for
cutsets).  That is fine at the graph sizes the deciders are checked on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import networkx as nx

from .graphs import Graph, components, connected_parts

MAX_PLANARITY_VERTICES = 16


class TooLarge(ValueError):
    pass


class NotEdge2Colorable(ValueError):
    pass


class EmptyPattern(ValueError):
    pass


# -- hamiltonicity -----------------------------------------------------------

def is_hamiltonian(g: Graph) -> bool:
    vs = sorted(g.vertices)
    n = len(vs)
    if n < 3:
        return False
    adj = g.adjacency
    if any(len(adj[v]) < 2 for v in vs) or len(components(g)) != 1:
        return False
    start = vs[0]
    on_path = {start}

    def extend(v: str, depth: int) -> bool:
        if depth == n:
            return start in adj[v]
        for w in sorted(adj[v]):
            if w in on_path:
                continue
            on_path.add(w)
            if extend(w, depth + 1):
                return True
            on_path.discard(w)
        return False

    return extend(start, 1)


# -- planarity ---------------------------------------------------------------

def is_planar(g: Graph) -> bool:
    n = len(g.vertices)
    if n > MAX_PLANARITY_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the planarity limit {MAX_PLANARITY_VERTICES}")
    if n <= 4:
        return True
    if len(g) > 3 * n - 6:
        return False
    nxg = nx.Graph()
    nxg.add_edges_from(g.edges)
    planar, _ = nx.check_planarity(nxg)
    return planar


# -- subgraph containment ----------------------------------------------------

def _embeddings(pattern: Graph, g: Graph) -> Iterator[dict[str, str]]:
    p_adj = pattern.adjacency
    g_adj = g.adjacency
    # connected-first order: each next vertex has as many mapped neighbours as possible
    order: list[str] = []
    remaining = set(pattern.vertices)
    while remaining:
        best = max(remaining, key=lambda v: (
            sum(1 for w in p_adj[v] if w in order), len(p_adj[v]), v))
        order.append(best)
        remaining.discard(best)
    mapping: dict[str, str] = {}
    used: set[str] = set()
    g_vs = sorted(g.vertices)

    def search(i: int):
        if i == len(order):
            yield dict(mapping)
            return
        pv = order[i]
        mapped_nbrs = [mapping[w] for w in p_adj[pv] if w in mapping]
        if mapped_nbrs:
            cands = sorted(set.intersection(*(set(g_adj[m]) for m in mapped_nbrs)))
        else:
            cands = g_vs
        need = len(p_adj[pv])
        for gv in cands:
            if gv in used or len(g_adj[gv]) < need:
                continue
            mapping[pv] = gv
            used.add(gv)
            yield from search(i + 1)
            del mapping[pv]
            used.discard(gv)

    yield from search(0)


def contains_subgraph(pattern: Graph, g: Graph) -> bool:
    """Injective map of pattern vertices sending every pattern edge to an edge of ``g``."""
    if not pattern:
        return True
    if len(pattern) > len(g) or len(pattern.vertices) > len(g.vertices):
        return False
    p_deg = sorted((len(n) for n in pattern.adjacency.values()), reverse=True)
    g_deg = sorted((len(n) for n in g.adjacency.values()), reverse=True)
    if any(p > q for p, q in zip(p_deg, g_deg)):
        return False
    return next(_embeddings(pattern, g), None) is not None


def find_subgraph(pattern: Graph, g: Graph) -> dict[str, str] | None:
    if not contains_subgraph(pattern, g):
        return None
    return next(_embeddings(pattern, g))


# -- vertex colorings --------------------------------------------------------

def _colorings(g: Graph, k: int) -> Iterator[list[int]]:
    vs = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    adj = g.adjacency
    color: dict[str, int] = {}

    def assign(i: int, used: int):
        if i == len(vs):
            yield [color[v] for v in vs]
            return
        v = vs[i]
        banned = {color[w] for w in adj[v] if w in color}
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            color[v] = c
            yield from assign(i + 1, max(used, c + 1))
            del color[v]

    yield from assign(0, 0)


def _as_partition(vs: list[str], labels: list[int]) -> frozenset[frozenset[str]]:
    blocks: dict[int, set[str]] = {}
    for v, c in zip(vs, labels):
        blocks.setdefault(c, set()).add(v)
    return frozenset(frozenset(b) for b in blocks.values())


def enumerate_proper_colorings(g: Graph, k: int) -> frozenset[frozenset[frozenset[str]]]:
    """All partitions of V(g) into at most k nonempty independent blocks."""
    if k < 1:
        raise ValueError("k must be at least 1")
    vs = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    return frozenset(_as_partition(vs, labels) for labels in _colorings(g, k))


def is_k_colorable(g: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be at least 1")
    return next(_colorings(g, k), None) is not None


def is_proper_coloring(g: Graph, partition) -> bool:
    block_of = {v: i for i, b in enumerate(partition) for v in b}
    return all(block_of[u] != block_of[v] for u, v in g.edges)


def bipartition(g: Graph) -> dict[str, int] | None:
    """2-coloring with the smallest vertex of each component on side 0, or None."""
    side: dict[str, int] = {}
    adj = g.adjacency
    for root in sorted(g.vertices):
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in side:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return None
    return side


# -- edge 2-colorability -----------------------------------------------------

@dataclass(frozen=True)
class Edge2Profile:
    paths: frozenset[tuple[tuple[str, str], int]]  # ((a, b), length parity)
    cycles: frozenset[frozenset[str]]
    degrees: tuple[tuple[str, int], ...]

    def path_between(self, a: str, b: str):
        key = (a, b) if a < b else (b, a)
        for ends, parity in self.paths:
            if ends == key:
                return parity
        return None


def _split_components(g: Graph):
    for part in components(g):
        n_edges = sum(g.degree(v) for v in part) // 2
        yield part, n_edges


def is_edge_2_colorable(g: Graph) -> bool:
    if any(len(n) > 2 for n in g.adjacency.values()):
        return False
    for part, n_edges in _split_components(g):
        if n_edges == len(part) and n_edges % 2:
            return False
    return True


def edge2_profile(g: Graph) -> Edge2Profile:
    if not is_edge_2_colorable(g):
        raise NotEdge2Colorable("graph has a vertex of degree 3 or an odd cycle")
    paths, cycles = set(), set()
    for part, n_edges in _split_components(g):
        if n_edges == len(part):
            cycles.add(part)
        else:
            a, b = sorted(v for v in part if g.degree(v) == 1)
            paths.add(((a, b), n_edges % 2))
    degrees = tuple(sorted((v, g.degree(v)) for v in g.vertices))
    return Edge2Profile(frozenset(paths), frozenset(cycles), degrees)


# -- cutsets and connectivity ------------------------------------------------

def is_cutset(g: Graph, c: frozenset[str], comps=None) -> bool:
    """Cutset test under the component-wise definition used for disconnected graphs."""
    comps = components(g) if comps is None else comps
    if not c:
        return len(comps) >= 2
    surviving = sum(1 for part in comps if not part <= c)
    rest = g.vertices - c
    parts = connected_parts(rest, (e for e in g.edges if e[0] in rest and e[1] in rest))
    return len(parts) > surviving


def small_vertex_sets(vs, k: int):
    vs = sorted(vs)
    for size in range(min(k, len(vs) + 1)):
        for c in combinations(vs, size):
            yield frozenset(c)


def cutsets_below(g: Graph, k: int) -> frozenset[frozenset[str]]:
    """Every cutset of ``g`` with fewer than ``k`` vertices."""
    if k < 1:
        raise ValueError("k must be at least 1")
    comps = components(g)
    return frozenset(c for c in small_vertex_sets(g.vertices, k) if is_cutset(g, c, comps))


def has_cutset_below(g: Graph, k: int) -> bool:
    comps = components(g)
    return any(is_cutset(g, c, comps) for c in small_vertex_sets(g.vertices, k))


def is_k_connected(g: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be at least 1")
    return len(g.vertices) > k and not has_cutset_below(g, k)


# -- pattern classes ---------------------------------------------------------

class StrongClass(enum.Enum):
    STAR = "star"
    CYCLE = "cycle"
    COMPLETE = "complete"
    THREE_CONNECTED = "3-connected"
    TWO_CONN_CUTSET_EDGES = "2-connected-cutset-edges"
    THREE_EDGE_PATH = "3-edge-path"
    NOT_STRONG_TREE = "not-strong-tree"
    UNKNOWN = "unknown"

    @property
    def characterized(self) -> bool:
        return self not in (StrongClass.NOT_STRONG_TREE, StrongClass.UNKNOWN)


def is_star(h: Graph) -> bool:
    return bool(h) and any(len(n) == len(h) for n in h.adjacency.values())


def is_cycle(h: Graph) -> bool:
    return (len(h.vertices) >= 3 and all(len(n) == 2 for n in h.adjacency.values())
            and len(components(h)) == 1)


def is_complete(h: Graph) -> bool:
    n = len(h.vertices)
    return bool(h) and len(h) == n * (n - 1) // 2


def is_tree(h: Graph) -> bool:
    return bool(h) and len(h) == len(h.vertices) - 1 and len(components(h)) == 1


def classify_pattern(h: Graph) -> StrongClass:
    if not h:
        raise EmptyPattern("pattern has no edges")
    if is_star(h):
        return StrongClass.STAR
    if is_cycle(h):
        return StrongClass.CYCLE
    if is_complete(h):
        return StrongClass.COMPLETE
    if is_k_connected(h, 3):
        return StrongClass.THREE_CONNECTED
    if is_k_connected(h, 2):
        pairs = (c for c in cutsets_below(h, 3) if len(c) == 2)
        if all(tuple(sorted(c)) in h for c in pairs):
            return StrongClass.TWO_CONN_CUTSET_EDGES
    if is_tree(h):
        return StrongClass.THREE_EDGE_PATH if len(h) == 3 else StrongClass.NOT_STRONG_TREE
    return StrongClass.UNKNOWN


def first_family_mismatch(g: Graph, h: Graph, k: int) -> frozenset[str] | None:
    """Smallest (then lexicographically first) C, |C| < k, where g - C and h - C
    have different component vertex sets.  Both graphs must share a vertex set."""
    from .graphs import components_after_deletion

    for c in small_vertex_sets(g.vertices, k):
        if components_after_deletion(g, c) != components_after_deletion(h, c):
            return c
    return None


# -- property selectors ------------------------------------------------------

class SelectorError(ValueError):
    pass


@dataclass(frozen=True)
class PropertySelector:
    """Which property the equivalence relation is built from.

    ``holds`` is the membership test for the property as the characterizations
    phrase it: non-planarity for ``planar``, "has a cutset of fewer than k
    vertices" for ``kconn`` and "not k-connected" for ``kconn-psi``.  Since the
    induced relation only compares membership, the polarity never changes a
    verdict; it only fixes which side a witness reports.
    """

    kind: str
    k: int | None = None
    pattern: Graph | None = None

    KINDS = ("ham", "planar", "subgraph", "kcolor", "edge2color", "kconn", "kconn-psi")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise SelectorError(f"unknown property {self.kind!r}")
        if self.kind in ("kcolor", "kconn", "kconn-psi"):
            if self.k is None or self.k < 1:
                raise SelectorError(f"{self.kind} needs k >= 1")
        if self.kind == "subgraph" and not self.pattern:
            raise EmptyPattern("subgraph property needs a nonempty pattern")

    @classmethod
    def hamiltonian(cls):
        return cls("ham")

    @classmethod
    def planarity(cls):
        return cls("planar")

    @classmethod
    def subgraph(cls, pattern: Graph):
        return cls("subgraph", pattern=pattern)

    @classmethod
    def kcolor(cls, k: int):
        return cls("kcolor", k=k)

    @classmethod
    def edge2color(cls):
        return cls("edge2color")

    @classmethod
    def kconn(cls, k: int):
        return cls("kconn", k=k)

    @classmethod
    def kconn_psi(cls, k: int):
        return cls("kconn-psi", k=k)

    def holds(self, g: Graph) -> bool:
        kind = self.kind
        if kind == "ham":
            return is_hamiltonian(g)
        if kind == "planar":
            return not is_planar(g)
        if kind == "subgraph":
            return contains_subgraph(self.pattern, g)
        if kind == "kcolor":
            return is_k_colorable(g, self.k)
        if kind == "edge2color":
            return is_edge_2_colorable(g)
        if kind == "kconn":
            return has_cutset_below(g, self.k)
        return not is_k_connected(g, self.k)

    def __str__(self) -> str:
        if self.kind == "subgraph":
            return "subgraph:" + ",".join(f"{u}-{v}" for u, v in self.pattern.sorted_edges())
        if self.k is not None:
            return f"{self.kind}:{self.k}"
        return self.kind

    @classmethod
    def parse(cls, text: str, load_pattern=None) -> "PropertySelector":
        """Parse ``ham``, ``kcolor:3``, ``subgraph:<file>`` and friends."""
        name, _, arg = text.partition(":")
        if name in ("ham", "planar", "edge2color"):
            if arg:
                raise SelectorError(f"{name} takes no argument")
            return cls(name)
        if name in ("kcolor", "kconn", "kconn-psi"):
            try:
                k = int(arg)
            except ValueError:
                raise SelectorError(f"{name} needs an integer k, got {arg!r}") from None
            return cls(name, k=k)
        if name == "subgraph":
            if not arg or load_pattern is None:
                raise SelectorError("subgraph needs a pattern file")
            return cls(name, pattern=load_pattern(arg))
        raise SelectorError(f"unknown property {text!r}")
