"""Strong-equivalence deciders, one per characterized property."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, components, components_after_deletion, fresh_vertices
from .properties import (
    PropertySelector,
    bipartition,
    classify_pattern,
    contains_subgraph,
    edge2_profile,
    enumerate_proper_colorings,
    first_family_mismatch,
    is_edge_2_colorable,
    is_k_colorable,
    is_planar,
    small_vertex_sets,
)
from .witnesses import Witness, witness_for


class Verdict(enum.Enum):
    EQUIVALENT = "EQUIVALENT"
    NOT_EQUIVALENT = "NOT-EQUIVALENT"
    UNKNOWN = "UNKNOWN"

    @property
    def exit_code(self) -> int:
        return {"EQUIVALENT": 0, "NOT-EQUIVALENT": 1, "UNKNOWN": 2}[self.value]


@dataclass(frozen=True)
class DecisionOutcome:
    verdict: Verdict
    witness: Witness | None = None
    reason: str = ""

    @property
    def equivalent(self) -> bool:
        return self.verdict is Verdict.EQUIVALENT


EQUIVALENT = DecisionOutcome(Verdict.EQUIVALENT)
NOT_EQUIVALENT = DecisionOutcome(Verdict.NOT_EQUIVALENT)


def _verdict(same: bool) -> DecisionOutcome:
    return EQUIVALENT if same else NOT_EQUIVALENT


def decide_hamiltonian(g: Graph, h: Graph) -> DecisionOutcome:
    return _verdict(g == h)


def decide_planarity(g: Graph, h: Graph) -> DecisionOutcome:
    return _verdict(g == h or (not is_planar(g) and not is_planar(h)))


UNCHARACTERIZED = "strongness of this pattern class is not characterized"


def decide_subgraph(pattern: Graph, g: Graph, h: Graph) -> DecisionOutcome:
    cls = classify_pattern(pattern)
    if g == h:
        return EQUIVALENT
    in_g, in_h = contains_subgraph(pattern, g), contains_subgraph(pattern, h)
    if in_g != in_h:
        return NOT_EQUIVALENT
    if not cls.characterized:
        return DecisionOutcome(Verdict.UNKNOWN, reason=f"{UNCHARACTERIZED} ({cls.value})")
    return _verdict(in_g)


def _same_colorings_k2(g: Graph, h: Graph) -> bool:
    side_g, side_h = bipartition(g), bipartition(h)
    if side_g is None or side_h is None:
        return side_g is None and side_h is None
    return (g.vertices == h.vertices and components(g) == components(h)
            and side_g == side_h)


def decide_kcolor(g: Graph, h: Graph, k: int, method: str = "auto") -> DecisionOutcome:
    """Equal sets of good k-colorings.

    ``method`` is ``"auto"`` (closed forms for k = 1, 2), or ``"enumerate"``
    to force comparison of the full coloring families.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if method == "auto" and k == 1:
        return _verdict(bool(g) == bool(h))
    if method == "auto" and k == 2:
        return _verdict(_same_colorings_k2(g, h))
    if g.vertices != h.vertices:
        return _verdict(not is_k_colorable(g, k) and not is_k_colorable(h, k))
    return _verdict(enumerate_proper_colorings(g, k) == enumerate_proper_colorings(h, k))


def edge2_path_condition(g: Graph, h: Graph) -> bool:
    """Endpoint/parity criterion for edge-2-colorable pairs: equal vertex sets and
    path components matched by endpoints and length parity (checked both ways).

    Necessary but not sufficient: an extension may repeat an edge that only one
    graph has, which raises a degree in the other graph alone.  For example
    d-a-b-c and c-a-b-d pass this test, yet F = {ac} separates them.
    """
    if g.vertices != h.vertices:
        return False
    return edge2_profile(g).paths == edge2_profile(h).paths


def decide_edge2color(g: Graph, h: Graph, method: str = "exact") -> DecisionOutcome:
    """Neither graph edge 2-colorable, or both are and they are identical.

    Two distinct edge 2-colorable graphs are always separated by a single edge
    of their symmetric difference (see :mod:`strongeq.witnesses`).
    ``method="paths"`` applies :func:`edge2_path_condition` instead.
    """
    ok_g, ok_h = is_edge_2_colorable(g), is_edge_2_colorable(h)
    if not ok_g or not ok_h:
        return _verdict(ok_g == ok_h)
    if method == "paths":
        return _verdict(edge2_path_condition(g, h))
    return _verdict(g == h)


def decide_kconnectivity(g: Graph, h: Graph, k: int) -> DecisionOutcome:
    """Same vertex set and same component families after deleting any C, |C| < k.

    The same verdict answers the cutset-existence relation, the exact-cutset-family
    relation and the not-k-connected relation.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.vertices != h.vertices:
        return NOT_EQUIVALENT
    return _verdict(first_family_mismatch(g, h, k) is None)


def decide(prop: PropertySelector, g: Graph, h: Graph, with_witness: bool = False) -> DecisionOutcome:
    kind = prop.kind
    if kind == "ham":
        out = decide_hamiltonian(g, h)
    elif kind == "planar":
        out = decide_planarity(g, h)
    elif kind == "subgraph":
        out = decide_subgraph(prop.pattern, g, h)
    elif kind == "kcolor":
        out = decide_kcolor(g, h, prop.k)
    elif kind == "edge2color":
        out = decide_edge2color(g, h)
    else:
        out = decide_kconnectivity(g, h, prop.k)
    if with_witness and out.verdict is Verdict.NOT_EQUIVALENT:
        return DecisionOutcome(out.verdict, witness_for(prop, g, h))
    return out


class EmptyInput(ValueError):
    pass


def np_reduce_kcolor(g_prime: Graph, k: int) -> tuple[Graph, Graph]:
    """Pair (G, H) that is not strongly equivalent iff ``g_prime`` is k-colorable."""
    if not g_prime:
        raise EmptyInput("reduction input has no edges")
    if k < 3:
        raise ValueError("the reduction targets k >= 3")
    x, y = fresh_vertices(2, g_prime.vertices)
    z = min(g_prime.vertices)
    g = g_prime.add(x, y)
    return g, g.add(z, x)


@dataclass(frozen=True)
class MinSubgraphResult:
    subgraph: Graph | None
    examined: int
    reason: str = ""


def min_equivalent_subgraph(g: Graph, k: int, budget: int = 1_000_000) -> MinSubgraphResult:
    """Fewest-edge subgraph of ``g`` strongly equivalent to it under k-connectivity.

    Exhaustive over edge subsets by increasing size; the problem is NP-hard
    already for k = 2, hence the mandatory ``budget`` on examined subsets.
    """
    vs = g.vertices
    targets = [components_after_deletion(g, c) for c in small_vertex_sets(vs, k)]
    cuts = list(small_vertex_sets(vs, k))
    edges = g.sorted_edges()
    examined = 0
    for size in range((len(vs) + 1) // 2, len(edges) + 1):
        for chosen in combinations(edges, size):
            examined += 1
            if examined > budget:
                return MinSubgraphResult(None, examined - 1, "budget exceeded")
            cand = Graph(frozenset(chosen))
            if cand.vertices != vs:
                continue
            if all(components_after_deletion(cand, c) == t for c, t in zip(cuts, targets)):
                return MinSubgraphResult(cand, examined)
    return MinSubgraphResult(None, examined, "no subgraph found")
