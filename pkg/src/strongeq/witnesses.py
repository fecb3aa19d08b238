"""Separating extensions: a graph F such that exactly one of G+F, H+F has the property.

Each builder follows the constructive half of the matching characterization.
Every candidate is checked with :func:`verify_witness` before it is returned,
so a returned witness is always a certificate, never a claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Graph,
    build_complete,
    build_complete_multipartite,
    build_path,
    build_star,
    components,
    components_after_deletion,
    fresh_vertices,
    make_edge,
)
from .properties import (
    PropertySelector,
    StrongClass,
    classify_pattern,
    contains_subgraph,
    edge2_profile,
    enumerate_proper_colorings,
    first_family_mismatch,
    is_k_colorable,
    is_planar,
    is_proper_coloring,
)


class NoWitness(RuntimeError):
    """No separating extension could be built; the pair looks equivalent."""


class Unsupported(ValueError):
    """The property class has no constructive characterization."""


@dataclass(frozen=True)
class Witness:
    extension: Graph
    property_side: str  # "first" or "second": the input whose union has the property
    construction: str
    fresh: tuple[str, ...] = ()

    def flipped(self) -> "Witness":
        other = "second" if self.property_side == "first" else "first"
        return Witness(self.extension, other, self.construction, self.fresh)


def verify_witness(prop: PropertySelector, g: Graph, h: Graph, f: Graph) -> bool:
    return prop.holds(g | f) != prop.holds(h | f)


def _clique(vertices) -> Graph:
    vs = sorted(set(vertices))
    return Graph.from_edges(combinations(vs, 2)) if len(vs) >= 2 else Graph()


def _pick_edge(g: Graph, h: Graph):
    only_g = g - h
    return min(only_g.edges) if only_g else min((h - g).edges)


def _finish(prop, g, h, f, tag) -> Witness | None:
    on_g, on_h = prop.holds(g | f), prop.holds(h | f)
    if on_g == on_h:
        return None
    fresh = tuple(sorted(f.vertices - g.vertices - h.vertices))
    return Witness(f, "first" if on_g else "second", tag, fresh)


# -- hamiltonicity -----------------------------------------------------------

def hamiltonian_edge_gadget(k: Graph, e, avoid=()) -> Graph:
    """Extension separating a complete graph K from K - e under hamiltonicity."""
    x, y = e
    others = sorted(k.vertices - {x, y})
    taken = set(avoid) | k.vertices
    if not others:
        (w,) = fresh_vertices(1, taken)
        return Graph.from_edges([(x, w), (y, w)])
    if len(others) == 1:
        return Graph()
    # v1 v2 = e, v3..vn the rest; fresh w3..w_{n-1} threaded between consecutive v's
    vs = [x, y] + others
    n = len(vs)
    ws = fresh_vertices(n - 3, taken)
    pairs = []
    for i in range(2, n - 1):
        w = ws[i - 2]
        pairs += [(vs[i], w), (w, vs[i + 1])]
    return Graph.from_edges(pairs)


def _ham(prop, g, h):
    e = _pick_edge(g, h)
    k = build_complete((g | h).vertices)
    f = k.remove(*e) | hamiltonian_edge_gadget(k, e, g.vertices | h.vertices)
    yield f, "complete-minus-edge"


# -- planarity ---------------------------------------------------------------

def maximal_planar_supergraph(g: Graph) -> Graph:
    """Greedy edge completion on V(g) in canonical pair order."""
    out = g
    for u, v in combinations(sorted(g.vertices), 2):
        if (u, v) not in out.edges:
            cand = out.add(u, v)
            if is_planar(cand):
                out = cand
    return out


def _planar(prop, g, h):
    union = g | h
    if not is_planar(union):
        yield h, "union"
        return
    e = _pick_edge(g, h)
    x, y = e
    full = maximal_planar_supergraph(union)
    base = full.remove(x, y)
    taken = g.vertices | h.vertices
    n = len(full.vertices)
    if n == 2:
        extra = fresh_vertices(3, taken)
        yield base | build_complete([x, y] + extra).remove(x, y), "k5-minus-edge"
        return
    common = sorted(full.adjacency[x] & full.adjacency[y])
    v, w = fresh_vertices(2, taken)
    if n >= 4:
        for v1, v2 in combinations(common, 2):
            gadget = Graph.from_edges([(v, x), (v, y), (v, v1), (v, v2)])
            yield base | gadget, "apex-on-quadrilateral"
    for z in common:
        gadget = Graph.from_edges(
            [(v, x), (v, y), (v, z), (w, x), (w, y), (w, z), (v, w)])
        yield base | gadget, "two-apex-triangle"


# -- subgraph containment ----------------------------------------------------

def subgraph_edge_gadget(pattern: Graph, g: Graph, e, avoid=()) -> Graph:
    """Extension F with ``g + F`` containing the pattern and ``(g - e) + F`` not.

    Requires that ``g`` does not contain the pattern and that the pattern class
    is one of the characterized ones.
    """
    cls = classify_pattern(pattern)
    x, y = e
    taken = set(avoid) | g.vertices
    if cls is StrongClass.STAR:
        need = len(pattern) - g.degree(x)
        return build_star(x, fresh_vertices(need, taken))
    if cls is StrongClass.CYCLE:
        inner = fresh_vertices(len(pattern) - 2, taken)
        return build_path([x] + inner + [y])
    if cls in (StrongClass.COMPLETE, StrongClass.THREE_CONNECTED,
               StrongClass.TWO_CONN_CUTSET_EDGES):
        a, b = min(pattern.edges)
        rest = sorted(pattern.vertices - {a, b})
        mapping = dict(zip(rest, fresh_vertices(len(rest), taken)))
        mapping.update({a: x, b: y})
        copy = Graph.from_edges((mapping[u], mapping[v]) for u, v in pattern.edges)
        return copy.remove(x, y)
    if cls is StrongClass.THREE_EDGE_PATH:
        part = next(p for p in components(g) if x in p)
        if len(part) == 2:
            z, u = fresh_vertices(2, taken)
            return Graph.from_edges([(y, z), (z, u)])
        if len(part) == 3 and len(g.adjacency[x] & g.adjacency[y]) == 1:
            (z,) = g.adjacency[x] & g.adjacency[y]
            (u,) = fresh_vertices(1, taken)
            return Graph.from_edges([(z, u)])
        leaf = y if g.degree(x) >= 2 else x
        (z,) = fresh_vertices(1, taken)
        return Graph.from_edges([(leaf, z)])
    raise Unsupported(f"no gadget for pattern class {cls.value}")


def _subgraph(prop, g, h):
    pattern = prop.pattern
    cls = classify_pattern(pattern)
    if not cls.characterized:
        raise Unsupported(f"pattern class {cls.value} is not characterized")
    union = g | h
    if contains_subgraph(pattern, union):
        yield h, "union"
        return
    e = _pick_edge(g, h)
    f = union.remove(*e) | subgraph_edge_gadget(pattern, union, e, g.vertices | h.vertices)
    yield f, f"pattern-gadget-{cls.value}"


# -- vertex colorings --------------------------------------------------------

def _kcolor(prop, g, h):
    k = prop.k
    taken = g.vertices | h.vertices
    for first, second in ((g, h), (h, g)):
        missing = sorted(first.vertices - second.vertices)
        if missing:
            v = missing[0]
            x = min(first.adjacency[v])
            extra = fresh_vertices(k - 1, taken)
            yield build_complete([v, x] + extra).remove(v, x), "clique-minus-edge"
            return
    if not is_k_colorable(g, k):
        return
    for first, second in ((g, h), (h, g)):
        for coloring in sorted(enumerate_proper_colorings(first, k), key=_coloring_key):
            if not is_proper_coloring(second, coloring):
                blocks = [sorted(b) for b in sorted(coloring, key=min)]
                blocks += [[v] for v in fresh_vertices(k - len(blocks), taken)]
                yield build_complete_multipartite(blocks), "complete-multipartite"
                return


def _coloring_key(partition):
    return sorted(sorted(b) for b in partition)


# -- edge 2-colorability -----------------------------------------------------

def _edge2(prop, g, h):
    taken = g.vertices | h.vertices
    v, w = fresh_vertices(2, taken)
    for first, second in ((g, h), (h, g)):
        missing = sorted(second.vertices - first.vertices)
        if missing:
            u = missing[0]
            yield Graph.from_edges([(v, u), (w, u)]), "two-pendants"
            return
    for u in sorted(g.vertices):
        if g.degree(u) != h.degree(u):
            yield Graph.from_edges([(v, u)]), "pendant"
            return
    pg, ph = edge2_profile(g), edge2_profile(h)
    for p_first, p_second in ((pg, ph), (ph, pg)):
        for (a, b), parity in sorted(p_first.paths - p_second.paths):
            if parity:
                yield Graph.from_edges([(a, v), (v, b)]), "close-odd-path"
            else:
                yield Graph.from_edges([(a, b)]), "close-even-path"
            return
    # Same profile but different edges.  For uv in one graph only, adding uv
    # leaves that graph unchanged and pushes a degree-2 endpoint in the other
    # graph to 3.  If both endpoints have degree 1 there, uv is an isolated edge
    # matched by a longer odd path, and that path's first edge works instead.
    for e in sorted((g ^ h).edges):
        yield Graph.from_edges([e]), "repeat-edge"


# -- connectivity ------------------------------------------------------------

def _kconn(prop, g, h):
    k = prop.k
    taken = g.vertices | h.vertices
    for first, second in ((g, h), (h, g)):
        missing = sorted(second.vertices - first.vertices)
        if not missing:
            continue
        x = missing[0]
        if k == 1:
            if not first:
                a, b = fresh_vertices(2, taken)
                yield Graph.from_edges([(a, b)]), "detached-edge"
                return
            z = min(second.vertices - {x})
            (y,) = fresh_vertices(1, taken)
            hub = build_star(z, sorted(second.vertices - {x, z}))
            yield hub | Graph.from_edges([(x, y)]), "star-plus-pendant"
            return
        extra = fresh_vertices(k, taken)
        ell = max(k - second.degree(x), 1)
        core = _clique((second.vertices | set(extra)) - {x})
        yield core | build_star(x, extra[:ell]), "clique-with-thin-attachment"
        return
    c = first_family_mismatch(g, h, k)
    if c is None:
        return
    for first, second in ((g, h), (h, g)):
        parts = components_after_deletion(first, c)
        where = {v: p for p in parts for v in p}
        crossing = [(u, v) for u, v in second.sorted_edges()
                    if u not in c and v not in c and where[u] != where[v]]
        if not crossing:
            continue
        u, _ = crossing[0]
        side = where[u]
        extra = fresh_vertices(k - 1 - len(c), taken)
        hubs = set(c) | set(extra)
        everyone = first.vertices | set(extra)
        f = _clique(side) | _clique(first.vertices - side)
        f = f | Graph.from_edges((a, b) for a in hubs for b in everyone if a != b)
        yield f, "two-cliques-with-hubs"
        return


_BUILDERS = {
    "ham": _ham,
    "planar": _planar,
    "subgraph": _subgraph,
    "kcolor": _kcolor,
    "edge2color": _edge2,
    "kconn": _kconn,
    "kconn-psi": _kconn,
}


def witness_for(prop: PropertySelector, g: Graph, h: Graph) -> Witness:
    """Build and check a separating extension for a non-equivalent pair.

    Raises :class:`NoWitness` when no construction applies (the pair is
    strongly equivalent, or a characterization is being violated) and
    :class:`Unsupported` for subgraph patterns outside the characterized classes.
    """
    if g == h:
        raise NoWitness("identical graphs cannot be separated")
    base = _finish(prop, g, h, Graph(), "base")
    if base is not None:
        return base
    for f, tag in _BUILDERS[prop.kind](prop, g, h):
        w = _finish(prop, g, h, f, tag)
        if w is not None:
            return w
    raise NoWitness(f"no {prop} construction separates the pair")


def edge_gadget(prop: PropertySelector, g: Graph, e) -> Graph:
    """Extension separating ``g`` from ``g - e`` for the single-edge form of the proofs."""
    e = make_edge(*e)
    if prop.kind == "ham":
        return hamiltonian_edge_gadget(g, e)
    if prop.kind == "subgraph":
        return subgraph_edge_gadget(prop.pattern, g, e)
    raise Unsupported(f"no single-edge gadget for {prop}")
