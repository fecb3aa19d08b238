"""Bounded brute-force refutation of strong equivalence, and crosscheck harnesses.

The oracle looks for an extension F built from a finite vertex pool,
``V(G) | V(H)`` plus some fresh vertices, and enumerates candidate edge sets in
a fixed canonical order: by number of edges, then lexicographically by pool
edge index.  Finding nothing is bounded evidence for equivalence, never proof.

For pools with at most ``TABLE_EDGE_LIMIT`` edges the property is tabulated
once over every edge subset of the pool (properties are label-invariant, so
the table only depends on the pool size) and each pair is a vectorized scan.
Larger pools fall back to lazy enumeration.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .deciders import Verdict, decide
from .graphs import Graph, all_graphs, build_complete, fresh_vertices
from .properties import PropertySelector
from .witnesses import NoWitness, Unsupported, verify_witness, witness_for

TABLE_EDGE_LIMIT = 15
DEFAULT_MAX_CANDIDATES = 2_000_000


class BudgetExceeded(RuntimeError):
    def __init__(self, candidates: int):
        super().__init__(f"candidate budget exhausted after {candidates} extensions")
        self.candidates = candidates


@dataclass(frozen=True)
class OracleBudget:
    fresh_count: int = 2
    max_edges: int | None = None  # None: every edge of the complete pool
    max_candidates: int | None = DEFAULT_MAX_CANDIDATES

    def __post_init__(self):
        for name in ("fresh_count", "max_edges", "max_candidates"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be non-negative")

    @classmethod
    def default_for(cls, prop: PropertySelector) -> "OracleBudget":
        if prop.k is not None:
            size = prop.k
        elif prop.pattern is not None:
            size = len(prop.pattern.vertices)
        else:
            size = 3
        return cls(fresh_count=2 * size)


@dataclass(frozen=True)
class OracleResult:
    status: str  # "found", "exhausted" or "budget"
    extension: Graph | None
    candidates: int


def _pool(g: Graph, h: Graph, fresh_count: int) -> list[str]:
    named = g.vertices | h.vertices
    return sorted(named) + fresh_vertices(fresh_count, named)


def _mask(g: Graph, index: dict) -> int:
    m = 0
    for e in g.edges:
        m |= 1 << index[e]
    return m


@lru_cache(maxsize=None)
def _canonical_order(m: int, max_edges: int) -> np.ndarray:
    out = []
    for r in range(max_edges + 1):
        for combo in combinations(range(m), r):
            mask = 0
            for i in combo:
                mask |= 1 << i
            out.append(mask)
    return np.asarray(out, dtype=np.int64)


@lru_cache(maxsize=64)
def _property_table(prop: PropertySelector, n: int) -> np.ndarray:
    labels = [f"v{i:02d}" for i in range(n)]
    edges = list(combinations(labels, 2))
    table = np.zeros(1 << len(edges), dtype=bool)
    for mask in range(1 << len(edges)):
        g = Graph(frozenset(edges[i] for i in range(len(edges)) if mask >> i & 1))
        table[mask] = prop.holds(g)
    return table


def search(prop: PropertySelector, g: Graph, h: Graph, budget: OracleBudget) -> OracleResult:
    """Run the bounded search and report found / exhausted / budget."""
    pool = _pool(g, h, budget.fresh_count)
    pool_edges = [(pool[i], pool[j]) if pool[i] < pool[j] else (pool[j], pool[i])
                  for i, j in combinations(range(len(pool)), 2)]
    index = {e: i for i, e in enumerate(pool_edges)}
    m = len(pool_edges)
    max_edges = m if budget.max_edges is None else min(budget.max_edges, m)
    limit = budget.max_candidates
    gm, hm = _mask(g, index), _mask(h, index)

    def as_graph(mask: int) -> Graph:
        return Graph(frozenset(pool_edges[i] for i in range(m) if mask >> i & 1))

    if m <= TABLE_EDGE_LIMIT:
        order = _canonical_order(m, max_edges)
        scan = order if limit is None else order[:limit]
        table = _property_table(prop, len(pool))
        hits = np.flatnonzero(table[scan | gm] != table[scan | hm])
        if hits.size:
            return OracleResult("found", as_graph(int(scan[hits[0]])), int(hits[0]) + 1)
        if len(scan) < len(order):
            return OracleResult("budget", None, len(scan))
        return OracleResult("exhausted", None, len(scan))

    diff = gm ^ hm
    memo: dict[int, bool] = {}

    def holds(mask: int) -> bool:
        if mask not in memo:
            memo[mask] = prop.holds(as_graph(mask))
        return memo[mask]

    count = 0
    for r in range(max_edges + 1):
        for combo in combinations(range(m), r):
            if limit is not None and count >= limit:
                return OracleResult("budget", None, count)
            count += 1
            f = 0
            for i in combo:
                f |= 1 << i
            if diff & ~f == 0:
                continue
            if holds(gm | f) != holds(hm | f):
                return OracleResult("found", as_graph(f), count)
    return OracleResult("exhausted", None, count)


def refute_bounded(prop: PropertySelector, g: Graph, h: Graph,
                   budget: OracleBudget | None = None) -> Graph | None:
    """Smallest separating F in canonical order, or None after exhaustive search.

    Raises :class:`BudgetExceeded` when the candidate cap stops the search early.
    """
    budget = OracleBudget.default_for(prop) if budget is None else budget
    result = search(prop, g, h, budget)
    if result.status == "budget":
        raise BudgetExceeded(result.candidates)
    return result.extension


# -- crosscheck --------------------------------------------------------------

@dataclass
class PairRecord:
    g: Graph
    h: Graph
    verdict: Verdict
    oracle: str | None = None
    witness_ok: bool | None = None
    agree: bool | None = None
    note: str = ""

    def to_json(self) -> str:
        return json.dumps({
            "g": sorted(map(list, self.g.edges)),
            "h": sorted(map(list, self.h.edges)),
            "verdict": self.verdict.value,
            "oracle": self.oracle,
            "witness_ok": self.witness_ok,
            "agree": self.agree,
            "note": self.note,
        }, sort_keys=True)


@dataclass
class CrosscheckReport:
    prop: PropertySelector
    records: list[PairRecord] = field(default_factory=list)

    @property
    def violations(self) -> list[PairRecord]:
        return [r for r in self.records if r.agree is False]

    @property
    def checked(self) -> int:
        return sum(1 for r in self.records if r.agree is not None)

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.records:
            out[r.verdict.value] = out.get(r.verdict.value, 0) + 1
        return out

    def summary(self) -> str:
        counts = " ".join(f"{k}={v}" for k, v in sorted(self.counts().items()))
        return (f"{self.prop}: {len(self.records)} pairs, {self.checked} checked, "
                f"{len(self.violations)} violations ({counts})")


def check_pair(prop: PropertySelector, g: Graph, h: Graph, budget: OracleBudget,
               refute: bool = True) -> PairRecord:
    """Decider against witness construction and bounded oracle for one pair.

    NotEquivalent needs a verifying witness (and, with ``refute``, an oracle
    hit); Equivalent needs exhaustive oracle absence.  A budget stop is never
    counted as agreement.
    """
    verdict = decide(prop, g, h).verdict
    rec = PairRecord(g, h, verdict)
    if verdict is Verdict.UNKNOWN:
        rec.note = "unknown verdict, not checked"
        return rec
    if verdict is Verdict.NOT_EQUIVALENT:
        try:
            w = witness_for(prop, g, h)
            rec.witness_ok = verify_witness(prop, g, h, w.extension)
        except (NoWitness, Unsupported) as exc:
            rec.witness_ok = False
            rec.note = f"witness failed: {exc}"
        if refute:
            rec.oracle = search(prop, g, h, budget).status
            rec.agree = rec.witness_ok and rec.oracle == "found"
        else:
            rec.agree = rec.witness_ok
        return rec
    rec.oracle = search(prop, g, h, budget).status
    rec.agree = rec.oracle == "exhausted"
    return rec


def crosscheck(prop: PropertySelector, pairs: Iterable[tuple[Graph, Graph]],
               budget: OracleBudget, refute: bool = True) -> CrosscheckReport:
    report = CrosscheckReport(prop)
    for g, h in pairs:
        report.records.append(check_pair(prop, g, h, budget, refute))
    return report


def all_graph_pairs(vertices: Iterable[str]) -> list[tuple[Graph, Graph]]:
    """Unordered pairs (diagonal included) of all graphs on the given labels."""
    graphs = all_graphs(vertices)
    return [(graphs[i], graphs[j]) for i in range(len(graphs)) for j in range(i, len(graphs))]


def sampled_graph_pairs(vertices: Iterable[str], count: int, seed: int,
                        density: float = 0.5) -> list[tuple[Graph, Graph]]:
    rng = random.Random(seed)
    pool = list(combinations(sorted(set(vertices)), 2))

    def draw() -> Graph:
        return Graph(frozenset(e for e in pool if rng.random() < density))

    return [(draw(), draw()) for _ in range(count)]


@dataclass(frozen=True)
class CriterionRecord:
    n: int
    edge: tuple[str, str]
    status: str
    extension: Graph | None


def complete_graph_criterion(prop: PropertySelector, max_vertices: int,
                             budget: OracleBudget) -> list[CriterionRecord]:
    """Oracle status of (K, K - e) for complete K on 2..max_vertices vertices.

    One edge per K suffices: the complete graph's automorphisms act
    transitively on its edges.
    """
    if max_vertices < 2:
        raise ValueError("max_vertices must be at least 2")
    out = []
    for n in range(2, max_vertices + 1):
        k = build_complete([f"v{i}" for i in range(1, n + 1)])
        e = min(k.edges)
        result = search(prop, k, k.remove(*e), budget)
        out.append(CriterionRecord(n, e, result.status, result.extension))
    return out
