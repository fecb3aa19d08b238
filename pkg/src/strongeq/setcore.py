"""Strengthening of equivalence relations over subsets of a finite universe.

Subsets are bitmasks over the universe's element order.  A relation is stored
as a representative table: ``rep[mask]`` is the smallest mask in the class of
``mask``, which makes relation equality plain table equality.

With a finite universe the extension ``F`` ranges over all subsets, so the
strengthening is exactly computable.  Cost is ``4**n`` union lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

MAX_UNIVERSE = 16


@dataclass(frozen=True)
class FiniteUniverse:
    elements: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("universe elements must be distinct")
        if len(self.elements) > MAX_UNIVERSE:
            raise ValueError(f"universe larger than {MAX_UNIVERSE} elements")

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def n_subsets(self) -> int:
        return 1 << len(self.elements)

    def mask(self, subset: Iterable[str]) -> int:
        index = {e: i for i, e in enumerate(self.elements)}
        m = 0
        for e in subset:
            if e not in index:
                raise ValueError(f"{e!r} is not in the universe")
            m |= 1 << index[e]
        return m

    def subset(self, mask: int) -> frozenset[str]:
        return frozenset(e for i, e in enumerate(self.elements) if mask >> i & 1)


@dataclass(frozen=True)
class SubsetProperty:
    universe: FiniteUniverse
    members: frozenset[int]

    @classmethod
    def from_subsets(cls, universe: FiniteUniverse, subsets: Iterable[Iterable[str]]):
        return cls(universe, frozenset(universe.mask(s) for s in subsets))

    @classmethod
    def from_predicate(cls, universe: FiniteUniverse, pred) -> "SubsetProperty":
        return cls(universe, frozenset(
            m for m in range(universe.n_subsets) if pred(universe.subset(m))))

    def __post_init__(self):
        top = self.universe.n_subsets
        if any(not 0 <= m < top for m in self.members):
            raise ValueError("member subset outside the universe")

    def __contains__(self, subset) -> bool:
        if isinstance(subset, int):
            return subset in self.members
        return self.universe.mask(subset) in self.members

    def complement(self) -> "SubsetProperty":
        return SubsetProperty(
            self.universe,
            frozenset(range(self.universe.n_subsets)) - self.members)


@dataclass(frozen=True)
class RelationTable:
    """Equivalence relation on all subsets, as a class-representative table."""

    universe: FiniteUniverse
    rep: tuple[int, ...]

    def __post_init__(self):
        if len(self.rep) != self.universe.n_subsets:
            raise ValueError("representative table has the wrong length")
        for m, r in enumerate(self.rep):
            if r > m or self.rep[r] != r:
                raise ValueError("table is not canonical")

    @classmethod
    def from_labels(cls, universe: FiniteUniverse, labels) -> "RelationTable":
        """Canonicalize any per-subset class labelling."""
        first: dict = {}
        rep = []
        for m, label in enumerate(labels):
            rep.append(first.setdefault(label, m))
        return cls(universe, tuple(rep))

    @classmethod
    def from_partition(cls, universe: FiniteUniverse, classes) -> "RelationTable":
        labels = [None] * universe.n_subsets
        for i, cls_ in enumerate(classes):
            for m in cls_:
                if labels[m] is not None:
                    raise ValueError("classes overlap")
                labels[m] = i
        if any(label is None for label in labels):
            raise ValueError("classes do not cover every subset")
        return cls.from_labels(universe, labels)

    @classmethod
    def identity(cls, universe: FiniteUniverse) -> "RelationTable":
        return cls(universe, tuple(range(universe.n_subsets)))

    @classmethod
    def total(cls, universe: FiniteUniverse) -> "RelationTable":
        return cls(universe, (0,) * universe.n_subsets)

    @property
    def classes(self) -> list[frozenset[int]]:
        groups: dict[int, set[int]] = {}
        for m, r in enumerate(self.rep):
            groups.setdefault(r, set()).add(m)
        return [frozenset(groups[r]) for r in sorted(groups)]

    def related(self, a: int, b: int) -> bool:
        return self.rep[a] == self.rep[b]

    def meet(self, other: "RelationTable") -> "RelationTable":
        """Intersection of the two relations."""
        return RelationTable.from_labels(self.universe, zip(self.rep, other.rep))

    def refines(self, other: "RelationTable") -> bool:
        """True when ``self`` is a subset of ``other`` as a set of pairs."""
        seen: dict[int, int] = {}
        for r, o in zip(self.rep, other.rep):
            if seen.setdefault(r, o) != o:
                return False
        return True


@dataclass(frozen=True)
class IntersectingForm:
    elements: frozenset[str]


@dataclass(frozen=True)
class SubsetForm:
    elements: frozenset[str]


@dataclass(frozen=True)
class Neither:
    pass


def equiv_from_property(prop: SubsetProperty) -> RelationTable:
    return RelationTable.from_labels(
        prop.universe, (m in prop.members for m in range(prop.universe.n_subsets)))


def bounded_strengthen(rel: RelationTable) -> RelationTable:
    """``G ~ H`` iff ``rep[G | F] == rep[H | F]`` for every subset ``F``."""
    n = rel.universe.n_subsets
    rep = np.asarray(rel.rep, dtype=np.int64)
    every = np.arange(n, dtype=np.int64)
    return RelationTable.from_labels(
        rel.universe, (rep[every | g].tobytes() for g in range(n)))


def classify_threshold_form(prop: SubsetProperty) -> IntersectingForm | SubsetForm | Neither:
    u = prop.universe
    x = 0
    for i in range(u.size):
        if (1 << i) in prop.members:
            x |= 1 << i
    every = range(u.n_subsets)
    if prop.members == frozenset(m for m in every if m & x):
        return IntersectingForm(u.subset(x))
    if prop.members == frozenset(m for m in every if m & ~x == 0):
        return SubsetForm(u.subset(x))
    return Neither()


def parse_subset_family(text: str) -> SubsetProperty:
    """First line: universe elements.  Each further line: one member subset, ``-`` for empty."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("missing universe line")
    universe = FiniteUniverse(tuple(lines[0].split()))
    subsets = []
    for ln in lines[1:]:
        tokens = ln.split()
        subsets.append(() if tokens == ["-"] else tokens)
    return SubsetProperty.from_subsets(universe, subsets)


def random_relation(universe: FiniteUniverse, rng) -> RelationTable:
    n_classes = int(rng.integers(1, universe.n_subsets + 1))
    return RelationTable.from_labels(
        universe, rng.integers(0, n_classes, size=universe.n_subsets).tolist())
