"""Braid classes, braid graphs and Matsumoto graphs.

Classes are enumerated breadth first from the queried word.  Members are
stored in lexicographic order, so two enumerations of the same class give
identical objects whichever member seeded them.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .coxeter import CoxeterGraph
from .errors import CapExceeded, NotInClass
from .graph import SimpleGraph
from .words import (
    Word,
    _check_interval,
    _swap_braid,
    _swap_commutation,
    commutation_starts,
    require_reduced,
    shadow,
    shadow_starts,
    word_str,
)

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True, eq=False)
class BraidClass:
    graph: CoxeterGraph
    base: Word
    members: tuple
    edges: tuple  # (i, j, lo) with i < j, indices into members
    bfs_order: tuple

    def __len__(self):
        return len(self.members)

    def __contains__(self, w):
        return tuple(w) in self.index

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        return f"BraidClass([{word_str(self.base)}], size={len(self)}, rank={rank(self)})"

    @cached_property
    def index(self) -> dict:
        return {w: i for i, w in enumerate(self.members)}

    def index_of(self, w: Sequence[int]) -> int:
        try:
            return self.index[tuple(w)]
        except KeyError:
            raise NotInClass(f"{word_str(w)} is not in {self!r}") from None

    @cached_property
    def member_shadows(self) -> tuple:
        """Shadow start positions of each member, aligned with ``members``."""
        return tuple(tuple(shadow_starts(self.graph, w)) for w in self.members)

    @cached_property
    def neighbours(self) -> tuple:
        nb = [[] for _ in self.members]
        for i, j, _ in self.edges:
            nb[i].append(j)
            nb[j].append(i)
        return tuple(tuple(sorted(x)) for x in nb)

    @property
    def word_length(self) -> int:
        return len(self.base)


def enumerate_braid_class(g: CoxeterGraph, w: Sequence[int], cap: int = DEFAULT_CAP) -> BraidClass:
    """Closure of ``w`` under braid moves together with its braid graph."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    base = require_reduced(g, w)
    seen = {base}
    order = [base]
    queue = deque(order)
    found = set()
    while queue:
        u = queue.popleft()
        for lo in shadow_starts(g, u):
            v = _swap_braid(u, lo)
            found.add((min(u, v), max(u, v), lo))
            if v not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"braid class of {word_str(base)} exceeds cap {cap}", len(seen))
                seen.add(v)
                order.append(v)
                queue.append(v)
    members = tuple(sorted(seen))
    index = {m: i for i, m in enumerate(members)}
    edges = tuple(sorted((index[a], index[b], lo) for a, b, lo in found))
    return BraidClass(g, base, members, edges, tuple(order))


def class_shadows(c: BraidClass) -> frozenset:
    return frozenset(shadow(lo) for starts in c.member_shadows for lo in starts)


def sorted_shadows(c: BraidClass) -> list:
    return sorted(class_shadows(c))


def rank(c: BraidClass) -> int:
    return len(class_shadows(c))


def class_support(c: BraidClass, iv) -> frozenset:
    iv = _check_interval(c.base, iv)
    return frozenset(x for w in c.members for x in w[iv.lo - 1 : iv.hi])


def braid_graph(c: BraidClass) -> SimpleGraph:
    return SimpleGraph(c.members, frozenset((i, j) for i, j, _ in c.edges))


def distances_from(c: BraidClass, source: int) -> list:
    dist = [-1] * len(c)
    dist[source] = 0
    queue = deque([source])
    while queue:
        i = queue.popleft()
        for j in c.neighbours[i]:
            if dist[j] < 0:
                dist[j] = dist[i] + 1
                queue.append(j)
    return dist


def braid_distance(c: BraidClass, a: Sequence[int], b: Sequence[int]) -> int:
    """Minimum number of braid moves turning ``a`` into ``b``."""
    i, j = c.index_of(a), c.index_of(b)
    return distances_from(c, i)[j]


# -- theorem-backed checks -------------------------------------------------

def adjacent_shadow_pairs(c: BraidClass) -> list:
    """Pairs of class shadows overlapping in two positions.

    Empty for every reduced word in a simply-laced system.
    """
    starts = {iv.lo for iv in class_shadows(c)}
    return [(shadow(lo), shadow(lo + 1)) for lo in sorted(starts) if lo + 1 in starts]


def equal_support_violations(c: BraidClass) -> list:
    """Witnesses ``(a, b, shadow)`` where two members share a shadow but not its support.

    Empty for triangle-free systems; Ã_2 provides counterexamples.
    """
    first = {}
    out = []
    for w, starts in zip(c.members, c.member_shadows):
        for lo in starts:
            supp = frozenset(w[lo - 1 : lo + 2])
            if lo not in first:
                first[lo] = (w, supp)
            elif first[lo][1] != supp:
                out.append((first[lo][0], w, shadow(lo)))
    return out


# -- Matsumoto graphs and commutation classes --------------------------------

@dataclass(frozen=True, eq=False)
class MatsumotoGraph:
    graph: CoxeterGraph
    base: Word
    members: tuple
    edges: tuple  # (i, j, kind, lo) with kind in {"braid", "commutation"}

    def __len__(self):
        return len(self.members)

    @cached_property
    def index(self) -> dict:
        return {w: i for i, w in enumerate(self.members)}

    def simple_graph(self, kind: str | None = None) -> SimpleGraph:
        pairs = frozenset((i, j) for i, j, k, _ in self.edges if kind is None or k == kind)
        return SimpleGraph(self.members, pairs)

    def components(self, kind: str) -> list:
        """Vertex sets of the connected components using only ``kind`` edges."""
        parent = list(range(len(self.members)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j, k, _ in self.edges:
            if k == kind:
                parent[find(i)] = find(j)
        groups = {}
        for i, w in enumerate(self.members):
            groups.setdefault(find(i), []).append(w)
        return sorted((frozenset(v) for v in groups.values()), key=lambda s: (-len(s), min(s)))

    def braid_classes(self) -> list:
        return self.components("braid")

    def commutation_classes(self) -> list:
        return self.components("commutation")


def enumerate_matsumoto(g: CoxeterGraph, w: Sequence[int], cap: int = DEFAULT_CAP) -> MatsumotoGraph:
    """All reduced expressions of the element of ``w`` with typed move edges."""
    base = require_reduced(g, w)
    seen = {base}
    queue = deque([base])
    found = set()
    while queue:
        u = queue.popleft()
        moves = [(_swap_braid(u, lo), "braid", lo) for lo in shadow_starts(g, u)]
        moves += [(_swap_commutation(u, lo), "commutation", lo) for lo in commutation_starts(g, u)]
        for v, kind, lo in moves:
            found.add((min(u, v), max(u, v), kind, lo))
            if v not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"reduced expressions of {word_str(base)} exceed cap {cap}", len(seen))
                seen.add(v)
                queue.append(v)
    members = tuple(sorted(seen))
    index = {m: i for i, m in enumerate(members)}
    edges = tuple(sorted((index[a], index[b], kind, lo) for a, b, kind, lo in found))
    return MatsumotoGraph(g, base, members, edges)


def commutation_class(g: CoxeterGraph, w: Sequence[int], cap: int = DEFAULT_CAP) -> frozenset:
    base = require_reduced(g, w)
    seen = {base}
    queue = deque([base])
    while queue:
        u = queue.popleft()
        for lo in commutation_starts(g, u):
            v = _swap_commutation(u, lo)
            if v not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"commutation class of {word_str(base)} exceeds cap {cap}", len(seen))
                seen.add(v)
                queue.append(v)
    return frozenset(seen)

