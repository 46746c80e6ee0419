"""Simply-laced Coxeter graphs.

A graph on generators ``1..n``; a bond between ``s`` and ``t`` means
``m(s, t) = 3``, no bond means the two generators commute.  Higher bond
orders are not representable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import OutOfRange, RankTooSmall, SelfLoop

FAMILIES = ("A", "D", "A~", "D~")


@dataclass(frozen=True)
class CoxeterGraph:
    """Immutable simply-laced Coxeter graph.

    ``bonds`` holds sorted pairs ``(s, t)`` with ``s < t``.  ``labels`` maps
    index ``i`` (1-based) back to the generator it came from when the graph
    was cut out of a larger one; it is ``None`` for graphs built directly.
    """

    n: int
    bonds: frozenset
    name: str = field(default="", compare=False)
    labels: tuple | None = field(default=None, compare=False)

    def __repr__(self):
        tag = self.name or f"n={self.n}"
        return f"CoxeterGraph({tag}, bonds={sorted(self.bonds)})"

    @cached_property
    def adjacency(self) -> tuple:
        """``adjacency[s]`` is the frozenset of generators bonded to ``s``."""
        adj = [set() for _ in range(self.n + 1)]
        for s, t in self.bonds:
            adj[s].add(t)
            adj[t].add(s)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def cartan(self) -> np.ndarray:
        """Symmetric integer matrix with 2 on the diagonal and -1 on bonds.

        Row/column ``s - 1`` belongs to generator ``s``.
        """
        a = 2 * np.eye(self.n, dtype=np.int64)
        for s, t in self.bonds:
            a[s - 1, t - 1] = a[t - 1, s - 1] = -1
        a.setflags(write=False)
        return a

    @property
    def generators(self) -> range:
        return range(1, self.n + 1)

    def bonded(self, s: int, t: int) -> bool:
        return t in self.adjacency[s]

    def check(self, s: int) -> int:
        if not 1 <= s <= self.n:
            raise OutOfRange(f"generator {s} not in 1..{self.n}")
        return s


def build_graph(n: int, bonds: Iterable = (), name: str = "") -> CoxeterGraph:
    if n < 1:
        raise OutOfRange(f"need at least one generator, got n={n}")
    pairs = set()
    for pair in bonds:
        ends = tuple(pair)
        if len(ends) == 1:  # a set literal {s, s} collapses to {s}
            ends = ends * 2
        if len(ends) != 2:
            raise ValueError(f"bond {pair!r} must have two endpoints")
        s, t = ends
        for x in (s, t):
            if not 1 <= x <= n:
                raise OutOfRange(f"bond endpoint {x} not in 1..{n}")
        if s == t:
            raise SelfLoop(f"bond {{{s},{s}}} is a self-loop")
        pairs.add((min(s, t), max(s, t)))
    return CoxeterGraph(n, frozenset(pairs), name=name)


def standard_family(family: str, n: int) -> CoxeterGraph:
    """The simply-laced families A_n, D_n, A~_n and D~_n with their usual labels.

    A~_n and D~_n have ``n + 1`` generators.
    """
    family = family.strip()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    minimum = {"A": 1, "D": 4, "A~": 2, "D~": 5}[family]
    if n < minimum:
        raise RankTooSmall(f"{family}_{n}: need n >= {minimum}")
    name = f"{family}{n}"
    if family == "A":
        return build_graph(n, [(i, i + 1) for i in range(1, n)], name)
    if family == "D":
        return build_graph(n, [(1, 3)] + [(i, i + 1) for i in range(2, n)], name)
    if family == "A~":
        cycle = [(i, i + 1) for i in range(1, n)] + [(1, n + 1), (n, n + 1)]
        return build_graph(n + 1, cycle, name)
    # D~_n: D-type fork on the left, another fork {n-1, n}, {n-1, n+1} on the right
    bonds = [(1, 3)] + [(i, i + 1) for i in range(2, n)] + [(n - 1, n + 1)]
    return build_graph(n + 1, bonds, name)


def bond_order(g: CoxeterGraph, s: int, t: int) -> int:
    g.check(s)
    g.check(t)
    if s == t:
        return 1
    return 3 if g.bonded(s, t) else 2


def is_triangle_free(g: CoxeterGraph) -> bool:
    adj = g.adjacency
    for s, t in g.bonds:
        if adj[s] & adj[t]:
            return False
    return True


def induced_support_subgraph(g: CoxeterGraph, support: Iterable[int]) -> CoxeterGraph:
    """Subgraph induced on ``support``, relabelled ``1..k`` in increasing order.

    The returned graph's ``labels`` tuple records the original generator of
    each new index.
    """
    keep = sorted({g.check(s) for s in support})
    if not keep:
        raise OutOfRange("support must be non-empty")
    new = {s: i for i, s in enumerate(keep, start=1)}
    bonds = [(new[s], new[t]) for s, t in g.bonds if s in new and t in new]
    sub = build_graph(len(keep), bonds, name=f"{g.name}[{','.join(map(str, keep))}]")
    return CoxeterGraph(sub.n, sub.bonds, sub.name, labels=tuple(keep))


def is_star(g: CoxeterGraph) -> bool:
    """True iff ``g`` is K_{1,k} for some k >= 0 (a single vertex counts)."""
    if g.n == 1:
        return True
    if len(g.bonds) != g.n - 1:
        return False
    degrees = sorted(len(g.adjacency[s]) for s in g.generators)
    return degrees[-1] == g.n - 1 and all(d == 1 for d in degrees[:-1])


def triangles(g: CoxeterGraph) -> list:
    """All 3-cycles of the bond graph as sorted triples."""
    return [
        (a, b, c)
        for a, b, c in combinations(g.generators, 3)
        if g.bonded(a, b) and g.bonded(b, c) and g.bonded(a, c)
    ]
