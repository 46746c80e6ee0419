"""Small undirected simple graphs shared by braid graphs, hypercubes and Fibonacci cubes."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .errors import Disconnected


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Vertices in a fixed order plus an undirected edge set (index pairs ``i < j``)."""

    vertices: tuple
    edges: frozenset

    @classmethod
    def from_edges(cls, vertices: Iterable[Hashable], edges: Iterable[tuple]) -> "SimpleGraph":
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertex labels")
        pairs = set()
        for u, v in edges:
            i, j = index[u], index[v]
            if i == j:
                raise ValueError(f"self-loop at {u!r}")
            pairs.add((min(i, j), max(i, j)))
        return cls(vertices, frozenset(pairs))

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edge_set() == other.edge_set()

    __hash__ = None

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def neighbours(self) -> tuple:
        nb = [[] for _ in self.vertices]
        for i, j in sorted(self.edges):
            nb[i].append(j)
            nb[j].append(i)
        return tuple(tuple(x) for x in nb)

    def edge_set(self) -> set:
        """Edges as frozensets of vertex labels."""
        return {frozenset((self.vertices[i], self.vertices[j])) for i, j in self.edges}

    def edge_list(self) -> list:
        """Edges as sorted index pairs."""
        return sorted(self.edges)

    def degree(self, v) -> int:
        return len(self.neighbours[self.index[v]])

    def induced(self, keep: Iterable[Hashable]) -> "SimpleGraph":
        keep = [v for v in self.vertices if v in set(keep)]
        kept = {self.index[v] for v in keep}
        return SimpleGraph.from_edges(
            keep,
            [(self.vertices[i], self.vertices[j]) for i, j in self.edges if i in kept and j in kept],
        )

    def adjacency_matrix(self) -> csr_matrix:
        n = len(self.vertices)
        if not self.edges:
            return csr_matrix((n, n), dtype=np.int8)
        rows, cols = zip(*self.edges)
        data = np.ones(2 * len(rows), dtype=np.int8)
        return csr_matrix((data, (rows + cols, cols + rows)), shape=(n, n))

    def is_connected(self) -> bool:
        if len(self.vertices) <= 1:
            return True
        count, _ = connected_components(self.adjacency_matrix(), directed=False)
        return count == 1

    @cached_property
    def distances(self) -> np.ndarray:
        """All-pairs geodesic distances (integer matrix); raises on disconnected graphs."""
        if not self.is_connected():
            raise Disconnected("graph is not connected")
        d = shortest_path(self.adjacency_matrix(), method="D", unweighted=True, directed=False)
        d = d.astype(np.int64)
        d.setflags(write=False)
        return d


def box_product(*graphs: SimpleGraph) -> SimpleGraph:
    """Cartesian product; vertices are tuples of factor vertices."""
    vertices = [()]
    for g in graphs:
        vertices = [v + (x,) for v in vertices for x in g.vertices]
    edges = []
    for v in vertices:
        for k, g in enumerate(graphs):
            i = g.index[v[k]]
            for j in g.neighbours[i]:
                if j > i:
                    edges.append((v, v[:k] + (g.vertices[j],) + v[k + 1 :]))
    return SimpleGraph.from_edges(vertices, edges)
