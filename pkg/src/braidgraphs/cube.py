"""Hypercube labelings of braid graphs, Fibonacci cubes and partial-cube checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .classes import DEFAULT_CAP, BraidClass, braid_graph, enumerate_braid_class, rank
from .coxeter import CoxeterGraph, is_triangle_free
from .errors import (
    CapExceeded,
    DimensionTooLarge,
    LabelCollision,
    NotALink,
    NotFibonacci,
    NotInClass,
    NotPartialCube,
    NotTriangleFree,
)
from .graph import SimpleGraph
from .links import is_fibonacci_class, is_link_class, link_factorization_of_class
from .words import word_str

MAX_DIMENSION = 24
ALL_PAIRS_CAP = 4096
MEDIAN_CAP = 512


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise ValueError(f"labels {a!r} and {b!r} differ in length")
    return sum(x != y for x, y in zip(a, b))


def xor(a: str, b: str) -> str:
    if len(a) != len(b):
        raise ValueError(f"labels {a!r} and {b!r} differ in length")
    return "".join("1" if x != y else "0" for x, y in zip(a, b))


# -- the embedding ---------------------------------------------------------

def phi(c: BraidClass, base: Sequence[int], member: Sequence[int]) -> str:
    """Bit ``k`` is 1 exactly when ``member`` and ``base`` differ at position ``2k``."""
    if not is_link_class(c):
        raise NotALink(f"{word_str(c.base)} is not a link")
    base, member = tuple(base), tuple(member)
    c.index_of(base)
    c.index_of(member)
    return "".join("0" if member[2 * k - 1] == base[2 * k - 1] else "1" for k in range(1, rank(c) + 1))


def automorphism_shift(c: BraidClass, alpha: Sequence[int], beta: Sequence[int]) -> str:
    """The constant ``phi_beta(alpha)`` relating the labelings based at ``alpha`` and ``beta``."""
    return phi(c, beta, alpha)


def embed_class(c: BraidClass, unchecked: bool = False, cap: int = DEFAULT_CAP) -> dict:
    """Label every member by concatenating per-factor labels, each based at the factor of ``c.base``."""
    if not unchecked and not is_triangle_free(c.graph):
        raise NotTriangleFree(f"{c.graph!r} has a three-cycle; pass unchecked=True to probe anyway")
    fact = link_factorization_of_class(c)
    parts = []
    for span, word in fact.factors:
        fc = enumerate_braid_class(c.graph, word, cap)
        parts.append((span, fc))
    labels = {}
    for m in c.members:
        bits = []
        for span, fc in parts:
            piece = m[span.lo - 1 : span.hi]
            if piece not in fc:
                raise NotInClass(f"piece {word_str(piece)} of {word_str(m)} left its factor class")
            bits.append(phi(fc, fc.base, piece))
        labels[m] = "".join(bits)
    return labels


def embed_word(g: CoxeterGraph, w: Sequence[int], unchecked: bool = False, cap: int = DEFAULT_CAP) -> dict:
    if not unchecked and not is_triangle_free(g):
        raise NotTriangleFree(f"{g!r} has a three-cycle; pass unchecked=True to probe anyway")
    return embed_class(enumerate_braid_class(g, w, cap), unchecked=unchecked, cap=cap)


@dataclass
class IsometryReport:
    isometric: bool
    checked_pairs: int
    violations: list = field(default_factory=list)  # (u, v, graph distance, hamming)

    def __bool__(self):
        return self.isometric

    def to_dict(self) -> dict:
        return {
            "isometric": self.isometric,
            "checked_pairs": self.checked_pairs,
            "violations": [[str(u), str(v), d, h] for u, v, d, h in self.violations],
        }


def verify_isometric(bg: SimpleGraph, labeling: dict, max_witnesses: int = 10) -> IsometryReport:
    """Compare graph distance with Hamming distance on every vertex pair."""
    n = len(bg)
    if n > ALL_PAIRS_CAP:
        raise CapExceeded(f"{n} vertices exceed the all-pairs cap {ALL_PAIRS_CAP}", n)
    missing = [v for v in bg.vertices if v not in labeling]
    if missing:
        raise KeyError(f"labeling misses {len(missing)} vertices, e.g. {missing[0]!r}")
    labels = [labeling[v] for v in bg.vertices]
    if len(set(labels)) != n:
        seen = {}
        for v, lab in zip(bg.vertices, labels):
            if lab in seen:
                raise LabelCollision(f"{seen[lab]!r} and {v!r} share label {lab!r}")
            seen[lab] = v
    if n <= 1:
        return IsometryReport(True, 0)
    width = len(labels[0])
    if width == 0:
        ham = np.zeros((n, n), dtype=np.int64)
    else:
        bits = np.array([[ch == "1" for ch in lab] for lab in labels], dtype=np.int64)
        ham = (bits[:, None, :] != bits[None, :, :]).sum(axis=2)
    dist = bg.distances
    bad = np.argwhere(np.triu(dist != ham, k=1))
    violations = [
        (bg.vertices[i], bg.vertices[j], int(dist[i, j]), int(ham[i, j])) for i, j in bad[:max_witnesses]
    ]
    return IsometryReport(len(bad) == 0, n * (n - 1) // 2, violations)


# -- cubes -----------------------------------------------------------------

def _cube_on(vertices: list) -> SimpleGraph:
    present = set(vertices)
    edges = []
    for v in vertices:
        for k, ch in enumerate(v):
            if ch == "0":
                u = v[:k] + "1" + v[k + 1 :]
                if u in present:
                    edges.append((v, u))
    return SimpleGraph.from_edges(vertices, edges)


def hypercube(r: int) -> SimpleGraph:
    if r < 0:
        raise ValueError("dimension must be >= 0")
    if r > MAX_DIMENSION:
        raise DimensionTooLarge(f"Q_{r} exceeds the dimension guard {MAX_DIMENSION}")
    return _cube_on(["".join(b) for b in product("01", repeat=r)])


def no_11_strings(r: int) -> list:
    return ["".join(b) for b in product("01", repeat=r) if "11" not in "".join(b)]


def fibonacci_cube(r: int) -> SimpleGraph:
    if r < 0:
        raise ValueError("dimension must be >= 0")
    if r > MAX_DIMENSION:
        raise DimensionTooLarge(f"F_{r} exceeds the dimension guard {MAX_DIMENSION}")
    return _cube_on(no_11_strings(r))


def image_is_fibonacci(c: BraidClass, base: Sequence[int] | None = None) -> bool:
    """Whether the labels based at the Fibonacci link are exactly the no-11 strings."""
    base = c.base if base is None else tuple(base)
    c.index_of(base)
    if not is_fibonacci_class(c, base):
        raise NotFibonacci(f"{word_str(base)} is not a Fibonacci link")
    image = {phi(c, base, m) for m in c.members}
    return image == set(no_11_strings(rank(c))) and len(image) == len(c)


# -- partial cubes ---------------------------------------------------------

def _theta_matrix(g: SimpleGraph) -> tuple:
    d = g.distances
    e = np.array(g.edge_list(), dtype=np.int64).reshape(-1, 2)
    u, v = e[:, 0], e[:, 1]
    rel = d[u[:, None], u[None, :]] + d[v[:, None], v[None, :]] != (
        d[u[:, None], v[None, :]] + d[v[:, None], u[None, :]]
    )
    return e, rel


def _components(rel: np.ndarray) -> list:
    if rel.shape[0] == 0:
        return []
    _, lab = connected_components(csr_matrix(rel.astype(np.int8)), directed=False)
    groups = {}
    for k, c in enumerate(lab):
        groups.setdefault(int(c), []).append(k)
    return sorted(groups.values())


def theta_classes(g: SimpleGraph) -> list:
    """Edges grouped by the transitive closure of the Djokovic-Winkler relation.

    Each class is a sorted list of vertex-label pairs; classes are ordered by
    their first edge.
    """
    if len(g) > ALL_PAIRS_CAP:
        raise CapExceeded(f"{len(g)} vertices exceed the all-pairs cap {ALL_PAIRS_CAP}", len(g))
    g.distances  # raises Disconnected early
    e, rel = _theta_matrix(g)
    out = []
    for group in _components(rel):
        out.append(sorted((g.vertices[e[k, 0]], g.vertices[e[k, 1]]) for k in group))
    return sorted(out)


def _theta_is_transitive(rel: np.ndarray) -> bool:
    r = rel.astype(np.int64)
    return not ((r @ r > 0) & ~rel).any()


def cut_labeling(g: SimpleGraph) -> dict:
    """One bit per Theta class: 1 when the vertex is nearer the second end of a representative edge."""
    g.distances
    e, rel = _theta_matrix(g)
    d = g.distances
    reps = [e[group[0]] for group in _components(rel)]
    return {
        v: "".join("1" if d[i, b] < d[i, a] else "0" for a, b in reps) for i, v in enumerate(g.vertices)
    }


def isometric_dimension(g: SimpleGraph) -> int:
    if len(g) > ALL_PAIRS_CAP:
        raise CapExceeded(f"{len(g)} vertices exceed the all-pairs cap {ALL_PAIRS_CAP}", len(g))
    g.distances
    if not g.edges:
        return 0
    _, rel = _theta_matrix(g)
    if not _theta_is_transitive(rel):
        raise NotPartialCube("Theta is not transitive")
    labels = cut_labeling(g)
    if len(set(labels.values())) != len(g) or not verify_isometric(g, labels):
        raise NotPartialCube("the cut labeling is not an isometric embedding")
    return len(_components(rel))


def is_partial_cube(g: SimpleGraph) -> bool:
    try:
        isometric_dimension(g)
    except NotPartialCube:
        return False
    return True


def is_median_graph(g: SimpleGraph, cap: int = MEDIAN_CAP) -> bool:
    """Brute force: every triple has exactly one vertex on geodesics between each pair."""
    n = len(g)
    if n > cap:
        raise CapExceeded(f"{n} vertices exceed the median cap {cap}", n)
    d = g.distances
    for a, b, c in combinations(range(n), 3):
        on_all = (d[a] + d[b] == d[a, b]) & (d[b] + d[c] == d[b, c]) & (d[a] + d[c] == d[a, c])
        if int(on_all.sum()) != 1:
            return False
    return True


# -- probes ----------------------------------------------------------------

def theta_shadow_probe(c: BraidClass) -> dict:
    """Do the Theta classes of the braid graph coincide with the edge groups of each shadow?"""
    bg = braid_graph(c)
    groups = {}
    for i, j, lo in c.edges:
        groups.setdefault(lo, set()).add(frozenset((c.members[i], c.members[j])))
    thetas = [frozenset(frozenset(e) for e in cls) for cls in theta_classes(bg)] if bg.edges else []
    match = set(thetas) == {frozenset(x) for x in groups.values()}
    return {"theta_classes": len(thetas), "shadow_groups": len(groups), "match": match}


def dimension_probe(c: BraidClass) -> dict:
    bg = braid_graph(c)
    try:
        dim = isometric_dimension(bg)
    except NotPartialCube:
        dim = None
    return {"rank": rank(c), "isometric_dimension": dim, "equal": dim == rank(c)}
