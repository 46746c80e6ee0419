"""Brute-force cross-checks.

Nothing here calls the reducedness test, the class enumerator or the scipy
distance code; each routine rebuilds what it needs from scratch so that
agreement with the main modules means something.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import BoundExceeded, Disconnected, TooLarge

MAX_BOUND = 8
MAX_RANK = 4
MAX_ISO_VERTICES = 64


def _generator_matrices(g) -> list:
    """Pure-Python matrices of the simple reflections, built from the bond list."""
    n = g.n
    bonded = {(s, t) for s, t in g.bonds} | {(t, s) for s, t in g.bonds}
    mats = []
    for s in range(1, n + 1):
        rows = []
        for i in range(1, n + 1):
            if i != s:
                rows.append(tuple(int(i == j) for j in range(1, n + 1)))
            else:
                # s(alpha_j) = alpha_j + [j ~ s] alpha_s, and s(alpha_s) = -alpha_s
                rows.append(tuple(-1 if j == s else int((s, j) in bonded) for j in range(1, n + 1)))
        mats.append(tuple(rows))
    return mats


def _mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _element(mats, w, n):
    m = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    for x in w:
        m = _mul(m, mats[x - 1])
    return m


def brute_min_length(g, w: Sequence[int], bound: int) -> int:
    """Length of the element of ``w``, found by breadth-first search over group elements."""
    if bound > MAX_BOUND or g.n > MAX_RANK:
        raise ValueError(f"oracle limited to bound <= {MAX_BOUND} and n <= {MAX_RANK}")
    for x in w:
        if not 1 <= x <= g.n:
            raise ValueError(f"letter {x} out of range")
    mats = _generator_matrices(g)
    target = _element(mats, w, g.n)
    ident = _element(mats, (), g.n)
    if target == ident:
        return 0
    seen = {ident}
    frontier = [ident]
    for depth in range(1, bound + 1):
        nxt = []
        for m in frontier:
            for r in mats:
                p = _mul(m, r)
                if p == target:
                    return depth
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    raise BoundExceeded(f"element needs more than {bound} letters")


def all_pairs_distances(g) -> dict:
    """``{(u, v): d}`` over vertex labels, by one breadth-first search per vertex."""
    verts = list(g.vertices)
    adj = {v: set() for v in verts}
    for i, j in g.edges:
        adj[verts[i]].add(verts[j])
        adj[verts[j]].add(verts[i])
    table = {}
    for src in verts:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        if len(dist) != len(verts):
            raise Disconnected("graph is not connected")
        for v, d in dist.items():
            table[src, v] = d
    return table


def small_iso(g1, g2) -> dict | None:
    """A vertex bijection carrying edges of ``g1`` onto edges of ``g2``, or ``None``."""
    if len(g1.vertices) > MAX_ISO_VERTICES or len(g2.vertices) > MAX_ISO_VERTICES:
        raise TooLarge(f"small_iso handles at most {MAX_ISO_VERTICES} vertices")
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None

    def adjacency(g):
        vs = list(g.vertices)
        adj = {v: set() for v in vs}
        for i, j in g.edges:
            adj[vs[i]].add(vs[j])
            adj[vs[j]].add(vs[i])
        return adj

    a1, a2 = adjacency(g1), adjacency(g2)
    if sorted(map(len, a1.values())) != sorted(map(len, a2.values())):
        return None

    # visit g1 vertices so each new one touches something already placed
    order = []
    placed = set()
    for start in sorted(a1, key=lambda v: -len(a1[v])):
        if start in placed:
            continue
        queue = deque([start])
        placed.add(start)
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in sorted(a1[u], key=repr):
                if v not in placed:
                    placed.add(v)
                    queue.append(v)

    fwd, used = {}, set()

    def fits(u, x):
        if len(a1[u]) != len(a2[x]):
            return False
        for v in a1[u]:
            if v in fwd and fwd[v] not in a2[x]:
                return False
        placed_nb = sum(1 for v in a1[u] if v in fwd)
        return placed_nb == sum(1 for y in a2[x] if y in used)

    def search(k):
        if k == len(order):
            return True
        u = order[k]
        for x in a2:
            if x in used or not fits(u, x):
                continue
            fwd[u] = x
            used.add(x)
            if search(k + 1):
                return True
            del fwd[u]
            used.discard(x)
        return False

    return dict(fwd) if search(0) else None
