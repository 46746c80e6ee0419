"""Words over the generators, reducedness and single moves.

A word is a plain tuple of generator indices.  Positions are 1-based in
every public function, so ``Interval(1, 3)`` names the first three letters.

Reducedness is decided with the integer geometric representation: the
reflection of generator ``s`` acts on simple-root coordinates by
``v[s] -= (A v)[s]`` where ``A`` is the Cartan matrix, and ``x_1 ... x_k`` is
reduced iff every prefix ``x_1 ... x_{i-1}`` sends the simple root of
``x_i`` to a positive root.
"""
from __future__ import annotations

import random
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .coxeter import CoxeterGraph
from .errors import (
    IntervalOutOfRange,
    NotACommutation,
    NotAShadow,
    NotReduced,
    OutOfRange,
)

Word = tuple


class Interval(NamedTuple):
    """Closed position interval ``[[lo, hi]]`` (1-based)."""

    lo: int
    hi: int

    def __str__(self):
        if self.lo == self.hi:
            return f"[[{self.lo}]]"
        return f"[[{self.lo},{self.hi}]]"

    def positions(self) -> range:
        return range(self.lo, self.hi + 1)


def shadow(lo: int) -> Interval:
    return Interval(lo, lo + 2)


def as_word(letters: Iterable[int], g: CoxeterGraph | None = None) -> Word:
    w = tuple(int(x) for x in letters)
    if g is not None:
        for x in w:
            if not 1 <= x <= g.n:
                raise OutOfRange(f"letter {x} not a generator of {g!r}")
    return w


def word_str(w: Sequence[int]) -> str:
    """Compact digit form such as ``2321434``; space separated when a letter exceeds 9."""
    if all(x < 10 for x in w):
        return "".join(map(str, w))
    return " ".join(map(str, w))


def _check_interval(w: Sequence[int], iv) -> Interval:
    iv = Interval(*iv) if not isinstance(iv, Interval) else iv
    if not 1 <= iv.lo <= iv.hi <= len(w):
        raise IntervalOutOfRange(f"{iv} not inside a word of length {len(w)}")
    return iv


def local_support(w: Sequence[int], iv) -> frozenset:
    iv = _check_interval(w, iv)
    return frozenset(w[iv.lo - 1 : iv.hi])


# -- geometric representation ---------------------------------------------

def simple_root(g: CoxeterGraph, s: int) -> tuple:
    g.check(s)
    return tuple(int(i == s) for i in g.generators)


def reflect(g: CoxeterGraph, s: int, v: Sequence[int]) -> tuple:
    """Apply the simple reflection of ``s`` to root coordinates ``v``."""
    g.check(s)
    pairing = 2 * v[s - 1] - sum(v[t - 1] for t in g.adjacency[s])
    out = list(v)
    out[s - 1] -= pairing
    return tuple(out)


def is_positive_root(v: Sequence[int]) -> bool:
    return all(c >= 0 for c in v) and any(v)


def _reflection_matrix(g: CoxeterGraph, s: int) -> np.ndarray:
    m = np.eye(g.n, dtype=np.int64)
    m[s - 1, :] -= g.cartan[s - 1, :]
    return m


def group_element_fingerprint(g: CoxeterGraph, w: Sequence[int]) -> np.ndarray:
    """Matrix of the element in the geometric representation.

    The representation is faithful, so two words share a fingerprint exactly
    when they represent the same group element.
    """
    m = np.eye(g.n, dtype=np.int64)
    for x in as_word(w, g):
        m = m @ _reflection_matrix(g, x)
    return m


def is_reduced(g: CoxeterGraph, w: Sequence[int]) -> bool:
    m = np.eye(g.n, dtype=np.int64)
    cartan = g.cartan
    for x in as_word(w, g):
        col = m[:, x - 1]
        if (col < 0).any():
            return False
        # right-multiplying by the reflection of x only changes column x
        m -= np.outer(col, cartan[x - 1])
    return True


def require_reduced(g: CoxeterGraph, w: Sequence[int]) -> Word:
    w = as_word(w, g)
    if not w:
        raise NotReduced("the empty word is excluded from braid-class operations")
    if not is_reduced(g, w):
        raise NotReduced(f"{word_str(w)} is not reduced in {g!r}")
    return w


def reduced_words(g: CoxeterGraph, max_len: int, min_len: int = 1) -> Iterator[Word]:
    """All reduced words with ``min_len <= len <= max_len``, depth first."""
    cartan = g.cartan
    n = g.n

    def extend(prefix, m):
        if len(prefix) >= min_len:
            yield prefix
        if len(prefix) == max_len:
            return
        for x in range(n):
            col = m[:, x]
            if (col < 0).any():
                continue
            yield from extend(prefix + (x + 1,), m - np.outer(col, cartan[x]))

    yield from extend((), np.eye(n, dtype=np.int64))


def random_reduced_word(g: CoxeterGraph, length: int, rng: random.Random) -> Word:
    """Grow a reduced word letter by letter, stopping early at a longest element."""
    cartan = g.cartan
    m = np.eye(g.n, dtype=np.int64)
    w = []
    for _ in range(length):
        options = [x for x in range(g.n) if not (m[:, x] < 0).any()]
        if not options:
            break
        x = rng.choice(options)
        w.append(x + 1)
        m = m - np.outer(m[:, x], cartan[x])
    return tuple(w)


# -- moves -----------------------------------------------------------------

def shadow_starts(g: CoxeterGraph, w: Sequence[int]) -> list:
    """Start positions of braid shadows; no reducedness check."""
    adj = g.adjacency
    return [
        i + 1
        for i in range(len(w) - 2)
        if w[i] == w[i + 2] and w[i + 1] in adj[w[i]]
    ]


def braid_shadows(g: CoxeterGraph, w: Sequence[int]) -> list:
    w = require_reduced(g, w)
    return [shadow(lo) for lo in shadow_starts(g, w)]


def _swap_braid(w: Word, lo: int) -> Word:
    s, t = w[lo - 1], w[lo]
    return w[: lo - 1] + (t, s, t) + w[lo + 2 :]


def apply_braid_move(g: CoxeterGraph, w: Sequence[int], shadow_lo: int) -> Word:
    w = require_reduced(g, w)
    lo = shadow_lo
    if not (1 <= lo <= len(w) - 2 and w[lo - 1] == w[lo + 1] and g.bonded(w[lo - 1], w[lo])):
        raise NotAShadow(f"{shadow(lo)} is not a braid shadow of {word_str(w)}")
    return _swap_braid(w, lo)


def apply_commutation_move(g: CoxeterGraph, w: Sequence[int], lo: int) -> Word:
    w = as_word(w, g)
    if not 1 <= lo <= len(w) - 1:
        raise NotACommutation(f"position {lo} has no right neighbour in {word_str(w)}")
    s, t = w[lo - 1], w[lo]
    if s == t or g.bonded(s, t):
        raise NotACommutation(f"letters {s},{t} at {lo},{lo + 1} do not commute")
    return w[: lo - 1] + (t, s) + w[lo + 1 :]


def commutation_starts(g: CoxeterGraph, w: Sequence[int]) -> list:
    adj = g.adjacency
    return [
        i + 1
        for i in range(len(w) - 1)
        if w[i] != w[i + 1] and w[i + 1] not in adj[w[i]]
    ]


def _swap_commutation(w: Word, lo: int) -> Word:
    return w[: lo - 1] + (w[lo], w[lo - 1]) + w[lo + 1 :]
