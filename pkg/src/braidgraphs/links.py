"""Links, link factorization, Fibonacci links and type-A strings."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .classes import (
    DEFAULT_CAP,
    BraidClass,
    braid_graph,
    class_shadows,
    class_support,
    distances_from,
    enumerate_braid_class,
    rank,
    sorted_shadows,
)
from .coxeter import CoxeterGraph, induced_support_subgraph, is_star, is_triangle_free
from .errors import (
    InternalInvariantViolation,
    NoSuchMember,
    NotALink,
    NotFibonacci,
    NotTriangleFree,
    RankTooSmall,
    SpecInvalid,
)
from .graph import SimpleGraph, box_product
from .words import Interval, Word, require_reduced, shadow, shadow_starts, word_str


def _chain(length: int) -> frozenset:
    return frozenset(shadow(lo) for lo in range(1, length - 1, 2))


def is_link_class(c: BraidClass) -> bool:
    m = c.word_length
    return m == 1 or (m % 2 == 1 and class_shadows(c) == _chain(m))


def is_link(g: CoxeterGraph, w: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    return is_link_class(enumerate_braid_class(g, w, cap))


# -- factorization ---------------------------------------------------------

@dataclass(frozen=True)
class LinkFactorization:
    word: Word
    factors: tuple  # ((Interval, Word), ...)

    def __str__(self):
        return " | ".join(word_str(f) for _, f in self.factors)

    @property
    def spans(self) -> list:
        return [span for span, _ in self.factors]

    @property
    def words(self) -> list:
        return [f for _, f in self.factors]

    def split(self, member: Sequence[int]) -> tuple:
        """Cut any class member along the factor spans."""
        return tuple(tuple(member[s.lo - 1 : s.hi]) for s in self.spans)


def factor_spans(c: BraidClass) -> list:
    """Group class shadows into maximal runs overlapping in one position."""
    spans = []
    covered = 0
    run = None
    for iv in sorted_shadows(c):
        if run is not None and iv.lo == run.hi:
            run = Interval(run.lo, iv.hi)
            continue
        if run is not None:
            spans.append(run)
            covered = run.hi
        spans.extend(Interval(p, p) for p in range(covered + 1, iv.lo))
        run = iv
    if run is not None:
        spans.append(run)
        covered = run.hi
    spans.extend(Interval(p, p) for p in range(covered + 1, c.word_length + 1))
    return spans


def link_factorization_of_class(c: BraidClass) -> LinkFactorization:
    w = c.base
    spans = factor_spans(c)
    return LinkFactorization(w, tuple((s, w[s.lo - 1 : s.hi]) for s in spans))


def link_factorization(g: CoxeterGraph, w: Sequence[int], cap: int = DEFAULT_CAP) -> LinkFactorization:
    return link_factorization_of_class(enumerate_braid_class(g, w, cap))


@dataclass
class BoxProductReport:
    passed: bool
    size: int
    factor_sizes: list
    rank: int
    factor_ranks: list
    isomorphism: dict = field(repr=False)  # member -> tuple of factor members
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "size": self.size,
            "factor_sizes": self.factor_sizes,
            "rank": self.rank,
            "factor_ranks": self.factor_ranks,
            "failures": self.failures,
        }


def verify_box_product(g: CoxeterGraph, w: Sequence[int], cap: int = DEFAULT_CAP) -> BoxProductReport:
    """Check the braid graph of ``w`` against the box product of its link factors."""
    c = enumerate_braid_class(g, w, cap)
    fact = link_factorization_of_class(c)
    factor_classes = [enumerate_braid_class(g, f, cap) for f in fact.words]
    sizes = [len(fc) for fc in factor_classes]
    ranks = [rank(fc) for fc in factor_classes]
    failures = []

    expected = 1
    for k in sizes:
        expected *= k
    if len(c) != expected:
        failures.append(f"class size {len(c)} != product of factor sizes {expected}")
    if rank(c) != sum(ranks):
        failures.append(f"rank {rank(c)} != sum of factor ranks {sum(ranks)}")

    iso = {m: fact.split(m) for m in c.members}
    for m, parts in iso.items():
        for part, fc in zip(parts, factor_classes):
            if part not in fc:
                failures.append(f"{word_str(m)}: piece {word_str(part)} is not in its factor class")
    if len(set(iso.values())) != len(iso):
        failures.append("splitting members along factor spans is not injective")

    if not failures:
        bg = braid_graph(c)
        prod = box_product(*(braid_graph(fc) for fc in factor_classes))
        mapped = {frozenset((iso[a], iso[b])) for a, b in (tuple(e) for e in bg.edge_set())}
        if set(iso.values()) != set(prod.vertices):
            failures.append("vertex map is not onto the product")
        elif mapped != prod.edge_set():
            failures.append(
                f"edge sets differ: {len(mapped - prod.edge_set())} extra, "
                f"{len(prod.edge_set() - mapped)} missing"
            )
    return BoxProductReport(not failures, len(c), sizes, rank(c), ranks, iso, failures)


# -- Fibonacci links -------------------------------------------------------

def is_fibonacci_class(c: BraidClass, w: Sequence[int] | None = None) -> bool:
    w = c.base if w is None else tuple(w)
    own = frozenset(shadow(lo) for lo in shadow_starts(c.graph, w))
    return is_link_class(c) and class_shadows(c) == own


def is_fibonacci_link(g: CoxeterGraph, w: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    return is_fibonacci_class(enumerate_braid_class(g, w, cap))


def fibonacci_form(g: CoxeterGraph, w: Sequence[int], cap: int = DEFAULT_CAP) -> tuple:
    """Split a Fibonacci link ``s t1 s t2 ... s tr s`` into ``(s, [t1, ..., tr])``."""
    w = require_reduced(g, w)
    if not is_fibonacci_link(g, w, cap):
        raise NotFibonacci(f"{word_str(w)} is not a Fibonacci link")
    s = w[0]
    ts = list(w[1::2])
    if any(x != s for x in w[::2]):
        raise InternalInvariantViolation(f"odd positions of {word_str(w)} are not constant")
    for i, t in enumerate(ts):
        if not g.bonded(s, t):
            raise InternalInvariantViolation(f"m({s},{t}) != 3 in {word_str(w)}")
        for u in ts[i + 1 :]:
            if u != t and g.bonded(t, u):
                raise InternalInvariantViolation(f"m({t},{u}) != 2 in {word_str(w)}")
    return s, ts


def star_criterion(g: CoxeterGraph, w: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    """Whether the support of link ``w`` induces a star in the Coxeter graph.

    For triangle-free systems this decides whether the braid chain of ``w``
    contains a Fibonacci link.
    """
    w = require_reduced(g, w)
    if not is_triangle_free(g):
        raise NotTriangleFree(f"{g!r} has a three-cycle")
    if not is_link(g, w, cap):
        raise NotALink(f"{word_str(w)} is not a link")
    return is_star(induced_support_subgraph(g, set(w)))


def fibonacci_members(c: BraidClass) -> list:
    return [m for m in c.members if is_fibonacci_class(c, m)]


def sigma_embedding(g: CoxeterGraph, phi: Sequence[int], cap: int = DEFAULT_CAP) -> dict:
    """Map each member of the class of ``phi`` minus its last four letters into ``[phi]``.

    ``phi = s t1 s ... s tr s`` with ``r >= 2``; the appended letters are
    ``t_{r-1} t_r s t_r``.
    """
    s, ts = fibonacci_form(g, phi, cap)
    r = len(ts)
    if r < 2:
        raise RankTooSmall("need a Fibonacci link of rank >= 2")
    tail = (ts[r - 2], ts[r - 1], s, ts[r - 1])
    head = tuple(phi)[:-4]
    small = enumerate_braid_class(g, head, cap)
    return {m: m + tail for m in small.members}


def omega_embedding(c: BraidClass, sigma: Sequence[int], cap: int = DEFAULT_CAP) -> dict:
    """Map the class of ``sigma`` minus its last two letters into ``c`` by re-appending them."""
    sigma = tuple(sigma)
    c.index_of(sigma)
    small = enumerate_braid_class(c.graph, sigma[:-2], cap)
    return {m: m + sigma[-2:] for m in small.members}


# -- structure of links ----------------------------------------------------

def choose_sigma(c: BraidClass, i: int) -> Word:
    """A member carrying both shadows ``[[2i-1,2i+1]]`` and ``[[2i+1,2i+3]]``.

    Among all such members the one fewest braid moves from ``c.base`` wins,
    ties going to the lexicographically least word.
    """
    if not is_link_class(c):
        raise NotALink(f"{word_str(c.base)} is not a link")
    r = rank(c)
    if r < 2 or not 1 <= i <= r - 1:
        raise ValueError(f"need rank >= 2 and 1 <= i <= rank-1 (rank={r}, i={i})")
    dist = distances_from(c, c.index_of(c.base))
    hits = [
        (dist[j], m)
        for j, (m, starts) in enumerate(zip(c.members, c.member_shadows))
        if 2 * i - 1 in starts and 2 * i + 1 in starts
    ]
    if hits:
        return min(hits)[1]
    raise NoSuchMember(f"no member of [{word_str(c.base)}] has overlapping shadows at {2 * i + 1}")


def partition_xy(c: BraidClass, sigma: Sequence[int]) -> tuple:
    """Split a braid chain by agreement with ``sigma`` at position ``2r``."""
    sigma = tuple(sigma)
    c.index_of(sigma)
    pos = 2 * rank(c)
    x = frozenset(m for m in c.members if m[pos - 1] == sigma[pos - 1])
    return x, frozenset(c.members) - x


def core_violations(c: BraidClass) -> list:
    """Members and even centres where the shadow/support correspondence fails.

    For a link of positive rank in a triangle-free system, a member has a
    shadow centred at ``2i`` exactly when the letters around it already use
    every generator the class puts at ``2i``.
    """
    out = []
    r = rank(c)
    for m, starts in zip(c.members, c.member_shadows):
        for i in range(1, r + 1):
            has = (2 * i - 1) in starts
            agrees = frozenset(m[2 * i - 2 : 2 * i + 1]) == class_support(c, (2 * i, 2 * i))
            if has != agrees:
                out.append((m, 2 * i))
    return out


def even_support_intersections(c: BraidClass) -> list:
    """Sizes of the overlaps between class supports at consecutive even positions."""
    r = rank(c)
    return [
        len(class_support(c, (2 * i, 2 * i)) & class_support(c, (2 * i + 2, 2 * i + 2)))
        for i in range(1, r)
    ]


def y_subgraph_probe(c: BraidClass, sigma: Sequence[int] | None = None, cap: int = DEFAULT_CAP) -> dict:
    """Experimental: look for a link whose braid graph matches the Y-part of a chain.

    Candidates are odd-length prefixes of Y members and of those members
    after the move in the last shadow.  The outcome is reported, never asserted.
    """
    from .oracle import small_iso

    r = rank(c)
    if sigma is None:
        sigma = choose_sigma(c, r - 1)
    _, y = partition_xy(c, sigma)
    target = braid_graph(c).induced(y)
    tried = set()
    for m in sorted(y):
        variants = [m]
        if 2 * r - 1 in shadow_starts(c.graph, m):
            lo = 2 * r - 1
            variants.append(m[: lo - 1] + (m[lo], m[lo - 1], m[lo]) + m[lo + 2 :])
        for v in variants:
            for length in range(len(v), 0, -2):
                cand = v[:length]
                if cand in tried:
                    continue
                tried.add(cand)
                cc = enumerate_braid_class(c.graph, cand, cap)
                if len(cc) != len(target) or not is_link_class(cc):
                    continue
                if small_iso(braid_graph(cc), target) is not None:
                    return {"found": True, "link": cand, "size": len(target)}
    return {"found": False, "link": None, "size": len(target)}


# -- type-A strings --------------------------------------------------------

@dataclass(frozen=True)
class StringSpec:
    l: int
    k: int
    m: int
    eps: str = "+"

    def __post_init__(self):
        if self.l < 1:
            raise SpecInvalid(f"l must be positive, got {self.l}")
        if not 0 <= self.k <= self.l - 1:
            raise SpecInvalid(f"k must lie in 0..{self.l - 1}, got {self.k}")
        if self.m < 1:
            raise SpecInvalid(f"m must be positive, got {self.m}")
        if self.eps not in ("+", "-", "0"):
            raise SpecInvalid(f"eps must be one of +, -, 0, got {self.eps!r}")
        if self.eps == "0" and self.l > 2:
            raise SpecInvalid("eps = 0 requires l <= 2")

    @property
    def max_generator(self) -> int:
        return self.m + self.l - 1


def _plus_string(l: int, k: int, m: int) -> Word:
    letters = []
    for j in range(1, k + 1):
        letters += [m + j, m + j - 1]
    letters.append(m + k)
    j = 1
    while len(letters) < 2 * l - 1:
        letters += [m + k + j, m + k + j - 1]
        j += 1
    return tuple(letters[: 2 * l - 1])


def type_a_string(spec: StringSpec, n: int | None = None) -> Word:
    """The type-A string for ``(l, k, m, eps)``; ``n`` optionally checks the ambient rank."""
    if n is not None and n < spec.max_generator:
        raise RankTooSmall(f"string {spec} needs A_n with n >= {spec.max_generator}")
    if spec.eps == "-":
        return tuple(reversed(_plus_string(spec.l, spec.l - 1 - spec.k, spec.m)))
    return _plus_string(spec.l, spec.k, spec.m)


def all_strings(n: int, max_len: int) -> dict:
    """Every string word fitting in A_n with at most ``max_len`` letters, mapped to one spec."""
    out = {}
    for l in range(1, (max_len + 1) // 2 + 1):
        for k, m, eps in product(range(l), range(1, n + 1), "+-0"):
            if eps == "0" and l > 2:
                continue
            spec = StringSpec(l, k, m, eps)
            if spec.max_generator > n:
                continue
            out.setdefault(type_a_string(spec), spec)
    return out


def string_graph(spec: StringSpec) -> SimpleGraph:
    """Path on the strings ``sigma_{l,0,m,eps} .. sigma_{l,l-1,m,eps}``."""
    words = [type_a_string(StringSpec(spec.l, k, spec.m, spec.eps)) for k in range(spec.l)]
    return SimpleGraph.from_edges(words, zip(words, words[1:]))
