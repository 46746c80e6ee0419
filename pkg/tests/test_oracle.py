import random

import networkx as nx
import pytest

from braidgraphs.classes import braid_distance, braid_graph, enumerate_braid_class
from braidgraphs.coxeter import standard_family
from braidgraphs.cube import fibonacci_cube
from braidgraphs.errors import BoundExceeded, Disconnected, TooLarge
from braidgraphs.graph import SimpleGraph, box_product
from braidgraphs.oracle import all_pairs_distances, brute_min_length, small_iso
from braidgraphs.words import is_reduced, random_reduced_word

from conftest import W
from worked_examples import GAMMA

A2 = standard_family("A", 2)
A3 = standard_family("A", 3)
D4 = standard_family("D", 4)


def path(n):
    return SimpleGraph.from_edges(range(n), [(i, i + 1) for i in range(n - 1)])


@pytest.mark.parametrize("g,w,length", [(A2, "1212", 2), (A3, "11", 0), (A3, "123121", 6), (A3, "", 0), (A2, "121", 3)])
def test_brute_min_length(g, w, length):
    assert brute_min_length(g, W(w), 8) == length


def test_brute_bound():
    with pytest.raises(BoundExceeded):
        brute_min_length(A3, W("123121"), 5)
    with pytest.raises(ValueError):
        brute_min_length(standard_family("A", 5), W("1"), 8)
    with pytest.raises(ValueError):
        brute_min_length(A3, W("1"), 9)


@pytest.mark.parametrize("g", [A2, A3])
def test_is_reduced_agrees_with_brute_force(g):
    words = [()]
    for _ in range(6):
        words = [w + (x,) for w in words for x in g.generators]
        for w in words:
            assert is_reduced(g, w) is (brute_min_length(g, w, 8) == len(w))


def test_all_pairs_small():
    k2 = path(2)
    assert all_pairs_distances(k2)[0, 1] == 1
    assert all_pairs_distances(path(4))[0, 3] == 3
    with pytest.raises(Disconnected):
        all_pairs_distances(SimpleGraph.from_edges(range(3), [(0, 1)]))


def test_all_pairs_gamma():
    bg = braid_graph(enumerate_braid_class(D4, W(GAMMA[1])))
    d = all_pairs_distances(bg)
    assert d[W(GAMMA[3]), W(GAMMA[2])] == 2
    for (u, v), duv in d.items():
        assert d[v, u] == duv
        assert (duv == 0) is (u == v)


@pytest.mark.parametrize("name,n", [("A", 5), ("D", 5), ("D~", 5)])
def test_braid_distance_agrees(name, n):
    g = standard_family(name, n)
    rng = random.Random(11)
    for _ in range(25):
        c = enumerate_braid_class(g, random_reduced_word(g, rng.randint(1, 12), rng))
        d = all_pairs_distances(braid_graph(c))
        for a in c.members[:6]:
            for b in c.members:
                assert braid_distance(c, a, b) == d[a, b]


def test_scipy_distances_agree():
    c = enumerate_braid_class(standard_family("D", 5), W("4534313234313"))
    bg = braid_graph(c)
    d = all_pairs_distances(bg)
    for i, u in enumerate(bg.vertices):
        for j, v in enumerate(bg.vertices):
            assert bg.distances[i, j] == d[u, v]


@pytest.mark.parametrize("w,r", [("34313", 2), ("343132343", 4)])
def test_small_iso_fibonacci(w, r):
    bg = braid_graph(enumerate_braid_class(D4, W(w)))
    f = fibonacci_cube(r)
    iso = small_iso(bg, f)
    assert iso is not None
    assert {frozenset((iso[a], iso[b])) for a, b in map(tuple, bg.edge_set())} == f.edge_set()


def test_small_iso_negative():
    k3 = SimpleGraph.from_edges(range(3), [(0, 1), (1, 2), (0, 2)])
    assert small_iso(path(3), k3) is None
    star = SimpleGraph.from_edges(range(4), [(0, 1), (0, 2), (0, 3)])
    assert small_iso(path(4), star) is None


def test_small_iso_identity_and_symmetry():
    g = box_product(path(3), path(2))
    assert small_iso(g, g) is not None
    c6 = SimpleGraph.from_edges(range(6), [(i, (i + 1) % 6) for i in range(6)])
    assert (small_iso(g, c6) is None) == (small_iso(c6, g) is None)


def test_small_iso_same_degrees_not_isomorphic():
    # two triangles vs a hexagon: both 2-regular on six vertices
    two = SimpleGraph.from_edges(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    hexagon = SimpleGraph.from_edges(range(6), [(i, (i + 1) % 6) for i in range(6)])
    assert small_iso(two, hexagon) is None


def test_small_iso_too_large():
    big = path(65)
    with pytest.raises(TooLarge):
        small_iso(big, big)


def test_small_iso_agrees_with_networkx():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(4, 8)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        e1 = rng.sample(pairs, rng.randint(3, len(pairs) // 2))
        e2 = rng.sample(pairs, len(e1))
        g1, g2 = SimpleGraph.from_edges(range(n), e1), SimpleGraph.from_edges(range(n), e2)
        n1, n2 = nx.Graph(e1), nx.Graph(e2)
        n1.add_nodes_from(range(n))
        n2.add_nodes_from(range(n))
        assert (small_iso(g1, g2) is not None) is nx.is_isomorphic(n1, n2)
