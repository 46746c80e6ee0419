import numpy as np
import pytest

from braidgraphs.coxeter import (
    bond_order,
    build_graph,
    induced_support_subgraph,
    is_star,
    is_triangle_free,
    standard_family,
    triangles,
)
from braidgraphs.errors import OutOfRange, RankTooSmall, SelfLoop


def test_build_a3():
    g = build_graph(3, [{1, 2}, {2, 3}])
    assert g.bonds == frozenset({(1, 2), (2, 3)})
    assert g == standard_family("A", 3)


def test_build_single_generator():
    g = build_graph(1, [])
    assert g.n == 1 and not g.bonds


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        build_graph(3, [{1, 1}])
    with pytest.raises(SelfLoop):
        build_graph(3, [(2, 2)])


@pytest.mark.parametrize("bond", [(0, 1), (1, 4), (-1, 2)])
def test_out_of_range_endpoint(bond):
    with pytest.raises(OutOfRange):
        build_graph(3, [bond])


def test_duplicate_bonds_collapse():
    g = build_graph(3, [(1, 2), (2, 1), {1, 2}])
    assert g.bonds == frozenset({(1, 2)})


@pytest.mark.parametrize(
    "family,n,bonds",
    [
        ("D", 4, {(1, 3), (2, 3), (3, 4)}),
        ("A", 1, set()),
        ("A~", 2, {(1, 2), (2, 3), (1, 3)}),
        ("D", 5, {(1, 3), (2, 3), (3, 4), (4, 5)}),
        ("D~", 5, {(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)}),
        ("A~", 3, {(1, 2), (2, 3), (3, 4), (1, 4)}),
    ],
)
def test_standard_family_bonds(family, n, bonds):
    assert standard_family(family, n).bonds == frozenset(bonds)


@pytest.mark.parametrize("family,n", [("A", 0), ("D", 3), ("A~", 1), ("D~", 4)])
def test_rank_too_small(family, n):
    with pytest.raises(RankTooSmall):
        standard_family(family, n)


def test_unknown_family():
    with pytest.raises(ValueError):
        standard_family("E", 6)


@pytest.mark.parametrize("s,t,m", [(1, 2, 3), (1, 3, 2), (2, 2, 1), (3, 2, 3)])
def test_bond_order_a3(s, t, m):
    assert bond_order(standard_family("A", 3), s, t) == m


def test_bond_order_symmetric():
    g = standard_family("D~", 6)
    for s in g.generators:
        for t in g.generators:
            assert bond_order(g, s, t) == bond_order(g, t, s)


def test_bond_order_out_of_range():
    with pytest.raises(OutOfRange):
        bond_order(standard_family("A", 3), 1, 4)


def test_cartan_matrix():
    a = standard_family("D", 4).cartan
    assert (a == a.T).all()
    assert (np.diag(a) == 2).all()
    assert a[0, 2] == -1 and a[0, 1] == 0
    assert not a.flags.writeable


@pytest.mark.parametrize(
    "family,n,expected",
    [("D", 4, True), ("A~", 2, False), ("A~", 3, True), ("A~", 5, True), ("A", 6, True), ("D~", 7, True)],
)
def test_triangle_free(family, n, expected):
    assert is_triangle_free(standard_family(family, n)) is expected


def test_two_vertices_triangle_free():
    assert is_triangle_free(build_graph(2, [{1, 2}]))
    assert triangles(standard_family("A~", 2)) == [(1, 2, 3)]


def test_induced_full_support_is_identity():
    g = standard_family("D", 4)
    sub = induced_support_subgraph(g, {1, 2, 3, 4})
    assert sub.bonds == g.bonds and sub.labels == (1, 2, 3, 4)


def test_induced_single_bond():
    sub = induced_support_subgraph(standard_family("D", 4), {3, 4})
    assert sub.n == 2 and sub.bonds == frozenset({(1, 2)})
    assert sub.labels == (3, 4)


def test_induced_isolated():
    sub = induced_support_subgraph(standard_family("D", 4), {1, 2, 4})
    assert sub.n == 3 and not sub.bonds


def test_induced_out_of_range():
    with pytest.raises(OutOfRange):
        induced_support_subgraph(standard_family("A", 3), {1, 5})


@pytest.mark.parametrize(
    "g,expected",
    [
        (standard_family("D", 4), True),
        (standard_family("A", 4), False),
        (standard_family("A", 1), True),
        (standard_family("A", 2), True),
        (standard_family("A", 3), True),
        (standard_family("A~", 2), False),
        (build_graph(3, []), False),
    ],
)
def test_is_star(g, expected):
    assert is_star(g) is expected
