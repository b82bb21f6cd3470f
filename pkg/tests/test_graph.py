import random

import pytest

from graphlinks.canon import is_isomorphism
from graphlinks.errors import SameVertex, UnknownVertex
from graphlinks.graph import (
    LabeledGraph,
    LoopedGraph,
    adjacency_matrix,
    components,
    local_complement,
    parse_sign,
    pivot,
)
from graphgen import all_simple_graphs, random_labeled


def test_construction_and_queries():
    g = LabeledGraph([("a", 0, "+"), ("b", 1, "-"), ("c", 0, 1)], [("a", "b"), ("b", "c")])
    assert g.vertices == ("a", "b", "c")
    assert g.edges == (("a", "b"), ("b", "c"))
    assert g.neighbors("b") == {"a", "c"}
    assert g.label("b") == (1, -1)
    assert g.degree("a") == 1
    with pytest.raises(UnknownVertex):
        g.neighbors("z")


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        LabeledGraph([(1, 0, 1)], [(1, 1)])
    with pytest.raises(ValueError):
        LabeledGraph([(1, 0, 1), (1, 1, 1)])
    with pytest.raises(ValueError):
        LabeledGraph([(1, 2, 1)])
    with pytest.raises(ValueError):
        parse_sign("x")


def test_adjacency_matrix_diagonal_is_framing():
    g = LabeledGraph([(0, 1, 1), (1, 0, -1)], [(0, 1)])
    assert adjacency_matrix(g).to_lists() == [[1, 1], [1, 0]]
    lg = LoopedGraph([(0, True), (1, False)], [])
    assert adjacency_matrix(lg).to_lists() == [[1, 0], [0, 0]]


def test_local_complement_path():
    g = LabeledGraph([(i, 0, 1) for i in range(3)], [(0, 1), (1, 2)])
    h = local_complement(g, 1)
    assert h.has_edge(0, 2) and h.has_edge(0, 1) and h.has_edge(1, 2)


def test_pivot_requires_distinct_vertices():
    g = LabeledGraph([(0, 0, 1), (1, 0, 1)], [(0, 1)])
    with pytest.raises(SameVertex):
        pivot(g, 0, 0)


def test_pivot_toggles_the_three_classes():
    # u=0, v=1; 2 only near u, 3 only near v, 4 near both
    g = LabeledGraph([(i, 0, 1) for i in range(5)], [(0, 1), (0, 2), (1, 3), (0, 4), (1, 4)])
    h = pivot(g, 0, 1)
    assert h.has_edge(2, 3) and h.has_edge(2, 4) and h.has_edge(3, 4)
    assert h.neighbors(0) == g.neighbors(0) and h.neighbors(1) == g.neighbors(1)


def test_components_and_edits():
    g = LabeledGraph([(i, 0, 1) for i in range(5)], [(0, 1), (2, 3)])
    assert sorted(map(sorted, components(g))) == [[0, 1], [2, 3], [4]]
    assert g.remove_vertices([0]).vertices == (1, 2, 3, 4)
    assert g.fresh_ids(2) == [5, 6]
    assert g.isolated_vertices() == [4]
    swapped = g.relabel({0: 1, 1: 0})
    assert swapped.has_edge(1, 0)


def test_equality_is_order_sensitive():
    g = LabeledGraph([(0, 0, 1), (1, 0, 1)], [(0, 1)])
    assert g != g.reorder([1, 0])
    assert hash(g) == hash(LabeledGraph([(0, 0, 1), (1, 0, 1)], [(1, 0)]))


@pytest.mark.parametrize("n", range(1, 6))
def test_involutions_exhaustive(n):
    for g in all_simple_graphs(n):
        for v in g.vertices:
            assert local_complement(local_complement(g, v), v) == g
        for u, v in g.edges:
            p = pivot(g, u, v)
            assert pivot(p, u, v) == g
            assert p == pivot(g, v, u)
            lc3 = local_complement(local_complement(local_complement(g, u), v), u)
            assert is_isomorphism(p, lc3, {u: v, v: u, **{x: x for x in g.vertices if x not in (u, v)}})


def test_pivot_keeps_labels():
    rng = random.Random(8)
    for _ in range(100):
        g = random_labeled(rng, rng.randint(2, 7))
        for u, v in g.edges:
            assert {x: g.label(x) for x in g.vertices} == {x: pivot(g, u, v).label(x) for x in g.vertices}
