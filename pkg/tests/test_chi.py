import random

import pytest

from graphlinks.chi import chi, chi_adjacency, chi_inverse
from graphlinks.errors import NotAKnot
from graphlinks.gf2 import inverse
from graphlinks.graph import LabeledGraph, LoopedGraph, adjacency_matrix
from graphlinks.invariants import component_count, kauffman_bracket, writhe
from graphlinks.parity import free_form
from graphgen import fixture, random_knot, random_looped


def test_single_vertices():
    assert chi(LabeledGraph([(0, 0, "+")])) == LoopedGraph([(0, True)])
    assert chi(LabeledGraph([(0, 0, "-")])) == LoopedGraph([(0, False)])
    assert chi_inverse(LoopedGraph([(0, False)])) == LabeledGraph([(0, 0, "-")])
    assert chi(LabeledGraph()) == LoopedGraph()
    assert chi_inverse(LoopedGraph()) == LabeledGraph()


def test_needs_a_knot():
    with pytest.raises(NotAKnot):
        chi(LabeledGraph([(0, 1, 1)]))


def test_adjacency_is_inverse():
    rng = random.Random(41)
    for _ in range(30):
        g = random_knot(rng, rng.randint(1, 8))
        m = adjacency_matrix(g).plus_identity()
        assert inverse(chi_adjacency(g)) == m


def test_round_trip_from_looped():
    rng = random.Random(42)
    for _ in range(300):
        lg = random_looped(rng, rng.randint(0, 10))
        g = chi_inverse(lg)
        assert component_count(g) == 1
        assert chi(g) == lg


def test_round_trip_from_labeled_keeps_the_knot():
    rng = random.Random(43)
    for _ in range(150):
        g = random_knot(rng, rng.randint(0, 8))
        h = chi_inverse(chi(g))
        assert chi(h) == chi(g)
        assert kauffman_bracket(h) == kauffman_bracket(g)
        assert writhe(h)[1] == writhe(g)[1]
        assert free_form(h) == free_form(g)


def test_loops_follow_writhe():
    rng = random.Random(44)
    for _ in range(50):
        g = random_knot(rng, rng.randint(1, 7))
        per, _ = writhe(g)
        lg = chi(g)
        assert all(lg.is_looped(v) == (per[v] < 0) for v in g.vertices)


def test_w5_labeled_representative():
    w5 = fixture("w5.graph")
    assert chi(chi_inverse(w5)) == w5
