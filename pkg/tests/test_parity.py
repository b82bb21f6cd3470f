import logging
import random

import pytest

from graphlinks.chi import chi_inverse
from graphlinks.errors import NotOneComponent, NotTwoComponents, UnknownVertex
from graphlinks.graph import LabeledGraph, LoopedGraph
from graphlinks.invariants import is_oriented_vertex, plus_identity_corank
from graphlinks.moves import apply_og2, successors
from graphlinks.parity import (
    EVEN,
    ODD,
    GraphSum,
    bracket_knot,
    bracket_link2,
    compare_sums,
    delta,
    delta_even,
    delta_iter,
    delta_odd,
    delta_terms,
    free_form,
    iterated_parity,
    orbit_classes,
    parity_knot,
    parity_knot_labeled,
    parity_link2,
    reduce_graph,
    reduce_sum,
    richer_smoothing,
    smooth,
)
from graphgen import fixture, random_knot, random_labeled


def test_parity_knot():
    assert parity_knot(LoopedGraph([(0, True)])) == {0: EVEN}
    assert parity_knot(LoopedGraph([(0, False), (1, True)], [(0, 1)])) == {0: ODD, 1: ODD}
    assert set(parity_knot(fixture("w5.graph")).values()) == {ODD}


def test_parity_knot_labeled_agrees_with_looped():
    w5 = fixture("w5.graph")
    assert parity_knot_labeled(chi_inverse(w5)) == parity_knot(w5)
    with pytest.raises(NotOneComponent):
        parity_knot_labeled(LabeledGraph([(0, 1, 1)]))


def test_parity_link2():
    assert parity_link2(LabeledGraph([(0, 1, 1)])) == {0: ODD}
    assert set(parity_link2(fixture("prism.graph")).values()) == {ODD}
    with pytest.raises(NotTwoComponents):
        parity_link2(LabeledGraph([(0, 0, 1)]))
    g = LabeledGraph([(0, 1, 1), (1, 0, 1)])
    assert parity_link2(g) == {0: ODD, 1: EVEN}


def test_parity_stable_under_moves_on_untouched_vertices():
    rng = random.Random(51)
    for _ in range(80):
        g = random_knot(rng, rng.randint(1, 6))
        before = parity_knot_labeled(g)
        for m, h in successors(g, len(g) + 2):
            if m.kind in ("Og4", "Og4'") or plus_identity_corank(h):
                continue
            after = parity_knot_labeled(h)
            touched = set(m.site)
            assert all(after[v] == before[v] for v in g.vertices if v in h and v not in touched)


def test_smooth_isolated_framing0():
    a, b = smooth(LabeledGraph([("v", 0, 1)]), "v")
    assert len(a) == 0
    assert len(b) == 2 and len(b.edges) == 1 and all(b.framing(x) == 0 for x in b.vertices)


def test_smooth_isolated_framing1():
    a, b = smooth(LabeledGraph([("v", 1, 1)]), "v")
    assert len(a) == len(b) == 0


def test_smooth_unknown_vertex():
    with pytest.raises(UnknownVertex):
        smooth(LabeledGraph(), "x")


def test_smoothing_gap_at_oriented_vertices():
    rng = random.Random(52)
    for _ in range(150):
        g = random_labeled(rng, rng.randint(1, 8))
        for v in g.vertices:
            a, b = smooth(g, v)
            gap = abs(plus_identity_corank(a) - plus_identity_corank(b))
            assert gap == (1 if is_oriented_vertex(g, v) else 0)


def test_graph_sum_cancels():
    g = LabeledGraph([(0, 0, 1), (1, 1, -1)], [(0, 1)])
    s = GraphSum([g, g.forget_signs()])
    assert len(s) == 0 and not s
    assert GraphSum([g]) + GraphSum([g]) == GraphSum()


def test_fourth_moves_do_not_change_class():
    rng = random.Random(53)
    for _ in range(30):
        g = random_labeled(rng, rng.randint(1, 6))
        for m, h in successors(g, len(g)):
            if m.kind in ("Og4", "Og4'"):
                assert free_form(h) == free_form(g)


def test_reduce_sum_examples():
    pair = LabeledGraph([(0, 0, 1), (1, 0, 1)], [(0, 1)])
    assert len(reduce_sum(GraphSum([pair]))) == 0
    base = fixture("prism.graph")
    twins = apply_og2(base, True, (7, 8), framing=0, sign="+", neighbors=[1, 5])
    assert len(reduce_graph(twins)) == 6
    assert reduce_sum(GraphSum([twins])) == GraphSum([base])
    # two adjacent framing-1 vertices are themselves a removable pair
    assert len(reduce_graph(LabeledGraph([(0, 1, 1), (1, 1, 1)], [(0, 1)]))) == 0


def test_prism_bracket_is_itself():
    h = fixture("prism.graph")
    assert bracket_link2(h) == GraphSum([h])
    assert reduce_sum(bracket_link2(h)) == GraphSum([h])
    # one fourth move away from a framing-0 wheel
    sizes = sorted(max(r.degree(v) for v in r.vertices) for _, r in orbit_classes(h))
    assert sizes == [3, 5]


def test_bracket_knot_all_odd_is_itself():
    g = chi_inverse(fixture("w5.graph"))
    assert bracket_knot(g) == GraphSum([g])
    assert bracket_knot(LabeledGraph()) == GraphSum([LabeledGraph()])


def test_bracket_knot_summand_bound():
    rng = random.Random(54)
    for _ in range(40):
        g = random_knot(rng, rng.randint(1, 7))
        evens = [v for v, p in parity_knot_labeled(g).items() if p == EVEN]
        assert len(bracket_knot(g)) <= 2 ** len(evens)


def test_delta_small():
    assert len(delta(LabeledGraph())) == 0
    (term,) = delta(LabeledGraph([(0, 0, 1)])).graphs()
    assert len(term) == 2 and len(term.edges) == 1
    with pytest.raises(NotOneComponent):
        delta(LabeledGraph([(0, 1, 1)]))


def test_delta_iterates():
    rng = random.Random(55)
    for _ in range(15):
        g = random_knot(rng, rng.randint(1, 5))
        assert delta_iter(g, 1) == delta(g)
        for t in delta_iter(g, 1):
            assert plus_identity_corank(t) == 1
    even = chi_inverse(LoopedGraph([(0, False), (1, False), (2, False)], [(0, 1), (1, 2), (0, 2)]))
    assert len(delta_odd(even, 1)) == 0
    assert len(delta_even(even, 1)) == 1  # three isomorphic smoothings, odd count survives


def test_delta_reference_switch():
    g = random_knot(random.Random(56), 5)
    for ref in ("original", "smoothed"):
        delta_odd(g, 2, reference=ref)
        delta_even(g, 2, reference=ref)
    assert set(iterated_parity(g, {v: frozenset() for v in g.vertices}).values()) <= {EVEN}


def test_delta_seven_summands():
    k = chi_inverse(fixture("k7.graph"))
    terms = delta_terms(k)
    assert len(terms) == 7
    all_odd = [v for v, t in terms.items() if set(parity_link2(t).values()) == {ODD}]
    assert all_odd == [0]
    assert free_form(terms[0]) == free_form(fixture("prism.graph"))
    assert free_form(fixture("prism.graph")) in reduce_sum(delta(k)).keys()


def test_richer_smoothing_has_more_components():
    rng = random.Random(57)
    for _ in range(30):
        g = random_labeled(rng, rng.randint(1, 6))
        for v in g.vertices:
            a, b = smooth(g, v)
            r = richer_smoothing(g, v)
            assert plus_identity_corank(r) == max(plus_identity_corank(a), plus_identity_corank(b))


def test_delta_well_defined_under_second_and_fourth_moves():
    rng = random.Random(58)
    checked = 0
    while checked < 40:
        g = random_knot(rng, rng.randint(1, 5))
        moves = [(m, h) for m, h in successors(g, len(g) + 2) if m.kind in ("Og2+", "Og2-", "Og4", "Og4'")]
        if not moves:
            continue
        m, h = rng.choice(moves)
        assert compare_sums(delta(g), delta(h)).equal, m
        checked += 1


def test_compare_sums_logs_fallback(caplog):
    with caplog.at_level(logging.INFO, logger="graphlinks.parity"):
        res = compare_sums(GraphSum([fixture("prism.graph")]), GraphSum([LabeledGraph([(0, 1, 1)])]))
    assert res.used_fallback and not res.equal
    assert "reduction incomplete" in caplog.text
