import random

import pytest

from graphlinks.canon import canonical_form, isomorphic
from graphlinks.errors import NotApplicable, SizeLimit
from graphlinks.graph import LabeledGraph, LoopedGraph
from graphlinks.moves import (
    MoveDescriptor,
    apply_move,
    apply_og1,
    apply_og2,
    apply_og3,
    apply_og4,
    apply_og4p,
    apply_looped_r1,
    apply_looped_r2,
    apply_looped_r3,
    bounded_search,
    decreasing_second_moves,
    detect_moves,
    equivalence_search,
    successors,
)
from graphgen import fixture, random_labeled, random_looped


def reason(fn, *args, **kw):
    with pytest.raises(NotApplicable) as exc:
        fn(*args, **kw)
    return exc.value.reason


def test_og1_add_and_remove():
    g = LabeledGraph([(1, 0, 1)])
    h = apply_og1(g, True, sign="-")
    assert h.label(2) == (0, -1) and not h.neighbors(2)
    assert apply_og1(h, False, 2) == g
    assert reason(apply_og1, LabeledGraph([(1, 1, 1)]), False, 1) == "framing-not-zero"
    assert reason(apply_og1, LabeledGraph([(1, 0, 1), (2, 0, 1)], [(1, 2)]), False, 1) == "not-isolated"


def test_og2_pairs():
    g = LabeledGraph([(0, 0, 1)])
    h = apply_og2(g, True, (1, 2), framing=0, sign="+", neighbors=[0])
    assert h.label(1) == (0, 1) and h.label(2) == (0, -1) and not h.has_edge(1, 2)
    assert apply_og2(h, False, (1, 2)) == g
    k = apply_og2(g, True, (1, 2), framing=1, sign="-", neighbors=[0])
    assert k.has_edge(1, 2)
    assert apply_og2(k, False, (1, 2)) == g
    same = LabeledGraph([(1, 0, 1), (2, 0, 1)])
    assert reason(apply_og2, same, False, (1, 2)) == "sign-mismatch"
    assert apply_og2(same, False, (1, 2), free=True) == LabeledGraph()
    adj0 = LabeledGraph([(1, 0, 1), (2, 0, -1)], [(1, 2)])
    assert reason(apply_og2, adj0, False, (1, 2)) == "framing-adjacency-mismatch"
    mixed = LabeledGraph([(1, 0, 1), (2, 1, -1)])
    assert reason(apply_og2, mixed, False, (1, 2)) == "framing-mismatch"
    apart = LabeledGraph([(0, 0, 1), (1, 0, 1), (2, 0, -1)], [(0, 1)])
    assert reason(apply_og2, apart, False, (1, 2)) == "neighborhood-mismatch"


def og3_start():
    # u=0, v=1, w=2 all (0,-), N(u) = {v, w}, v ~ w; 3 sees only v, 4 sees both
    return LabeledGraph(
        [(0, 0, -1), (1, 0, -1), (2, 0, -1), (3, 1, 1), (4, 0, 1)],
        [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 4)],
    )


def test_og3_forward_and_inverse():
    g = og3_start()
    h = apply_og3(g, 0, 1, 2)
    assert h.neighbors(0) == {1, 2, 3}
    assert h.sign(1) == h.sign(2) == 1
    assert apply_og3(h, 0, 1, 2, inverse=True) == g


def test_og3_reasons():
    g = og3_start()
    assert reason(apply_og3, g.toggle_pairs([(1, 2)]), 0, 1, 2) == "adjacency-mismatch"
    assert reason(apply_og3, g.with_label(1, sign=1), 0, 1, 2) == "label-mismatch"
    assert reason(apply_og3, g.toggle_pairs([(0, 3)]), 0, 1, 2) == "neighborhood-mismatch"


def test_og4_and_og4p():
    g = LabeledGraph([(0, 0, 1), (1, 0, -1), (2, 0, 1), (3, 0, 1)], [(0, 1), (0, 2), (1, 3)])
    h = apply_og4(g, 0, 1)
    assert h.has_edge(2, 3)
    assert h.sign(0) == 1 and h.sign(1) == -1
    assert reason(apply_og4, g, 0, 3) == "not-adjacent"
    assert reason(apply_og4, g.with_label(0, framing=1), 0, 1) == "framing-not-zero"
    f = LabeledGraph([(0, 1, 1), (1, 0, 1), (2, 1, -1)], [(0, 1), (0, 2)])
    k = apply_og4p(f, 0)
    assert k.has_edge(1, 2)
    assert (k.label(0), k.framing(1), k.framing(2)) == ((1, -1), 1, 0)
    assert reason(apply_og4p, f, 1) == "framing-not-one"


def test_looped_moves():
    g = LoopedGraph([(0, False)])
    h = apply_looped_r1(g, True, looped=True)
    assert h.is_looped(1)
    assert apply_looped_r1(h, False, 1) == g
    k = apply_looped_r2(g, True, (1, 2), neighbors=[0], adjacent=True)
    assert k.is_looped(1) and not k.is_looped(2) and k.has_edge(1, 2)
    assert apply_looped_r2(k, False, (1, 2)) == g
    assert reason(apply_looped_r2, LoopedGraph([(1, False), (2, False)]), False, (1, 2)) == "loop-mismatch"
    # R3: v=1 looped, w=2 unlooped, v~w, u=0 apart; 3 sees u and v
    t = LoopedGraph([(0, False), (1, True), (2, False), (3, False)], [(1, 2), (0, 3), (1, 3)])
    r = apply_looped_r3(t, 0, 1, 2)
    assert r.has_edge(0, 1) and r.has_edge(0, 2) and not r.has_edge(1, 2)
    assert apply_looped_r3(r, 0, 1, 2, inverse=True) == t
    assert reason(apply_looped_r3, t.toggle_pairs([(2, 3)]), 0, 1, 2) == "incidence-mismatch"


def test_wrong_graph_kind():
    with pytest.raises(TypeError):
        apply_og1(LoopedGraph([(0, False)]), False, 0)


def test_descriptor_text():
    m = MoveDescriptor("Og2+", (4, 5), {"framing": 0, "sign": -1, "neighbors": (1, 2)})
    assert str(m) == "Og2+ 4 5 framing=0 neighbors={1,2} sign=-"
    assert MoveDescriptor("Og2-", (1, 2)).decreasing


def test_detected_moves_apply():
    rng = random.Random(12)
    for _ in range(60):
        g = random_labeled(rng, rng.randint(0, 6)) if rng.random() < 0.6 else random_looped(rng, rng.randint(0, 6))
        for m in detect_moves(g):
            apply_move(g, m)


def test_w5_has_no_decreasing_second_move():
    w5 = fixture("w5.graph")
    assert decreasing_second_moves(w5) == []
    assert decreasing_second_moves(w5, free=True) == []
    assert not any(m.kind == "R2-" for m in detect_moves(w5))


def test_successors_respect_bound():
    g = LabeledGraph([(0, 0, 1), (1, 0, -1)], [(0, 1)])
    assert all(len(h) <= 3 for _, h in successors(g, 3))


def test_equivalence_search():
    kink = LabeledGraph([(1, 0, 1)])
    assert equivalence_search(kink, kink) == []
    path = equivalence_search(kink, LabeledGraph())
    assert [m.kind for m in path] == ["Og1-"]
    # an Og2 pair is found by a forward search from the empty graph
    pair = apply_og2(LabeledGraph(), True, (0, 1), framing=1, sign="+")
    found = equivalence_search(LabeledGraph(), pair, max_vertices=2)
    assert found is not None and isomorphic(apply_move(LabeledGraph(), found[0]), pair)


def test_search_limits():
    with pytest.raises(SizeLimit):
        equivalence_search(fixture("bw3.graph"), LabeledGraph(), max_vertices=3)
    with pytest.raises(SizeLimit):
        bounded_search(LabeledGraph(), lambda h: False, 17, 10)
    w5 = fixture("w5.graph")
    assert equivalence_search(w5, LoopedGraph(), max_vertices=6, max_steps=300) is None


def test_search_path_replays():
    rng = random.Random(13)
    for _ in range(20):
        g = random_labeled(rng, rng.randint(1, 4))
        target = canonical_form(g)
        start = apply_og1(g, True, sign="+")
        path = equivalence_search(start, g, max_vertices=len(start), max_steps=2000)
        assert path is not None
        h = start
        for m in path:
            h = apply_move(h, m)
        assert canonical_form(h) == target
