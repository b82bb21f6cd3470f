import random
from fractions import Fraction

import pytest

from graphlinks.errors import NotAKnot, SizeLimit
from graphlinks.graph import LabeledGraph
from graphlinks.invariants import (
    Verdict,
    atom_genus,
    component_count,
    is_alternating,
    is_nonsplit,
    is_oriented_vertex,
    kauffman_bracket,
    minimality_certificate,
    odd_parity_evidence,
    writhe,
)
from graphlinks.laurent import LOOP, LaurentPoly, span
from graphgen import fixture, random_labeled


def kernel_corank(g, state) -> int:
    """corank of A(G[state]) by counting kernel vectors."""
    s = list(state)
    rows = []
    for v in s:
        row = 0
        for j, u in enumerate(s):
            bit = g.framing(v) if u == v else int(g.has_edge(u, v))
            row |= bit << j
        rows.append(row)
    size = sum(1 for x in range(1 << len(s)) if all(bin(r & x).count("1") % 2 == 0 for r in rows))
    return size.bit_length() - 1


def brute_bracket(g) -> LaurentPoly:
    verts = g.vertices
    n = len(verts)
    total = LaurentPoly()
    for mask in range(1 << n):
        state = [v for i, v in enumerate(verts) if mask >> i & 1]
        alpha = sum(1 for v in state if g.sign(v) < 0) + sum(1 for v in verts if v not in state and g.sign(v) > 0)
        total = total + LaurentPoly.monomial(2 * alpha - n) * LOOP ** kernel_corank(g, state)
    return total


def test_kink_values():
    plus = LabeledGraph([(0, 0, "+")])
    minus = LabeledGraph([(0, 0, "-")])
    assert kauffman_bracket(plus) == LaurentPoly.monomial(-3, -1) == brute_bracket(plus)
    assert kauffman_bracket(minus) == LaurentPoly.monomial(3, -1) == brute_bracket(minus)
    assert kauffman_bracket(LabeledGraph()) == 1


def test_bracket_matches_state_oracle():
    rng = random.Random(21)
    for _ in range(120):
        g = random_labeled(rng, rng.randint(0, 7))
        assert kauffman_bracket(g) == brute_bracket(g)


def test_bracket_parallel_matches_serial():
    g = random_labeled(random.Random(3), 12)
    assert kauffman_bracket(g, workers=2) == kauffman_bracket(g)


def test_bracket_size_limit():
    with pytest.raises(SizeLimit):
        kauffman_bracket(random_labeled(random.Random(0), 5), limit=4)


def test_components_and_writhe():
    assert component_count(LabeledGraph([(0, 1, 1)])) == 2
    assert component_count(LabeledGraph([(0, 0, 1)])) == 1
    per, total = writhe(LabeledGraph([(0, 0, 1)]))
    assert per == {0: -1} and total == -1
    with pytest.raises(NotAKnot):
        writhe(LabeledGraph([(0, 1, 1)]))


def test_oriented_vertex():
    assert not is_oriented_vertex(LabeledGraph([(0, 1, 1)]), 0)
    assert is_oriented_vertex(LabeledGraph([(0, 0, 1)]), 0)
    rng = random.Random(5)
    for _ in range(50):
        g = random_labeled(rng, rng.randint(1, 6))
        if component_count(g) == 1:
            assert all(is_oriented_vertex(g, v) for v in g.vertices)


def test_bw3():
    g = fixture("bw3.graph")
    assert atom_genus(g) == 0
    assert is_alternating(g) and is_nonsplit(g)
    assert minimality_certificate(g).verdict is Verdict.MINIMAL_BY_ALTERNATING
    assert span(kauffman_bracket(g)) == 4 * len(g)


def test_atom_genus_kink():
    assert atom_genus(LabeledGraph([(0, 0, 1)])) == Fraction(0)


def test_w5_certificate():
    w5 = fixture("w5.graph")
    cert = minimality_certificate(w5)
    assert cert.verdict is Verdict.MINIMAL_BY_ODD_PARITY
    assert cert.evidence["kind"] == "knot"
    assert odd_parity_evidence(LabeledGraph()) is None


def test_inconclusive():
    # two unlinked kinks: split, with a free second-move pair
    g = LabeledGraph([(0, 0, 1), (1, 0, 1)])
    assert minimality_certificate(g).verdict is Verdict.INCONCLUSIVE
