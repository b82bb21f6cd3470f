"""Invariants of labeled graphs: components, writhe, Kauffman bracket, atom genus, minimality."""

from __future__ import annotations

import enum
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotAKnot, SizeLimit
from .gf2 import Gf2SymMatrix, corank, rank_rows
from .graph import LabeledGraph, LoopedGraph, adjacency_matrix
from .laurent import LOOP, LaurentPoly, span

BRACKET_LIMIT = 24


def plus_identity_corank(g: LabeledGraph) -> int:
    return corank(adjacency_matrix(g).plus_identity())


def component_count(g: LabeledGraph) -> int:
    """``corank(A(G) + E) + 1``."""
    return plus_identity_corank(g) + 1


def _b_matrix(g: LabeledGraph, i: int) -> Gf2SymMatrix:
    return adjacency_matrix(g).plus_identity().flip_diagonal(i)


def writhe(g: LabeledGraph) -> tuple[dict, int]:
    """Per-vertex writhe ``(-1)^corank(B_i) * sign(v_i)`` and their sum.

    Only defined for graph-knots; otherwise raises :class:`NotAKnot`.
    """
    a = adjacency_matrix(g).plus_identity()
    if corank(a):
        raise NotAKnot(f"corank(A+E) = {corank(a)}; writhe needs a graph-knot")
    per = {}
    for i, v in enumerate(g.vertices):
        per[v] = (-1) ** corank(a.flip_diagonal(i)) * g.sign(v)
    return per, sum(per.values())


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _state_block(args) -> Counter:
    rows, minus_mask, n, lo, hi = args
    full = (1 << n) - 1
    plus_mask = full & ~minus_mask
    out: Counter = Counter()
    for s in range(lo, hi):
        alpha = _popcount(s & minus_mask) + _popcount(~s & plus_mask)
        size = _popcount(s)
        sub = []
        t = s
        while t:
            low = t & -t
            sub.append(rows[low.bit_length() - 1] & s)
            t ^= low
        out[(2 * alpha - n, size - rank_rows(sub))] += 1
    return out


def bracket_state_counts(g: LabeledGraph, workers: int = 1) -> Counter:
    """Histogram of ``(alpha(s) - beta(s), corank A(G(s)))`` over all states, in binary-counter order."""
    n = len(g)
    rows = adjacency_matrix(g).rows
    minus_mask = sum(1 << i for i, v in enumerate(g.vertices) if g.sign(v) < 0)
    total = 1 << n
    if workers <= 1 or n < 12:
        return _state_block((rows, minus_mask, n, 0, total))
    step = -(-total // workers)
    blocks = [(rows, minus_mask, n, lo, min(lo + step, total)) for lo in range(0, total, step)]
    counts: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_state_block, blocks):
            counts.update(part)
    return counts


def kauffman_bracket(g: LabeledGraph, limit: int = BRACKET_LIMIT, workers: int = 1) -> LaurentPoly:
    """State sum of ``a^(alpha(s) - beta(s)) * (-a^2 - a^-2)^corank A(G(s))`` over all vertex subsets ``s``.

    ``alpha(s)`` counts ``(.,-)`` vertices inside ``s`` and ``(.,+)`` vertices outside it.
    """
    if len(g) > limit:
        raise SizeLimit(f"bracket limited to {limit} vertices, graph has {len(g)}")
    counts = bracket_state_counts(g, workers)
    total = LaurentPoly()
    loop_powers: dict[int, LaurentPoly] = {}
    for (e, k), c in sorted(counts.items()):
        if k not in loop_powers:
            loop_powers[k] = LOOP**k
        total = total + LaurentPoly.monomial(e, c) * loop_powers[k]
    return total


def _state_circles(g: LabeledGraph, state) -> int:
    return corank(adjacency_matrix(g.induced_subgraph(state))) + 1


def a_state(g: LabeledGraph) -> list:
    return [v for v in g.vertices if g.sign(v) < 0]


def b_state(g: LabeledGraph) -> list:
    return [v for v in g.vertices if g.sign(v) > 0]


def atom_genus(g: LabeledGraph) -> Fraction:
    """``1 - (k + l - n) / 2`` with ``k``, ``l`` the circle counts of the A- and B-states."""
    k = _state_circles(g, a_state(g))
    l = _state_circles(g, b_state(g))
    return 1 - Fraction(k + l - len(g), 2)


def is_alternating(g: LabeledGraph) -> bool:
    return atom_genus(g) == 0


def is_nonsplit(g) -> bool:
    return not any(not g.neighbors(v) for v in g.vertices)


def is_oriented_vertex(g: LabeledGraph, v) -> bool:
    """``corank(A + E) <= corank(B_i)`` where ``B_i = A + E + E_ii``."""
    i = g.index(v)
    a = adjacency_matrix(g).plus_identity()
    return corank(a) <= corank(a.flip_diagonal(i))


class Verdict(enum.Enum):
    MINIMAL_BY_ALTERNATING = "by-alternating"
    MINIMAL_BY_ODD_PARITY = "by-odd-parity"
    INCONCLUSIVE = "inconclusive"


@dataclass
class MinimalityCertificate:
    verdict: Verdict
    evidence: dict = field(default_factory=dict)

    @property
    def minimal(self) -> bool:
        return self.verdict is not Verdict.INCONCLUSIVE


def odd_parity_evidence(g) -> dict | None:
    """Evidence for the odd-parity minimality theorem, or ``None`` if its hypotheses fail.

    Hypotheses: ``g`` is a free graph-knot (labeled, one component, or any
    looped graph) or a two-component labeled graph, every vertex is odd, and no
    decreasing second move applies with signs / loops forgotten.
    """
    from .moves import decreasing_second_moves
    from .parity import ODD, parity_knot, parity_knot_labeled, parity_link2

    if isinstance(g, LoopedGraph):
        table = parity_knot(g)
        kind = "knot"
    else:
        comps = component_count(g)
        if comps == 1:
            table = parity_knot_labeled(g)
            kind = "knot"
        elif comps == 2:
            table = parity_link2(g)
            kind = "link2"
        else:
            return None
    if not g.vertices or any(p != ODD for p in table.values()):
        return None
    if decreasing_second_moves(g, free=True):
        return None
    return {"kind": kind, "parity": table}


def minimality_certificate(g) -> MinimalityCertificate:
    if isinstance(g, LabeledGraph):
        genus = atom_genus(g)
        if genus == 0 and is_nonsplit(g):
            return MinimalityCertificate(Verdict.MINIMAL_BY_ALTERNATING, {"atom_genus": genus})
    ev = odd_parity_evidence(g)
    if ev is not None:
        return MinimalityCertificate(Verdict.MINIMAL_BY_ODD_PARITY, ev)
    return MinimalityCertificate(Verdict.INCONCLUSIVE)


__all__ = [
    "component_count",
    "plus_identity_corank",
    "writhe",
    "kauffman_bracket",
    "bracket_state_counts",
    "span",
    "atom_genus",
    "a_state",
    "b_state",
    "is_alternating",
    "is_nonsplit",
    "is_oriented_vertex",
    "Verdict",
    "MinimalityCertificate",
    "minimality_certificate",
    "odd_parity_evidence",
]
