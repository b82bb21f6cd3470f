"""Parities, smoothings of free framed graphs, Turaev's Delta and the parity brackets.

A free framed graph is a labeled graph up to signs and up to the fourth moves
(Og4, Og4').  Representatives are stored with every sign ``+``; the class
identity used for GF(2) cancellation is :func:`free_form`, the smallest
canonical form over the fourth-move orbit.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator

from .canon import canonical_form, graph_from_form
from .errors import NotOneComponent, NotTwoComponents, OrbitLimit
from .gf2 import inverse, nondegenerate_completion
from .graph import Label, LabeledGraph, LoopedGraph, adjacency_matrix, local_complement, pivot
from .invariants import is_oriented_vertex, plus_identity_corank

log = logging.getLogger(__name__)

EVEN = "even"
ODD = "odd"
ORBIT_CAP = 100_000


# -- parities ---------------------------------------------------------------------


def parity_knot(lg: LoopedGraph) -> dict:
    """Even iff adjacent to an even number of other vertices; loops do not count."""
    return {v: EVEN if lg.degree(v) % 2 == 0 else ODD for v in lg.vertices}


def chi_neighbors(g: LabeledGraph) -> dict:
    """Neighbourhoods in the looped graph of a one-component ``g`` (off-diagonal of ``(A+E)^-1``)."""
    m = adjacency_matrix(g).plus_identity()
    if plus_identity_corank(g):
        raise NotOneComponent("parity of a labeled graph-knot needs corank(A+E) = 0")
    inv = inverse(m)
    verts = g.vertices
    return {
        v: frozenset(verts[j] for j in range(len(verts)) if j != i and inv.entry(i, j))
        for i, v in enumerate(verts)
    }


def parity_knot_labeled(g: LabeledGraph) -> dict:
    """Parity of a graph-knot vertex, read off the corresponding looped graph."""
    nb = chi_neighbors(g)
    return {v: EVEN if len(nb[v]) % 2 == 0 else ODD for v in g.vertices}


def parity_link2(g: LabeledGraph) -> dict:
    """Two-component graph-links: a vertex is even iff it is oriented."""
    if plus_identity_corank(g) != 1:
        raise NotTwoComponents(f"graph has {plus_identity_corank(g) + 1} components, expected 2")
    return {v: EVEN if is_oriented_vertex(g, v) else ODD for v in g.vertices}


# -- free framed graphs -------------------------------------------------------------


def free_rep(g: LabeledGraph) -> LabeledGraph:
    return g.forget_signs()


def crossing_pivot(h: LabeledGraph, u, v) -> LabeledGraph:
    """Og4 on ``u v`` with the ids of ``u`` and ``v`` exchanged, so each id keeps naming the same crossing."""
    return pivot(h, u, v).relabel({u: v, v: u}).reorder(h.vertices)


def framed_local_complement(h: LabeledGraph, v) -> LabeledGraph:
    """Og4' at a framing-1 vertex, signs ignored."""
    k = local_complement(h, v)
    for u in h.neighbors(v):
        k = k.with_label(u, framing=1 - k.framing(u))
    return k


def _fourth_moves(h: LabeledGraph) -> Iterator[LabeledGraph]:
    for u, v in h.edges:
        if h.framing(u) == 0 and h.framing(v) == 0:
            yield crossing_pivot(h, u, v)
    for v in h.vertices:
        if h.framing(v) == 1:
            yield framed_local_complement(h, v)


def fourth_move_orbit(g: LabeledGraph, cap: int = ORBIT_CAP) -> Iterator[LabeledGraph]:
    """Breadth-first enumeration of the Og4 / Og4' orbit of ``g`` with signs forgotten.

    Vertex ids are kept, so distinct graphs may be isomorphic; use
    :func:`orbit_classes` when only isomorphism classes matter.
    """
    start = free_rep(g)
    seen = {start}
    queue = deque([start])
    while queue:
        h = queue.popleft()
        yield h
        for k in _fourth_moves(h):
            if k not in seen:
                if len(seen) >= cap:
                    raise OrbitLimit(f"fourth-move orbit exceeds {cap} graphs")
                seen.add(k)
                queue.append(k)


def orbit_classes(g: LabeledGraph, cap: int = ORBIT_CAP) -> Iterator[tuple[bytes, LabeledGraph]]:
    """Isomorphism classes in the fourth-move orbit of ``g``: ``(canonical form, representative)`` pairs."""
    start = graph_from_form(canonical_form(free_rep(g)))
    seen = {canonical_form(start)}
    queue = deque([(canonical_form(start), start)])
    while queue:
        key, h = queue.popleft()
        yield key, h
        for k in _fourth_moves(h):
            form = canonical_form(k)
            if form not in seen:
                if len(seen) >= cap:
                    raise OrbitLimit(f"fourth-move orbit exceeds {cap} canonical forms")
                seen.add(form)
                queue.append((form, graph_from_form(form)))


@dataclass(frozen=True)
class _ClassInfo:
    form: bytes
    reducible: LabeledGraph | None  # first orbit representative with a free Og2 pair
    pair: tuple = ()


_CLASS_INFO: dict[bytes, _ClassInfo] = {}


def _class_info(g: LabeledGraph, cap: int) -> _ClassInfo:
    from .moves import decreasing_second_moves

    key = canonical_form(free_rep(g))
    hit = _CLASS_INFO.get(key)
    if hit is not None:
        return hit
    forms, red, pair = [], None, ()
    for form, rep in orbit_classes(g, cap):
        forms.append(form)
        if red is None:
            moves = decreasing_second_moves(rep, free=True)
            if moves:
                red, pair = rep, moves[0].site
    info = _ClassInfo(min(forms), red, pair)
    for form in forms:
        _CLASS_INFO[form] = info
    return info


def free_form(g: LabeledGraph, cap: int = ORBIT_CAP) -> bytes:
    """Class identity of a free framed graph: least canonical form over its fourth-move orbit."""
    return _class_info(g, cap).form


def smooth(g: LabeledGraph, v, cap: int = ORBIT_CAP) -> tuple[LabeledGraph, LabeledGraph]:
    """The two smoothings of the free framed graph of ``g`` at ``v`` (sign-free representatives).

    If ``v`` has framing 1 or a neighbour in some representative, find a
    representative ``H1`` where a fourth move ``H1 -> H2`` acts at ``v`` and
    return ``H1 - v`` and ``H2 - v``.  Otherwise ``v`` is an isolated framing-0
    vertex and the results are ``H - v`` and ``H`` plus a new framing-0 vertex
    adjacent only to ``v``.
    """
    g.check_vertex(v)
    h = free_rep(g)
    if h.framing(v) == 0 and not h.neighbors(v):
        (u,) = h.fresh_ids(1)
        return h.remove_vertices([v]), h.add_vertex(u, Label(0, 1), [v])
    for h1 in fourth_move_orbit(h, cap):
        if h1.framing(v) == 1:
            h2 = framed_local_complement(h1, v)
            return h1.remove_vertices([v]), h2.remove_vertices([v])
        partners = [u for u in h1.neighbors(v) if h1.framing(u) == 0]
        if partners:
            u = min(partners, key=h1.index)
            return h1.remove_vertices([v]), crossing_pivot(h1, v, u).remove_vertices([v])
    raise OrbitLimit(f"no representative exposes a fourth move at {v!r}")  # pragma: no cover


# -- GF(2) sums of free framed graphs --------------------------------------------------


class GraphSum:
    """Formal sum over GF(2) of free framed graphs, keyed by :func:`free_form`."""

    def __init__(self, graphs: Iterable[LabeledGraph] = ()):
        self._terms: dict[bytes, LabeledGraph] = {}
        for g in graphs:
            self.toggle(g)

    def toggle(self, g: LabeledGraph, key: bytes | None = None) -> None:
        key = free_form(g) if key is None else key
        if key in self._terms:
            del self._terms[key]
        else:
            self._terms[key] = free_rep(g)

    def keys(self) -> list[bytes]:
        return sorted(self._terms)

    def graphs(self) -> list[LabeledGraph]:
        """Representatives in canonical-form order."""
        return [self._terms[k] for k in self.keys()]

    def canonical_graphs(self) -> list[LabeledGraph]:
        return [graph_from_form(k) for k in self.keys()]

    def __iter__(self):
        return iter(self.graphs())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, GraphSum):
            return NotImplemented
        return set(self._terms) == set(other._terms)

    def __add__(self, other: "GraphSum") -> "GraphSum":
        out = GraphSum()
        for k, g in self._terms.items():
            out.toggle(g, k)
        for k, g in other._terms.items():
            out.toggle(g, k)
        return out

    def __repr__(self):
        return f"GraphSum({len(self)} terms)"


def has_isolated_framing0_pair(g: LabeledGraph) -> bool:
    """Two framing-0 vertices adjacent only to each other (such graphs vanish for two or more components)."""
    for v in g.vertices:
        nb = g.neighbors(v)
        if g.framing(v) == 0 and len(nb) == 1:
            (u,) = nb
            if g.framing(u) == 0 and g.neighbors(u) == {v}:
                return True
    return False


def reduce_graph(g: LabeledGraph, cap: int = ORBIT_CAP) -> LabeledGraph:
    """Greedily remove free second-move pairs, searching the fourth-move orbit for one each round."""
    h = free_rep(g)
    while True:
        info = _class_info(h, cap)
        if info.reducible is None:
            return graph_from_form(info.form)
        h = info.reducible.remove_vertices(info.pair)


def reduce_sum(s: GraphSum, cap: int = ORBIT_CAP) -> GraphSum:
    """Reduce every summand by second moves, drop summands with an isolated framing-0 pair, cancel."""
    out = GraphSum()
    for g in s.graphs():
        r = reduce_graph(g, cap)
        if has_isolated_framing0_pair(r):
            continue
        out.toggle(r)
    return out


# -- Delta and its iterates ---------------------------------------------------------------


def _require_one_component(g: LabeledGraph):
    if plus_identity_corank(g) != 0:
        raise NotOneComponent(f"graph has {plus_identity_corank(g) + 1} components, expected 1")


def richer_smoothing(g: LabeledGraph, v, cap: int = ORBIT_CAP) -> LabeledGraph:
    """Of the two smoothings at ``v``, the one with more components (first on a tie)."""
    s1, s2 = smooth(g, v, cap)
    return s2 if plus_identity_corank(s2) > plus_identity_corank(s1) else s1


def delta_terms(g: LabeledGraph, cap: int = ORBIT_CAP) -> dict:
    """Per-vertex two-component smoothings, before any GF(2) cancellation."""
    _require_one_component(g)
    out = {}
    for v in g.vertices:
        picked = [s for s in smooth(g, v, cap) if plus_identity_corank(s) == 1]
        if len(picked) != 1:
            raise AssertionError(f"smoothings at {v!r} do not split one component into two")
        out[v] = picked[0]
    return out


def delta(g: LabeledGraph, cap: int = ORBIT_CAP) -> GraphSum:
    """Sum over all vertices of the two-component smoothing."""
    return GraphSum(delta_terms(g, cap).values())


@dataclass
class _Term:
    graph: LabeledGraph
    history: tuple = field(default=())


def _reference_neighbors(term: LabeledGraph, original_chi: dict, reference: str) -> dict:
    if reference == "original":
        return original_chi
    # "smoothed": interlacement of the smoothed graph itself, via a det-1 completion of A + E
    a = nondegenerate_completion(adjacency_matrix(term).plus_identity())
    inv = inverse(a)
    verts = term.vertices
    return {
        v: frozenset(verts[j] for j in range(len(verts)) if j != i and inv.entry(i, j))
        for i, v in enumerate(verts)
    }


def iterated_parity(term: LabeledGraph, original_chi: dict, reference: str = "original") -> dict:
    """Parity of the oriented vertices of a smoothing of a one-component graph.

    An oriented vertex ``u`` is even iff an even number of oriented vertices of
    ``term`` are adjacent to ``u`` in the looped graph of the original input
    (``reference="original"``) or of ``term`` itself (``reference="smoothed"``).
    """
    oriented = [v for v in term.vertices if is_oriented_vertex(term, v)]
    nb = _reference_neighbors(term, original_chi, reference)
    oset = set(oriented)
    return {u: EVEN if len(nb.get(u, frozenset()) & oset) % 2 == 0 else ODD for u in oriented}


def _delta_iterate(g: LabeledGraph, i: int, select: str | None, reference: str, cap: int) -> GraphSum:
    _require_one_component(g)
    if i < 1:
        raise ValueError("iteration count must be at least 1")
    original_chi = chi_neighbors(free_rep(g))
    level = [free_rep(g)]
    for _ in range(i):
        acc = GraphSum()
        for term in level:
            table = iterated_parity(term, original_chi, reference)
            for v in term.vertices:
                if v not in table:
                    continue
                if select is not None and table[v] != select:
                    continue
                acc.toggle(richer_smoothing(term, v, cap))
        level = acc.graphs()
        final = acc
    return final


def delta_iter(g: LabeledGraph, i: int, cap: int = ORBIT_CAP) -> GraphSum:
    """``Delta^i``: repeatedly smooth at oriented vertices, keeping the smoothing with more components."""
    return _delta_iterate(g, i, None, "original", cap)


def delta_odd(g: LabeledGraph, i: int, reference: str = "original", cap: int = ORBIT_CAP) -> GraphSum:
    return _delta_iterate(g, i, ODD, reference, cap)


def delta_even(g: LabeledGraph, i: int, reference: str = "original", cap: int = ORBIT_CAP) -> GraphSum:
    return _delta_iterate(g, i, EVEN, reference, cap)


# -- parity brackets ---------------------------------------------------------------------


def _smoothing_states(g: LabeledGraph, verts: list, cap: int) -> Iterator[LabeledGraph]:
    """All ``2^k`` ways of smoothing ``g`` at each of ``verts`` in turn."""
    start = free_rep(g)
    for choice in product((0, 1), repeat=len(verts)):
        h = start
        for v, c in zip(verts, choice):
            h = smooth(h, v, cap)[c]
        yield h


def bracket_knot(g: LabeledGraph, cap: int = ORBIT_CAP) -> GraphSum:
    """``[G]``: smoothings at all even vertices that stay one-component."""
    _require_one_component(g)
    table = parity_knot_labeled(g)
    evens = [v for v in g.vertices if table[v] == EVEN]
    out = GraphSum()
    for h in _smoothing_states(g, evens, cap):
        if plus_identity_corank(h) == 0:
            out.toggle(h)
    return out


def bracket_link2(g: LabeledGraph, cap: int = ORBIT_CAP) -> GraphSum:
    """``{H}``: smoothings at all even vertices, dropping summands equivalent to an isolated framing-0 pair graph."""
    table = parity_link2(g)
    evens = [v for v in g.vertices if table[v] == EVEN]
    out = GraphSum()
    for h in _smoothing_states(g, evens, cap):
        if has_isolated_framing0_pair(reduce_graph(h, cap)):
            continue
        out.toggle(h)
    return out


# -- comparing reduced sums -------------------------------------------------------------


def _free_successors(g: LabeledGraph, max_vertices: int):
    from itertools import combinations

    from .moves import MoveDescriptor, og2_removal_problem

    h = free_rep(g)
    for p, q in combinations(h.vertices, 2):
        if og2_removal_problem(h, p, q, free=True) is None:
            yield MoveDescriptor("Og2-", (p, q), {"free": True}), h.remove_vertices([p, q])
    for k in _fourth_moves(h):
        yield MoveDescriptor("Og4*"), k
    if len(h) + 2 <= max_vertices:
        p, q = h.fresh_ids(2)
        verts = h.vertices
        for f in (0, 1):
            for mask in range(1 << len(verts)):
                nbrs = tuple(x for i, x in enumerate(verts) if (mask >> i) & 1)
                k = h.add_vertex(p, Label(f, 1), nbrs).add_vertex(q, Label(f, 1), nbrs + ((p,) if f else ()))
                yield MoveDescriptor("Og2+", (p, q), {"framing": f, "neighbors": nbrs}), k


def free_equivalent(g1: LabeledGraph, g2: LabeledGraph, max_vertices: int, max_steps: int) -> bool:
    """Bounded search for a chain of free second moves and fourth moves from ``g1`` to ``g2``."""
    from .moves import bounded_search

    targets = {form for form, _ in orbit_classes(g2)}
    bound = max(max_vertices, len(g1), len(g2))
    res = bounded_search(free_rep(g1), lambda h: canonical_form(h) in targets, bound, max_steps, _free_successors)
    return res.found


@dataclass
class SumComparison:
    equal: bool
    used_fallback: bool


def compare_sums(
    s1: GraphSum, s2: GraphSum, max_vertices: int | None = None, max_steps: int = 200, cap: int = ORBIT_CAP
) -> SumComparison:
    """Equality of two sums in the quotient by second moves.

    Sound but incomplete: reduced sums are compared first; leftovers are
    paired by a bounded move search, and that fallback is logged.
    """
    r1, r2 = reduce_sum(s1, cap), reduce_sum(s2, cap)
    if r1 == r2:
        return SumComparison(True, False)
    log.info("parity-bracket reduction incomplete; trying bounded search on %d vs %d terms", len(r1), len(r2))
    left = [g for k, g in zip(r1.keys(), r1.graphs()) if k not in set(r2.keys())]
    right = [g for k, g in zip(r2.keys(), r2.graphs()) if k not in set(r1.keys())]
    if len(left) != len(right):
        return SumComparison(False, True)
    unmatched = list(right)
    for g in left:
        bound = max(len(g), 2 + max(map(len, unmatched))) if max_vertices is None else max_vertices
        hit = next((h for h in unmatched if free_equivalent(g, h, bound, max_steps)), None)
        if hit is None:
            return SumComparison(False, True)
        unmatched.remove(hit)
    return SumComparison(True, True)


__all__ = [
    "EVEN",
    "ODD",
    "parity_knot",
    "parity_knot_labeled",
    "parity_link2",
    "chi_neighbors",
    "free_rep",
    "free_form",
    "fourth_move_orbit",
    "orbit_classes",
    "smooth",
    "GraphSum",
    "has_isolated_framing0_pair",
    "reduce_graph",
    "reduce_sum",
    "richer_smoothing",
    "delta",
    "delta_terms",
    "delta_iter",
    "delta_odd",
    "delta_even",
    "iterated_parity",
    "bracket_knot",
    "bracket_link2",
    "compare_sums",
    "SumComparison",
    "free_equivalent",
]
