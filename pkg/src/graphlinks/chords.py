"""Chord diagrams, their intersection graphs, surgery circle counts and realizability."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterator, Mapping, Sequence

from .errors import SizeLimit
from .gf2 import corank
from .graph import Label, LabeledGraph, LoopedGraph, adjacency_matrix, components, parse_sign

REALIZE_LIMIT = 8


class ChordDiagram:
    """A circle with ``2n`` marked points read as a cyclic word; each chord token occurs twice.

    Chords carry labels ``(framing, sign)``; unlabeled chords default to ``(0, +)``.
    """

    __slots__ = ("word", "labels", "_ends")

    def __init__(self, word: Sequence[Hashable], labels: Mapping | None = None):
        word = tuple(word)
        ends: dict = {}
        for i, t in enumerate(word):
            ends.setdefault(t, []).append(i)
        for t, pos in ends.items():
            if len(pos) != 2:
                raise ValueError(f"chord {t!r} occurs {len(pos)} times, expected 2")
        labels = dict(labels or {})
        for t in labels:
            if t not in ends:
                raise ValueError(f"label for unknown chord {t!r}")
        self.word = word
        self.labels = {}
        for t in ends:
            f, s = labels.get(t, (0, 1))
            self.labels[t] = Label(int(f), parse_sign(s))
        self._ends = {t: tuple(p) for t, p in ends.items()}

    @property
    def chords(self) -> tuple:
        """Chord tokens in order of first appearance."""
        return tuple(self._ends)

    def __len__(self):
        return len(self._ends)

    def endpoints(self, c) -> tuple[int, int]:
        return self._ends[c]

    def linked(self, a, b) -> bool:
        i, j = self._ends[a]
        k, l = self._ends[b]
        return (i < k < j) != (i < l < j)

    def restrict(self, chords) -> "ChordDiagram":
        keep = set(chords)
        return ChordDiagram([t for t in self.word if t in keep], {t: self.labels[t] for t in keep})

    def with_labels(self, labels: Mapping) -> "ChordDiagram":
        merged = dict(self.labels)
        merged.update(labels)
        return ChordDiagram(self.word, merged)

    def __eq__(self, other):
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self.word == other.word and self.labels == other.labels

    def __hash__(self):
        return hash((self.word, tuple(sorted(self.labels.items(), key=repr))))

    def __repr__(self):
        return f"ChordDiagram({list(self.word)!r}, {self.labels!r})"


def intersection_graph(d: ChordDiagram, looped: bool = False):
    """Labeled intersection graph (vertex per chord, edge iff linked).

    With ``looped=True`` the diagram is read as a Gauss diagram and a
    :class:`LoopedGraph` is returned, negative chords carrying loops.
    """
    chords = d.chords
    edges = [(a, b) for i, a in enumerate(chords) for b in chords[i + 1 :] if d.linked(a, b)]
    if looped:
        return LoopedGraph([(c, d.labels[c].sign < 0) for c in chords], edges)
    return LabeledGraph([(c, d.labels[c].framing, d.labels[c].sign) for c in chords], edges)


def surgery_components(d: ChordDiagram) -> int:
    """Number of circles of the 1-manifold obtained by surgery along every chord.

    Each endpoint ``p`` is doubled into ``p-`` and ``p+``; the circle keeps the
    arcs ``p+ .. (p+1)-`` and loses the short arc ``p- .. p+``.  A framing-0
    chord ``(p, q)`` adds the parallel strands ``p- q+`` and ``p+ q-``; a
    framing-1 chord adds the crossed strands ``p- q-`` and ``p+ q+``.
    """
    m = len(d.word)
    if m == 0:
        return 1
    parent = list(range(2 * m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    minus = lambda p: 2 * p  # noqa: E731
    plus = lambda p: 2 * p + 1  # noqa: E731
    for p in range(m):
        union(plus(p), minus((p + 1) % m))
    for c, (p, q) in d._ends.items():
        if d.labels[c].framing == 0:
            union(minus(p), plus(q))
            union(plus(p), minus(q))
        else:
            union(minus(p), minus(q))
            union(plus(p), plus(q))
    return len({find(x) for x in range(2 * m)})


def verify_soboleva(d: ChordDiagram) -> bool:
    """Surgery circle count equals ``corank A(G(D)) + 1``."""
    return surgery_components(d) == corank(adjacency_matrix(intersection_graph(d))) + 1


def iter_matchings(n: int) -> Iterator[tuple[int, ...]]:
    """All perfect matchings of ``2n`` circle points as words, chords numbered by first appearance."""
    word = [None] * (2 * n)

    def rec(next_label):
        try:
            i = word.index(None)
        except ValueError:
            yield tuple(word)
            return
        word[i] = next_label
        for j in range(i + 1, 2 * n):
            if word[j] is None:
                word[j] = next_label
                yield from rec(next_label + 1)
                word[j] = None
        word[i] = None

    yield from rec(0)


# -- realizability ------------------------------------------------------------------


def _realize_connected(g, verts: list) -> list | None:
    """Backtracking search for a double-occurrence word over ``verts`` whose interlacement is ``g``.

    Positions are filled left to right.  When a chord closes, its interlaced set
    is final (chords met exactly once since its opening), so it must equal the
    chord's neighbourhood; this prunes almost everything.  Rotation is fixed by
    starting with ``verts[0]``.
    """
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    nbr_mask = [sum(1 << idx[u] for u in g.neighbors(v)) for v in verts]
    word: list[int] = []
    first = [-1] * n
    closed = [False] * n

    def interlaced_since(x: int) -> int:
        seen = 0
        for y in word[first[x] + 1 :]:
            seen ^= 1 << y
        return seen

    def rec(open_count: int, placed: int) -> bool:
        if placed == 2 * n:
            return True
        # close an open chord
        for x in range(n):
            if first[x] >= 0 and not closed[x]:
                if interlaced_since(x) == nbr_mask[x]:
                    word.append(x)
                    closed[x] = True
                    if rec(open_count - 1, placed + 1):
                        return True
                    closed[x] = False
                    word.pop()
        # open a new chord; all of its neighbours must still be open or unseen
        for x in range(n):
            if first[x] < 0:
                first[x] = len(word)
                word.append(x)
                if rec(open_count + 1, placed + 1):
                    return True
                word.pop()
                first[x] = -1
        return False

    first[0] = 0
    word.append(0)
    if rec(1, 1):
        return [verts[i] for i in word]
    return None


def realize(g, limit: int = REALIZE_LIMIT) -> ChordDiagram | None:
    """A chord diagram whose intersection graph is ``g`` (same vertex ids and labels), or ``None``.

    Connected components are realized separately and placed side by side.
    Looped graphs are realized as Gauss diagrams, a loop becoming a negative chord.
    """
    if len(g) > limit:
        raise SizeLimit(f"realizability search limited to {limit} chords, graph has {len(g)}")
    word: list = []
    for comp in components(g):
        part = _realize_connected(g, comp)
        if part is None:
            return None
        word.extend(part)
    if isinstance(g, LoopedGraph):
        labels = {v: (0, -1 if g.is_looped(v) else 1) for v in g.vertices}
    else:
        labels = {v: tuple(g.label(v)) for v in g.vertices}
    return ChordDiagram(word, labels)


def realize_connected_components(g, limit: int = REALIZE_LIMIT) -> list[ChordDiagram] | None:
    """Per-component witnesses; ``None`` as soon as one component is not realizable."""
    if len(g) > limit:
        raise SizeLimit(f"realizability search limited to {limit} chords, graph has {len(g)}")
    out = []
    for comp in components(g):
        sub = g.induced_subgraph(comp)
        d = realize(sub, limit)
        if d is None:
            return None
        out.append(d)
    return out


def brute_force_realizable(g) -> bool:
    """Independent oracle: try every matching on ``2n`` points against the unlabeled graph."""
    from .canon import canonical_form

    n = len(g)
    target = canonical_form(_unlabeled(g))
    for w in iter_matchings(n):
        d = ChordDiagram(w)
        if canonical_form(intersection_graph(d)) == target:
            return True
    return False


def _unlabeled(g) -> LabeledGraph:
    return LabeledGraph([(v, 0, 1) for v in g.vertices], g.edges)


class Realizability(enum.Enum):
    REALIZABLE_WITNESS = "realizable"
    CERTIFIED_NON_REALIZABLE = "certified-non-realizable"
    UNKNOWN = "unknown"


@dataclass
class RealizabilityVerdict:
    verdict: Realizability
    diagram: ChordDiagram | None = None
    path: list = field(default_factory=list)
    witness_graph: object = None
    expanded: int = 0


def graphlink_realizability(
    g,
    max_vertices: int | None = None,
    max_steps: int = 2_000,
    realize_limit: int = REALIZE_LIMIT,
) -> RealizabilityVerdict:
    """Decide realizability of the graph-link of ``g`` as far as the bounds allow.

    A witness is either ``g`` itself or a graph reached by a bounded move
    search.  Non-realizability is only certified when the odd-parity minimality
    hypotheses hold and ``g`` itself is not realizable: every representative
    then has ``g`` as a smoothing, and smoothing preserves realizability.
    """
    from .invariants import odd_parity_evidence
    from .moves import bounded_search

    limit = max(realize_limit, len(g))
    d = realize(g, limit)
    if d is not None:
        return RealizabilityVerdict(Realizability.REALIZABLE_WITNESS, d, [], g)
    if odd_parity_evidence(g) is not None:
        return RealizabilityVerdict(Realizability.CERTIFIED_NON_REALIZABLE)
    bound = len(g) if max_vertices is None else max_vertices
    res = bounded_search(g, lambda h: realize(h, limit + bound) is not None, bound, max_steps)
    if res.found:
        witness = realize(res.graph, limit + bound)
        return RealizabilityVerdict(Realizability.REALIZABLE_WITNESS, witness, res.path, res.graph, res.expanded)
    return RealizabilityVerdict(Realizability.UNKNOWN, expanded=res.expanded)


def circle_counts_by_state(d: ChordDiagram) -> Counter:
    """For every subset of chords, compare surgery circles with ``corank A(G(s)) + 1``; returns a tally."""
    g = intersection_graph(d)
    chords = d.chords
    tally: Counter = Counter()
    for mask in range(1 << len(chords)):
        s = [c for i, c in enumerate(chords) if (mask >> i) & 1]
        circles = surgery_components(d.restrict(s))
        tally[circles == corank(adjacency_matrix(g.induced_subgraph(s))) + 1] += 1
    return tally


__all__ = [
    "ChordDiagram",
    "intersection_graph",
    "surgery_components",
    "verify_soboleva",
    "iter_matchings",
    "realize",
    "realize_connected_components",
    "brute_force_realizable",
    "Realizability",
    "RealizabilityVerdict",
    "graphlink_realizability",
    "circle_counts_by_state",
    "REALIZE_LIMIT",
]
