"""Graph Reidemeister moves on labeled graphs (Og1 - Og4') and looped graphs (R1 - R3).

Each ``apply_*`` function returns a new graph or raises
:class:`~graphlinks.errors.NotApplicable` with a reason code.  Additions
append the new vertices at the end of the vertex order, so an addition
followed by the matching removal gives back exactly the same graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping

from .canon import DEFAULT_LIMIT, canonical_form
from .errors import NotApplicable, SizeLimit
from .graph import Label, LabeledGraph, LoopedGraph, local_complement, parse_sign, pivot, sign_char

LABELED_KINDS = ("Og1+", "Og1-", "Og2+", "Og2-", "Og3", "Og3^-1", "Og4", "Og4'")
LOOPED_KINDS = ("R1+", "R1-", "R2+", "R2-", "R3", "R3^-1")


@dataclass(frozen=True)
class MoveDescriptor:
    """One move: ``kind``, the vertices it acts on, and parameters for additions.

    Addition templates reported by :func:`detect_moves` carry default
    parameters and an empty site, so they are applicable as they stand.
    """

    kind: str
    site: tuple = ()
    params: Mapping = field(default_factory=dict)

    def apply(self, g):
        return apply_move(g, self)

    @property
    def decreasing(self) -> bool:
        return self.kind in ("Og1-", "Og2-", "R1-", "R2-")

    def __str__(self):
        parts = [self.kind, *map(str, self.site)]
        for k in sorted(self.params):
            v = self.params[k]
            if k == "sign":
                v = sign_char(v)
            elif k == "neighbors":
                v = "{" + ",".join(map(str, v)) + "}"
            parts.append(f"{k}={v}")
        return " ".join(parts)


# -- labeled graph moves --------------------------------------------------------


def _require_labeled(g):
    if not isinstance(g, LabeledGraph):
        raise TypeError("this move acts on LabeledGraph")


def _require_looped(g):
    if not isinstance(g, LoopedGraph):
        raise TypeError("this move acts on LoopedGraph")


def apply_og1(g: LabeledGraph, add: bool, site=None, sign="+") -> LabeledGraph:
    """Add or remove an isolated vertex labeled ``(0, sign)``."""
    _require_labeled(g)
    if add:
        v = site if site is not None else g.fresh_ids(1)[0]
        return g.add_vertex(v, Label(0, parse_sign(sign)))
    g.check_vertex(site)
    if g.neighbors(site):
        raise NotApplicable("not-isolated", f"{site!r} has neighbours")
    if g.framing(site) != 0:
        raise NotApplicable("framing-not-zero", f"{site!r} has framing 1")
    return g.remove_vertices([site])


def og2_removal_problem(g: LabeledGraph, p, q, free: bool = False) -> str | None:
    """Reason code why ``{p, q}`` is not a removable Og2 pair, or ``None``.

    With ``free=True`` signs are ignored (free graph-links forget them).
    """
    if p == q:
        return "same-vertex"
    if (g.neighbors(p) - {q}) != (g.neighbors(q) - {p}):
        return "neighborhood-mismatch"
    lp, lq = g.label(p), g.label(q)
    if lp.framing != lq.framing:
        return "framing-mismatch"
    if not free and lp.sign != -lq.sign:
        return "sign-mismatch"
    if g.has_edge(p, q) != (lp.framing == 1):
        return "framing-adjacency-mismatch"
    return None


def apply_og2(
    g: LabeledGraph,
    add: bool,
    sites=None,
    framing: int = 0,
    sign="+",
    neighbors: Iterable = (),
    free: bool = False,
) -> LabeledGraph:
    """Add or remove twin vertices ``(f, sign)``, ``(f, -sign)``; adjacent to each other iff ``f = 1``."""
    _require_labeled(g)
    if add:
        p, q = sites if sites is not None else g.fresh_ids(2)
        s = parse_sign(sign)
        nbrs = tuple(neighbors)
        h = g.add_vertex(p, Label(framing, s), nbrs)
        return h.add_vertex(q, Label(framing, -s), nbrs + ((p,) if framing == 1 else ()))
    p, q = sites
    g.check_vertex(p)
    g.check_vertex(q)
    problem = og2_removal_problem(g, p, q, free=free)
    if problem:
        raise NotApplicable(problem, f"pair ({p!r}, {q!r})")
    return g.remove_vertices([p, q])


def _og3_toggle_set(g: LabeledGraph, u, v, w) -> set:
    return (g.neighbors(v) ^ g.neighbors(w)) - {u, v, w}


def og3_problem(g: LabeledGraph, u, v, w, inverse: bool = False) -> str | None:
    if len({u, v, w}) < 3:
        return "same-vertex"
    want_vw = 1 if inverse else -1
    if g.label(u) != (0, -1):
        return "label-mismatch"
    if g.label(v) != (0, want_vw) or g.label(w) != (0, want_vw):
        return "label-mismatch"
    if not g.has_edge(v, w):
        return "adjacency-mismatch"
    nu = g.neighbors(u)
    if not inverse:
        if nu != {v, w}:
            return "neighborhood-mismatch"
    else:
        if v not in nu or w not in nu:
            return "neighborhood-mismatch"
        if nu - {v, w} != _og3_toggle_set(g, u, v, w):
            return "neighborhood-mismatch"
    return None


def apply_og3(g: LabeledGraph, u, v, w, inverse: bool = False) -> LabeledGraph:
    """Third move: toggle ``u`` against ``(N(v) ^ N(w)) - {u, v, w}`` and flip the signs of ``v``, ``w``.

    Forward: ``u, v, w`` labeled ``(0,-)``, ``N(u) = {v, w}`` and ``v ~ w``; ``v, w`` become ``+``.
    Inverse: ``u`` is ``(0,-)``, ``v, w`` are ``(0,+)``, ``v ~ w`` and ``N(u) - {v, w}``
    equals the toggle set; ``v, w`` become ``-``.  Without ``v ~ w`` neither the
    bracket nor ``corank(A + E)`` survives, so that adjacency is required.
    """
    _require_labeled(g)
    for x in (u, v, w):
        g.check_vertex(x)
    problem = og3_problem(g, u, v, w, inverse)
    if problem:
        raise NotApplicable(problem, f"triple ({u!r}, {v!r}, {w!r})")
    key = g.index
    toggles = [(u, t) for t in sorted(_og3_toggle_set(g, u, v, w), key=key)]
    h = g.toggle_pairs(toggles)
    new_sign = -1 if inverse else 1
    return h.with_label(v, sign=new_sign).with_label(w, sign=new_sign)


def apply_og4(g: LabeledGraph, u, v) -> LabeledGraph:
    """Pivot on adjacent framing-0 ``u, v``; ``u`` gets sign ``-sign(v)``, ``v`` gets ``-sign(u)``."""
    _require_labeled(g)
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise NotApplicable("same-vertex", repr(u))
    if not g.has_edge(u, v):
        raise NotApplicable("not-adjacent", f"({u!r}, {v!r})")
    if g.framing(u) or g.framing(v):
        raise NotApplicable("framing-not-zero", f"({u!r}, {v!r})")
    alpha, beta = g.sign(u), g.sign(v)
    h = pivot(g, u, v)
    return h.with_label(u, sign=-beta).with_label(v, sign=-alpha)


def apply_og4p(g: LabeledGraph, v) -> LabeledGraph:
    """Local complementation at a framing-1 ``v``, flip sign of ``v``, toggle framing of each neighbour."""
    _require_labeled(g)
    g.check_vertex(v)
    if g.framing(v) != 1:
        raise NotApplicable("framing-not-one", repr(v))
    h = local_complement(g, v)
    h = h.with_label(v, sign=-g.sign(v))
    for u in sorted(g.neighbors(v), key=g.index):
        h = h.with_label(u, framing=1 - h.framing(u))
    return h


# -- looped graph moves ---------------------------------------------------------


def apply_looped_r1(g: LoopedGraph, add: bool, site=None, looped: bool = False) -> LoopedGraph:
    _require_looped(g)
    if add:
        v = site if site is not None else g.fresh_ids(1)[0]
        return g.add_vertex(v, bool(looped))
    g.check_vertex(site)
    if g.neighbors(site):
        raise NotApplicable("not-isolated", f"{site!r} has neighbours")
    return g.remove_vertices([site])


def r2_removal_problem(g: LoopedGraph, p, q, free: bool = False) -> str | None:
    """With ``free=True`` loops are ignored (free homotopy classes forget them)."""
    if p == q:
        return "same-vertex"
    if (g.neighbors(p) - {q}) != (g.neighbors(q) - {p}):
        return "neighborhood-mismatch"
    if not free and g.is_looped(p) == g.is_looped(q):
        return "loop-mismatch"
    return None


def apply_looped_r2(
    g: LoopedGraph,
    add: bool,
    sites=None,
    neighbors: Iterable = (),
    adjacent: bool = False,
) -> LoopedGraph:
    """Add or remove twins, one looped and one unlooped.

    The pair may or may not be adjacent to each other: both patterns occur for
    the two parallel chords of a Gauss-diagram second move.
    """
    _require_looped(g)
    if add:
        p, q = sites if sites is not None else g.fresh_ids(2)
        nbrs = tuple(neighbors)
        h = g.add_vertex(p, True, nbrs)
        return h.add_vertex(q, False, nbrs + ((p,) if adjacent else ()))
    p, q = sites
    g.check_vertex(p)
    g.check_vertex(q)
    problem = r2_removal_problem(g, p, q)
    if problem:
        raise NotApplicable(problem, f"pair ({p!r}, {q!r})")
    return g.remove_vertices([p, q])


def r3_problem(g: LoopedGraph, u, v, w, inverse: bool = False) -> str | None:
    if len({u, v, w}) < 3:
        return "same-vertex"
    if not g.is_looped(v) or g.is_looped(w):
        return "loop-mismatch"
    if inverse:
        if g.has_edge(v, w) or not g.has_edge(u, v) or not g.has_edge(u, w):
            return "adjacency-mismatch"
    else:
        if not g.has_edge(v, w) or g.has_edge(u, v) or g.has_edge(u, w):
            return "adjacency-mismatch"
    trio = (g.neighbors(u), g.neighbors(v), g.neighbors(w))
    for x in g.vertices:
        if x in (u, v, w):
            continue
        if sum(x in n for n in trio) not in (0, 2):
            return "incidence-mismatch"
    return None


def apply_looped_r3(g: LoopedGraph, u, v, w, inverse: bool = False) -> LoopedGraph:
    """Toggle the three adjacencies ``uv``, ``uw``, ``vw``.

    Forward: ``v`` looped, ``w`` unlooped, ``v ~ w``, ``u`` adjacent to neither, and
    every other vertex adjacent to 0 or 2 of ``u, v, w``.  The inverse starts from
    ``u ~ v``, ``u ~ w`` and ``v`` not adjacent to ``w``.
    """
    _require_looped(g)
    for x in (u, v, w):
        g.check_vertex(x)
    problem = r3_problem(g, u, v, w, inverse)
    if problem:
        raise NotApplicable(problem, f"triple ({u!r}, {v!r}, {w!r})")
    return g.toggle_pairs([(u, v), (u, w), (v, w)])


# -- dispatch and detection -------------------------------------------------------


def apply_move(g, m: MoveDescriptor):
    p = m.params
    k = m.kind
    if k == "Og1+":
        return apply_og1(g, True, m.site[0] if m.site else None, p.get("sign", 1))
    if k == "Og1-":
        return apply_og1(g, False, m.site[0])
    if k == "Og2+":
        return apply_og2(
            g, True, m.site or None, p.get("framing", 0), p.get("sign", 1), p.get("neighbors", ()),
        )
    if k == "Og2-":
        return apply_og2(g, False, m.site, free=p.get("free", False))
    if k == "Og3":
        return apply_og3(g, *m.site)
    if k == "Og3^-1":
        return apply_og3(g, *m.site, inverse=True)
    if k == "Og4":
        return apply_og4(g, *m.site)
    if k == "Og4'":
        return apply_og4p(g, *m.site)
    if k == "R1+":
        return apply_looped_r1(g, True, m.site[0] if m.site else None, p.get("looped", False))
    if k == "R1-":
        return apply_looped_r1(g, False, m.site[0])
    if k == "R2+":
        return apply_looped_r2(g, True, m.site or None, p.get("neighbors", ()), p.get("adjacent", False))
    if k == "R2-":
        return apply_looped_r2(g, False, m.site)
    if k == "R3":
        return apply_looped_r3(g, *m.site)
    if k == "R3^-1":
        return apply_looped_r3(g, *m.site, inverse=True)
    raise ValueError(f"unknown move kind {k!r}")


def decreasing_second_moves(g, free: bool = False) -> list[MoveDescriptor]:
    """All removable Og2 / R2 pairs, in vertex order."""
    out = []
    verts = g.vertices
    if isinstance(g, LabeledGraph):
        for p, q in combinations(verts, 2):
            if og2_removal_problem(g, p, q, free=free) is None:
                out.append(MoveDescriptor("Og2-", (p, q), {"free": True} if free else {}))
    else:
        for p, q in combinations(verts, 2):
            if r2_removal_problem(g, p, q, free=free) is None:
                out.append(MoveDescriptor("R2-", (p, q)))
    return out


def _labeled_sites(g: LabeledGraph) -> Iterator[MoveDescriptor]:
    verts = g.vertices
    for v in verts:
        if not g.neighbors(v) and g.framing(v) == 0:
            yield MoveDescriptor("Og1-", (v,))
    yield from decreasing_second_moves(g)
    key = g.index
    for u in verts:
        if g.label(u) != (0, -1):
            continue
        nu = sorted(g.neighbors(u), key=key)
        for v, w in combinations(nu, 2):
            if og3_problem(g, u, v, w) is None:
                yield MoveDescriptor("Og3", (u, v, w))
            if og3_problem(g, u, v, w, inverse=True) is None:
                yield MoveDescriptor("Og3^-1", (u, v, w))
    for u, v in g.edges:
        if g.framing(u) == 0 and g.framing(v) == 0:
            yield MoveDescriptor("Og4", (u, v))
    for v in verts:
        if g.framing(v) == 1:
            yield MoveDescriptor("Og4'", (v,))


def _looped_sites(g: LoopedGraph) -> Iterator[MoveDescriptor]:
    verts = g.vertices
    for v in verts:
        if not g.neighbors(v):
            yield MoveDescriptor("R1-", (v,))
    yield from decreasing_second_moves(g)
    for v in verts:
        if not g.is_looped(v):
            continue
        for w in verts:
            if w == v or g.is_looped(w):
                continue
            for u in verts:
                if u in (v, w):
                    continue
                if r3_problem(g, u, v, w) is None:
                    yield MoveDescriptor("R3", (u, v, w))
                if r3_problem(g, u, v, w, inverse=True) is None:
                    yield MoveDescriptor("R3^-1", (u, v, w))


def detect_moves(g) -> list[MoveDescriptor]:
    """Every applicable removal / third / fourth move site, plus default-parameter addition templates."""
    if isinstance(g, LabeledGraph):
        templates = [
            MoveDescriptor("Og1+", (), {"sign": 1}),
            MoveDescriptor("Og1+", (), {"sign": -1}),
            MoveDescriptor("Og2+", (), {"framing": 0, "sign": 1, "neighbors": ()}),
        ]
        return list(_labeled_sites(g)) + templates
    templates = [
        MoveDescriptor("R1+", (), {"looped": False}),
        MoveDescriptor("R1+", (), {"looped": True}),
        MoveDescriptor("R2+", (), {"neighbors": (), "adjacent": False}),
    ]
    return list(_looped_sites(g)) + templates


def _subsets(items: tuple) -> Iterator[tuple]:
    for mask in range(1 << len(items)):
        yield tuple(x for i, x in enumerate(items) if (mask >> i) & 1)


def successors(g, max_vertices: int) -> Iterator[tuple[MoveDescriptor, object]]:
    """Concrete moves from ``g`` staying within ``max_vertices``: removals, then
    vertex-count preserving moves, then additions (one per isomorphism type of pair label)."""
    sites = list(_labeled_sites(g) if isinstance(g, LabeledGraph) else _looped_sites(g))
    sites.sort(key=lambda m: 0 if m.decreasing else 1)
    for m in sites:
        yield m, apply_move(g, m)
    n = len(g)
    verts = g.vertices
    if isinstance(g, LabeledGraph):
        if n + 1 <= max_vertices:
            for s in (1, -1):
                (v,) = g.fresh_ids(1)
                m = MoveDescriptor("Og1+", (v,), {"sign": s})
                yield m, apply_move(g, m)
        if n + 2 <= max_vertices:
            sites2 = tuple(g.fresh_ids(2))
            for f in (0, 1):
                for nbrs in _subsets(verts):
                    m = MoveDescriptor("Og2+", sites2, {"framing": f, "sign": 1, "neighbors": nbrs})
                    yield m, apply_move(g, m)
    else:
        if n + 1 <= max_vertices:
            for lp in (False, True):
                (v,) = g.fresh_ids(1)
                m = MoveDescriptor("R1+", (v,), {"looped": lp})
                yield m, apply_move(g, m)
        if n + 2 <= max_vertices:
            sites2 = tuple(g.fresh_ids(2))
            for adj in (False, True):
                for nbrs in _subsets(verts):
                    m = MoveDescriptor("R2+", sites2, {"neighbors": nbrs, "adjacent": adj})
                    yield m, apply_move(g, m)


@dataclass
class SearchResult:
    path: list[MoveDescriptor] | None
    graph: object = None
    expanded: int = 0

    @property
    def found(self) -> bool:
        return self.path is not None


def bounded_search(
    start,
    goal: Callable[[object], bool],
    max_vertices: int,
    max_steps: int,
    succ: Callable | None = None,
) -> SearchResult:
    """Breadth-first search over move sequences, deduplicated by canonical form.

    ``max_steps`` bounds the number of expanded graphs.
    """
    if max_vertices > DEFAULT_LIMIT:
        raise SizeLimit(f"search bound {max_vertices} exceeds canonical-form limit {DEFAULT_LIMIT}")
    if len(start) > max_vertices:
        raise SizeLimit(f"start graph has {len(start)} vertices, bound is {max_vertices}")
    succ = succ or successors
    if goal(start):
        return SearchResult([], start, 0)
    seen = {canonical_form(start)}
    queue = deque([(start, [])])
    expanded = 0
    while queue and expanded < max_steps:
        g, path = queue.popleft()
        expanded += 1
        for m, h in succ(g, max_vertices):
            key = canonical_form(h)
            if key in seen:
                continue
            seen.add(key)
            if goal(h):
                return SearchResult(path + [m], h, expanded)
            queue.append((h, path + [m]))
    return SearchResult(None, None, expanded)


def equivalence_search(g1, g2, max_vertices: int = 12, max_steps: int = 100_000) -> list[MoveDescriptor] | None:
    """A move sequence turning ``g1`` into a graph isomorphic to ``g2``, or ``None``.

    ``None`` only means nothing was found within the bounds.
    """
    if type(g1) is not type(g2):
        raise TypeError("both graphs must be of the same kind")
    if max_vertices < max(len(g1), len(g2)):
        raise SizeLimit(f"max_vertices={max_vertices} is below the input size")
    target = canonical_form(g2)
    res = bounded_search(g1, lambda h: canonical_form(h) == target, max_vertices, max_steps)
    return res.path


__all__ = [
    "MoveDescriptor",
    "LABELED_KINDS",
    "LOOPED_KINDS",
    "apply_og1",
    "apply_og2",
    "apply_og3",
    "apply_og4",
    "apply_og4p",
    "apply_looped_r1",
    "apply_looped_r2",
    "apply_looped_r3",
    "apply_move",
    "og2_removal_problem",
    "og3_problem",
    "r2_removal_problem",
    "r3_problem",
    "decreasing_second_moves",
    "detect_moves",
    "successors",
    "bounded_search",
    "SearchResult",
    "equivalence_search",
]
