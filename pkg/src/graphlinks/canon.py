"""Canonical forms and isomorphism for small labeled / looped graphs.

Colour refinement plus individualization, exploring the search tree and
keeping the lexicographically smallest leaf certificate.  Branches are pruned
with automorphisms found along the way (leaves with equal certificates) and
with transpositions of same-coloured twins, which are always automorphisms.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import SizeLimit
from .graph import Label, LabeledGraph, LoopedGraph

DEFAULT_LIMIT = 16

_KIND_LABELED = b"L"
_KIND_LOOPED = b"P"


def _vertex_colour(g, v) -> int:
    d = g.data(v)
    if isinstance(d, Label):
        return 2 * d.framing + (1 if d.sign < 0 else 0)
    return int(d)


def _dense(values) -> list[int]:
    ranks = {x: i for i, x in enumerate(sorted(set(values)))}
    return [ranks[x] for x in values]


def _refine(colours: list[int], nbrs: list[list[int]]) -> list[int]:
    cells = len(set(colours))
    while True:
        sigs = [(colours[v], tuple(sorted(colours[u] for u in nbrs[v]))) for v in range(len(colours))]
        new = _dense(sigs)
        k = len(set(new))
        if k == cells:
            return new
        colours, cells = new, k


def _individualize(colours: list[int], v: int) -> list[int]:
    return _dense([(c, 0 if x == v else 1) for x, c in enumerate(colours)])


def _orbit(seed: set, gens: list[list[int]]) -> set:
    orbit = set(seed)
    stack = list(seed)
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


def canonical_labeling(g, limit: int = DEFAULT_LIMIT) -> tuple[tuple, bytes]:
    """Return ``(order, certificate)``: vertices in canonical order and the canonical byte string."""
    n = len(g)
    if n > limit:
        raise SizeLimit(f"canonical form limited to {limit} vertices, graph has {n}")
    verts = list(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    nbrs = [[pos[u] for u in g.neighbors(v)] for v in verts]
    masks = [sum(1 << j for j in nb) for nb in nbrs]
    base = [_vertex_colour(g, v) for v in verts]
    kind = _KIND_LABELED if isinstance(g, LabeledGraph) else _KIND_LOOPED

    # twins of equal colour can be swapped freely
    gens: list[list[int]] = []
    for a in range(n):
        for b in range(a + 1, n):
            if base[a] == base[b] and (masks[a] & ~(1 << b)) == (masks[b] & ~(1 << a)):
                perm = list(range(n))
                perm[a], perm[b] = b, a
                gens.append(perm)

    best: list = [None, None]  # certificate bits, order

    def leaf_cert(order: list[int]) -> tuple:
        inv = [0] * n
        for i, v in enumerate(order):
            inv[v] = i
        bits = []
        for i, v in enumerate(order):
            m = masks[v]
            bits.append(sum(1 << inv[u] for u in range(n) if (m >> u) & 1 and inv[u] > i))
        return tuple(bits)

    def search(colours: list[int], path: list[int]):
        colours = _refine(colours, nbrs)
        if len(set(colours)) == n:
            order = sorted(range(n), key=colours.__getitem__)
            cert = leaf_cert(order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            elif cert == best[0]:
                perm = [0] * n
                for a, b in zip(best[1], order):
                    perm[a] = b
                gens.append(perm)
            return
        sizes: dict[int, int] = {}
        for c in colours:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        cell = [v for v in range(n) if colours[v] == target]
        tried: list[int] = []
        for v in cell:
            if tried:
                fixing = [p for p in gens if all(p[x] == x for x in path)]
                if v in _orbit(set(tried), fixing):
                    continue
            tried.append(v)
            search(_individualize(colours, v), path + [v])

    if n:
        search(_dense(base), [])
        order = best[1]
        cert_bits = best[0]
    else:
        order, cert_bits = [], ()
    colour_seq = bytes(base[v] for v in order)
    width = (n + 7) // 8 or 1
    body = b"".join(x.to_bytes(width, "little") for x in cert_bits)
    form = kind + bytes([n]) + colour_seq + body
    return tuple(verts[v] for v in order), form


@lru_cache(maxsize=1 << 16)
def _cached_form(g, limit):
    return canonical_labeling(g, limit)[1]


def canonical_form(g, limit: int = DEFAULT_LIMIT) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (labels / loops respected)."""
    return _cached_form(g, limit)


def isomorphic(g1, g2, limit: int = DEFAULT_LIMIT) -> bool:
    if type(g1) is not type(g2) or len(g1) != len(g2):
        return False
    if sorted(len(g1.neighbors(v)) for v in g1) != sorted(len(g2.neighbors(v)) for v in g2):
        return False
    return canonical_form(g1, limit) == canonical_form(g2, limit)


def is_isomorphism(g1, g2, mapping: dict) -> bool:
    """Check that ``mapping`` (vertices of g1 -> vertices of g2) is a label-preserving isomorphism."""
    if type(g1) is not type(g2) or len(g1) != len(g2):
        return False
    if set(mapping) != set(g1.vertices) or set(mapping.values()) != set(g2.vertices):
        return False
    for v in g1:
        if g1.data(v) != g2.data(mapping[v]):
            return False
        if {mapping[u] for u in g1.neighbors(v)} != g2.neighbors(mapping[v]):
            return False
    return True


def graph_from_form(form: bytes):
    """Rebuild the canonical representative, vertices numbered ``0..n-1``."""
    kind, n = form[:1], form[1]
    colours = form[2 : 2 + n]
    width = (n + 7) // 8 or 1
    body = form[2 + n :]
    edges = []
    for i in range(n):
        row = int.from_bytes(body[i * width : (i + 1) * width], "little")
        for j in range(n):
            if (row >> j) & 1:
                edges.append((i, j))
    if kind == _KIND_LABELED:
        verts = [(i, c >> 1, -1 if c & 1 else 1) for i, c in enumerate(colours)]
        return LabeledGraph(verts, edges)
    if kind == _KIND_LOOPED:
        return LoopedGraph([(i, bool(c)) for i, c in enumerate(colours)], edges)
    raise ValueError(f"unknown canonical form kind {kind!r}")


__all__ = [
    "canonical_form",
    "canonical_labeling",
    "isomorphic",
    "is_isomorphism",
    "graph_from_form",
    "DEFAULT_LIMIT",
]
