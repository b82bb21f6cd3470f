"""Labeled and looped simple graphs, local complementation and pivot.

Graphs are immutable values.  Vertex ids are arbitrary hashable tokens; the
declared vertex order is kept and used by every matrix computation, so
results are reproducible.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, NamedTuple

from .errors import SameVertex, UnknownVertex
from .gf2 import Gf2SymMatrix

Vertex = Hashable


def parse_sign(s) -> int:
    """Accept ``'+'``, ``'-'`` (or the unicode minus), ``1`` or ``-1``."""
    if s in ("+", 1, "+1"):
        return 1
    if s in ("-", "−", -1, "-1"):
        return -1
    raise ValueError(f"bad sign {s!r}")


def sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


class Label(NamedTuple):
    framing: int
    sign: int

    def __str__(self):
        return f"({self.framing},{sign_char(self.sign)})"


class _Graph:
    """Shared machinery; subclasses define what a vertex carries."""

    __slots__ = ("_order", "_pos", "_data", "_adj", "_hash")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        order = []
        data = {}
        for rec in vertices:
            v, d = self._parse_vertex(rec)
            if v in data:
                raise ValueError(f"duplicate vertex {v!r}")
            order.append(v)
            data[v] = d
        adj: dict = {v: set() for v in order}
        for e in edges:
            a, b = e
            if a not in adj:
                raise UnknownVertex(a)
            if b not in adj:
                raise UnknownVertex(b)
            if a == b:
                raise ValueError(f"loop edge at {a!r}; loops are not edges")
            if b in adj[a]:
                raise ValueError(f"duplicate edge {a!r}-{b!r}")
            adj[a].add(b)
            adj[b].add(a)
        self._set(tuple(order), data, {v: frozenset(s) for v, s in adj.items()})

    def _set(self, order, data, adj):
        self._order = order
        self._pos = {v: i for i, v in enumerate(order)}
        self._data = data
        self._adj = adj
        self._hash = None

    @classmethod
    def _build(cls, order, data, adj):
        g = object.__new__(cls)
        g._set(tuple(order), data, adj)
        return g

    # -- queries -------------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._order

    @property
    def edges(self) -> tuple:
        """Edges as pairs ``(u, v)`` with ``u`` declared before ``v``, sorted by position."""
        pos = self._pos
        out = []
        for u in self._order:
            pu = pos[u]
            for v in self._adj[u]:
                if pos[v] > pu:
                    out.append((u, v))
        out.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        return tuple(out)

    def neighbors(self, v) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u, v) -> bool:
        return v in self.neighbors(u)

    def index(self, v) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def data(self, v):
        try:
            return self._data[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def check_vertex(self, v) -> None:
        if v not in self._data:
            raise UnknownVertex(v)

    def __len__(self):
        return len(self._order)

    def __iter__(self):
        return iter(self._order)

    def __contains__(self, v):
        return v in self._data

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return (
            self._order == other._order
            and self._data == other._data
            and self._adj == other._adj
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (type(self).__name__, self._order, tuple(self._data[v] for v in self._order), frozenset(self.edges))
            )
        return self._hash

    def __repr__(self):
        verts = ", ".join(self._vertex_repr(v) for v in self._order)
        edges = ", ".join(f"{u!r}-{v!r}" for u, v in self.edges)
        return f"{type(self).__name__}([{verts}]; [{edges}])"

    # -- structural edits (all return new graphs) ----------------------------

    def with_data(self, v, d):
        self.check_vertex(v)
        data = dict(self._data)
        data[v] = d
        return self._build(self._order, data, self._adj)

    def map_data(self, fn):
        return self._build(self._order, {v: fn(v, d) for v, d in self._data.items()}, self._adj)

    def toggle_pairs(self, pairs: Iterable[tuple]):
        adj = {v: set(s) for v, s in self._adj.items()}
        for a, b in pairs:
            if a == b:
                raise ValueError("cannot toggle a loop")
            if b in adj[a]:
                adj[a].discard(b)
                adj[b].discard(a)
            else:
                adj[a].add(b)
                adj[b].add(a)
        return self._build(self._order, self._data, {v: frozenset(s) for v, s in adj.items()})

    def remove_vertices(self, vs: Iterable):
        drop = set(vs)
        for v in drop:
            self.check_vertex(v)
        order = [v for v in self._order if v not in drop]
        return self._build(
            order,
            {v: self._data[v] for v in order},
            {v: self._adj[v] - drop for v in order},
        )

    def add_vertex(self, v, d, neighbors: Iterable = ()):
        if v in self._data:
            raise ValueError(f"vertex {v!r} already present")
        nbrs = frozenset(neighbors)
        for u in nbrs:
            self.check_vertex(u)
        adj = dict(self._adj)
        for u in nbrs:
            adj[u] = adj[u] | {v}
        adj[v] = nbrs
        data = dict(self._data)
        data[v] = d
        return self._build(self._order + (v,), data, adj)

    def induced_subgraph(self, s: Iterable):
        keep = set(s)
        for v in keep:
            self.check_vertex(v)
        return self.remove_vertices([v for v in self._order if v not in keep])

    def relabel(self, mapping: dict):
        """Rename vertices; ids missing from ``mapping`` keep their name."""
        m = {v: mapping.get(v, v) for v in self._order}
        if len(set(m.values())) != len(m):
            raise ValueError("relabeling is not injective")
        return self._build(
            [m[v] for v in self._order],
            {m[v]: d for v, d in self._data.items()},
            {m[v]: frozenset(m[u] for u in s) for v, s in self._adj.items()},
        )

    def reorder(self, order: Iterable):
        order = tuple(order)
        if sorted(map(self.index, order)) != list(range(len(self))):
            raise ValueError("not a permutation of the vertex set")
        return self._build(order, self._data, self._adj)

    def fresh_ids(self, k: int) -> list:
        """``k`` ids not present in the graph (ints if all ids are ints)."""
        if all(isinstance(v, int) and not isinstance(v, bool) for v in self._order):
            start = max(self._order, default=-1) + 1
            return list(range(start, start + k))
        out, i = [], 0
        while len(out) < k:
            cand = f"n{i}"
            if cand not in self._data:
                out.append(cand)
            i += 1
        return out

    def isolated_vertices(self) -> list:
        return [v for v in self._order if not self._adj[v]]


class LabeledGraph(_Graph):
    """Simple graph whose vertices carry ``(framing, sign)``.

    ``LabeledGraph([("a", 0, "+"), ("b", 1, "-")], [("a", "b")])``
    """

    __slots__ = ()

    @staticmethod
    def _parse_vertex(rec):
        v, framing, sign = rec
        if framing not in (0, 1):
            raise ValueError(f"framing of {v!r} must be 0 or 1")
        return v, Label(int(framing), parse_sign(sign))

    def _vertex_repr(self, v):
        return f"{v!r}{self._data[v]}"

    def label(self, v) -> Label:
        return self.data(v)

    def framing(self, v) -> int:
        return self.data(v).framing

    def sign(self, v) -> int:
        return self.data(v).sign

    def with_label(self, v, framing: int | None = None, sign=None) -> "LabeledGraph":
        old = self.data(v)
        return self.with_data(
            v,
            Label(old.framing if framing is None else framing, old.sign if sign is None else parse_sign(sign)),
        )

    def forget_signs(self) -> "LabeledGraph":
        """Representative with every sign set to ``+`` (free framed graphs ignore signs)."""
        return self.map_data(lambda v, d: d if d.sign == 1 else Label(d.framing, 1))


class LoopedGraph(_Graph):
    """Simple graph plus a per-vertex loop flag (loops are never edges).

    ``LoopedGraph([("a", True), ("b", False)], [("a", "b")])``
    """

    __slots__ = ()

    @staticmethod
    def _parse_vertex(rec):
        v, looped = rec
        if looped not in (0, 1, True, False):
            raise ValueError(f"loop flag of {v!r} must be boolean")
        return v, bool(looped)

    def _vertex_repr(self, v):
        return f"{v!r}{'*' if self._data[v] else ''}"

    def is_looped(self, v) -> bool:
        return self.data(v)

    def forget_loops(self) -> "LoopedGraph":
        return self.map_data(lambda v, d: False)


def local_complement(g, v):
    """Toggle every adjacency between two distinct neighbours of ``v``."""
    nbrs = sorted(g.neighbors(v), key=g.index)
    return g.toggle_pairs(combinations(nbrs, 2))


def pivot(g, u, v):
    """Toggle ``xy`` for ``x in N(u)``, ``y in N(v)``, not both in ``N(u) & N(v)``; ``x, y`` outside ``{u, v}``."""
    if u == v:
        raise SameVertex(f"pivot needs two distinct vertices, got {u!r} twice")
    nu = g.neighbors(u) - {u, v}
    nv = g.neighbors(v) - {u, v}
    only_u = nu - nv
    only_v = nv - nu
    both = nu & nv
    key = g.index
    pairs = []
    for a_set, b_set in ((only_u, only_v), (only_u, both), (both, only_v)):
        for x in sorted(a_set, key=key):
            for y in sorted(b_set, key=key):
                pairs.append((x, y))
    return g.toggle_pairs(pairs)


def induced_subgraph(g, s):
    return g.induced_subgraph(s)


def adjacency_matrix(g) -> Gf2SymMatrix:
    """GF(2) adjacency in declared vertex order.

    The diagonal carries the framing for labeled graphs and the loop flag for
    looped graphs.
    """
    pos = g._pos
    rows = []
    for i, v in enumerate(g._order):
        bits = 0
        for u in g._adj[v]:
            bits |= 1 << pos[u]
        d = g._data[v]
        diag = d.framing if isinstance(g, LabeledGraph) else int(d)
        if diag:
            bits |= 1 << i
        rows.append(bits)
    return Gf2SymMatrix._trusted(tuple(rows))


def components(g) -> list[list]:
    """Connected components as vertex lists, in declared order."""
    seen = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comp.sort(key=g.index)
        out.append(comp)
    return out


__all__ = [
    "Label",
    "LabeledGraph",
    "LoopedGraph",
    "local_complement",
    "pivot",
    "induced_subgraph",
    "adjacency_matrix",
    "components",
    "parse_sign",
    "sign_char",
]
