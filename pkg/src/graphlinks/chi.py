"""Correspondence between graph-knots (labeled graphs) and looped interlacement graphs."""

from __future__ import annotations

from .errors import NotAKnot
from .gf2 import Gf2SymMatrix, determinant, inverse, nondegenerate_completion
from .graph import LabeledGraph, LoopedGraph, adjacency_matrix
from .invariants import writhe


def _off_diagonal_edges(verts: tuple, m: Gf2SymMatrix) -> list[tuple]:
    n = len(verts)
    return [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n) if m.entry(i, j)]


def chi_adjacency(g: LabeledGraph) -> Gf2SymMatrix:
    """``(A(G) + E)^-1``; its off-diagonal part is the interlacement of the looped graph."""
    m = adjacency_matrix(g).plus_identity()
    if not determinant(m):
        raise NotAKnot("corank(A+E) > 0; chi is only defined for graph-knots")
    return inverse(m)


def chi(g: LabeledGraph) -> LoopedGraph:
    """Looped graph with adjacency off ``(A(G) + E)^-1``; vertex looped iff its writhe is -1."""
    inv = chi_adjacency(g)
    per, _ = writhe(g)
    verts = g.vertices
    return LoopedGraph([(v, per[v] < 0) for v in verts], _off_diagonal_edges(verts, inv))


def chi_inverse(lg: LoopedGraph) -> LabeledGraph:
    """Labeled graph with adjacency matrix ``A^-1 + E``.

    ``A`` is the lexicographically first nonsingular diagonal completion of the
    loop-free adjacency of ``lg``; the sign of vertex ``i`` is
    ``w_i * (1 - 2 a_ii)`` with ``w_i = -1`` exactly for looped vertices.
    """
    verts = lg.vertices
    base = adjacency_matrix(lg.forget_loops())
    a = nondegenerate_completion(base)
    m = inverse(a).plus_identity()
    diag_a = a.diagonal
    diag_m = m.diagonal
    records = []
    for i, v in enumerate(verts):
        w = -1 if lg.is_looped(v) else 1
        records.append((v, diag_m[i], w * (1 - 2 * diag_a[i])))
    return LabeledGraph(records, _off_diagonal_edges(verts, m))


__all__ = ["chi", "chi_inverse", "chi_adjacency"]
