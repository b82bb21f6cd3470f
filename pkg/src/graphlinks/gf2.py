"""Symmetric matrices over GF(2), rows stored as int bitsets.

Bit ``j`` of ``rows[i]`` is the entry ``(i, j)``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import SingularMatrix


class Gf2SymMatrix:
    """Immutable symmetric n x n matrix over the two-element field."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[int], n: int | None = None):
        rows = tuple(int(r) for r in rows)
        if n is None:
            n = len(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {i} has bits beyond column {n - 1}")
        for i in range(n):
            for j in range(i + 1, n):
                if ((rows[i] >> j) & 1) != ((rows[j] >> i) & 1):
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        self.n = n
        self.rows = rows

    @classmethod
    def _trusted(cls, rows: tuple[int, ...]) -> "Gf2SymMatrix":
        m = object.__new__(cls)
        m.n = len(rows)
        m.rows = rows
        return m

    @classmethod
    def from_lists(cls, entries: Iterable[Iterable[int]]) -> "Gf2SymMatrix":
        rows = []
        for row in entries:
            bits = 0
            for j, x in enumerate(row):
                if x & 1:
                    bits |= 1 << j
            rows.append(bits)
        return cls(rows)

    @classmethod
    def identity(cls, n: int) -> "Gf2SymMatrix":
        return cls._trusted(tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "Gf2SymMatrix":
        return cls._trusted((0,) * n)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple((r >> i) & 1 for i, r in enumerate(self.rows))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def __add__(self, other: "Gf2SymMatrix") -> "Gf2SymMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return Gf2SymMatrix._trusted(tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def plus_identity(self) -> "Gf2SymMatrix":
        return Gf2SymMatrix._trusted(tuple(r ^ (1 << i) for i, r in enumerate(self.rows)))

    def flip_diagonal(self, i: int) -> "Gf2SymMatrix":
        """Add the single-entry matrix E_ii."""
        rows = list(self.rows)
        rows[i] ^= 1 << i
        return Gf2SymMatrix._trusted(tuple(rows))

    def with_diagonal(self, diag: Sequence[int]) -> "Gf2SymMatrix":
        rows = []
        for i, r in enumerate(self.rows):
            r &= ~(1 << i)
            if diag[i] & 1:
                r |= 1 << i
            rows.append(r)
        return Gf2SymMatrix._trusted(tuple(rows))

    def principal_submatrix(self, indices: Sequence[int]) -> "Gf2SymMatrix":
        rows = []
        for i in indices:
            src = self.rows[i]
            bits = 0
            for k, j in enumerate(indices):
                if (src >> j) & 1:
                    bits |= 1 << k
            rows.append(bits)
        return Gf2SymMatrix._trusted(tuple(rows))

    def matmul(self, other: "Gf2SymMatrix") -> list[int]:
        """Plain product as bit rows; the product of symmetric matrices need not be symmetric."""
        out = []
        for r in self.rows:
            acc = 0
            k = 0
            while r:
                if r & 1:
                    acc ^= other.rows[k]
                r >>= 1
                k += 1
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, Gf2SymMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Gf2SymMatrix({self.to_lists()})"


def rank_rows(rows: Iterable[int]) -> int:
    """GF(2) rank of arbitrary bit rows (xor basis keyed by leading bit)."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = r
                break
            r ^= b
    return len(basis)


def rank(m: Gf2SymMatrix) -> int:
    return rank_rows(m.rows)


def corank(m: Gf2SymMatrix) -> int:
    return m.n - rank_rows(m.rows)


def determinant(m: Gf2SymMatrix) -> int:
    # the 0x0 matrix has the empty-product determinant 1
    return 1 if rank_rows(m.rows) == m.n else 0


def inverse(m: Gf2SymMatrix) -> Gf2SymMatrix:
    """Gauss-Jordan inverse; raises :class:`SingularMatrix` when det = 0."""
    n = m.n
    left = list(m.rows)
    right = [1 << i for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if (left[r] >> col) & 1), None)
        if pivot is None:
            raise SingularMatrix("matrix is singular over GF(2)")
        left[col], left[pivot] = left[pivot], left[col]
        right[col], right[pivot] = right[pivot], right[col]
        for r in range(n):
            if r != col and (left[r] >> col) & 1:
                left[r] ^= left[col]
                right[r] ^= right[col]
    return Gf2SymMatrix._trusted(tuple(right))


def nondegenerate_completion(m: Gf2SymMatrix) -> Gf2SymMatrix:
    """A det-1 matrix equal to ``m`` off the diagonal.

    Nonsingular input is returned unchanged; otherwise diagonal bit-vectors
    ``(d_0, ..., d_{n-1})`` are tried in lexicographic order and the first
    nonsingular one wins.
    """
    if determinant(m):
        return m
    n = m.n
    off = tuple(r & ~(1 << i) for i, r in enumerate(m.rows))
    for k in range(1 << n):
        rows = tuple(r | (((k >> (n - 1 - i)) & 1) << i) for i, r in enumerate(off))
        if rank_rows(rows) == n:
            return Gf2SymMatrix._trusted(rows)
    raise AssertionError("no nonsingular diagonal completion exists")  # pragma: no cover


__all__ = [
    "Gf2SymMatrix",
    "rank",
    "rank_rows",
    "corank",
    "determinant",
    "inverse",
    "nondegenerate_completion",
]
