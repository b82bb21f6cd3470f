"""Sparse integer Laurent polynomials in one variable ``a``."""

from __future__ import annotations

import re
from typing import Mapping

from .errors import ZeroPolynomial


class LaurentPoly:
    """Immutable mapping exponent -> nonzero integer coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(self._terms)

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("coefficient is not a unit")
            return LaurentPoly({e * k: c ** (-k)})
        result = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            parts.append(str(c) if e == 0 else f"{c}*a^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: terms ``c*a^e`` or bare integers joined by ``+``."""
        text = text.strip()
        if text == "0":
            return cls()
        out: dict[int, int] = {}
        for part in text.split(" + "):
            m = _TERM.fullmatch(part.strip())
            if not m:
                raise ValueError(f"bad polynomial term {part!r}")
            c = int(m.group(1))
            e = int(m.group(2)) if m.group(2) is not None else 0
            out[e] = out.get(e, 0) + c
        return cls(out)


_TERM = re.compile(r"(-?\d+)(?:\*a\^(-?\d+))?")


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


A = LaurentPoly.monomial(1)
LOOP = LaurentPoly({2: -1, -2: -1})  # -a^2 - a^-2


def span(p: LaurentPoly) -> int:
    """Leading degree minus lowest degree."""
    if p.is_zero():
        raise ZeroPolynomial("span of the zero polynomial is undefined")
    return p.max_degree() - p.min_degree()


__all__ = ["LaurentPoly", "A", "LOOP", "span"]
