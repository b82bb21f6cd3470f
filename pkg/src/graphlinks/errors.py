"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GraphLinkError(Exception):
    """Base class for domain errors."""


class UnknownVertex(GraphLinkError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


class SameVertex(GraphLinkError, ValueError):
    pass


class SingularMatrix(GraphLinkError, ValueError):
    pass


class NotApplicable(GraphLinkError, ValueError):
    """A move precondition failed; ``reason`` is a stable machine-readable code."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


class SizeLimit(GraphLinkError):
    pass


class NotAKnot(GraphLinkError, ValueError):
    pass


class NotOneComponent(GraphLinkError, ValueError):
    pass


class NotTwoComponents(GraphLinkError, ValueError):
    pass


class OrbitLimit(GraphLinkError):
    pass


class ZeroPolynomial(GraphLinkError, ValueError):
    pass


class ParseError(GraphLinkError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line
