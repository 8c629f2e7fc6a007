"""Exception hierarchy shared by every annigraph module."""

from __future__ import annotations


class AnnigraphError(Exception):
    """Base class for all library errors."""


class RingError(AnnigraphError):
    pass


class InvalidOrder(RingError):
    pass


class NotPrime(RingError):
    pass


class NotPrimePower(RingError):
    pass


class ReduciblePolynomial(RingError):
    pass


class PresentationNotConfluent(RingError):
    pass


class TrivialRing(RingError):
    pass


class NonFiniteQuotient(RingError):
    pass


class ArityError(RingError):
    pass


class RingTooLarge(RingError):
    pass


class EmptySet(RingError):
    pass


class GraphError(AnnigraphError):
    pass


class NoZeroDivisors(GraphError):
    pass


class InvalidVertexPair(GraphError):
    pass


class InvalidRotation(GraphError):
    pass


class InvalidWitness(GraphError):
    """A subdivision witness that does not re-check against its graph."""


class Exhausted(AnnigraphError):
    """A search hit its node budget before reaching a verdict."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class RingSyntaxError(AnnigraphError):
    """Parse failure in the ring DSL, with byte offset and expected tokens."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class ElaborationError(AnnigraphError):
    """A constructor error raised while elaborating a parsed expression."""

    def __init__(self, cause: AnnigraphError, span: tuple[int, int] | None = None):
        self.cause = cause
        self.span = span
        where = f" [span {span[0]}:{span[1]}]" if span else ""
        super().__init__(f"{type(cause).__name__}: {cause}{where}")
