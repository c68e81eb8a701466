"""Exception hierarchy shared by the parsers, solvers and the filter pipeline."""

from typing import Optional


class MatchstickError(Exception):
    """Base class for all errors raised by this package."""


class PlanarFormatError(MatchstickError):
    """A graph stream could not be decoded.

    Attributes:
        offset: Byte offset (planar_code) where the problem was detected.
        graph_index: Zero-based index of the record in its stream.
        line: One-based line number (rotation text).
    """

    def __init__(
        self,
        message: str,
        offset: Optional[int] = None,
        graph_index: Optional[int] = None,
        line: Optional[int] = None,
    ):
        self.message = message
        self.offset = offset
        self.graph_index = graph_index
        self.line = line
        super().__init__(self._describe())

    def _describe(self) -> str:
        where = []
        if self.graph_index is not None:
            where.append(f"graph {self.graph_index}")
        if self.offset is not None:
            where.append(f"byte {self.offset}")
        if self.line is not None:
            where.append(f"line {self.line}")
        return f"{self.message} ({', '.join(where)})" if where else self.message


class EmbeddingError(MatchstickError):
    """A rotation system violates the invariants of a planar embedding."""


class DataIntegrityError(MatchstickError):
    """An identity that holds for every embedded graph failed to hold."""


class ModelError(MatchstickError):
    """A linear program is malformed."""


class CertificateError(MatchstickError):
    """A solver certificate did not re-verify in exact arithmetic."""


class FixtureError(MatchstickError):
    """An unknown built-in fixture was requested."""
