"""Exception hierarchy shared by the model, parsers, and indexer."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SourceLocation:
    """1-based line/column position in a parsed document."""

    line: int
    column: int

    def __post_init__(self) -> None:
        if self.line < 1 or self.column < 1:
            raise ValueError(f"source location must be 1-based, got {self.line}:{self.column}")

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class OntologyError(Exception):
    """Base class for every error raised by this package."""


# --- construction-time (structural) errors -----------------------------------

class BuildError(OntologyError):
    """A structural invariant was violated while assembling an ontology."""


class DuplicateIdError(BuildError):
    pass


class DanglingReferenceError(BuildError):
    """A parent or edge endpoint names a concept that does not exist."""


class CrossFacetParentError(BuildError):
    """A parent link crosses facet boundaries; hierarchies live inside one facet."""


class ParentCycleError(BuildError):
    """Parent links form a cycle; hierarchy traversal requires a tree."""


class UnknownRelationError(BuildError):
    """An edge uses a relation name that the schema does not declare."""


class SelfEdgeError(BuildError):
    pass


class InvalidConceptError(BuildError):
    """A concept violates its own field invariants (id shape, labels)."""


class InvalidRelationTypeError(BuildError):
    """A relation type violates naming rules or duplicates another."""


# --- query errors -------------------------------------------------------------

class UnknownConceptError(OntologyError):
    pass


# --- parse-time errors ----------------------------------------------------------

class ParseError(OntologyError):
    """Base for errors raised while reading a serialized ontology.

    ``location`` is set whenever the reader can attribute the problem to a
    position in the input; syntax errors always carry one.
    """

    def __init__(self, message: str, location: SourceLocation | None = None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class DocumentSyntaxError(ParseError):
    """Input text is not well-formed for its format; always has a location."""

    def __init__(self, message: str, location: SourceLocation):
        super().__init__(message, location)


class DocumentSchemaError(ParseError):
    """Well-formed input with a missing required key or a wrongly typed value."""


class MissingFacetError(ParseError):
    """A concept carries labels but no facet assignment."""


class UnknownFacetValueError(ParseError):
    pass


# --- indexing errors -----------------------------------------------------------

class EmptyLabelError(OntologyError):
    """A label normalizes to zero tokens and can never match anything."""
