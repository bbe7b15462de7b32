"""facetforge: faceted PSPP ontology toolkit.

Model, validate, convert (canonical JSON / SKOS Turtle subset), and extract
ontology concepts from unstructured text, with a CLI and an HTTP service for
search, browse, and index.
"""
from .errors import (
    BuildError,
    CrossFacetParentError,
    DanglingReferenceError,
    DocumentSchemaError,
    DocumentSyntaxError,
    DuplicateIdError,
    EmptyLabelError,
    InvalidConceptError,
    InvalidRelationTypeError,
    MissingFacetError,
    OntologyError,
    ParentCycleError,
    ParseError,
    SelfEdgeError,
    SourceLocation,
    UnknownConceptError,
    UnknownFacetValueError,
    UnknownRelationError,
)
from .indexer import (
    ConceptHit,
    ConceptScore,
    DocumentIndexResult,
    MatchAutomaton,
    build_automaton,
    index_document,
    normalize,
    synthesize_notation,
)
from .iobase import ParseOutcome, ParseWarning
from .jsonio import parse_canonical_json, serialize_canonical_json
from .model import (
    Concept,
    ConceptId,
    ConceptRelations,
    Facet,
    FacetCounts,
    Ontology,
    RelationEdge,
    RelationSchema,
    RelationType,
    ancestors,
    build_ontology,
    relations_of,
    stats,
)
from .oracle import oracle_index
from .textnorm import NormalizationConfig, Token
from .turtleio import parse_skos_turtle, serialize_skos_turtle
from .validate import (
    Severity,
    ValidationReport,
    Violation,
    ViolationCode,
    default_pspp_schema,
    explain,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BuildError",
    "Concept",
    "ConceptHit",
    "ConceptId",
    "ConceptRelations",
    "ConceptScore",
    "CrossFacetParentError",
    "DanglingReferenceError",
    "DocumentIndexResult",
    "DocumentSchemaError",
    "DocumentSyntaxError",
    "DuplicateIdError",
    "EmptyLabelError",
    "Facet",
    "FacetCounts",
    "InvalidConceptError",
    "InvalidRelationTypeError",
    "MatchAutomaton",
    "MissingFacetError",
    "NormalizationConfig",
    "Ontology",
    "OntologyError",
    "ParentCycleError",
    "ParseError",
    "ParseOutcome",
    "ParseWarning",
    "RelationEdge",
    "RelationSchema",
    "RelationType",
    "SelfEdgeError",
    "Severity",
    "SourceLocation",
    "Token",
    "UnknownConceptError",
    "UnknownFacetValueError",
    "UnknownRelationError",
    "ValidationReport",
    "Violation",
    "ViolationCode",
    "ancestors",
    "build_automaton",
    "build_ontology",
    "default_pspp_schema",
    "explain",
    "index_document",
    "normalize",
    "oracle_index",
    "parse_canonical_json",
    "parse_skos_turtle",
    "relations_of",
    "serialize_canonical_json",
    "serialize_skos_turtle",
    "stats",
    "synthesize_notation",
    "validate",
]
