"""Faceted ontology data model and in-memory query operations.

An :class:`Ontology` is immutable once :func:`build_ontology` returns it:
every structural invariant (unique ids, resolvable references, same-facet
acyclic parent trees) is checked there, so downstream code never re-checks.
Semantic rules (relation domain/range and the like) live in
:mod:`facetforge.validate` and are *not* enforced here.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import (
    CrossFacetParentError,
    DanglingReferenceError,
    DuplicateIdError,
    InvalidConceptError,
    InvalidRelationTypeError,
    ParentCycleError,
    SelfEdgeError,
    UnknownConceptError,
    UnknownRelationError,
)
from .textnorm import normalize_phrase

ConceptId = str

RESERVED_RELATION_NAME = "isA"

# Parent chains deeper than this are treated as pathological (see validator V2).
MAX_HIERARCHY_DEPTH = 64


class Facet(enum.Enum):
    """The four top-level mutually exclusive categories."""

    PROCESSING = "Processing"
    STRUCTURE = "Structure"
    PROPERTY = "Property"
    PERFORMANCE = "Performance"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_name(cls, name: str) -> "Facet":
        for facet in cls:
            if facet.value == name:
                return facet
        raise ValueError(f"unknown facet name: {name!r}")


# Stable display/iteration order used by serializers and notation synthesis.
FACET_ORDER = (Facet.PROCESSING, Facet.STRUCTURE, Facet.PROPERTY, Facet.PERFORMANCE)


def is_valid_concept_id(value: str) -> bool:
    """ASCII letters/digits only, starting with an uppercase letter."""
    if not value or not value[0].isupper() or not value[0].isascii():
        return False
    return all(ch.isascii() and ch.isalnum() for ch in value)


@dataclass(frozen=True)
class Concept:
    """A vocabulary entry: one preferred label, synonyms, facet, optional parent."""

    id: ConceptId
    pref_label: str
    alt_labels: tuple[str, ...] = ()
    facet: Facet = Facet.STRUCTURE
    parent: ConceptId | None = None
    definition: str | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.alt_labels, tuple):
            object.__setattr__(self, "alt_labels", tuple(self.alt_labels))
        if not is_valid_concept_id(self.id):
            raise InvalidConceptError(
                f"invalid concept id {self.id!r}: ids are UpperCamelCase ASCII letters/digits"
            )
        if not self.pref_label:
            raise InvalidConceptError(f"concept {self.id}: prefLabel must be non-empty")
        seen = {normalize_phrase(self.pref_label)}
        for label in self.alt_labels:
            norm = normalize_phrase(label)
            if norm in seen:
                raise InvalidConceptError(
                    f"concept {self.id}: label {label!r} duplicates another label "
                    "after normalization"
                )
            seen.add(norm)

    @property
    def labels(self) -> tuple[str, ...]:
        """Preferred label first, then synonyms in stored order."""
        return (self.pref_label, *self.alt_labels)


def is_valid_relation_name(value: str) -> bool:
    """camelCase: ASCII letters/digits, starting with a lowercase letter."""
    if not value or not value[0].islower() or not value[0].isascii():
        return False
    return all(ch.isascii() and ch.isalnum() for ch in value)


@dataclass(frozen=True)
class RelationType:
    """A typed cross-concept relation with facet-level domain/range."""

    name: str
    domain_facet: Facet
    range_facet: Facet
    acyclic_required: bool = False

    def __post_init__(self) -> None:
        if not is_valid_relation_name(self.name):
            raise InvalidRelationTypeError(
                f"invalid relation name {self.name!r}: names are camelCase ASCII"
            )
        if self.name == RESERVED_RELATION_NAME:
            raise InvalidRelationTypeError(
                "isA is reserved; hierarchy is expressed through concept parents"
            )


@dataclass(frozen=True)
class RelationSchema:
    """The set of relation types an ontology may use. Stored sorted by name."""

    relations: tuple[RelationType, ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.relations, key=lambda r: r.name))
        names = [r.name for r in ordered]
        for name in names:
            if names.count(name) > 1:
                raise InvalidRelationTypeError(f"duplicate relation name {name!r} in schema")
        object.__setattr__(self, "relations", ordered)

    def get(self, name: str) -> RelationType | None:
        for relation in self.relations:
            if relation.name == name:
                return relation
        return None

    def __contains__(self, name: object) -> bool:
        return any(r.name == name for r in self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __len__(self) -> int:
        return len(self.relations)


@dataclass(frozen=True)
class RelationEdge:
    """subject --relation--> object between two existing concepts."""

    subject: ConceptId
    relation: str
    object: ConceptId

    def sort_key(self) -> tuple[str, str, str]:
        return (self.subject, self.relation, self.object)


@dataclass(frozen=True)
class Ontology:
    """Named, versioned, immutable container of concepts, edges, and schema.

    Construct through :func:`build_ontology`; the raw constructor performs no
    cross-object checking.
    """

    name: str
    version: str
    concepts: Mapping[ConceptId, Concept] = field(default_factory=dict)
    edges: tuple[RelationEdge, ...] = ()
    schema: RelationSchema = field(default_factory=RelationSchema)

    def __post_init__(self) -> None:
        if not isinstance(self.concepts, MappingProxyType):
            object.__setattr__(self, "concepts", MappingProxyType(dict(self.concepts)))
        if not isinstance(self.edges, tuple):
            object.__setattr__(self, "edges", tuple(self.edges))

    def concept(self, concept_id: ConceptId) -> Concept:
        try:
            return self.concepts[concept_id]
        except KeyError:
            raise UnknownConceptError(
                f"ontology {self.name!r} has no concept {concept_id!r}"
            ) from None

    def children(self, concept_id: ConceptId) -> list[ConceptId]:
        """Direct is-a children, sorted by id."""
        return sorted(c.id for c in self.concepts.values() if c.parent == concept_id)

    def roots(self, facet: Facet) -> list[ConceptId]:
        """Parentless concepts of ``facet``, sorted by id."""
        return sorted(
            c.id for c in self.concepts.values() if c.facet is facet and c.parent is None
        )


def build_ontology(
    name: str,
    version: str,
    concepts: Iterable[Concept],
    edges: Iterable[RelationEdge],
    schema: RelationSchema,
) -> Ontology:
    """Assemble and structurally verify an ontology.

    Raises a :class:`~facetforge.errors.BuildError` subclass on the first
    structural defect: duplicate ids, dangling parent/edge references,
    cross-facet parents, parent cycles, unknown relations, and self-edges.
    Edges are stored in canonical (subject, relation, object) order so that
    equal edge sets compare equal regardless of input order.
    """
    concept_map: dict[ConceptId, Concept] = {}
    for concept in concepts:
        if concept.id in concept_map:
            raise DuplicateIdError(f"duplicate concept id {concept.id!r}")
        concept_map[concept.id] = concept

    for concept in concept_map.values():
        if concept.parent is None:
            continue
        parent = concept_map.get(concept.parent)
        if parent is None:
            raise DanglingReferenceError(
                f"concept {concept.id}: parent {concept.parent!r} does not exist"
            )
        if parent.facet is not concept.facet:
            raise CrossFacetParentError(
                f"concept {concept.id} ({concept.facet}) has parent "
                f"{parent.id} ({parent.facet}); hierarchies stay within one facet"
            )

    # Parent links must form a forest; traversal operations rely on it.
    verified: set[ConceptId] = set()
    for concept in concept_map.values():
        chain: list[ConceptId] = []
        on_chain: set[ConceptId] = set()
        node: ConceptId | None = concept.id
        while node is not None and node not in verified:
            if node in on_chain:
                cycle = chain[chain.index(node):]
                raise ParentCycleError(
                    "parent links form a cycle: " + " -> ".join(cycle + [node])
                )
            chain.append(node)
            on_chain.add(node)
            node = concept_map[node].parent
        verified.update(on_chain)

    checked_edges: list[RelationEdge] = []
    for edge in edges:
        if edge.relation not in schema:
            raise UnknownRelationError(
                f"edge ({edge.subject}, {edge.relation}, {edge.object}): "
                f"relation {edge.relation!r} is not in the schema"
            )
        if edge.subject == edge.object:
            raise SelfEdgeError(
                f"edge ({edge.subject}, {edge.relation}, {edge.object}): "
                "subject and object must differ"
            )
        for endpoint in (edge.subject, edge.object):
            if endpoint not in concept_map:
                raise DanglingReferenceError(
                    f"edge ({edge.subject}, {edge.relation}, {edge.object}): "
                    f"concept {endpoint!r} does not exist"
                )
        checked_edges.append(edge)

    checked_edges.sort(key=RelationEdge.sort_key)
    return Ontology(
        name=name,
        version=version,
        concepts=concept_map,
        edges=tuple(checked_edges),
        schema=schema,
    )


@dataclass(frozen=True)
class FacetCounts:
    """Concept and label tallies per facet plus totals."""

    concepts_by_facet: Mapping[Facet, int]
    concept_total: int
    labels_by_facet: Mapping[Facet, int]
    label_total: int

    def __post_init__(self) -> None:
        for attr in ("concepts_by_facet", "labels_by_facet"):
            value = getattr(self, attr)
            if not isinstance(value, MappingProxyType):
                object.__setattr__(self, attr, MappingProxyType(dict(value)))

    def to_json_dict(self) -> dict:
        def section(by_facet: Mapping[Facet, int], total: int) -> dict:
            out = {facet.value: by_facet.get(facet, 0) for facet in FACET_ORDER}
            out["total"] = total
            return out

        return {
            "concepts": section(self.concepts_by_facet, self.concept_total),
            "labels": section(self.labels_by_facet, self.label_total),
        }


def stats(ontology: Ontology) -> FacetCounts:
    """Count concepts and labels (prefLabel + altLabels) per facet."""
    concept_counts = {facet: 0 for facet in FACET_ORDER}
    label_counts = {facet: 0 for facet in FACET_ORDER}
    for concept in ontology.concepts.values():
        concept_counts[concept.facet] += 1
        label_counts[concept.facet] += len(concept.labels)
    return FacetCounts(
        concepts_by_facet=concept_counts,
        concept_total=sum(concept_counts.values()),
        labels_by_facet=label_counts,
        label_total=sum(label_counts.values()),
    )


def ancestors(ontology: Ontology, concept_id: ConceptId) -> list[ConceptId]:
    """Parent chain from ``concept_id`` up to its facet root, nearest first."""
    concept = ontology.concept(concept_id)
    path: list[ConceptId] = []
    node = concept.parent
    while node is not None:
        path.append(node)
        node = ontology.concepts[node].parent
    return path


@dataclass(frozen=True)
class ConceptRelations:
    """Edges touching one concept, split by direction."""

    outgoing: tuple[RelationEdge, ...]
    incoming: tuple[RelationEdge, ...]


def relations_of(ontology: Ontology, concept_id: ConceptId) -> ConceptRelations:
    """All edges mentioning ``concept_id``, sorted by (relation, other endpoint)."""
    ontology.concept(concept_id)
    outgoing = [e for e in ontology.edges if e.subject == concept_id]
    incoming = [e for e in ontology.edges if e.object == concept_id]
    outgoing.sort(key=lambda e: (e.relation, e.object))
    incoming.sort(key=lambda e: (e.relation, e.subject))
    return ConceptRelations(outgoing=tuple(outgoing), incoming=tuple(incoming))
