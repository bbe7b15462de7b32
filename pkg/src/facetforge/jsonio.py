"""Canonical JSON format: the system-of-record serialization.

The serializer is canonical: concepts sorted by id, edges in their stored
(already canonical) order, two-space indentation, UTF-8, trailing newline.
Output is byte-identical across runs and platforms, and a fixed point after
one pass.
"""
from __future__ import annotations

import json
from typing import Any

from .errors import DocumentSchemaError, DocumentSyntaxError, SourceLocation
from .iobase import (
    ParseOutcome,
    ParseWarning,
    canonical_relation_name,
    dedupe_alt_labels,
    facet_from_string,
)
from .model import (
    Concept,
    Ontology,
    RelationEdge,
    RelationSchema,
    RelationType,
    build_ontology,
)
from .textnorm import normalize_phrase

_TOP_KEYS = ("name", "version", "schema", "concepts", "edges")
_CONCEPT_KEYS = {"id", "prefLabel", "altLabels", "facet", "parent", "definition"}
_RELATION_KEYS = {"name", "domain", "range", "acyclic"}
_EDGE_KEYS = {"subject", "relation", "object"}


def _location_of_byte_offset(data: bytes, offset: int) -> SourceLocation:
    prefix = data[:offset]
    line = prefix.count(b"\n") + 1
    column = offset - (prefix.rfind(b"\n") + 1) + 1
    return SourceLocation(line, column)


def _require(obj: dict, key: str, kind: type, where: str) -> Any:
    if key not in obj:
        raise DocumentSchemaError(f"{where}: missing required key {key!r}")
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise DocumentSchemaError(
            f"{where}.{key}: expected {kind.__name__}, got {type(value).__name__}"
        )
    return value


def _optional_str(obj: dict, key: str, where: str) -> str | None:
    value = obj.get(key)
    if value is None:
        return None
    if not isinstance(value, str):
        raise DocumentSchemaError(
            f"{where}.{key}: expected string or null, got {type(value).__name__}"
        )
    return value


def _facet(value: Any, where: str):
    if not isinstance(value, str):
        raise DocumentSchemaError(f"{where}: facet must be a string")
    facet = facet_from_string(value)
    if facet is None:
        raise DocumentSchemaError(
            f"{where}: {value!r} is not one of Processing, Structure, Property, Performance"
        )
    return facet


def parse_canonical_json(data: bytes | str) -> ParseOutcome:
    """Parse the canonical JSON document format.

    Syntax problems raise :class:`DocumentSyntaxError` with the 1-based
    line/column; shape problems raise :class:`DocumentSchemaError` naming the
    offending path; structural defects propagate from ``build_ontology``.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentSyntaxError(
                f"invalid UTF-8: {exc.reason}", _location_of_byte_offset(data, exc.start)
            ) from None
    else:
        text = data

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, SourceLocation(exc.lineno, exc.colno)) from None

    if not isinstance(doc, dict):
        raise DocumentSchemaError("top level must be an object")

    warnings: list[ParseWarning] = []

    def warn(code: str, message: str) -> None:
        # The stdlib decoder exposes no value positions, so warnings anchor 1:1.
        warnings.append(ParseWarning(1, 1, code, message))

    def check_unknown(obj: dict, allowed: set[str], where: str) -> None:
        for key in obj:
            if key not in allowed:
                warn("unknown-key", f"{where}: ignoring unknown key {key!r}")

    name = _require(doc, "name", str, "document")
    version = _require(doc, "version", str, "document")
    for key in doc:
        if key not in _TOP_KEYS:
            warn("unknown-key", f"document: ignoring unknown key {key!r}")

    relations = []
    for i, entry in enumerate(_require(doc, "schema", list, "document")):
        where = f"schema[{i}]"
        if not isinstance(entry, dict):
            raise DocumentSchemaError(f"{where}: expected object")
        check_unknown(entry, _RELATION_KEYS, where)
        raw_name = _require(entry, "name", str, where)
        rel_name, folded = canonical_relation_name(raw_name)
        if folded:
            warn("relation-alias", f"{where}: normalized {raw_name!r} to {rel_name!r}")
        acyclic = entry.get("acyclic", False)
        if not isinstance(acyclic, bool):
            raise DocumentSchemaError(f"{where}.acyclic: expected boolean")
        relations.append(RelationType(
            name=rel_name,
            domain_facet=_facet(_require(entry, "domain", str, where), f"{where}.domain"),
            range_facet=_facet(_require(entry, "range", str, where), f"{where}.range"),
            acyclic_required=acyclic,
        ))

    concepts = []
    for i, entry in enumerate(_require(doc, "concepts", list, "document")):
        where = f"concepts[{i}]"
        if not isinstance(entry, dict):
            raise DocumentSchemaError(f"{where}: expected object")
        check_unknown(entry, _CONCEPT_KEYS, where)
        concept_id = _require(entry, "id", str, where)
        pref_label = _require(entry, "prefLabel", str, where)
        raw_alts = entry.get("altLabels", [])
        if not isinstance(raw_alts, list) or any(not isinstance(v, str) for v in raw_alts):
            raise DocumentSchemaError(f"{where}.altLabels: expected array of strings")
        alt_labels, dropped = dedupe_alt_labels(pref_label, raw_alts, normalize_phrase)
        for label in dropped:
            warn(
                "duplicate-altlabel",
                f"{where}: dropped altLabel {label!r} (duplicate after normalization)",
            )
        concepts.append(Concept(
            id=concept_id,
            pref_label=pref_label,
            alt_labels=tuple(alt_labels),
            facet=_facet(_require(entry, "facet", str, where), f"{where}.facet"),
            parent=_optional_str(entry, "parent", where),
            definition=_optional_str(entry, "definition", where),
        ))

    edges = []
    for i, entry in enumerate(_require(doc, "edges", list, "document")):
        where = f"edges[{i}]"
        if not isinstance(entry, dict):
            raise DocumentSchemaError(f"{where}: expected object")
        check_unknown(entry, _EDGE_KEYS, where)
        raw_relation = _require(entry, "relation", str, where)
        relation, folded = canonical_relation_name(raw_relation)
        if folded:
            warn("relation-alias", f"{where}: normalized {raw_relation!r} to {relation!r}")
        edges.append(RelationEdge(
            subject=_require(entry, "subject", str, where),
            relation=relation,
            object=_require(entry, "object", str, where),
        ))

    ontology = build_ontology(name, version, concepts, edges, RelationSchema(tuple(relations)))
    return ParseOutcome(ontology=ontology, warnings=tuple(warnings))


def serialize_canonical_json(ontology: Ontology) -> bytes:
    """Deterministic canonical bytes; parse of the output reproduces the input."""
    doc = {
        "name": ontology.name,
        "version": ontology.version,
        "schema": [
            {
                "name": r.name,
                "domain": r.domain_facet.value,
                "range": r.range_facet.value,
                "acyclic": r.acyclic_required,
            }
            for r in ontology.schema  # stored sorted by name
        ],
        "concepts": [
            {
                "id": c.id,
                "prefLabel": c.pref_label,
                "altLabels": list(c.alt_labels),
                "facet": c.facet.value,
                "parent": c.parent,
                "definition": c.definition,
            }
            for c in sorted(ontology.concepts.values(), key=lambda c: c.id)
        ],
        "edges": [
            {"subject": e.subject, "relation": e.relation, "object": e.object}
            for e in ontology.edges  # stored in canonical order
        ],
    }
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
