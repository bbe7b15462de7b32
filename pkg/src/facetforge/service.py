"""HTTP service exposing search, browse, and index over loaded ontologies.

The registry is built once at startup and read-only afterwards; request
handling shares it with no mutable state, so concurrent requests are safe and
every GET is repeatable. Submitted documents are indexed and forgotten.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .errors import OntologyError
from .indexer import MatchAutomaton, build_automaton, index_document
from .iobase import ParseOutcome
from .jsonio import parse_canonical_json
from .model import FACET_ORDER, Concept, Facet, Ontology, ancestors, relations_of, stats
from .textnorm import DEFAULT_CONFIG, NormalizationConfig
from .turtleio import parse_skos_turtle
from .validate import validate

MAX_INDEX_TEXT_BYTES = 1024 * 1024


def parse_ontology_file(path: Path) -> ParseOutcome:
    """Parse .json or .ttl by extension; anything else is sniffed by content."""
    data = path.read_bytes()
    suffix = path.suffix.lower()
    if suffix == ".json":
        return parse_canonical_json(data)
    if suffix in (".ttl", ".turtle"):
        return parse_skos_turtle(data.decode("utf-8"))
    if data.lstrip()[:1] == b"{":
        return parse_canonical_json(data)
    return parse_skos_turtle(data.decode("utf-8"))


@dataclass(frozen=True)
class LoadedOntology:
    ontology: Ontology
    automaton: MatchAutomaton
    source: Path
    loaded_at: datetime


@dataclass
class OntologyRegistry:
    """Name-keyed ontologies plus the load failures that were skipped."""

    entries: dict[str, LoadedOntology] = field(default_factory=dict)
    failures: list[tuple[Path, str]] = field(default_factory=list)
    config: NormalizationConfig = DEFAULT_CONFIG

    def add(self, ontology: Ontology, source: Path) -> None:
        if ontology.name in self.entries:
            raise OntologyError(
                f"ontology name {ontology.name!r} already registered "
                f"(from {self.entries[ontology.name].source})"
            )
        self.entries[ontology.name] = LoadedOntology(
            ontology=ontology,
            automaton=build_automaton(ontology, self.config),
            source=source,
            loaded_at=datetime.now(timezone.utc),
        )

    def get(self, name: str) -> LoadedOntology | None:
        return self.entries.get(name)


def load_registry(
    directory: Path, config: NormalizationConfig = DEFAULT_CONFIG
) -> OntologyRegistry:
    """Load every .json/.ttl in ``directory``; bad files are recorded, not fatal."""
    registry = OntologyRegistry(config=config)
    paths = sorted(
        p for p in directory.iterdir()
        if p.is_file() and p.suffix.lower() in (".json", ".ttl", ".turtle")
    )
    for path in paths:
        try:
            outcome = parse_ontology_file(path)
            registry.add(outcome.ontology, path)
        except (OntologyError, UnicodeDecodeError, OSError) as exc:
            registry.failures.append((path, str(exc)))
    return registry


def _tree_nodes(ontology: Ontology, facet: Facet) -> list[dict]:
    children_of: dict[str, list[Concept]] = {}
    roots: list[Concept] = []
    for concept in ontology.concepts.values():
        if concept.facet is not facet:
            continue
        if concept.parent is None:
            roots.append(concept)
        else:
            children_of.setdefault(concept.parent, []).append(concept)

    def node(concept: Concept) -> dict:
        kids = sorted(
            children_of.get(concept.id, []), key=lambda c: (c.pref_label, c.id)
        )
        return {
            "conceptId": concept.id,
            "prefLabel": concept.pref_label,
            "children": [node(kid) for kid in kids],
        }

    return [node(c) for c in sorted(roots, key=lambda c: (c.pref_label, c.id))]


def _search_entries(ontology: Ontology, query: str) -> list[dict]:
    needle = query.casefold()
    pref_matches: list[dict] = []
    alt_matches: list[dict] = []
    for concept in sorted(ontology.concepts.values(), key=lambda c: c.id):
        if needle in concept.pref_label.casefold():
            pref_matches.append(
                {"conceptId": concept.id, "matchedIn": "pref", "label": concept.pref_label}
            )
            continue
        for label in concept.alt_labels:
            if needle in label.casefold():
                alt_matches.append(
                    {"conceptId": concept.id, "matchedIn": "alt", "label": label}
                )
                break
    return pref_matches + alt_matches


def concept_detail(ontology: Ontology, concept: Concept) -> dict:
    relations = relations_of(ontology, concept.id)
    return {
        "id": concept.id,
        "prefLabel": concept.pref_label,
        "altLabels": list(concept.alt_labels),
        "facet": concept.facet.value,
        "parent": concept.parent,
        "definition": concept.definition,
        "ancestors": ancestors(ontology, concept.id),
        "outgoing": [
            {
                "relation": e.relation,
                "object": e.object,
                "objectLabel": ontology.concepts[e.object].pref_label,
            }
            for e in relations.outgoing
        ],
        "incoming": [
            {
                "relation": e.relation,
                "subject": e.subject,
                "subjectLabel": ontology.concepts[e.subject].pref_label,
            }
            for e in relations.incoming
        ],
    }


def create_app(registry: OntologyRegistry, cors_origin: str = "*") -> FastAPI:
    app = FastAPI(title="facetforge", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def entry_or_404(name: str) -> LoadedOntology:
        entry = registry.get(name)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"unknown ontology {name!r}")
        return entry

    @app.get("/ontologies")
    def list_ontologies() -> list[dict]:
        out = []
        for name in sorted(registry.entries):
            entry = registry.entries[name]
            out.append({
                "name": name,
                "version": entry.ontology.version,
                "counts": stats(entry.ontology).to_json_dict(),
                "loadedAt": entry.loaded_at.isoformat(),
            })
        return out

    @app.get("/ontologies/{name}/tree")
    def browse(name: str, facet: str | None = None) -> dict:
        entry = entry_or_404(name)
        if facet is None:
            facets = FACET_ORDER
        else:
            try:
                facets = (Facet.from_name(facet),)
            except ValueError:
                raise HTTPException(
                    status_code=400, detail=f"invalid facet name {facet!r}"
                ) from None
        return {f.value: _tree_nodes(entry.ontology, f) for f in facets}

    @app.get("/ontologies/{name}/concepts/{concept_id}")
    def concept(name: str, concept_id: str) -> dict:
        entry = entry_or_404(name)
        found = entry.ontology.concepts.get(concept_id)
        if found is None:
            raise HTTPException(status_code=404, detail=f"unknown concept {concept_id!r}")
        return concept_detail(entry.ontology, found)

    @app.get("/ontologies/{name}/search")
    def search(name: str, q: str = "") -> list[dict]:
        entry = entry_or_404(name)
        if not q:
            raise HTTPException(status_code=400, detail="query must be non-empty")
        return _search_entries(entry.ontology, q)

    @app.get("/ontologies/{name}/validation")
    def validation(name: str) -> dict:
        entry = entry_or_404(name)
        return validate(entry.ontology).to_json_dict()

    @app.post("/ontologies/{name}/index")
    async def index(name: str, request: Request) -> JSONResponse:
        entry = entry_or_404(name)
        body = await request.body()
        if len(body) > MAX_INDEX_TEXT_BYTES + 4096:
            raise HTTPException(status_code=413, detail="request body too large")
        try:
            payload = json.loads(body)
        except (UnicodeDecodeError, json.JSONDecodeError):
            raise HTTPException(status_code=400, detail="body must be JSON") from None
        if not isinstance(payload, dict) or not isinstance(payload.get("text"), str):
            raise HTTPException(
                status_code=400, detail='body must be {"text": "..."}'
            )
        text = payload["text"]
        if len(text.encode("utf-8")) > MAX_INDEX_TEXT_BYTES:
            raise HTTPException(status_code=413, detail="text exceeds 1 MiB")
        result = index_document(entry.automaton, text)
        return JSONResponse(result.to_json_dict())

    return app
