"""Brute-force reference indexer used to cross-check the automaton path.

No trie, no shared matching or aggregation code: every label phrase of every
concept is compared token by token at every position. Unusable beyond small
inputs, which is the point; :func:`oracle_index` must agree with
:func:`facetforge.indexer.index_document` exactly.
"""
from __future__ import annotations

from .errors import EmptyLabelError
from .indexer import ConceptHit, ConceptScore, DocumentIndexResult
from .model import FACET_ORDER, ConceptId, Facet, Ontology
from .textnorm import DEFAULT_CONFIG, NormalizationConfig, tokenize

_PREFIXES = {
    Facet.PROCESSING: "P",
    Facet.STRUCTURE: "S",
    Facet.PROPERTY: "Pr",
    Facet.PERFORMANCE: "Pe",
}


def oracle_index(
    ontology: Ontology,
    config: NormalizationConfig = DEFAULT_CONFIG,
    text: str = "",
) -> DocumentIndexResult:
    """Greedy leftmost-longest matching by exhaustive phrase comparison."""
    # (phrase tokens, concept id) for every label, straight off the ontology.
    label_phrases: list[tuple[tuple[str, ...], ConceptId]] = []
    for concept in ontology.concepts.values():
        for label in concept.labels:
            phrase = tuple(t.text for t in tokenize(label, config))
            if not phrase:
                raise EmptyLabelError(
                    f"concept {concept.id}: label {label!r} normalizes to zero tokens"
                )
            label_phrases.append((phrase, concept.id))

    tokens = tokenize(text, config)
    hits: list[ConceptHit] = []
    i = 0
    while i < len(tokens):
        longest = 0
        candidates: set[ConceptId] = set()
        for phrase, concept_id in label_phrases:
            if len(phrase) < longest or i + len(phrase) > len(tokens):
                continue
            if all(tokens[i + k].text == phrase[k] for k in range(len(phrase))):
                if len(phrase) > longest:
                    longest = len(phrase)
                    candidates = {concept_id}
                else:
                    candidates.add(concept_id)
        if not longest:
            i += 1
            continue
        start = tokens[i].start
        end = tokens[i + longest - 1].end
        via_label = " ".join(t.text for t in tokens[i:i + longest])
        for concept_id in sorted(candidates):
            hits.append(ConceptHit(
                concept_id=concept_id,
                facet=ontology.concepts[concept_id].facet,
                matched_surface=text[start:end],
                via_label=via_label,
                span_start=start,
                span_end=end,
                ambiguous=len(candidates) > 1,
            ))
        i += longest

    counts: dict[ConceptId, int] = {}
    scores: dict[ConceptId, int] = {}
    for hit in hits:
        counts[hit.concept_id] = counts.get(hit.concept_id, 0) + 1
        scores[hit.concept_id] = scores.get(hit.concept_id, 0) + hit.via_label.count(" ") + 1

    per_concept = tuple(
        ConceptScore(cid, counts[cid], scores[cid])
        for cid in sorted(counts, key=lambda c: (-scores[c], c))
    )
    per_facet: dict[Facet, tuple[ConceptScore, ...]] = {}
    for facet in FACET_ORDER:
        group = tuple(
            a for a in per_concept if ontology.concepts[a.concept_id].facet is facet
        )
        if group:
            per_facet[facet] = group

    segments = []
    for facet in FACET_ORDER:
        if facet in per_facet:
            best = sorted(per_facet[facet], key=lambda a: (-a.score, a.concept_id))[0]
            segments.append(f"{_PREFIXES[facet]}:{best.concept_id}")

    return DocumentIndexResult(
        hits=tuple(hits),
        per_concept=per_concept,
        per_facet=per_facet,
        notation=";".join(segments),
    )
