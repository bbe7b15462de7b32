"""Concept extraction from unstructured text.

Matching is greedy leftmost-longest over the normalized token stream: at each
token position the longest known label phrase wins, the matched span is
consumed, and scanning resumes after it. A phrase shared by several concepts
emits one hit per candidate, all flagged ambiguous, over the same span.

The automaton is immutable after :func:`build_automaton`; indexing shares it
freely across threads.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import EmptyLabelError
from .model import FACET_ORDER, ConceptId, Facet, Ontology
from .textnorm import DEFAULT_CONFIG, NormalizationConfig, Token, tokenize

Phrase = tuple[str, ...]

NOTATION_PREFIXES = {
    Facet.PROCESSING: "P",
    Facet.STRUCTURE: "S",
    Facet.PROPERTY: "Pr",
    Facet.PERFORMANCE: "Pe",
}


def normalize(text: str, config: NormalizationConfig = DEFAULT_CONFIG) -> list[Token]:
    """Tokenize and fold ``text``; offsets always index the original string."""
    return tokenize(text, config)


@dataclass(frozen=True)
class AutomatonEntry:
    """One (concept, label) pair reachable through a normalized phrase."""

    concept_id: ConceptId
    is_pref_label: bool


class _TrieNode:
    __slots__ = ("children", "entries")

    def __init__(self) -> None:
        self.children: dict[str, _TrieNode] = {}
        self.entries: list[AutomatonEntry] = []


class MatchAutomaton:
    """Token-trie over every label phrase of an ontology.

    ``phrases`` maps each normalized token sequence to its entries; a sequence
    may map to several concepts, and that ambiguity is preserved.
    """

    def __init__(
        self,
        phrases: dict[Phrase, tuple[AutomatonEntry, ...]],
        facets: dict[ConceptId, Facet],
        config: NormalizationConfig,
    ) -> None:
        self._phrases = MappingProxyType(dict(phrases))
        self._facets = MappingProxyType(dict(facets))
        self.config = config
        self.max_phrase_len = max((len(p) for p in phrases), default=0)
        self._root = _TrieNode()
        for phrase, entries in phrases.items():
            node = self._root
            for token_text in phrase:
                node = node.children.setdefault(token_text, _TrieNode())
            node.entries = list(entries)

    @property
    def phrases(self) -> Mapping[Phrase, tuple[AutomatonEntry, ...]]:
        return self._phrases

    @property
    def entry_count(self) -> int:
        """Total (concept, label) pairs, the automaton's size."""
        return sum(len(entries) for entries in self._phrases.values())

    def facet_of(self, concept_id: ConceptId) -> Facet:
        return self._facets[concept_id]

    def longest_match_at(
        self, tokens: Sequence[Token], start: int
    ) -> tuple[int, tuple[AutomatonEntry, ...]] | None:
        """Longest phrase starting at token ``start``, or None."""
        node = self._root
        best: tuple[int, tuple[AutomatonEntry, ...]] | None = None
        limit = min(len(tokens), start + self.max_phrase_len)
        for i in range(start, limit):
            node = node.children.get(tokens[i].text)
            if node is None:
                break
            if node.entries:
                best = (i - start + 1, tuple(node.entries))
        return best


def build_automaton(
    ontology: Ontology, config: NormalizationConfig = DEFAULT_CONFIG
) -> MatchAutomaton:
    """One automaton entry per (concept, label) over prefLabel and altLabels.

    Raises :class:`EmptyLabelError` for a label that normalizes to nothing
    (punctuation-only); such a label could never match.
    """
    phrases: dict[Phrase, list[AutomatonEntry]] = {}
    facets: dict[ConceptId, Facet] = {}
    for concept in ontology.concepts.values():
        facets[concept.id] = concept.facet
        for position, label in enumerate(concept.labels):
            tokens = tokenize(label, config)
            if not tokens:
                raise EmptyLabelError(
                    f"concept {concept.id}: label {label!r} normalizes to zero tokens"
                )
            phrase = tuple(t.text for t in tokens)
            phrases.setdefault(phrase, []).append(
                AutomatonEntry(concept.id, is_pref_label=position == 0)
            )
    frozen = {
        phrase: tuple(sorted(entries, key=lambda e: e.concept_id))
        for phrase, entries in phrases.items()
    }
    return MatchAutomaton(frozen, facets, config)


@dataclass(frozen=True)
class ConceptHit:
    """One extracted mention: which concept, through which label, where."""

    concept_id: ConceptId
    facet: Facet
    matched_surface: str
    via_label: str
    span_start: int
    span_end: int
    ambiguous: bool

    def to_json_dict(self) -> dict:
        return {
            "concept": self.concept_id,
            "facet": self.facet.value,
            "surface": self.matched_surface,
            "label": self.via_label,
            "start": self.span_start,
            "end": self.span_end,
            "ambiguous": self.ambiguous,
        }


@dataclass(frozen=True)
class ConceptScore:
    """Aggregate over a concept's hits; score favors multi-word labels."""

    concept_id: ConceptId
    count: int
    score: int

    def to_json_dict(self) -> dict:
        return {"concept": self.concept_id, "count": self.count, "score": self.score}


@dataclass(frozen=True)
class DocumentIndexResult:
    """Hits in document order plus per-concept and per-facet aggregates."""

    hits: tuple[ConceptHit, ...]
    per_concept: tuple[ConceptScore, ...]
    per_facet: Mapping[Facet, tuple[ConceptScore, ...]] = field(default_factory=dict)
    notation: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.per_facet, MappingProxyType):
            object.__setattr__(self, "per_facet", MappingProxyType(dict(self.per_facet)))

    def to_json_dict(self) -> dict:
        return {
            "hits": [h.to_json_dict() for h in self.hits],
            "perConcept": [a.to_json_dict() for a in self.per_concept],
            "perFacet": {
                facet.value: [a.to_json_dict() for a in aggregates]
                for facet, aggregates in self.per_facet.items()
            },
            "notation": self.notation,
        }


def synthesize_notation(per_facet: Mapping[Facet, Sequence[ConceptScore]]) -> str:
    """Compound facet notation: top concept per facet, fixed P;S;Pr;Pe order.

    Top means highest score, ties broken by ascending concept id; facets with
    no aggregates contribute no segment.
    """
    segments: list[str] = []
    for facet in FACET_ORDER:
        aggregates = per_facet.get(facet)
        if not aggregates:
            continue
        top = min(aggregates, key=lambda a: (-a.score, a.concept_id))
        segments.append(f"{NOTATION_PREFIXES[facet]}:{top.concept_id}")
    return ";".join(segments)


def index_document(automaton: MatchAutomaton, text: str) -> DocumentIndexResult:
    """Extract concept hits from ``text`` and aggregate them.

    Score per concept is the summed token length of the labels its hits came
    through, so specific multi-word terms outrank generic single tokens.
    """
    tokens = tokenize(text, automaton.config)
    hits: list[ConceptHit] = []
    i = 0
    while i < len(tokens):
        match = automaton.longest_match_at(tokens, i)
        if match is None:
            i += 1
            continue
        length, entries = match
        start = tokens[i].start
        end = tokens[i + length - 1].end
        via_label = " ".join(t.text for t in tokens[i:i + length])
        ambiguous = len(entries) > 1
        for entry in entries:
            hits.append(ConceptHit(
                concept_id=entry.concept_id,
                facet=automaton.facet_of(entry.concept_id),
                matched_surface=text[start:end],
                via_label=via_label,
                span_start=start,
                span_end=end,
                ambiguous=ambiguous,
            ))
        i += length

    counts: dict[ConceptId, int] = {}
    scores: dict[ConceptId, int] = {}
    facet_of: dict[ConceptId, Facet] = {}
    for hit in hits:
        counts[hit.concept_id] = counts.get(hit.concept_id, 0) + 1
        scores[hit.concept_id] = scores.get(hit.concept_id, 0) + len(hit.via_label.split(" "))
        facet_of[hit.concept_id] = hit.facet
    ordered = sorted(counts, key=lambda cid: (-scores[cid], cid))
    per_concept = tuple(ConceptScore(cid, counts[cid], scores[cid]) for cid in ordered)
    per_facet: dict[Facet, tuple[ConceptScore, ...]] = {}
    for facet in FACET_ORDER:
        group = tuple(a for a in per_concept if facet_of[a.concept_id] is facet)
        if group:
            per_facet[facet] = group

    return DocumentIndexResult(
        hits=tuple(hits),
        per_concept=per_concept,
        per_facet=per_facet,
        notation=synthesize_notation(per_facet),
    )
