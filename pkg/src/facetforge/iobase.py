"""Shared pieces of the two serialization formats."""
from __future__ import annotations

from dataclasses import dataclass

from .model import Facet, Ontology

# Both spellings of the ordering relation appear in real vocabularies, so
# parsers fold them to one canonical name.
RELATION_ALIASES = {
    "isPreceededBy": "isPrecededBy",
    "isPreceededby": "isPrecededBy",
}


@dataclass(frozen=True)
class ParseWarning:
    """Non-fatal parse finding; never changes the accepted content."""

    line: int
    column: int
    code: str
    message: str

    def to_json_dict(self) -> dict:
        return {
            "line": self.line,
            "column": self.column,
            "code": self.code,
            "message": self.message,
        }


@dataclass(frozen=True)
class ParseOutcome:
    ontology: Ontology
    warnings: tuple[ParseWarning, ...] = ()


def facet_from_string(value: str) -> Facet | None:
    try:
        return Facet.from_name(value)
    except ValueError:
        return None


def canonical_relation_name(name: str) -> tuple[str, bool]:
    """Returns (canonical name, True if an alias spelling was folded)."""
    canonical = RELATION_ALIASES.get(name)
    if canonical is None:
        return name, False
    return canonical, True


def dedupe_alt_labels(
    pref_label: str, alt_labels: list[str], normalize
) -> tuple[list[str], list[str]]:
    """Drop altLabels that collide (normalized) with prefLabel or each other.

    Returns (kept labels in order, dropped labels).
    """
    kept: list[str] = []
    dropped: list[str] = []
    seen = {normalize(pref_label)}
    for label in alt_labels:
        norm = normalize(label)
        if norm in seen:
            dropped.append(label)
        else:
            seen.add(norm)
            kept.append(label)
    return kept, dropped
