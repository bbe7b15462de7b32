"""Text normalization primitives shared by the model, validator, and indexer.

Tokenization walks the original string so token offsets always index into the
text as given; NFC folding is applied per token, which cannot move boundaries
because boundary characters are never composed into word characters.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass


@dataclass(frozen=True)
class NormalizationConfig:
    """Controls how surface text is folded before matching."""

    fold_case: bool = True
    fold_plurals: bool = False


DEFAULT_CONFIG = NormalizationConfig()


@dataclass(frozen=True)
class Token:
    """A normalized token plus its [start, end) offsets in the original text."""

    text: str
    start: int
    end: int


def _is_word_char(ch: str) -> bool:
    # Combining marks count as word characters so that decomposed accents
    # ("e" + U+0301) stay inside one token and NFC-compose cleanly.
    return ch.isalnum() or unicodedata.category(ch).startswith("M")


def _fold(raw: str, config: NormalizationConfig) -> str:
    text = unicodedata.normalize("NFC", raw)
    if config.fold_case:
        text = text.casefold()
    if config.fold_plurals and len(text) >= 4 and text.endswith("s"):
        text = text[:-1]
    return text


def tokenize(text: str, config: NormalizationConfig = DEFAULT_CONFIG) -> list[Token]:
    """Split ``text`` on maximal runs of non-word characters.

    Returns tokens in order, non-overlapping, with offsets into ``text``.
    """
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        if _is_word_char(text[i]):
            j = i + 1
            while j < n and _is_word_char(text[j]):
                j += 1
            tokens.append(Token(_fold(text[i:j], config), i, j))
            i = j
        else:
            i += 1
    return tokens


def normalize_phrase(text: str, config: NormalizationConfig = DEFAULT_CONFIG) -> str:
    """Collapse ``text`` to its canonical matching form (space-joined tokens)."""
    return " ".join(token.text for token in tokenize(text, config))
