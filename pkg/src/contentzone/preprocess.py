"""Text preparation: whitespace normalization, sentence splitting, tokenizing.

Everything here is a pure function over immutable values. A document is
flattened into one continuous line of text, cut into sentences with a small
rule set, and each sentence is split into tokens that carry no tag yet.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Iterator, Optional

if TYPE_CHECKING:
    from .tagger import PosTag

_WHITESPACE = re.compile(r"\s+")
_TERMINATOR = re.compile(r"[.!?]+[\"'”’)\]]*")

# Sentence-final periods after these words do not end a sentence.
ABBREVIATIONS = frozenset(
    ["mr.", "mrs.", "ms.", "dr.", "prof.", "st.", "e.g.", "i.e.", "etc."]
)

# Characters split off the edges of whitespace-delimited chunks.
EDGE_PUNCTUATION = frozenset(",.!?;:\"'()“”‘’")
_OPENING_QUOTES = "\"'“‘(["
_APOSTROPHES = "'’"


@dataclass(frozen=True)
class RawDocument:
    content: str
    source_id: str = "document"


@dataclass(frozen=True)
class Token:
    surface: str
    position: int
    tag: Optional["PosTag"] = None


@dataclass(frozen=True)
class Sentence:
    """One sentence of the normalized text.

    ``start`` and ``end`` are character offsets into the normalized text, so
    ``text == normalized[start:end]``.
    """

    index: int
    text: str
    start: int = 0
    end: int = 0
    tokens: tuple[Token, ...] = field(default=(), compare=True)

    @property
    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]


def normalize(doc: RawDocument | str) -> str:
    """Collapse every whitespace run (line breaks, tabs, blank lines) to one space."""
    text = doc.content if isinstance(doc, RawDocument) else doc
    return _WHITESPACE.sub(" ", text).strip()


def _is_abbreviation(text: str, end: int) -> bool:
    begin = text.rfind(" ", 0, end) + 1
    word = text[begin:end].lstrip(_OPENING_QUOTES).lower()
    return word in ABBREVIATIONS


def _boundary_after(text: str, m: re.Match) -> bool:
    rest = m.end()
    if rest == len(text):
        return True
    if text[rest] != " ":
        return False
    i = rest + 1
    while i < len(text) and text[i] in _OPENING_QUOTES:
        i += 1
    return i < len(text) and text[i].isupper()


def iter_sentences(text: str) -> Iterator[Sentence]:
    """Lazily split normalized text into sentences (tokens left empty)."""
    index = 0
    start = 0
    for m in _TERMINATOR.finditer(text):
        if m.end() <= start or not _boundary_after(text, m):
            continue
        if m.group() == "." and _is_abbreviation(text, m.end()):
            continue
        yield Sentence(index, text[start:m.end()], start, m.end())
        index += 1
        start = m.end() + 1
    if start < len(text):
        yield Sentence(index, text[start:], start, len(text))


def segment_sentences(text: str) -> list[Sentence]:
    return list(iter_sentences(text))


def _split_chunk(chunk: str) -> list[str]:
    lead: list[str] = []
    trail: list[str] = []
    while chunk and chunk[0] in EDGE_PUNCTUATION:
        lead.append(chunk[0])
        chunk = chunk[1:]
    quoted = bool(lead) and lead[-1] in _APOSTROPHES
    while chunk and chunk[-1] in EDGE_PUNCTUATION:
        if chunk.lower() in ABBREVIATIONS:
            break
        # possessive: "Benz'" keeps its apostrophe unless the chunk opened a quote
        if chunk[-1] in _APOSTROPHES and not quoted and len(chunk) > 1 and chunk[-2].isalpha():
            break
        trail.append(chunk[-1])
        chunk = chunk[:-1]
    return lead + ([chunk] if chunk else []) + trail[::-1]


def tokenize_text(text: str) -> list[str]:
    out: list[str] = []
    for chunk in text.split():
        out.extend(_split_chunk(chunk))
    return out


def tokenize(sentence: Sentence) -> Sentence:
    tokens = tuple(Token(s, i) for i, s in enumerate(tokenize_text(sentence.text)))
    return replace(sentence, tokens=tokens)


def prepare(doc: RawDocument | str) -> list[Sentence]:
    """Normalize, segment and tokenize a whole document."""
    return [tokenize(s) for s in iter_sentences(normalize(doc))]
