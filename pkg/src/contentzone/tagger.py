"""Deterministic part-of-speech tagging from a closed-class lexicon.

Tags are assigned token by token in a fixed priority order: punctuation,
lexicon lookup, capitalization, suffix rules, numerals, then a NOUN
fallback. The lexicon is a plain tab-separated file and can be swapped or
extended by the user.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import cached_property
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Optional

from .errors import LexiconError
from .preprocess import Sentence, Token


class PosTag(str, Enum):
    PROPER_NOUN = "PROPER_NOUN"
    NOUN = "NOUN"
    VERB = "VERB"
    PRONOUN = "PRONOUN"
    POSSESSIVE_PRONOUN = "POSSESSIVE_PRONOUN"
    DETERMINER = "DETERMINER"
    ADJECTIVE = "ADJECTIVE"
    ADVERB = "ADVERB"
    PREPOSITION = "PREPOSITION"
    CONJUNCTION = "CONJUNCTION"
    NUMBER = "NUMBER"
    PUNCT = "PUNCT"
    OTHER = "OTHER"


class PronounCategory(str, Enum):
    SUBJECT_SINGULAR = "subject_singular"
    OBJECT_POSSESSIVE = "object_possessive"
    PLURAL = "plural"


PRONOUNS_OF_INTEREST: Mapping[str, PronounCategory] = {
    "he": PronounCategory.SUBJECT_SINGULAR,
    "she": PronounCategory.SUBJECT_SINGULAR,
    "his": PronounCategory.OBJECT_POSSESSIVE,
    "him": PronounCategory.OBJECT_POSSESSIVE,
    "her": PronounCategory.OBJECT_POSSESSIVE,
    "they": PronounCategory.PLURAL,
    "their": PronounCategory.PLURAL,
}

# Tags whose lexicon entries are open-class words, not stopwords.
OPEN_CLASS = frozenset([PosTag.NOUN, PosTag.PROPER_NOUN, PosTag.ADJECTIVE])

_PRONOUN_TAGS: Mapping[str, PosTag] = {
    "he": PosTag.PRONOUN,
    "she": PosTag.PRONOUN,
    "him": PosTag.PRONOUN,
    "her": PosTag.PRONOUN,
    "they": PosTag.PRONOUN,
    "his": PosTag.POSSESSIVE_PRONOUN,
    "their": PosTag.POSSESSIVE_PRONOUN,
}

_NUMERIC = re.compile(r"^\d+(?:[.,]\d+)*$")
_NOMINAL_FOLLOWERS = frozenset(
    [PosTag.NOUN, PosTag.PROPER_NOUN, PosTag.ADJECTIVE, PosTag.NUMBER]
)

DEFAULT_LEXICON_PATH = resources.files("contentzone") / "data" / "lexicon.tsv"


@dataclass(frozen=True)
class Lexicon:
    entries: Mapping[str, PosTag]
    suffix_rules: tuple[tuple[str, PosTag], ...]

    def lookup(self, surface: str) -> Optional[PosTag]:
        return self.entries.get(surface.lower())

    @cached_property
    def stopwords(self) -> frozenset[str]:
        return frozenset(w for w, t in self.entries.items() if t not in OPEN_CLASS)


def parse_lexicon(lines: Iterable[str], source: str = "<lexicon>") -> Lexicon:
    entries: dict[str, PosTag] = {}
    suffixes: list[tuple[str, PosTag]] = []
    in_suffixes = False
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.strip() == "#SUFFIX":
            in_suffixes = True
            continue
        if line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise LexiconError(f"{source}:{lineno}: expected 'surface<TAB>TAG', got {line!r}")
        surface, tag_name = parts[0].strip(), parts[1].strip()
        try:
            tag = PosTag(tag_name)
        except ValueError:
            raise LexiconError(f"{source}:{lineno}: unknown tag {tag_name!r}") from None
        if in_suffixes:
            if not surface.startswith("-") or len(surface) < 2:
                raise LexiconError(f"{source}:{lineno}: suffix rules look like '-ing<TAB>VERB'")
            suffixes.append((surface[1:].lower(), tag))
        else:
            entries[surface.lower()] = tag
    return Lexicon(entries, tuple(suffixes))


def load_lexicon(path: str | Path | None = None) -> Lexicon:
    """Load a lexicon file; ``None`` loads the one shipped with the package."""
    if path is None:
        text = DEFAULT_LEXICON_PATH.read_text(encoding="utf-8")
        return parse_lexicon(text.splitlines(), "lexicon.tsv")
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return parse_lexicon(fh, str(path))


_default: Optional[Lexicon] = None


def default_lexicon() -> Lexicon:
    global _default
    if _default is None:
        _default = load_lexicon()
    return _default


def _is_punct(surface: str) -> bool:
    return not any(ch.isalnum() for ch in surface)


def tag_token(surface: str, lexicon: Lexicon) -> PosTag:
    if _is_punct(surface):
        return PosTag.PUNCT
    known = lexicon.lookup(surface)
    lower = surface.lower()
    if lower in _PRONOUN_TAGS and known not in _PRONOUN_TAGS.values():
        # a custom lexicon must not demote the resolvable pronouns
        return _PRONOUN_TAGS[lower]
    if known is not None:
        return known
    # lexicon already failed, so sentence position no longer matters
    if surface[0].isupper():
        return PosTag.PROPER_NOUN
    for suffix, tag in lexicon.suffix_rules:
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            return tag
    if _NUMERIC.match(surface):
        return PosTag.NUMBER
    return PosTag.NOUN


def tag_sentence(sentence: Sentence, lexicon: Optional[Lexicon] = None) -> Sentence:
    lexicon = lexicon or default_lexicon()
    tags = [tag_token(t.surface, lexicon) for t in sentence.tokens]
    # "her" is possessive only when a nominal follows it
    for i, tok in enumerate(sentence.tokens):
        if tok.surface.lower() == "her":
            nxt = tags[i + 1] if i + 1 < len(tags) else None
            tags[i] = PosTag.POSSESSIVE_PRONOUN if nxt in _NOMINAL_FOLLOWERS else PosTag.PRONOUN
    tokens = tuple(replace(t, tag=tag) for t, tag in zip(sentence.tokens, tags))
    return replace(sentence, tokens=tokens)


def is_pronoun_of_interest(token: Token | str) -> Optional[PronounCategory]:
    surface = token.surface if isinstance(token, Token) else token
    return PRONOUNS_OF_INTEREST.get(surface.lower())
