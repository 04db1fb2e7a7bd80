"""Shallow subject-verb-object extraction over tagged sentences.

No grammar is involved. A sentence is cut into clauses at coordinating
conjunctions and commas that introduce a new verb. Within each clause the
first noun group before the first verb is the subject, the first verb is the
verb, and the first noun group after it is the object. Passives are not
recognised, so the surface noun before the verb is always the subject.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .preprocess import Sentence
from .tagger import PosTag

NOUN_LIKE = frozenset([PosTag.PROPER_NOUN, PosTag.NOUN, PosTag.PRONOUN])
_NOMINAL_RUN = frozenset([PosTag.PROPER_NOUN, PosTag.NOUN])
_COORDINATORS = frozenset(["and", "or", "but"])


@dataclass(frozen=True)
class SvoRelation:
    """Token positions of one clause's subject, verb and object.

    ``start``/``end`` delimit the clause as a half-open token range.
    """

    sentence_index: int
    subject: Optional[int]
    verb: Optional[int]
    obj: Optional[int]
    pattern: str
    start: int = 0
    end: int = 0

    def surfaces(self, sentence: Sentence) -> tuple[Optional[str], Optional[str], Optional[str]]:
        def get(pos):
            return None if pos is None else sentence.tokens[pos].surface

        return get(self.subject), get(self.verb), get(self.obj)


def _pattern(subject, verb, obj) -> str:
    parts = [name for name, pos in (("S", subject), ("V", verb), ("O", obj)) if pos is not None]
    return "-".join(parts) if parts else "NONE"


def _has_verb(tags, lo: int, hi: int) -> bool:
    return any(t is PosTag.VERB for t in tags[lo:hi])


def clause_bounds(sentence: Sentence) -> list[tuple[int, int]]:
    """Half-open token ranges of the clauses in ``sentence``."""
    tokens = sentence.tokens
    tags = [t.tag for t in tokens]
    n = len(tokens)
    bounds = []
    start = 0
    for i, tok in enumerate(tokens):
        if i <= start:
            continue
        is_coord = tok.tag is PosTag.CONJUNCTION and tok.surface.lower() in _COORDINATORS
        is_comma = tok.surface == ","
        if not (is_coord or is_comma):
            continue
        # only split clauses, not coordinated noun phrases
        if not _has_verb(tags, start, i):
            continue
        if is_coord:
            follows = _has_verb(tags, i + 1, n)
        else:
            seg_end = next(
                (
                    j
                    for j in range(i + 1, n)
                    if tokens[j].surface == ","
                    or (tags[j] is PosTag.CONJUNCTION and tokens[j].surface.lower() in _COORDINATORS)
                ),
                n,
            )
            follows = _has_verb(tags, i + 1, seg_end)
        if follows:
            bounds.append((start, i))
            start = i + 1
    bounds.append((start, n))
    return bounds


def _group_head(tags, lo: int, hi: int) -> Optional[int]:
    """Head of the first noun group in ``tags[lo:hi]``.

    A pronoun is a group on its own; otherwise the group is a run of nouns
    and the head is its last member. Anything before the group is skipped.
    """
    i = lo
    while i < hi:
        tag = tags[i]
        if tag is PosTag.PRONOUN:
            return i
        if tag in _NOMINAL_RUN:
            while i + 1 < hi and tags[i + 1] in _NOMINAL_RUN:
                i += 1
            return i
        i += 1
    return None


def _clause_relation(sentence: Sentence, lo: int, hi: int) -> SvoRelation:
    tags = [t.tag for t in sentence.tokens]
    verb = next((i for i in range(lo, hi) if tags[i] is PosTag.VERB), None)
    if verb is None:
        subject, obj = _group_head(tags, lo, hi), None
    else:
        subject = _group_head(tags, lo, verb)
        obj = _group_head(tags, verb + 1, hi)
    return SvoRelation(
        sentence.index, subject, verb, obj, _pattern(subject, verb, obj), lo, hi
    )


def extract_svo(sentence: Sentence) -> list[SvoRelation]:
    """One relation per clause; a sentence always yields at least one."""
    return [_clause_relation(sentence, lo, hi) for lo, hi in clause_bounds(sentence)]


def subject_positions(relations: list[SvoRelation]) -> frozenset[int]:
    return frozenset(r.subject for r in relations if r.subject is not None)
