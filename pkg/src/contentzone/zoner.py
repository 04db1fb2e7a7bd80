"""Actor zones and the statistics kept for them.

A sentence joins an actor's zone when the actor is named in it, when one of
its pronouns resolves to the actor, or when the actor's zone is still open
and nobody else claims the sentence. A zone closes as soon as another actor
claims a sentence on its own.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .anaphora import Actor, Resolution, Status, find_mentions
from .parser import SvoRelation
from .preprocess import Sentence
from .stream import TextWindow
from .tagger import PosTag, default_lexicon


def spans_of(indices: Iterable[int]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive indices as inclusive ``(start, end)`` pairs."""
    spans: list[tuple[int, int]] = []
    for i in sorted(set(indices)):
        if spans and spans[-1][1] == i - 1:
            spans[-1] = (spans[-1][0], i)
        else:
            spans.append((i, i))
    return spans


@dataclass
class ActorZone:
    indices: list[int] = field(default_factory=list)
    open: bool = False

    @property
    def spans(self) -> list[tuple[int, int]]:
        return spans_of(self.indices)

    def add(self, index: int) -> None:
        if not self.indices or self.indices[-1] < index:
            self.indices.append(index)
        elif index not in self.indices:
            self.indices.append(index)
            self.indices.sort()


class ZoneSet:
    """Per-actor zones, keyed by actor name in declaration order."""

    def __init__(self, actors: Iterable[Actor | str] = ()):
        self.zones: dict[str, ActorZone] = {}
        for a in actors:
            self.ensure(a.name if isinstance(a, Actor) else a)

    def ensure(self, name: str) -> ActorZone:
        return self.zones.setdefault(name, ActorZone())

    def __getitem__(self, name: str) -> ActorZone:
        return self.zones[name]

    def __contains__(self, name: str) -> bool:
        return name in self.zones

    def __iter__(self):
        return iter(self.zones)

    def indices(self, name: str) -> list[int]:
        return list(self.zones[name].indices) if name in self.zones else []

    def as_sets(self) -> dict[str, set[int]]:
        return {name: set(z.indices) for name, z in self.zones.items()}

    def close_all(self) -> None:
        for z in self.zones.values():
            z.open = False


def _by_sentence(items, key):
    out: dict[int, list] = {}
    for item in items:
        out.setdefault(key(item), []).append(item)
    return out


def zone_window(
    window: TextWindow,
    relations: Iterable[SvoRelation],
    resolutions: Iterable[Resolution],
    actors: Sequence[Actor],
    state: ZoneSet,
    carry: bool = False,
) -> ZoneSet:
    rel_by = _by_sentence(relations, lambda r: r.sentence_index)
    res_by = _by_sentence(resolutions, lambda r: r.sentence_index)
    for a in actors:
        state.ensure(a.name)
    if not carry:
        state.close_all()
    for sentence in window.sentences:
        mentions = find_mentions(sentence, actors, rel_by.get(sentence.index, ()))
        claimed = {m.actor.name for m in mentions}
        for res in res_by.get(sentence.index, ()):
            if res.status is Status.RESOLVED:
                claimed.update(res.resolved_to)
        for a in actors:
            zone = state[a.name]
            if a.name in claimed:
                zone.add(sentence.index)
                zone.open = True
            elif claimed:
                zone.open = False
            elif zone.open:
                zone.add(sentence.index)
    return state


@dataclass(frozen=True)
class ZoneVariables:
    sentence_count: int = 0
    token_count: int = 0
    most_occurring_word: Optional[tuple[str, int]] = None
    most_occurring_pattern: Optional[tuple[str, int]] = None
    extracted_quantity: float = 0.0

    def to_json(self) -> dict:
        return {
            "sentence_count": self.sentence_count,
            "token_count": self.token_count,
            "most_occurring_word": list(self.most_occurring_word) if self.most_occurring_word else None,
            "most_occurring_pattern": list(self.most_occurring_pattern) if self.most_occurring_pattern else None,
            "extracted_quantity": self.extracted_quantity,
        }


def _modal(counter: Counter) -> Optional[tuple[str, int]]:
    if not counter:
        return None
    key, count = min(counter.items(), key=lambda kv: (-kv[1], kv[0]))
    return (key, count)


class ZoneStatistics:
    """Running per-actor counters, fed one window at a time.

    Only counters are kept, never sentences, so a window's text can be
    dropped once it has been added.
    """

    def __init__(self, actors: Iterable[str] = (), stopwords: Optional[frozenset[str]] = None):
        self.stopwords = default_lexicon().stopwords if stopwords is None else stopwords
        self.total_sentences = 0
        self._sentences: dict[str, int] = {}
        self._tokens: dict[str, int] = {}
        self._words: dict[str, Counter] = {}
        self._patterns: dict[str, Counter] = {}
        for name in actors:
            self._ensure(name)

    def _ensure(self, name: str) -> None:
        if name not in self._sentences:
            self._sentences[name] = 0
            self._tokens[name] = 0
            self._words[name] = Counter()
            self._patterns[name] = Counter()

    @property
    def actors(self) -> list[str]:
        return list(self._sentences)

    def add(
        self,
        sentences: Sequence[Sentence],
        relations: Iterable[SvoRelation],
        zoned: Mapping[str, Iterable[int]],
    ) -> None:
        """Count ``sentences`` towards the total and towards each actor that
        has them in ``zoned``."""
        rel_by = _by_sentence(relations, lambda r: r.sentence_index)
        by_index = {s.index: s for s in sentences}
        self.total_sentences += len(sentences)
        for name, indices in zoned.items():
            self._ensure(name)
            for i in indices:
                sentence = by_index.get(i)
                if sentence is None:
                    continue
                self._sentences[name] += 1
                self._tokens[name] += len(sentence.tokens)
                for tok in sentence.tokens:
                    word = tok.surface.lower()
                    if tok.tag is PosTag.PUNCT or word in self.stopwords:
                        continue
                    self._words[name][word] += 1
                for rel in rel_by.get(i, ()):
                    self._patterns[name][rel.pattern] += 1

    def variables(self, name: str) -> ZoneVariables:
        self._ensure(name)
        count = self._sentences[name]
        quantity = count / self.total_sentences if self.total_sentences else 0.0
        return ZoneVariables(
            count,
            self._tokens[name],
            _modal(self._words[name]),
            _modal(self._patterns[name]),
            quantity,
        )

    def all_variables(self) -> dict[str, ZoneVariables]:
        return {name: self.variables(name) for name in self._sentences}


def compute_zone_variables(
    zones: ZoneSet,
    sentences: Sequence[Sentence],
    relations: Iterable[SvoRelation],
    stopwords: Optional[frozenset[str]] = None,
) -> dict[str, ZoneVariables]:
    """Zone variables for a whole document in one pass."""
    stats = ZoneStatistics(list(zones), stopwords)
    stats.add(sentences, relations, {name: zones.indices(name) for name in zones})
    return stats.all_variables()
