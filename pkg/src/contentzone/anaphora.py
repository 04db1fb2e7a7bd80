"""Gender- and recency-driven resolution of third-person pronouns.

Only actor mentions become candidates; pronouns never do. The candidate list
lives for one text window unless the stream is configured to carry it over.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import ConfigInvalid
from .parser import SvoRelation, subject_positions
from .preprocess import Sentence, tokenize_text
from .stream import StreamConfig
from .tagger import PronounCategory, is_pronoun_of_interest


class Gender(str, Enum):
    MALE = "male"
    FEMALE = "female"
    UNSPECIFIED = "unspecified"


_PRONOUN_GENDER = {
    "he": Gender.MALE,
    "his": Gender.MALE,
    "him": Gender.MALE,
    "she": Gender.FEMALE,
    "her": Gender.FEMALE,
}

_POSSESSIVE_ENDINGS = ("'s", "’s", "'", "’")


@dataclass(frozen=True)
class Actor:
    name: str
    gender: Gender = Gender.UNSPECIFIED
    aliases: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.name or not self.name.strip():
            raise ConfigInvalid("actor name must be non-empty")
        object.__setattr__(self, "gender", Gender(self.gender))
        object.__setattr__(self, "aliases", tuple(self.aliases))

    @property
    def surfaces(self) -> list[str]:
        return [self.name, *self.aliases]

    def token_patterns(self) -> list[tuple[str, ...]]:
        """Lower-cased token sequences, longest first."""
        pats = {tuple(t.lower() for t in tokenize_text(s)) for s in self.surfaces}
        return sorted((p for p in pats if p), key=lambda p: (-len(p), p))

    def agrees_with(self, pronoun: str) -> bool:
        wanted = _PRONOUN_GENDER.get(pronoun.lower())
        return wanted is None or self.gender in (wanted, Gender.UNSPECIFIED)


def validate_actors(actors: Sequence[Actor]) -> None:
    seen: dict[str, str] = {}
    for actor in actors:
        for surface in actor.surfaces:
            key = surface.strip().lower()
            owner = seen.get(key)
            if owner is not None and owner != actor.name:
                raise ConfigInvalid(
                    f"surface {surface!r} is claimed by both {owner!r} and {actor.name!r}"
                )
            seen[key] = actor.name


def actors_from_json(data) -> list[Actor]:
    if not isinstance(data, list):
        raise ConfigInvalid("actor file must hold a JSON array of objects")
    actors = []
    for i, item in enumerate(data):
        if not isinstance(item, dict) or "name" not in item:
            raise ConfigInvalid(f"actor #{i} needs at least a 'name' field")
        try:
            gender = Gender(str(item.get("gender", "unspecified")).lower())
        except ValueError:
            raise ConfigInvalid(
                f"actor {item['name']!r}: gender must be male, female or unspecified"
            ) from None
        aliases = item.get("aliases", [])
        if not isinstance(aliases, list) or not all(isinstance(a, str) for a in aliases):
            raise ConfigInvalid(f"actor {item['name']!r}: aliases must be a list of strings")
        actors.append(Actor(str(item["name"]), gender, tuple(aliases)))
    validate_actors(actors)
    return actors


def load_actors(path: str | Path) -> list[Actor]:
    with Path(path).open(encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigInvalid(f"{path}: not valid JSON ({exc})") from None
    return actors_from_json(data)


@dataclass(frozen=True)
class Mention:
    actor: Actor
    sentence_index: int
    position: int
    end: int
    was_subject: bool = False
    actor_order: int = 0

    @property
    def where(self) -> tuple[int, int]:
        return (self.sentence_index, self.position)


def _token_matches(token: str, wanted: str, last: bool) -> bool:
    token = token.lower()
    if token == wanted:
        return True
    return last and any(token == wanted + end for end in _POSSESSIVE_ENDINGS)


def find_mentions(
    sentence: Sentence,
    actors: Sequence[Actor],
    relations: Iterable[SvoRelation] = (),
) -> list[Mention]:
    """All actor mentions in ``sentence``, in token order.

    Matching is case-insensitive on whole tokens; a trailing possessive
    ("Harry's") still counts. Per actor, longer surfaces win and matches do
    not overlap.
    """
    words = [t.surface for t in sentence.tokens]
    subjects = subject_positions(list(relations))
    found: list[Mention] = []
    for order, actor in enumerate(actors):
        patterns = actor.token_patterns()
        i = 0
        while i < len(words):
            for pat in patterns:
                k = len(pat)
                if i + k <= len(words) and all(
                    _token_matches(words[i + j], pat[j], j == k - 1) for j in range(k)
                ):
                    is_subj = any(i <= s < i + k for s in subjects)
                    found.append(Mention(actor, sentence.index, i, i + k, is_subj, order))
                    i += k
                    break
            else:
                i += 1
    found.sort(key=lambda m: (m.position, m.actor_order))
    return found


@dataclass(frozen=True)
class CandidateList:
    """Actor mentions, most recent first."""

    entries: tuple[Mention, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def update_candidates(
    candidates: CandidateList,
    sentence: Sentence,
    relations: Iterable[SvoRelation],
    actors: Sequence[Actor],
) -> CandidateList:
    mentions = find_mentions(sentence, actors, relations)
    if not mentions:
        return candidates
    return CandidateList(tuple(reversed(mentions)) + candidates.entries)


def reset_candidates(candidates: CandidateList, config: StreamConfig) -> CandidateList:
    return candidates if config.carry_candidates else CandidateList()


class Status(str, Enum):
    RESOLVED = "RESOLVED"
    UNRESOLVED = "UNRESOLVED"


@dataclass(frozen=True)
class Resolution:
    sentence_index: int
    position: int
    surface: str
    category: PronounCategory
    resolved_to: tuple[str, ...]
    status: Status
    antecedents: tuple[tuple[int, int], ...] = ()

    def to_json(self) -> dict:
        return {
            "sentence": self.sentence_index,
            "position": self.position,
            "surface": self.surface,
            "category": self.category.value,
            "status": self.status.value,
            "resolved_to": list(self.resolved_to),
            "antecedents": [list(a) for a in self.antecedents],
        }


def _recency_key(m: Mention):
    # most recent first; ties go to subjects, then to earlier-declared actors
    return (-m.sentence_index, -m.position, not m.was_subject, m.actor_order)


def resolve(
    pronoun: tuple[int, int, str],
    category: Optional[PronounCategory],
    candidates: CandidateList,
    plural_lookback: int = 2,
) -> Resolution:
    """Resolve the pronoun at ``(sentence_index, position, surface)``.

    Only mentions strictly before the pronoun are visible. Singular pronouns
    take the most recent gender-compatible actor. Plural pronouns take every
    distinct actor mentioned earlier in the same sentence or in the
    ``plural_lookback`` sentences before it.
    """
    sent, pos, surface = pronoun
    if category is None:
        category = is_pronoun_of_interest(surface)
        if category is None:
            raise ValueError(f"{surface!r} is not a resolvable pronoun")
    visible = sorted(
        (m for m in candidates.entries if m.where < (sent, pos)), key=_recency_key
    )
    if category is PronounCategory.PLURAL:
        chosen: dict[str, Mention] = {}
        for m in visible:
            if m.sentence_index >= sent - plural_lookback:
                chosen.setdefault(m.actor.name, m)
        if not chosen:
            return Resolution(sent, pos, surface, category, (), Status.UNRESOLVED)
        ordered = sorted(chosen.values(), key=lambda m: m.actor_order)
        return Resolution(
            sent,
            pos,
            surface,
            category,
            tuple(m.actor.name for m in ordered),
            Status.RESOLVED,
            tuple(m.where for m in ordered),
        )
    for m in visible:
        if m.actor.agrees_with(surface):
            return Resolution(
                sent, pos, surface, category, (m.actor.name,), Status.RESOLVED, (m.where,)
            )
    return Resolution(sent, pos, surface, category, (), Status.UNRESOLVED)


def resolve_sentence(
    sentence: Sentence, candidates: CandidateList, plural_lookback: int = 2
) -> list[Resolution]:
    out = []
    for tok in sentence.tokens:
        category = is_pronoun_of_interest(tok)
        if category is not None:
            out.append(
                resolve((sentence.index, tok.position, tok.surface), category, candidates, plural_lookback)
            )
    return out
