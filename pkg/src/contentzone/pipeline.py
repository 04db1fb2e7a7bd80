"""One deterministic pass from raw text to zones, statistics and mind-map."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .anaphora import (
    Actor,
    CandidateList,
    Resolution,
    reset_candidates,
    resolve_sentence,
    update_candidates,
    validate_actors,
)
from .errors import ConfigInvalid
from .mindmap import MindMap, update_mindmap
from .parser import SvoRelation, extract_svo
from .preprocess import RawDocument, iter_sentences, normalize, tokenize
from .stream import StreamConfig, TextStream
from .tagger import Lexicon, default_lexicon, load_lexicon, tag_sentence
from .zoner import ZoneSet, ZoneStatistics, ZoneVariables, zone_window


@dataclass(frozen=True)
class RunConfig:
    actors: tuple[Actor, ...]
    stream: StreamConfig = field(default_factory=StreamConfig)
    plural_lookback: int = 2
    lexicon: Lexicon | str | Path | None = None

    def __post_init__(self):
        object.__setattr__(self, "actors", tuple(self.actors))
        if not self.actors:
            raise ConfigInvalid("at least one actor is required")
        if isinstance(self.plural_lookback, bool) or not isinstance(self.plural_lookback, int) \
                or self.plural_lookback < 1:
            raise ConfigInvalid(f"plural_lookback must be a positive integer, got {self.plural_lookback!r}")
        validate_actors(self.actors)

    def load_lexicon(self) -> Lexicon:
        if isinstance(self.lexicon, Lexicon):
            return self.lexicon
        if self.lexicon is None:
            return default_lexicon()
        return load_lexicon(self.lexicon)


@dataclass
class RunResult:
    zones: ZoneSet
    variables: dict[str, ZoneVariables]
    mindmap: MindMap
    resolutions: list[Resolution]
    total_sentences: int = 0
    windows: int = 0
    peak_retained_sentences: int = 0


def run(doc: RawDocument | str, config: RunConfig) -> RunResult:
    """Zone ``doc`` for the configured actors.

    Windows are processed strictly in order. Inside a window, each sentence
    is tagged and parsed, its actor mentions are added to the candidate list,
    and then its pronouns are resolved, seeing only earlier mentions. Only the
    results are kept once the window is done.
    """
    if isinstance(doc, str):
        doc = RawDocument(doc)
    lexicon = config.load_lexicon()
    actors: Sequence[Actor] = config.actors
    names = [a.name for a in actors]

    zones = ZoneSet(actors)
    stats = ZoneStatistics(names, lexicon.stopwords)
    mindmap = update_mindmap(MindMap(doc.source_id), {}, actors)
    resolutions: list[Resolution] = []
    candidates = CandidateList()
    peak = 0
    n_windows = 0

    stream = TextStream(iter_sentences(normalize(doc)), config.stream)
    for window in stream:
        n_windows += 1
        candidates = reset_candidates(candidates, config.stream)
        tagged = tuple(tag_sentence(tokenize(s), lexicon) for s in window.sentences)
        window = type(window)(window.ordinal, tagged)
        peak = max(peak, len(window.sentences))

        relations: list[SvoRelation] = []
        window_resolutions: list[Resolution] = []
        for sentence in window.sentences:
            rels = extract_svo(sentence)
            relations.extend(rels)
            candidates = update_candidates(candidates, sentence, rels, actors)
            window_resolutions.extend(
                resolve_sentence(sentence, candidates, config.plural_lookback)
            )

        zone_window(
            window, relations, window_resolutions, actors, zones,
            carry=config.stream.carry_candidates,
        )
        first = window.first_index
        fresh = {name: [i for i in zones.indices(name) if i >= first] for name in names}
        stats.add(window.sentences, relations, fresh)
        update_mindmap(mindmap, stats.all_variables(), actors)
        resolutions.extend(window_resolutions)
        del window, tagged, relations

    return RunResult(
        zones,
        stats.all_variables(),
        mindmap,
        resolutions,
        stats.total_sentences,
        n_windows,
        peak,
    )
