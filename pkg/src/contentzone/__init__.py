"""Streaming actor-based content zoning for English plain text.

Typical use::

    from contentzone import Actor, RunConfig, StreamConfig, run

    result = run(text, RunConfig([Actor("Harry", "male")], StreamConfig(window_size=10)))
    result.zones["Harry"].indices
"""
from .anaphora import Actor, CandidateList, Gender, Resolution, Status, load_actors, resolve
from .errors import (
    ConfigInvalid,
    DenominatorZero,
    GoldEmpty,
    NoGoldAnaphors,
    UnbalancedMarkers,
    UnknownActor,
    WindowSizeInvalid,
    ZoningError,
)
from .evaluation import (
    GoldAnnotation,
    QualityReport,
    anaphor_success_rate,
    error_rate,
    format_quality,
    load_gold,
    matching,
    parse_gold,
    quality_report,
)
from .mindmap import MindMap, update_mindmap
from .parser import SvoRelation, extract_svo
from .pipeline import RunConfig, RunResult, run
from .preprocess import RawDocument, Sentence, Token, normalize, segment_sentences, tokenize
from .stream import StreamConfig, TextStream, TextWindow
from .tagger import Lexicon, PosTag, PronounCategory, is_pronoun_of_interest, load_lexicon, tag_sentence
from .zoner import ZoneSet, ZoneVariables, compute_zone_variables, zone_window

__version__ = "0.1.0"
