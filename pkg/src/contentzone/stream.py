"""Pull-based text windows over a sentence source.

A stream hands out consecutive batches of ``window_size`` sentences. Once a
window has been handed out the stream keeps no reference to it, so only the
consumer decides what survives.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator, Optional

from .errors import WindowSizeInvalid
from .preprocess import Sentence


@dataclass(frozen=True)
class StreamConfig:
    window_size: int = 10
    carry_candidates: bool = False

    def __post_init__(self):
        if isinstance(self.window_size, bool) or not isinstance(self.window_size, int):
            raise WindowSizeInvalid(f"window_size must be an integer, got {self.window_size!r}")
        if self.window_size < 1:
            raise WindowSizeInvalid(f"window_size must be >= 1, got {self.window_size}")


@dataclass(frozen=True)
class TextWindow:
    ordinal: int
    sentences: tuple[Sentence, ...]

    def __len__(self) -> int:
        return len(self.sentences)

    @property
    def first_index(self) -> int:
        return self.sentences[0].index


class TextStream:
    """Single-consumer stream of windows; the source may be unbounded."""

    def __init__(self, source: Iterable[Sentence], config: StreamConfig):
        self.config = config
        self._source = iter(source)
        self._ordinal = 0

    def next_window(self) -> Optional[TextWindow]:
        batch = tuple(islice(self._source, self.config.window_size))
        if not batch:
            return None
        window = TextWindow(self._ordinal, batch)
        self._ordinal += 1
        return window

    def __iter__(self) -> Iterator[TextWindow]:
        while (window := self.next_window()) is not None:
            yield window


def next_window(stream: TextStream) -> Optional[TextWindow]:
    return stream.next_window()


def windows(source: Iterable[Sentence], window_size: int) -> Iterator[TextWindow]:
    return iter(TextStream(source, StreamConfig(window_size)))
