"""Scoring automatic zones against bracket-annotated gold texts.

Gold files are plain text with inline ``[Name]`` ... ``[/Name]`` markers.
Scores are sentence-level:

* matching = |auto & gold| / |gold|  (completeness)
* error rate = |auto - gold| / (total - |gold|)  (correctness)

Values are kept as exact fractions. Rounding happens only when rendering.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from .anaphora import Resolution, Status
from .errors import (
    ConfigInvalid,
    DenominatorZero,
    GoldEmpty,
    NoGoldAnaphors,
    UnbalancedMarkers,
    UnknownActor,
    ZoningError,
)
from .preprocess import normalize, segment_sentences
from .tagger import PronounCategory

MARKER = re.compile(r"\[(/?)([^\[\]/\s][^\[\]]*?)\]")


@dataclass(frozen=True)
class GoldAnaphor:
    sentence: int
    surface: str
    category: PronounCategory
    actor: str

    def to_json(self) -> dict:
        return {
            "sentence": self.sentence,
            "surface": self.surface,
            "category": self.category.value,
            "actor": self.actor,
        }


@dataclass(frozen=True)
class GoldAnnotation:
    """Gold zones over the marker-free, normalized text.

    ``markers`` holds ``(offset, marker)`` pairs in normalized-text offsets,
    in their original order, so the annotated text can be rebuilt.
    """

    zones: Mapping[str, frozenset[int]]
    sentence_count: int
    markers: tuple[tuple[int, str], ...] = ()
    anaphors: tuple[GoldAnaphor, ...] = ()

    @property
    def actors(self) -> list[str]:
        return list(self.zones)


def _offset_mapper(stripped: str):
    """Map offsets in ``stripped`` to offsets in ``normalize(stripped)``."""
    chunks = [(m.start(), m.end()) for m in re.finditer(r"\S+", stripped)]
    starts = []
    pos = 0
    for s, e in chunks:
        starts.append(pos)
        pos += (e - s) + 1
    total = max(pos - 1, 0)

    def mapped(p: int) -> int:
        prev_end = None
        for k, (s, e) in enumerate(chunks):
            if p < s:
                if prev_end is not None and p == prev_end[0]:
                    return prev_end[1]
                return starts[k]
            if p < e:
                return starts[k] + (p - s)
            prev_end = (e, starts[k] + (e - s))
        if prev_end is not None and p == prev_end[0]:
            return prev_end[1]
        return total

    return mapped


def parse_gold(
    annotated: str,
    strict: bool = False,
    allowed_actors: Optional[Iterable[str]] = None,
) -> tuple[str, GoldAnnotation]:
    """Strip zone markers and return ``(plain_text, annotation)``.

    In lenient mode a second ``[Name]`` while Name is open closes the zone,
    and a zone left open runs to the end of the text. Strict mode rejects
    both with :class:`UnbalancedMarkers`.
    """
    allowed = None if allowed_actors is None else set(allowed_actors)
    pieces: list[str] = []
    events: list[tuple[int, bool, str, str]] = []  # (stripped offset, is_close, name, marker)
    last = 0
    length = 0
    for m in MARKER.finditer(annotated):
        piece = annotated[last:m.start()]
        pieces.append(piece)
        length += len(piece)
        name = m.group(2).strip()
        if allowed is not None and name not in allowed:
            raise UnknownActor(f"marker {m.group(0)!r} names an actor not in the allow-list")
        events.append((length, bool(m.group(1)), name, m.group(0)))
        last = m.end()
    pieces.append(annotated[last:])
    stripped = "".join(pieces)
    plain = normalize(stripped)
    mapped = _offset_mapper(stripped)

    regions: list[tuple[str, int, int]] = []
    open_at: dict[str, int] = {}
    order: list[str] = []
    markers: list[tuple[int, str]] = []
    for offset, is_close, name, marker in events:
        at = mapped(offset)
        markers.append((at, marker))
        if name not in order:
            order.append(name)
        if is_close or name in open_at:
            if name not in open_at:
                raise UnbalancedMarkers(f"{marker!r} at offset {at} closes a zone that is not open")
            if not is_close and strict:
                raise UnbalancedMarkers(
                    f"{marker!r} at offset {at} opens {name!r} again before [/{name}]"
                )
            regions.append((name, open_at.pop(name), at))
        else:
            open_at[name] = at
    if open_at:
        if strict:
            raise UnbalancedMarkers(f"zones never closed: {', '.join(sorted(open_at))}")
        for name, start in open_at.items():
            regions.append((name, start, len(plain)))

    sentences = segment_sentences(plain)
    zones: dict[str, set[int]] = {name: set() for name in order}
    for name, start, end in regions:
        while start < end and plain[start] == " ":
            start += 1
        while end > start and plain[end - 1] == " ":
            end -= 1
        if start >= end:
            continue
        for s in sentences:
            if s.start < end and start < s.end:
                zones[name].add(s.index)
    annotation = GoldAnnotation(
        {name: frozenset(idx) for name, idx in zones.items()},
        len(sentences),
        tuple(markers),
    )
    return plain, annotation


def render_gold(plain: str, annotation: GoldAnnotation) -> str:
    """Re-insert markers into the plain text (whitespace-normalized)."""
    out = []
    last = 0
    for offset, marker in annotation.markers:
        out.append(plain[last:offset])
        out.append(f" {marker} ")
        last = offset
    out.append(plain[last:])
    return normalize("".join(out))


def anaphors_from_json(data) -> tuple[GoldAnaphor, ...]:
    if not isinstance(data, list):
        raise ConfigInvalid("anaphor sidecar must hold a JSON array")
    out = []
    for i, item in enumerate(data):
        try:
            out.append(
                GoldAnaphor(
                    int(item["sentence"]),
                    str(item["surface"]),
                    PronounCategory(item["category"]),
                    str(item["actor"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigInvalid(f"anaphor entry #{i} is malformed: {exc}") from None
    return tuple(out)


def load_gold(path: str | Path, anaphors: str | Path | None = None, strict: bool = False,
              allowed_actors: Optional[Iterable[str]] = None) -> tuple[str, GoldAnnotation]:
    text = Path(path).read_text(encoding="utf-8")
    plain, annotation = parse_gold(text, strict=strict, allowed_actors=allowed_actors)
    if anaphors is not None:
        with Path(anaphors).open(encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigInvalid(f"{anaphors}: not valid JSON ({exc})") from None
        annotation = GoldAnnotation(
            annotation.zones, annotation.sentence_count, annotation.markers, anaphors_from_json(data)
        )
    return plain, annotation


def _check_range(indices: set[int], total: Optional[int], what: str) -> None:
    if total is not None and any(i < 0 or i >= total for i in indices):
        raise ValueError(f"{what} contains sentence indices outside [0, {total})")


def matching(auto_indices: Iterable[int], gold_indices: Iterable[int]) -> Fraction:
    auto, gold = set(auto_indices), set(gold_indices)
    if not gold:
        raise GoldEmpty("matching is undefined for an empty gold zone")
    return Fraction(len(auto & gold), len(gold))


def error_rate(
    auto_indices: Iterable[int], gold_indices: Iterable[int], total_sentences: int
) -> Fraction:
    auto, gold = set(auto_indices), set(gold_indices)
    _check_range(auto, total_sentences, "auto zone")
    _check_range(gold, total_sentences, "gold zone")
    denominator = total_sentences - len(gold)
    if denominator <= 0:
        raise DenominatorZero("error rate is undefined when the gold zone covers the whole text")
    return Fraction(len(auto - gold), denominator)


def _count_correct(resolutions: Sequence[Resolution], gold: Sequence[GoldAnaphor]) -> int:
    used: set[int] = set()
    correct = 0
    for g in gold:
        for k, r in enumerate(resolutions):
            if k in used or r.status is not Status.RESOLVED:
                continue
            if (
                r.sentence_index == g.sentence
                and r.surface.lower() == g.surface.lower()
                and r.category == g.category
                and g.actor in r.resolved_to
            ):
                used.add(k)
                correct += 1
                break
    return correct


def anaphor_success_rate(
    resolutions: Sequence[Resolution],
    gold_anaphors: Sequence[GoldAnaphor],
    actor: str,
    category: PronounCategory,
) -> Fraction:
    """Correctly resolved anaphors over all gold anaphors, for one actor and category."""
    gold = [g for g in gold_anaphors if g.actor == actor and g.category == category]
    if not gold:
        raise NoGoldAnaphors(f"no gold {category.value} anaphors for {actor!r}")
    return Fraction(_count_correct(resolutions, gold), len(gold))


def round2(value: Fraction | float) -> Decimal:
    if isinstance(value, Fraction):
        exact = Decimal(value.numerator) / Decimal(value.denominator)
    else:
        exact = Decimal(str(value))
    return exact.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)


def format_ratio(value, comma: bool = False) -> str:
    if value is None:
        return "n/a"
    text = format(round2(value).normalize(), "f")
    return text.replace(".", ",") if comma else text


def format_quality(matching_value, error_value, comma: bool = False) -> str:
    return f"{{{format_ratio(matching_value, comma)} ; {format_ratio(error_value, comma)}}}"


def _as_float(value):
    return None if value is None else float(value)


@dataclass(frozen=True)
class ActorQuality:
    actor: str
    counted_sentences: int
    gold_sentences: int
    zoned_sentences: int
    overlap: int
    erroneous_sentences: int
    matching: Optional[Fraction]
    error_rate: Optional[Fraction]
    errors: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "actor": self.actor,
            "counted_sentences": self.counted_sentences,
            "gold_sentences": self.gold_sentences,
            "zoned_sentences": self.zoned_sentences,
            "overlap": self.overlap,
            "erroneous_sentences": self.erroneous_sentences,
            "matching": _as_float(self.matching),
            "error_rate": _as_float(self.error_rate),
            "errors": list(self.errors),
        }


@dataclass(frozen=True)
class AnaphoraRate:
    category: PronounCategory
    correct: int
    gold: int
    actor: Optional[str] = None

    @property
    def success_rate(self) -> Optional[Fraction]:
        return Fraction(self.correct, self.gold) if self.gold else None

    def to_json(self) -> dict:
        out = {
            "category": self.category.value,
            "correct": self.correct,
            "gold": self.gold,
            "success_rate": _as_float(self.success_rate),
        }
        if self.actor is not None:
            out = {"actor": self.actor, **out}
        return out


def _mean(values: Sequence[Fraction]) -> Optional[Fraction]:
    return sum(values, Fraction(0)) / len(values) if values else None


@dataclass(frozen=True)
class QualityReport:
    actors: tuple[ActorQuality, ...]
    anaphora: tuple[AnaphoraRate, ...] = ()
    anaphora_by_actor: tuple[AnaphoraRate, ...] = ()
    total_sentences: int = 0
    source: str = ""

    @property
    def average_matching(self) -> Optional[Fraction]:
        return _mean([a.matching for a in self.actors if a.matching is not None])

    @property
    def average_error_rate(self) -> Optional[Fraction]:
        return _mean([a.error_rate for a in self.actors if a.error_rate is not None])

    def actor(self, name: str) -> ActorQuality:
        for a in self.actors:
            if a.actor == name:
                return a
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "total_sentences": self.total_sentences,
            "actors": [a.to_json() for a in self.actors],
            "anaphora": [r.to_json() for r in self.anaphora],
            "anaphora_by_actor": [r.to_json() for r in self.anaphora_by_actor],
            "average": {
                "averaging": "macro over actors",
                "matching": _as_float(self.average_matching),
                "error_rate": _as_float(self.average_error_rate),
                "quality": format_quality(self.average_matching, self.average_error_rate),
            },
        }

    def render_table(self, comma: bool = False) -> str:
        return render_report(self, comma)


def _zone_sets(auto) -> dict[str, set[int]]:
    if hasattr(auto, "as_sets"):
        return auto.as_sets()
    return {name: set(idx) for name, idx in auto.items()}


def quality_report(
    auto,
    gold: GoldAnnotation,
    total_sentences: Optional[int] = None,
    resolutions: Sequence[Resolution] = (),
    source: str = "",
) -> QualityReport:
    """Score every actor of ``gold`` (and any extra actor of ``auto``).

    A failing metric for one actor is recorded in its ``errors`` field and
    does not stop the others.
    """
    total = gold.sentence_count if total_sentences is None else total_sentences
    auto_sets = _zone_sets(auto)
    names = list(gold.zones) + [n for n in auto_sets if n not in gold.zones]
    rows = []
    for name in names:
        a = auto_sets.get(name, set())
        g = set(gold.zones.get(name, frozenset()))
        errors = []
        m = e = None
        try:
            m = matching(a, g)
        except ZoningError as exc:
            errors.append(f"{exc.code}: {exc}")
        try:
            e = error_rate(a, g, total)
        except (ZoningError, ValueError) as exc:
            errors.append(f"{getattr(exc, 'code', 'INVALID')}: {exc}")
        rows.append(ActorQuality(name, total, len(g), len(a), len(a & g), len(a - g), m, e, tuple(errors)))

    by_actor = []
    pooled = []
    if gold.anaphors:
        for category in PronounCategory:
            correct_sum = gold_sum = 0
            for name in names:
                g = [x for x in gold.anaphors if x.actor == name and x.category == category]
                if not g:
                    continue
                c = _count_correct(resolutions, g)
                by_actor.append(AnaphoraRate(category, c, len(g), name))
                correct_sum += c
                gold_sum += len(g)
            pooled.append(AnaphoraRate(category, correct_sum, gold_sum))
    return QualityReport(tuple(rows), tuple(pooled), tuple(by_actor), total, source)


def average_reports(reports: Sequence[QualityReport]) -> tuple[Optional[Fraction], Optional[Fraction]]:
    """Macro average of per-text average pairs, as in a per-domain summary."""
    ms = [r.average_matching for r in reports if r.average_matching is not None]
    es = [r.average_error_rate for r in reports if r.average_error_rate is not None]
    return _mean(ms), _mean(es)


def render_report(report: QualityReport, comma: bool = False) -> str:
    rows: list[tuple[str, str, str]] = []
    for a in report.actors:
        rows += [
            ("Actor", a.actor, a.actor),
            ("Counted sentences", str(a.counted_sentences), str(a.counted_sentences)),
            ("Zoned sentences", str(a.gold_sentences), str(a.zoned_sentences)),
            ("Erroneous zoned sentences", "0", str(a.erroneous_sentences)),
            (
                "Quality={Matching ; Error-rate}",
                format_quality(1, 0, comma),
                format_quality(a.matching, a.error_rate, comma),
            ),
        ]
        for err in a.errors:
            rows.append(("  note", "", err))
    w0 = max([len(r[0]) for r in rows] + [10])
    w1 = max([len(r[1]) for r in rows] + [len("Human")])
    lines = [f"{'':<{w0}}  {'Human':<{w1}}  Auto"]
    lines += [f"{r[0]:<{w0}}  {r[1]:<{w1}}  {r[2]}".rstrip() for r in rows]
    if report.anaphora:
        lines.append("")
        lines.append(f"{'Pronominal anaphor':<{w0}}  Success-rate")
        labels = {
            PronounCategory.SUBJECT_SINGULAR: "he/she",
            PronounCategory.OBJECT_POSSESSIVE: "his/him/her",
            PronounCategory.PLURAL: "they/their",
        }
        for r in report.anaphora:
            rate = format_ratio(r.success_rate, comma)
            lines.append(f"{labels[r.category]:<{w0}}  {rate} ({r.correct}/{r.gold})")
    lines.append("")
    lines.append(
        f"{'Total (macro over actors)':<{w0}}  "
        f"{format_quality(report.average_matching, report.average_error_rate, comma)}"
    )
    return "\n".join(lines) + "\n"
