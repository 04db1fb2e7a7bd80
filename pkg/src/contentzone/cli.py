"""Command-line front end.

Subcommands: zone, eval, tag, parse, resolve, gold-check. Exit status is 0
on success, 1 on usage errors and 2 on input or validation errors. Data goes
to files or stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import formats
from .anaphora import (
    CandidateList,
    load_actors,
    reset_candidates,
    resolve_sentence,
    update_candidates,
)
from .errors import ConfigInvalid, ZoningError
from .evaluation import load_gold, quality_report
from .parser import extract_svo
from .pipeline import RunConfig, run
from .preprocess import RawDocument, iter_sentences, normalize, prepare, tokenize
from .stream import StreamConfig, TextStream
from .tagger import load_lexicon, tag_sentence

LEXICON_ENV = "COZO_LEXICON"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _lexicon_path(flag: Optional[str]) -> Optional[str]:
    return flag or os.environ.get(LEXICON_ENV) or None


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _add_stream_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--actors", required=True, metavar="FILE", help="actor configuration (JSON)")
    p.add_argument("--window", type=_positive_int, default=10, metavar="N",
                   help="sentences per text window (default: 10)")
    p.add_argument("--carry-candidates", action="store_true",
                   help="keep antecedent candidates across window boundaries")
    p.add_argument("--plural-lookback", type=_positive_int, default=2, metavar="N",
                   help="sentences searched back for they/their (default: 2)")
    p.add_argument("--lexicon", metavar="FILE", help=f"lexicon file (overrides ${LEXICON_ENV})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="contentzone", description="Actor-based content zoning for plain text.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("zone", help="run the zoning pipeline")
    p.add_argument("--input", required=True, action="append", metavar="FILE",
                   help="UTF-8 text file; repeat for several documents")
    _add_stream_flags(p)
    p.add_argument("--output", metavar="PATH", help="zones JSON (a directory for several inputs)")
    p.add_argument("--mindmap", metavar="PATH", help="mind-map DOT file (a directory for several inputs)")
    p.add_argument("--mindmap-json", metavar="PATH", help="mind-map JSON mirror")
    p.add_argument("--resolutions", metavar="PATH", help="pronoun resolutions JSON")
    p.add_argument("--stream-id", help="root label of the mind-map (default: input file name)")
    p.add_argument("--format", choices=["json", "table"], default="json",
                   help="rendering of zones printed to stdout when --output is absent")
    p.add_argument("--jobs", type=_positive_int, default=1, metavar="N",
                   help="worker processes when several inputs are given")

    p = sub.add_parser("eval", help="score predicted zones against a gold file")
    p.add_argument("--gold", required=True, metavar="FILE", help="text with [Name]...[/Name] markers")
    p.add_argument("--pred", required=True, metavar="FILE", help="zones JSON written by 'zone'")
    p.add_argument("--anaphors", metavar="FILE", help="gold anaphor sidecar (JSON)")
    p.add_argument("--resolutions", metavar="FILE", help="predicted resolutions JSON written by 'zone'")
    p.add_argument("--total-from", metavar="FILE", help="count sentences in this text instead of the gold text")
    p.add_argument("--strict", action="store_true", help="require balanced [Name]/[/Name] pairs")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.add_argument("--locale-comma", action="store_true", help="decimal comma in table output")
    p.add_argument("--output", metavar="FILE", help="write the report here instead of stdout")

    p = sub.add_parser("tag", help="print POS tags, one token per line")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--lexicon", metavar="FILE")

    p = sub.add_parser("parse", help="print SVO relations, one clause per line")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--lexicon", metavar="FILE")

    p = sub.add_parser("resolve", help="print pronoun resolutions, one pronoun per line")
    p.add_argument("--input", required=True, metavar="FILE")
    _add_stream_flags(p)

    p = sub.add_parser("gold-check", help="validate gold annotation files")
    p.add_argument("--gold", required=True, metavar="FILE")
    p.add_argument("--anaphors", metavar="FILE")
    p.add_argument("--actors", metavar="FILE", help="reject markers for actors not in this file")
    p.add_argument("--strict", action="store_true")
    return parser


def _run_config(args) -> RunConfig:
    actors = load_actors(args.actors)
    lexicon = _lexicon_path(args.lexicon)
    return RunConfig(
        actors,
        StreamConfig(args.window, args.carry_candidates),
        args.plural_lookback,
        load_lexicon(lexicon) if lexicon else None,
    )


def _zone_one(path: str, stream_id: Optional[str], config: RunConfig):
    doc = RawDocument(_read_text(path), stream_id or Path(path).name)
    result = run(doc, config)
    return (
        formats.dumps(formats.zones_to_json(result)),
        result.mindmap.to_dot(),
        formats.dumps(result.mindmap.to_json()),
        formats.dumps(formats.resolutions_to_json(result)),
        result,
    )


def _zone_table(result) -> str:
    lines = ["actor\tsentences\tspans\textracted_quantity"]
    for name in result.zones:
        z = result.zones[name]
        spans = ",".join(f"{a}-{b}" for a, b in z.spans) or "-"
        lines.append(f"{name}\t{len(z.indices)}\t{spans}\t{result.variables[name].extracted_quantity:.4f}")
    return "\n".join(lines) + "\n"


def cmd_zone(args) -> int:
    config = _run_config(args)
    inputs = args.input
    for path in inputs:
        if not Path(path).is_file():
            raise FileNotFoundError(2, "input file not found", path)
    if len(inputs) == 1:
        zones, dot, mm_json, res, result = _zone_one(inputs[0], args.stream_id, config)
        if args.output:
            _write(args.output, zones)
        else:
            _write(None, zones if args.format == "json" else _zone_table(result))
        if args.mindmap:
            _write(args.mindmap, dot)
        if args.mindmap_json:
            _write(args.mindmap_json, mm_json)
        if args.resolutions:
            _write(args.resolutions, res)
        return 0

    if not args.output:
        raise ConfigInvalid("--output must name a directory when several --input files are given")
    targets = {"output": args.output, "mindmap": args.mindmap,
               "mindmap_json": args.mindmap_json, "resolutions": args.resolutions}
    for d in targets.values():
        if d:
            Path(d).mkdir(parents=True, exist_ok=True)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            outs = list(pool.map(_zone_one, inputs, [None] * len(inputs), [config] * len(inputs)))
    else:
        outs = [_zone_one(p, None, config) for p in inputs]
    for path, (zones, dot, mm_json, res, _) in zip(inputs, outs):
        stem = Path(path).stem
        _write(str(Path(targets["output"]) / f"{stem}.zones.json"), zones)
        if targets["mindmap"]:
            _write(str(Path(targets["mindmap"]) / f"{stem}.dot"), dot)
        if targets["mindmap_json"]:
            _write(str(Path(targets["mindmap_json"]) / f"{stem}.mindmap.json"), mm_json)
        if targets["resolutions"]:
            _write(str(Path(targets["resolutions"]) / f"{stem}.resolutions.json"), res)
    return 0


def cmd_eval(args) -> int:
    plain, gold = load_gold(args.gold, args.anaphors, strict=args.strict)
    predicted = formats.load_zones(args.pred)
    resolutions = (
        formats.resolutions_from_json(formats.read_json(args.resolutions)) if args.resolutions else []
    )
    total = None
    if args.total_from:
        total = sum(1 for _ in iter_sentences(normalize(_read_text(args.total_from))))
    report = quality_report(predicted, gold, total, resolutions, source=Path(args.gold).name)
    if args.format == "json":
        text = formats.dumps(report.to_json())
    else:
        text = report.render_table(comma=args.locale_comma)
    _write(args.output, text)
    return 0


def _tagged(path: str, lexicon_flag: Optional[str]):
    lexicon_path = _lexicon_path(lexicon_flag)
    lexicon = load_lexicon(lexicon_path) if lexicon_path else None
    return [tag_sentence(s, lexicon) for s in prepare(_read_text(path))]


def cmd_tag(args) -> int:
    out = []
    for s in _tagged(args.input, args.lexicon):
        for t in s.tokens:
            out.append(f"{s.index}\t{t.position}\t{t.surface}\t{t.tag.value}")
    _write(None, "\n".join(out) + ("\n" if out else ""))
    return 0


def cmd_parse(args) -> int:
    out = []
    for s in _tagged(args.input, args.lexicon):
        for rel in extract_svo(s):
            subj, verb, obj = (x or "-" for x in rel.surfaces(s))
            out.append(f"{s.index}\t{rel.pattern}\t{subj}\t{verb}\t{obj}")
    _write(None, "\n".join(out) + ("\n" if out else ""))
    return 0


def cmd_resolve(args) -> int:
    config = _run_config(args)
    lexicon = config.load_lexicon()
    candidates = CandidateList()
    out = []
    sentences = iter_sentences(normalize(_read_text(args.input)))
    for window in TextStream(sentences, config.stream):
        candidates = reset_candidates(candidates, config.stream)
        for s in window.sentences:
            s = tag_sentence(tokenize(s), lexicon)
            candidates = update_candidates(candidates, s, extract_svo(s), config.actors)
            for r in resolve_sentence(s, candidates, config.plural_lookback):
                actors = ",".join(r.resolved_to) or "-"
                out.append(
                    f"{r.sentence_index}\t{r.position}\t{r.surface}\t{r.category.value}\t{r.status.value}\t{actors}"
                )
    _write(None, "\n".join(out) + ("\n" if out else ""))
    return 0


def cmd_gold_check(args) -> int:
    allowed = [a.name for a in load_actors(args.actors)] if args.actors else None
    plain, gold = load_gold(args.gold, args.anaphors, strict=args.strict, allowed_actors=allowed)
    problems = []
    for a in gold.anaphors:
        if a.sentence >= gold.sentence_count:
            problems.append(f"anaphor in sentence {a.sentence} but the text has {gold.sentence_count} sentences")
        if allowed is not None and a.actor not in allowed:
            problems.append(f"anaphor names unknown actor {a.actor!r}")
    lines = [f"sentences\t{gold.sentence_count}"]
    for name, idx in gold.zones.items():
        lines.append(f"{name}\t{len(idx)}\t{','.join(map(str, sorted(idx))) or '-'}")
    if gold.anaphors:
        lines.append(f"anaphors\t{len(gold.anaphors)}")
    _write(None, "\n".join(lines) + "\n")
    if problems:
        for p in problems:
            print(f"error: {args.gold}: {p}", file=sys.stderr)
        return 2
    return 0


COMMANDS = {
    "zone": cmd_zone,
    "eval": cmd_eval,
    "tag": cmd_tag,
    "parse": cmd_parse,
    "resolve": cmd_resolve,
    "gold-check": cmd_gold_check,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc.filename}: file not found", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
        return 2
    except ZoningError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    except UnicodeDecodeError as exc:
        print(f"error: input is not valid UTF-8 ({exc.reason})", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
