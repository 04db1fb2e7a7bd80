"""Compare zoning quality on a biography, a news report and a dialogue.

Narrative prose that keeps naming its subject zones well. Dialogue, with
quoted speech and rapid turn-taking, is harder.

    python demos/04_text_genres.py
"""
from contentzone import RunConfig, StreamConfig, run
from contentzone.anaphora import load_actors
from contentzone.evaluation import average_reports, format_quality, load_gold, quality_report

from _shared import FIXTURES, banner

reports = []
for name in ("biography", "news", "dialogue"):
    text, gold = load_gold(FIXTURES / name / "gold.txt")
    result = run(text, RunConfig(load_actors(FIXTURES / name / "actors.json"), StreamConfig(10)))
    report = quality_report(result.zones, gold, source=name)
    reports.append(report)
    banner(f"{name} ({gold.sentence_count} sentences)")
    for row in report.actors:
        print(f"  {row.actor:8} gold {row.gold_sentences:2}  zoned {row.zoned_sentences:2}  "
              f"{format_quality(row.matching, row.error_rate)}")

banner("Macro average over the three texts")
print(format_quality(*average_reports(reports)))
