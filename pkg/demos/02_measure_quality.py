"""Score an automatic zoning against hand-made brackets.

Matching asks how much of the gold zone was found. Error rate asks how many
sentences outside it were claimed anyway.

    python demos/02_measure_quality.py
"""
from contentzone import RunConfig, StreamConfig, run
from contentzone.anaphora import load_actors
from contentzone.evaluation import format_quality, load_gold, quality_report
from contentzone.formats import load_zones

from _shared import FIXTURES, banner

banner("A fixed prediction: 7 of 9 gold sentences found, none wrong")
d = FIXTURES / "table_counts"
_, gold = load_gold(d / "gold.txt")
report = quality_report(load_zones(d / "pred.json"), gold)
print(report.render_table(comma=True))

banner("The pipeline on the owl passage")
text, gold = load_gold(FIXTURES / "passage" / "gold.txt")
result = run(text, RunConfig(load_actors(FIXTURES / "passage" / "actors.json"), StreamConfig(10)))
report = quality_report(result.zones, gold)
for row in report.actors:
    print(f"{row.actor:7} {format_quality(row.matching, row.error_rate)}")
