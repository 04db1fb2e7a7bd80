"""How window size and candidate carry-over change pronoun resolution.

Each window of the `window_start` fixture opens with a pronoun whose
antecedent sits in the previous window.

    python demos/03_windows_and_memory.py
"""
from contentzone import RunConfig, StreamConfig, run
from contentzone.anaphora import Status, load_actors
from contentzone.evaluation import load_gold, quality_report

from _shared import FIXTURES, banner

d = FIXTURES / "window_start"
text, gold = load_gold(d / "text.txt", d / "anaphors.json")
actors = load_actors(d / "actors.json")

banner("window  carry  resolved/pronouns  peak sentences held")
for size in (1, 3, 6, 12):
    for carry in (False, True):
        result = run(text, RunConfig(actors, StreamConfig(size, carry)))
        done = sum(r.status is Status.RESOLVED for r in result.resolutions)
        print(f"{size:6}  {str(carry):5}  {done:8}/{len(result.resolutions):<8}  {result.peak_retained_sentences}")

banner("Success rate per pronoun group, window 3 without carry-over")
result = run(text, RunConfig(actors, StreamConfig(3)))
for rate in quality_report(result.zones, gold, resolutions=result.resolutions).anaphora:
    if rate.gold:
        print(f"{rate.category.value:18} {rate.correct}/{rate.gold}")
