"""Watch mind-map values change as more text is read, then export it.

Nodes are created once per actor and statistic; later windows only update
their values.

    python demos/05_mind_map.py [out.dot]
"""
import sys

from contentzone import RunConfig, StreamConfig, run
from contentzone.anaphora import load_actors
from contentzone.evaluation import parse_gold
from contentzone.preprocess import segment_sentences

from _shared import FIXTURES, banner

text, _ = parse_gold((FIXTURES / "news" / "gold.txt").read_text(encoding="utf-8"))
actors = load_actors(FIXTURES / "news" / "actors.json")

banner("Mind-map after reading a growing prefix")
sentences = [s.text for s in segment_sentences(text)]
for k in (3, 6, len(sentences)):
    prefix = " ".join(sentences[:k])
    result = run(prefix, RunConfig(actors, StreamConfig(3)))
    words = {a.name: result.variables[a.name].most_occurring_word for a in actors}
    print(f"{k:2} sentences: {result.mindmap.node_count} nodes, top words {words}")

dot = result.mindmap.to_dot()
if len(sys.argv) > 1:
    with open(sys.argv[1], "w", encoding="utf-8") as fh:
        fh.write(dot)
    print(f"\nwrote {sys.argv[1]}; render with: dot -Tpng {sys.argv[1]} -o map.png")
else:
    banner("DOT")
    print(dot)
