"""Zone a short owl-and-boy passage and look at what each stage produces.

    python demos/01_zone_a_passage.py
"""
from contentzone import Actor, Gender, RunConfig, StreamConfig, run
from contentzone.anaphora import resolve_sentence, update_candidates, CandidateList
from contentzone.evaluation import parse_gold
from contentzone.parser import extract_svo
from contentzone.preprocess import prepare
from contentzone.tagger import default_lexicon, tag_sentence

from _shared import FIXTURES, banner

# The fixture carries inline [Name] markers; strip them to get raw text.
annotated = (FIXTURES / "passage" / "gold.txt").read_text(encoding="utf-8")
text, gold = parse_gold(annotated)
actors = [Actor("Harry", Gender.MALE), Actor("Hedwig", Gender.FEMALE)]

banner("Sentences, tags and clauses")
lexicon = default_lexicon()
candidates = CandidateList()
for sentence in prepare(text):
    sentence = tag_sentence(sentence, lexicon)
    relations = extract_svo(sentence)
    print(f"[{sentence.index}] {sentence.text}")
    print("     tags:", " ".join(f"{t.surface}/{t.tag.value}" for t in sentence.tokens))
    for rel in relations:
        subj, verb, obj = rel.surfaces(sentence)
        print(f"     clause {rel.pattern}: subject={subj} verb={verb} object={obj}")
    candidates = update_candidates(candidates, sentence, relations, actors)
    for res in resolve_sentence(sentence, candidates):
        print(f"     pronoun {res.surface!r} -> {', '.join(res.resolved_to) or '?'} ({res.status.value})")

banner("Zones")
result = run(text, RunConfig(actors, StreamConfig(window_size=5)))
for actor in actors:
    zone = result.zones[actor.name]
    print(f"{actor.name:7} sentences {zone.indices}  spans {zone.spans}")
    print(f"        {result.variables[actor.name].to_json()}")
