"""Regenerate the anaphora fixture corpora under src/contentzone/data/fixtures.

anaphora/      one male and one female actor per six-sentence window; every
               pronoun has exactly one gender-compatible antecedent in its
               window, and every plural pronoun has both actors in reach.
window_start/  every third sentence starts a window with a pronoun whose
               only antecedent closes the previous window.

Run from the repository root:  python tools/make_anaphora_fixtures.py
"""
import json
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1] / "src" / "contentzone" / "data" / "fixtures"

MEN = ["Oliver", "Tomas", "Felix", "Arjun", "Henrik", "Marco", "Samuel", "Dmitri", "Kofi", "Lucas"]
WOMEN = ["Clara", "Ingrid", "Amara", "Sofia", "Yuki", "Helena", "Nadia", "Priya", "Elena", "Rosa"]
PLACES = ["market", "library", "station", "harbour", "museum", "bakery", "theatre", "garden", "clinic", "airport"]
THINGS = ["book", "lamp", "map", "ticket", "letter", "scarf", "basket", "compass", "kettle", "camera"]
GIFTS = ["advice", "patience", "help", "honesty", "care", "time", "support", "warmth", "humour", "trust"]
TOPICS = ["plans", "families", "travels", "work", "garden", "debts", "neighbours", "holidays", "studies", "letters"]
ITEMS = ["bags", "bicycles", "umbrellas", "coats", "groceries", "dogs", "papers", "tools", "suitcases", "boxes"]


def anaphora_corpus():
    sentences, gold = [], []
    for k in range(10):
        m, f = MEN[k], WOMEN[k]
        base = len(sentences)
        sentences += [
            f"{m} met {f} at the {PLACES[k]}.",
            f"He gave her a {THINGS[k]}.",
            f"She thanked him for his {GIFTS[k]}.",
            f"{m} and {f} were happy.",
            f"They talked about their {TOPICS[k]}.",
            f"Then they went home with their {ITEMS[k]}.",
        ]
        gold += [
            (base + 1, "He", "subject_singular", m),
            (base + 1, "her", "object_possessive", f),
            (base + 2, "She", "subject_singular", f),
            (base + 2, "him", "object_possessive", m),
            (base + 2, "his", "object_possessive", m),
        ]
        for s, surfaces in ((base + 4, ("They", "their")), (base + 5, ("they", "their"))):
            for surface in surfaces:
                gold += [(s, surface, "plural", m), (s, surface, "plural", f)]
    actors = [{"name": n, "gender": "male", "aliases": []} for n in MEN]
    actors += [{"name": n, "gender": "female", "aliases": []} for n in WOMEN]
    return sentences, gold, actors


def window_start_corpus():
    sentences, gold = [], []
    people = [(WOMEN[0], "female"), (MEN[0], "male"), (WOMEN[1], "female"), (MEN[1], "male")] * 3
    sentences += ["The town was quiet that morning.", "The sky was grey.", f"{people[0][0]} walked into the hall."]
    for k in range(1, len(people)):
        prev_name, prev_gender = people[k - 1]
        pron = "She" if prev_gender == "female" else "He"
        sentences += [
            f"{pron} sat down near the window.",
            "The room was warm.",
            f"{people[k][0]} walked into the hall.",
        ]
        gold.append((len(sentences) - 3, pron, "subject_singular", prev_name))
    seen = []
    for name, gender in people:
        if name not in [a["name"] for a in seen]:
            seen.append({"name": name, "gender": gender, "aliases": []})
    return sentences, gold, seen


def write(folder, sentences, gold, actors):
    out = ROOT / folder
    out.mkdir(parents=True, exist_ok=True)
    (out / "text.txt").write_text("\n".join(sentences) + "\n", encoding="utf-8")
    records = [{"sentence": s, "surface": w, "category": c, "actor": a} for s, w, c, a in gold]
    (out / "anaphors.json").write_text(json.dumps(records, indent=2) + "\n", encoding="utf-8")
    (out / "actors.json").write_text(json.dumps(actors, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    write("anaphora", *anaphora_corpus())
    write("window_start", *window_start_corpus())
