import pytest
from hypothesis import given, strategies as st

from contentzone.anaphora import (
    Actor,
    CandidateList,
    Gender,
    Mention,
    Status,
    actors_from_json,
    find_mentions,
    reset_candidates,
    resolve,
    update_candidates,
)
from contentzone.errors import ConfigInvalid
from contentzone.parser import extract_svo
from contentzone.preprocess import prepare
from contentzone.stream import StreamConfig
from contentzone.tagger import PronounCategory, tag_sentence

SUBJ = PronounCategory.SUBJECT_SINGULAR
PLURAL = PronounCategory.PLURAL


def tagged(text):
    return [tag_sentence(s) for s in prepare(text)]


def feed(text, actors):
    cands = CandidateList()
    for s in tagged(text):
        cands = update_candidates(cands, s, extract_svo(s), actors)
    return cands


def test_update_with_hedwig(harry_hedwig):
    s = tagged("Hedwig made no movement as she began to flick through newspapers.")[0]
    cands = update_candidates(CandidateList(), s, extract_svo(s), harry_hedwig)
    assert [(m.actor.name, m.was_subject) for m in cands] == [("Hedwig", True)]


def test_update_no_mention_is_noop(harry_hedwig):
    s = tagged("The owl slept.")[0]
    before = CandidateList()
    assert update_candidates(before, s, extract_svo(s), harry_hedwig) is before


def test_update_two_mentions_most_recent_first(harry_hedwig):
    cands = feed("Harry greeted Hedwig.", harry_hedwig)
    assert [(m.actor.name, m.position) for m in cands] == [("Hedwig", 2), ("Harry", 0)]


def test_multiword_and_possessive_mentions():
    actors = [Actor("Karl Benz", Gender.MALE, ("Benz",))]
    s = tagged("Karl Benz built a car. It was Benz' first car.")
    assert [(m.position, m.end) for m in find_mentions(s[0], actors)] == [(0, 2)]
    assert [(m.position, m.end) for m in find_mentions(s[1], actors)] == [(2, 3)]


def test_she_resolves_to_hedwig(harry_hedwig):
    cands = feed("Harry neared the pile. Hedwig made no movement as she began to flick.", harry_hedwig)
    res = resolve((1, 5, "she"), SUBJ, cands)
    assert res.status is Status.RESOLVED and res.resolved_to == ("Hedwig",)


def test_empty_list_unresolved():
    res = resolve((0, 0, "He"), SUBJ, CandidateList())
    assert res.status is Status.UNRESOLVED and res.resolved_to == ()


def test_gender_filter_excludes_all():
    cands = feed("Harry and Ron left.", [Actor("Harry", "male"), Actor("Ron", "male")])
    assert resolve((1, 0, "she"), SUBJ, cands).status is Status.UNRESOLVED


def test_most_recent_male_wins():
    # Hand walk: mentions Adam(0,0), Ben(0,2) then Ben(1,0); "he" in sentence 2
    # scans (1,0) first, which is Ben.
    actors = [Actor("Adam", "male"), Actor("Ben", "male")]
    cands = feed("Adam called Ben. Ben did not answer. He was asleep.", actors)
    res = resolve((2, 0, "He"), SUBJ, cands)
    assert res.resolved_to == ("Ben",) and res.antecedents == ((1, 0),)


def test_only_earlier_mentions_are_visible():
    actors = [Actor("Ann", "female")]
    cands = feed("She waved at Ann.", actors)
    assert resolve((0, 0, "She"), SUBJ, cands).status is Status.UNRESOLVED


def test_unspecified_agrees_with_both():
    cands = feed("Hedwig hooted.", [Actor("Hedwig")])
    assert resolve((1, 0, "he"), SUBJ, cands).resolved_to == ("Hedwig",)
    assert resolve((1, 0, "her"), PronounCategory.OBJECT_POSSESSIVE, cands).resolved_to == ("Hedwig",)


def test_tie_break_subject_then_declaration():
    a, b = Actor("Ann", "female"), Actor("Bea", "female")
    tied = CandidateList((
        Mention(b, 0, 3, 4, False, 1),
        Mention(a, 0, 3, 4, False, 0),
    ))
    assert resolve((1, 0, "she"), SUBJ, tied).resolved_to == ("Ann",)
    tied = CandidateList((
        Mention(a, 0, 3, 4, False, 0),
        Mention(b, 0, 3, 4, True, 1),
    ))
    assert resolve((1, 0, "she"), SUBJ, tied).resolved_to == ("Bea",)


def test_plural_lookback():
    actors = [Actor("Ann", "female"), Actor("Bob", "male"), Actor("Cid", "male")]
    cands = feed("Cid slept. Ann met Bob. The rain fell. They left.", actors)
    res = resolve((3, 0, "They"), PLURAL, cands, plural_lookback=2)
    assert res.resolved_to == ("Ann", "Bob")
    res = resolve((3, 0, "They"), PLURAL, cands, plural_lookback=1)
    assert res.status is Status.UNRESOLVED
    res = resolve((3, 0, "They"), PLURAL, cands, plural_lookback=3)
    assert res.resolved_to == ("Ann", "Bob", "Cid")


@pytest.mark.parametrize("carry, expected", [(False, 0), (True, 2)])
def test_reset_candidates(carry, expected, harry_hedwig):
    cands = feed("Harry greeted Hedwig.", harry_hedwig)
    assert len(reset_candidates(cands, StreamConfig(5, carry))) == expected
    assert len(reset_candidates(CandidateList(), StreamConfig(5, carry))) == 0


def test_actor_config_validation():
    assert actors_from_json([{"name": "A", "gender": "Female"}])[0].gender is Gender.FEMALE
    with pytest.raises(ConfigInvalid):
        actors_from_json([{"name": "A", "aliases": ["x"]}, {"name": "B", "aliases": ["X"]}])
    with pytest.raises(ConfigInvalid):
        actors_from_json([{"name": "A", "gender": "owl"}])
    with pytest.raises(ConfigInvalid):
        Actor("  ")


names = st.sampled_from(["Adam", "Ben", "Cora", "Dana", "the", "dog", "ran", "."])


@given(st.lists(st.lists(names, min_size=1, max_size=8), min_size=1, max_size=6),
       st.sampled_from(["he", "she", "his", "her", "him"]))
def test_gender_soundness(sents, pronoun):
    actors = [Actor("Adam", "male"), Actor("Ben", "male"), Actor("Cora", "female"), Actor("Dana", "female")]
    text = " ".join(" ".join(w).capitalize() + "." for w in sents)
    cands = feed(text, actors)
    res = resolve((len(sents), 0, pronoun), None, cands)
    if res.status is Status.RESOLVED:
        gender = {a.name: a.gender for a in actors}[res.resolved_to[0]]
        if pronoun in ("he", "his", "him"):
            assert gender is not Gender.FEMALE
        else:
            assert gender is not Gender.MALE
    assert res == resolve((len(sents), 0, pronoun), None, cands)
