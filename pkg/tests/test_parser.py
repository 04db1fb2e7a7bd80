from hypothesis import given, strategies as st

from contentzone.parser import NOUN_LIKE, extract_svo
from contentzone.preprocess import Sentence, Token, prepare
from contentzone.tagger import PosTag, tag_sentence


def parsed(text):
    s = tag_sentence(prepare(text)[0])
    return s, extract_svo(s)


def test_hedwig_made_no_movement():
    s, rels = parsed(
        "Hedwig made no movement as she began to flick through newspapers, "
        "throwing them into the rubbish pile one by one."
    )
    assert rels[0].surfaces(s) == ("Hedwig", "made", "movement")
    assert rels[0].pattern == "S-V-O"


def test_she_was_asleep():
    s, rels = parsed("She was asleep or else faking.")
    assert rels[0].surfaces(s) == ("She", "was", None)
    assert rels[0].pattern == "S-V"
    assert [r.pattern for r in rels] == ["S-V", "V"]


def test_degenerate_clauses():
    s = tag_sentence(Sentence(0, ", .", tokens=(Token(",", 0), Token(".", 1))))
    assert [r.pattern for r in extract_svo(s)] == ["NONE"]
    assert [r.pattern for r in extract_svo(Sentence(3, ""))] == ["NONE"]


def test_comma_clauses_in_passage_sentence():
    s, rels = parsed("Harry got up off the floor, stretched, moved across to his desk.")
    assert [r.surfaces(s) for r in rels] == [
        ("Harry", "got", "floor"),
        (None, "stretched", None),
        (None, "moved", "desk"),
    ]


def test_coordinated_subjects_stay_one_clause():
    s, rels = parsed("Harry and Ron left the castle.")
    assert len(rels) == 1
    assert rels[0].surfaces(s) == ("Harry", "left", "castle")


def test_multiword_head_is_last_noun():
    s, rels = parsed("Arnold Schwarzenegger signed the new budget.")
    assert rels[0].surfaces(s) == ("Schwarzenegger", "signed", "budget")


def test_possessive_then_noun_yields_noun():
    s, rels = parsed("She opened her old bag.")
    assert rels[0].surfaces(s) == ("She", "opened", "bag")


def test_passive_keeps_surface_subject():
    s, rels = parsed("The letter was written by Tesla.")
    assert rels[0].surfaces(s) == ("letter", "was", "Tesla")


vocab = st.sampled_from(
    ["Harry", "she", "the", "owl", "ran", "was", "and", "but", ",", "quickly", "of", "her", "cage", "."]
)


@given(st.lists(vocab, max_size=20))
def test_relation_invariants(words):
    s = tag_sentence(Sentence(0, " ".join(words), tokens=tuple(Token(w, i) for i, w in enumerate(words))))
    rels = extract_svo(s)
    assert rels and rels == extract_svo(s)
    for r in rels:
        for pos in (r.subject, r.verb, r.obj):
            assert pos is None or 0 <= pos < len(words)
        if r.subject is not None:
            assert s.tokens[r.subject].tag in NOUN_LIKE
        if r.obj is not None:
            assert s.tokens[r.obj].tag in NOUN_LIKE
        if r.verb is not None:
            assert s.tokens[r.verb].tag is PosTag.VERB
        expected = "-".join(
            k for k, v in (("S", r.subject), ("V", r.verb), ("O", r.obj)) if v is not None
        ) or "NONE"
        assert r.pattern == expected
