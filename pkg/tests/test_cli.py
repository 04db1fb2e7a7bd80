import json
import subprocess
import sys

import jsonschema
import pytest

from contentzone.cli import main
from contentzone.formats import load_schema


@pytest.fixture
def passage_files(tmp_path, fixtures_dir):
    from contentzone.evaluation import parse_gold

    gold = fixtures_dir / "passage" / "gold.txt"
    text = tmp_path / "passage.txt"
    text.write_text(parse_gold(gold.read_text(encoding="utf-8"))[0], encoding="utf-8")
    return text, fixtures_dir / "passage" / "actors.json", gold


def zone(tmp_path, text, actors, *extra):
    out = tmp_path / "zones.json"
    dot = tmp_path / "map.dot"
    code = main(["zone", "--input", str(text), "--actors", str(actors), "--window", "10",
                 "--output", str(out), "--mindmap", str(dot), *extra])
    return code, out, dot


def test_zone_happy_path(tmp_path, passage_files):
    text, actors, _ = passage_files
    mm_json, res = tmp_path / "map.json", tmp_path / "res.json"
    code, out, dot = zone(tmp_path, text, actors, "--mindmap-json", str(mm_json), "--resolutions", str(res))
    assert code == 0
    zones = json.loads(out.read_text())
    assert zones["Harry"]["sentences"] == [0, 1]
    assert zones["Hedwig"]["spans"] == [[2, 4]]
    assert dot.read_text().startswith("digraph mindmap {")
    jsonschema.validate(zones, load_schema("zones"))
    jsonschema.validate(json.loads(mm_json.read_text()), load_schema("mindmap"))
    jsonschema.validate(json.loads(res.read_text()), load_schema("resolutions"))


@pytest.mark.parametrize("window", ["0", "-1", "ten"])
def test_zone_bad_window(tmp_path, passage_files, window, capsys):
    text, actors, _ = passage_files
    code = main(["zone", "--input", str(text), "--actors", str(actors), "--window", window])
    assert code == 1
    assert "--window" in capsys.readouterr().err


def test_unknown_flag_and_missing_command(passage_files, capsys):
    text, actors, _ = passage_files
    assert main(["zone", "--input", str(text), "--actors", str(actors), "--bogus"]) == 1
    assert "--bogus" in capsys.readouterr().err
    assert main([]) == 1


def test_missing_file_names_path(tmp_path, passage_files, capsys):
    _, actors, _ = passage_files
    missing = tmp_path / "nope.txt"
    assert main(["zone", "--input", str(missing), "--actors", str(actors)]) == 2
    assert str(missing) in capsys.readouterr().err
    assert main(["zone", "--input", str(passage_files[0]), "--actors", str(missing)]) == 2
    assert str(missing) in capsys.readouterr().err


def test_bad_actor_file(tmp_path, passage_files, capsys):
    bad = tmp_path / "actors.json"
    bad.write_text('[{"name": "A", "gender": "owl"}]')
    assert main(["zone", "--input", str(passage_files[0]), "--actors", str(bad)]) == 2
    assert "CONFIG_INVALID" in capsys.readouterr().err


def test_zone_stdout_table(passage_files, capsys):
    text, actors, _ = passage_files
    assert main(["zone", "--input", str(text), "--actors", str(actors), "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert "Hedwig\t3\t2-4\t0.6000" in out


def test_eval_table_counts(fixtures_dir, capsys):
    d = fixtures_dir / "table_counts"
    code = main(["eval", "--gold", str(d / "gold.txt"), "--pred", str(d / "pred.json"), "--locale-comma"])
    assert code == 0
    out = capsys.readouterr().out
    assert "{0,78 ; 0}" in out and "{1 ; 0}" in out


def test_eval_json_schema(tmp_path, passage_files, capsys):
    text, actors, gold = passage_files
    res = tmp_path / "res.json"
    code, out, _ = zone(tmp_path, text, actors, "--resolutions", str(res))
    ana = tmp_path / "ana.json"
    ana.write_text(json.dumps([{"sentence": 2, "surface": "she", "category": "subject_singular", "actor": "Hedwig"},
                               {"sentence": 0, "surface": "his", "category": "object_possessive", "actor": "Harry"}]))
    report_path = tmp_path / "report.json"
    assert main(["eval", "--gold", str(gold), "--pred", str(out), "--resolutions", str(res),
                 "--anaphors", str(ana), "--total-from", str(text), "--format", "json",
                 "--output", str(report_path)]) == 0
    report = json.loads(report_path.read_text())
    jsonschema.validate(report, load_schema("report"))
    assert [a["matching"] for a in report["actors"]] == [1.0, 1.0]
    assert report["anaphora"][0]["success_rate"] == 1.0


def test_eval_strict_rejects_passage_gold(passage_files, tmp_path, capsys):
    text, actors, gold = passage_files
    _, out, _ = zone(tmp_path, text, actors)
    assert main(["eval", "--gold", str(gold), "--pred", str(out), "--strict"]) == 2
    assert "UNBALANCED_MARKERS" in capsys.readouterr().err


def test_tag_parse_resolve(passage_files, capsys):
    text, actors, _ = passage_files
    assert main(["tag", "--input", str(text)]) == 0
    assert "0\t0\tHarry\tPROPER_NOUN" in capsys.readouterr().out.splitlines()
    assert main(["parse", "--input", str(text)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "2\tS-V-O\tHedwig\tmade\tmovement" in lines
    assert "3\tS-V\tShe\twas\t-" in lines
    assert main(["resolve", "--input", str(text), "--actors", str(actors)]) == 0
    assert "3\t0\tShe\tsubject_singular\tRESOLVED\tHedwig" in capsys.readouterr().out.splitlines()


def test_gold_check(fixtures_dir, tmp_path, capsys):
    d = fixtures_dir / "anaphora"
    assert main(["gold-check", "--gold", str(fixtures_dir / "passage" / "gold.txt")]) == 0
    assert "Hedwig\t3\t2,3,4" in capsys.readouterr().out
    assert main(["gold-check", "--gold", str(fixtures_dir / "passage" / "gold.txt"), "--strict"]) == 2
    assert main(["gold-check", "--gold", str(d / "text.txt"), "--anaphors", str(d / "anaphors.json"),
                 "--actors", str(d / "actors.json")]) == 0
    bad = tmp_path / "ana.json"
    bad.write_text('[{"sentence": 99, "surface": "he", "category": "plural", "actor": "Nobody"}]')
    assert main(["gold-check", "--gold", str(d / "text.txt"), "--anaphors", str(bad),
                 "--actors", str(d / "actors.json")]) == 2


def test_lexicon_precedence(tmp_path, passage_files, monkeypatch, capsys):
    text, _, _ = passage_files
    env_lex = tmp_path / "env.tsv"
    env_lex.write_text("harry\tNOUN\n")
    flag_lex = tmp_path / "flag.tsv"
    flag_lex.write_text("harry\tOTHER\n")
    monkeypatch.setenv("COZO_LEXICON", str(env_lex))
    main(["tag", "--input", str(text)])
    assert "0\t0\tHarry\tNOUN" in capsys.readouterr().out
    main(["tag", "--input", str(text), "--lexicon", str(flag_lex)])
    assert "0\t0\tHarry\tOTHER" in capsys.readouterr().out
    monkeypatch.delenv("COZO_LEXICON")
    main(["tag", "--input", str(text)])
    assert "0\t0\tHarry\tPROPER_NOUN" in capsys.readouterr().out


def test_several_inputs(tmp_path, fixtures_dir):
    from contentzone.evaluation import parse_gold

    inputs = []
    for name in ("news", "biography"):
        p = tmp_path / f"{name}.txt"
        p.write_text(parse_gold((fixtures_dir / name / "gold.txt").read_text())[0])
        inputs += ["--input", str(p)]
    actors = tmp_path / "actors.json"
    actors.write_text(json.dumps([{"name": "Tesla", "gender": "male"}, {"name": "Okafor", "gender": "female"}]))
    out = tmp_path / "out"
    assert main(["zone", *inputs, "--actors", str(actors), "--output", str(out), "--mindmap", str(out),
                 "--jobs", "2"]) == 0
    assert sorted(p.name for p in out.iterdir()) == [
        "biography.dot", "biography.zones.json", "news.dot", "news.zones.json",
    ]
    seq = tmp_path / "seq"
    assert main(["zone", *inputs, "--actors", str(actors), "--output", str(seq)]) == 0
    assert (seq / "news.zones.json").read_text() == (out / "news.zones.json").read_text()


def test_module_entry_point(passage_files):
    text, actors, _ = passage_files
    proc = subprocess.run([sys.executable, "-m", "contentzone", "zone", "--input", str(text),
                           "--actors", str(actors)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["Harry"]["sentences"] == [0, 1]
