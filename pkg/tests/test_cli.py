import json
from importlib import resources

import pytest

from wortfolge.cli import main

GENERATE_5A = {
    "schema_version": "1",
    "mode": "GENERATE",
    "payload": {
        "clause": {
            "clause_type": "V2",
            "verb": {"finite": ["habe"], "nonfinite": ["gesehen"]},
            "constituents": [
                {"id": "ich", "category": "N", "surface": ["ich"], "features": {"pronominal": True}},
                {"id": "den-mann", "category": "A", "surface": ["den", "Mann"],
                 "features": {"definite": "+", "animate": "+"}},
                {"id": "gestern", "category": "M", "surface": ["gestern"],
                 "hoberg_index": 26, "lexicon_key": "gestern#26"},
            ],
        },
        "tags": {},
    },
}

OBSERVED_2C = {
    "clause_type": "V2",
    "verb": {"finite": ["fuhr"]},
    "constituents": [
        {"id": "er", "category": "N", "surface": ["er"], "features": {"pronominal": True}},
        {"id": "ebenfalls", "category": "M", "surface": ["ebenfalls"], "hoberg_index": 35,
         "lexicon_key": "ebenfalls#35"},
        {"id": "dennoch", "category": "M", "surface": ["dennoch"], "hoberg_index": 20,
         "lexicon_key": "dennoch#20"},
        {"id": "nach-muenchen", "category": "DIR", "surface": ["nach", "München"]},
    ],
}


@pytest.fixture
def clause_file(tmp_path):
    path = tmp_path / "clause.json"
    path.write_text(json.dumps(GENERATE_5A), encoding="utf-8")
    return str(path)


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def test_generate_default_order(clause_file, capsys):
    assert main(["generate", "--clause", clause_file]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["text"] == "Ich habe den Mann gestern gesehen"
    assert report["vorfeld"] == "ich"


def test_generate_output_is_byte_deterministic(clause_file, capsys):
    main(["generate", "--clause", clause_file])
    first = capsys.readouterr().out
    main(["generate", "--clause", clause_file])
    assert capsys.readouterr().out == first


def test_generate_with_tags(clause_file, tmp_path, capsys):
    tags = _write(tmp_path, "tags.json", {"den-mann": "RHEME"})
    assert main(["generate", "--clause", clause_file, "--tags", tags]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["text"] == "Ich habe gestern den Mann gesehen"


def test_generate_honours_document_embedded_tags(tmp_path, capsys):
    doc = json.loads(json.dumps(GENERATE_5A))
    doc["payload"]["tags"] = {"den-mann": "RHEME"}
    path = _write(tmp_path, "doc.json", doc)
    assert main(["generate", "--clause", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["text"] == "Ich habe gestern den Mann gesehen"


def test_generate_all_variants(clause_file, capsys):
    assert main(["generate", "--clause", clause_file, "--all-variants"]) == 0
    report = json.loads(capsys.readouterr().out)
    rendered = {tuple(v["order"]) for v in report["variants"]}
    assert ("ich", "den-mann", "gestern") in rendered
    assert ("gestern", "ich", "den-mann") in rendered


def test_json_flag_is_the_default_output(clause_file, capsys):
    assert main(["generate", "--clause", clause_file, "--json"]) == 0
    explicit = capsys.readouterr().out
    main(["generate", "--clause", clause_file])
    assert capsys.readouterr().out == explicit


def test_conflicting_output_flags_are_an_input_error(clause_file, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--clause", clause_file, "--pretty", "--json"])
    assert exc.value.code == 1


def test_generate_pretty_mode_prints_interlinear_gloss(clause_file, capsys):
    assert main(["generate", "--clause", clause_file, "--pretty"]) == 0
    top, glosses = capsys.readouterr().out.splitlines()[:2]
    assert top.split() == ["Ich", "habe", "den", "Mann", "gestern", "gesehen"]
    assert glosses.split() == ["N:pron", "V", "A+d+a", "M26", "V"]


def test_duplicate_nominative_is_a_generation_error(tmp_path, capsys):
    doc = json.loads(json.dumps(GENERATE_5A))
    doc["payload"]["clause"]["constituents"].append(
        {"id": "die-frau", "category": "N", "surface": ["die", "Frau"],
         "features": {"definite": "+", "animate": "+"}}
    )
    path = _write(tmp_path, "bad.json", doc)
    assert main(["generate", "--clause", path]) == 2
    report = json.loads(capsys.readouterr().out)
    assert report["error"]["type"] == "CooccurrenceViolation"


def test_inexpressible_tags_exit_code(clause_file, tmp_path, capsys):
    tags = _write(tmp_path, "tags.json", {"ich": "RHEME"})
    assert main(["generate", "--clause", clause_file, "--tags", tags]) == 2


def test_malformed_document_is_an_input_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["generate", "--clause", str(path)]) == 1


def test_missing_file_is_an_input_error(capsys):
    assert main(["generate", "--clause", "/no/such/file.json"]) == 1


def test_analyze_ungrammatical_exit_code(tmp_path, capsys):
    path = _write(tmp_path, "obs.json", OBSERVED_2C)
    assert main(["analyze", "--observed", path]) == 3
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "UNGRAMMATICAL"


def test_analyze_grammatical(tmp_path, capsys):
    obs = json.loads(json.dumps(OBSERVED_2C))
    obs["constituents"][1], obs["constituents"][2] = obs["constituents"][2], obs["constituents"][1]
    path = _write(tmp_path, "obs.json", obs)
    assert main(["analyze", "--observed", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "GRAMMATICAL_UNMARKED"
    assert report["theme"] == "er"
    assert report["rheme"] == "nach-muenchen"


def test_disambiguate_command(tmp_path, capsys):
    candidates = [
        {
            "label": "eher#26",
            "constraint_context": ["NEGATED"],
            "observed": {
                "clause_type": "V2",
                "verb": {"finite": ["sollte"], "nonfinite": ["kommen"]},
                "constituents": [
                    {"id": "er", "category": "N", "surface": ["er"], "features": {"pronominal": True}},
                    {"id": "nicht", "category": "M", "surface": ["nicht"], "hoberg_index": 41,
                     "lexicon_key": "nicht#41"},
                    {"id": "eher", "category": "M", "surface": ["eher"], "hoberg_index": 26,
                     "lexicon_key": "eher#26"},
                ],
            },
        },
        {
            "label": "eher#5",
            "constraint_context": ["NEGATED"],
            "observed": {
                "clause_type": "V2",
                "verb": {"finite": ["sollte"], "nonfinite": ["kommen"]},
                "constituents": [
                    {"id": "er", "category": "N", "surface": ["er"], "features": {"pronominal": True}},
                    {"id": "nicht", "category": "M", "surface": ["nicht"], "hoberg_index": 41,
                     "lexicon_key": "nicht#41"},
                    {"id": "eher", "category": "M", "surface": ["eher"], "hoberg_index": 5,
                     "lexicon_key": "eher#5"},
                ],
            },
        },
    ]
    path = _write(tmp_path, "cands.json", candidates)
    assert main(["disambiguate", "--candidates", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert [r["label"] for r in report["readings"]] == ["eher#26", "eher#5"]
    assert report["readings"][1]["constraint_ok"] is False


def test_corpus_run_shipped_file(capsys):
    path = str(resources.files("wortfolge.data").joinpath("corpus.json"))
    assert main(["corpus", "run", path]) == 0
    out = capsys.readouterr().out
    assert "ex-5a: PASS" in out
    assert "expected-mismatch 2" in out


def test_corpus_filter(capsys):
    path = str(resources.files("wortfolge.data").joinpath("corpus.json"))
    assert main(["corpus", "run", path, "--filter", "ex-2c"]) == 0
    out = capsys.readouterr().out
    assert "ex-2c: PASS" in out
    assert "total 1" in out


def test_corpus_missing_file(capsys):
    assert main(["corpus", "run", "/no/such/corpus.json"]) == 1


def test_corpus_empty_file(tmp_path, capsys):
    path = _write(tmp_path, "empty.json", {"cases": []})
    assert main(["corpus", "run", path]) == 0


def test_corpus_failing_case_names_it(tmp_path, capsys):
    case = {
        "case_id": "synthetic-fail",
        "doc": {"schema_version": "1", "mode": "GENERATE",
                "payload": {"clause": GENERATE_5A["payload"]["clause"], "tags": {}}},
        "expected": {"rendered": ["Voellig", "falsch"]},
    }
    path = _write(tmp_path, "corpus.json", {"cases": [case]})
    assert main(["corpus", "run", path]) == 4
    out = capsys.readouterr().out
    assert "synthetic-fail: FAIL" in out


def test_lexicon_env_var(clause_file, tmp_path, capsys, monkeypatch):
    lexicon = tmp_path / "lexicon.tsv"
    lexicon.write_text("gestern\t26\t26\t1\t1\t1\t-\t0\tyesterday\n", encoding="utf-8")
    monkeypatch.setenv("WORTFOLGE_LEXICON", str(lexicon))
    assert main(["generate", "--clause", clause_file]) == 0


def test_explicit_slot_table(clause_file, capsys):
    path = str(resources.files("wortfolge.data").joinpath("slot_table.tsv"))
    assert main(["--slot-table", path, "generate", "--clause", clause_file]) == 0
