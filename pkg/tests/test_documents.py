import json

import pytest

from wortfolge import Tag
from wortfolge.documents import (
    DocumentError,
    Mode,
    load_document,
    parse_candidates,
    parse_clause,
    parse_observed,
    parse_tags,
    verify_lexicon_keys,
)

from .conftest import c

CLAUSE_JSON = {
    "clause_type": "V2",
    "verb": {"finite": ["habe"], "nonfinite": ["gesehen"]},
    "constituents": [
        {"id": "ich", "category": "N", "surface": ["ich"], "features": {"pronominal": True}},
        {
            "id": "den-mann",
            "category": "A",
            "surface": ["den", "Mann"],
            "features": {"definite": "+", "animate": "+"},
        },
        {
            "id": "gestern",
            "category": "M",
            "surface": ["gestern"],
            "hoberg_index": 26,
            "lexicon_key": "gestern#26",
        },
    ],
}


def test_parse_clause_round_trip():
    spec = parse_clause(CLAUSE_JSON)
    assert [con.id for con in spec.constituents] == ["ich", "den-mann", "gestern"]
    assert spec.by_id("den-mann").features.definite == "+"
    assert spec.by_id("gestern").hoberg_index == 26


def test_parse_tags():
    assert parse_tags({"gestern": "THEME"}) == {"gestern": Tag.THEME}
    with pytest.raises(DocumentError, match="unknown tag"):
        parse_tags({"gestern": "TOPIC"})


def test_parse_observed_with_stress():
    raw = dict(CLAUSE_JSON)
    raw["stress"] = ["ich"]
    obs = parse_observed(raw)
    assert obs.stress == {"ich"}
    assert obs.order == ("ich", "den-mann", "gestern")


def test_stress_on_unknown_id_rejected():
    raw = dict(CLAUSE_JSON)
    raw["stress"] = ["wer"]
    with pytest.raises(DocumentError, match="stress"):
        parse_observed(raw)


def test_errors_name_their_location():
    broken = {
        "clause_type": "V2",
        "verb": {"finite": ["hat"]},
        "constituents": [{"id": "x", "category": "Q", "surface": ["x"]}],
    }
    with pytest.raises(DocumentError, match=r"constituents\[0\]\(x\)"):
        parse_clause(broken)


def test_full_document_parsing():
    doc = load_document(
        json.dumps(
            {
                "schema_version": "1",
                "mode": "GENERATE",
                "payload": {"clause": CLAUSE_JSON, "tags": {"gestern": "THEME"}},
            }
        )
    )
    assert doc.mode is Mode.GENERATE
    assert doc.tags == {"gestern": Tag.THEME}


def test_unknown_mode_rejected():
    with pytest.raises(DocumentError, match="mode"):
        load_document(json.dumps({"schema_version": "1", "mode": "PARSE", "payload": {}}))


def test_unsupported_schema_version_rejected():
    with pytest.raises(DocumentError, match="schema_version"):
        load_document(json.dumps({"schema_version": "2", "mode": "GENERATE", "payload": {}}))


def test_candidate_exclusion_at_construction():
    candidates, excluded = parse_candidates(
        [
            {"label": "adjunct", "np_attachment": {"head_is_pronoun": True}},
            {"label": "modifier", "observed": CLAUSE_JSON},
        ]
    )
    assert [cand.label for cand in candidates] == ["modifier"]
    assert excluded == (("adjunct", "pronominal heads take no NP adjunct"),)


def test_verify_lexicon_keys(lex):
    ok = c("gestern", "M", "gestern", hoberg=26, key="gestern#26")
    unresolved = c("bald", "M", "bald", hoberg=25, key="bald#25")
    mismatched = c("oft", "M", "oft", hoberg=12, key="oft#37")
    assert verify_lexicon_keys([ok], lex) == []
    assert any("bald" in p for p in verify_lexicon_keys([unresolved], lex))
    assert any("contradicts" in p for p in verify_lexicon_keys([mismatched], lex))
