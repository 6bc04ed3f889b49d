"""JSON clause documents: the serialized form the CLI and corpus consume.

A document is ``{"schema_version": "1", "mode": ..., "payload": ...}`` where
mode is GENERATE (clause spec + tag assignment), ANALYZE (observed clause) or
DISAMBIGUATE (candidate readings).  Field names mirror the domain types in
snake_case; the format is deliberately diff-friendly for corpus files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .analyze import ObservedClause
from .clause import (
    Category,
    ClauseSpec,
    ClauseType,
    Constituent,
    FeatureBundle,
    NA,
    Tag,
    VerbComplex,
)
from .disambiguate import CandidateReading, np_adjunct_possible
from .lexicon import Lexicon
from .linearize import TagAssignment

SCHEMA_VERSION = "1"


class Mode(str, Enum):
    GENERATE = "GENERATE"
    ANALYZE = "ANALYZE"
    DISAMBIGUATE = "DISAMBIGUATE"


class DocumentError(Exception):
    """Malformed document; the message names the offending location."""


@dataclass(frozen=True)
class ClauseDocument:
    mode: Mode
    clause: ClauseSpec | None = None
    tags: TagAssignment | None = None
    observed: ObservedClause | None = None
    candidates: tuple[CandidateReading, ...] = ()
    excluded: tuple[tuple[str, str], ...] = ()  # (label, reason) dropped at construction


def _require(obj, key, where, kind=None):
    if not isinstance(obj, dict):
        raise DocumentError(f"{where}: expected an object")
    if key not in obj:
        raise DocumentError(f"{where}: missing field {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise DocumentError(f"{where}.{key}: unexpected type {type(value).__name__}")
    return value


def _parse_features(raw, where) -> FeatureBundle:
    if raw is None:
        return FeatureBundle()
    if not isinstance(raw, dict):
        raise DocumentError(f"{where}: features must be an object")
    try:
        return FeatureBundle(
            definite=raw.get("definite", NA),
            animate=raw.get("animate", NA),
            pronominal=bool(raw.get("pronominal", False)),
            svc=bool(raw.get("svc", False)),
        )
    except ValueError as err:
        raise DocumentError(f"{where}: {err}") from None


def _parse_constituent(raw, where) -> Constituent:
    cid = _require(raw, "id", where, str)
    where = f"{where}({cid})"
    raw_category = _require(raw, "category", where, str)
    try:
        category = Category(raw_category)
    except ValueError:
        raise DocumentError(f"{where}: unknown category {raw_category!r}") from None
    surface = _require(raw, "surface", where, list)
    if not all(isinstance(tok, str) for tok in surface):
        raise DocumentError(f"{where}: surface tokens must be strings")
    hoberg = raw.get("hoberg_index")
    if hoberg is not None and not isinstance(hoberg, int):
        raise DocumentError(f"{where}: hoberg_index must be an integer")
    lexicon_key = raw.get("lexicon_key")
    if lexicon_key is not None and not isinstance(lexicon_key, str):
        raise DocumentError(f"{where}: lexicon_key must be a string")
    return Constituent(
        id=cid,
        category=category,
        surface=tuple(surface),
        features=_parse_features(raw.get("features"), where),
        hoberg_index=hoberg,
        lexicon_key=lexicon_key,
    )


def _parse_verb(raw, where) -> VerbComplex:
    finite = _require(raw, "finite", where, list)
    nonfinite = raw.get("nonfinite", [])
    if not isinstance(nonfinite, list):
        raise DocumentError(f"{where}.nonfinite: must be a list")
    return VerbComplex(finite=tuple(finite), nonfinite=tuple(nonfinite))


def _parse_clause_common(raw, where):
    raw_type = _require(raw, "clause_type", where, str)
    try:
        clause_type = ClauseType(raw_type)
    except ValueError:
        raise DocumentError(f"{where}: unknown clause_type {raw_type!r}") from None
    verb = _parse_verb(_require(raw, "verb", where), f"{where}.verb")
    complementizer = raw.get("complementizer")
    if complementizer is not None and not isinstance(complementizer, str):
        raise DocumentError(f"{where}.complementizer: must be a string")
    constituents = [
        _parse_constituent(c, f"{where}.constituents[{i}]")
        for i, c in enumerate(_require(raw, "constituents", where, list))
    ]
    return clause_type, verb, complementizer, tuple(constituents)


def parse_clause(raw, where="clause") -> ClauseSpec:
    clause_type, verb, complementizer, constituents = _parse_clause_common(raw, where)
    return ClauseSpec(
        clause_type=clause_type,
        verb=verb,
        constituents=constituents,
        complementizer=complementizer,
    )


def parse_observed(raw, where="observed") -> ObservedClause:
    clause_type, verb, complementizer, constituents = _parse_clause_common(raw, where)
    stress = raw.get("stress", [])
    if not isinstance(stress, list):
        raise DocumentError(f"{where}.stress: must be a list of constituent ids")
    known = {c.id for c in constituents}
    for cid in stress:
        if cid not in known:
            raise DocumentError(f"{where}.stress: unknown constituent id {cid!r}")
    return ObservedClause(
        clause_type=clause_type,
        verb=verb,
        constituents=constituents,
        complementizer=complementizer,
        stress=frozenset(stress),
    )


def parse_tags(raw, where="tags") -> TagAssignment:
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise DocumentError(f"{where}: must be an object mapping ids to tags")
    tags: TagAssignment = {}
    for cid, raw_tag in raw.items():
        try:
            tags[cid] = Tag(raw_tag)
        except ValueError:
            raise DocumentError(f"{where}.{cid}: unknown tag {raw_tag!r}") from None
    return tags


def parse_candidates(raw, where="candidates"):
    """Construct candidate readings, applying construction-time exclusions.

    Returns ``(candidates, excluded)`` where excluded lists ``(label, reason)``
    pairs for readings impossible to build, e.g. a PP adjunct on a pronominal
    head.
    """
    if not isinstance(raw, list) or not raw:
        raise DocumentError(f"{where}: must be a non-empty list")
    candidates = []
    excluded = []
    for i, raw_candidate in enumerate(raw):
        label = _require(raw_candidate, "label", f"{where}[{i}]", str)
        attachment = raw_candidate.get("np_attachment")
        if attachment is not None:
            head_is_pronoun = bool(
                _require(attachment, "head_is_pronoun", f"{where}[{i}].np_attachment")
            )
            if not np_adjunct_possible(head_is_pronoun):
                excluded.append((label, "pronominal heads take no NP adjunct"))
                continue
        observed = parse_observed(
            _require(raw_candidate, "observed", f"{where}[{i}]"),
            f"{where}[{i}].observed",
        )
        context = raw_candidate.get("constraint_context", [])
        if not isinstance(context, list):
            raise DocumentError(f"{where}[{i}].constraint_context: must be a list")
        candidates.append(
            CandidateReading(
                label=label,
                clause=observed,
                constraint_context=frozenset(context),
            )
        )
    return tuple(candidates), tuple(excluded)


def parse_document(raw) -> ClauseDocument:
    if not isinstance(raw, dict):
        raise DocumentError("document: expected a JSON object")
    version = _require(raw, "schema_version", "document", str)
    if version != SCHEMA_VERSION:
        raise DocumentError(f"document: unsupported schema_version {version!r}")
    raw_mode = _require(raw, "mode", "document", str)
    try:
        mode = Mode(raw_mode)
    except ValueError:
        raise DocumentError(f"document: unknown mode {raw_mode!r}") from None
    payload = _require(raw, "payload", "document", dict)
    if mode is Mode.GENERATE:
        return ClauseDocument(
            mode=mode,
            clause=parse_clause(_require(payload, "clause", "payload")),
            tags=parse_tags(payload.get("tags")),
        )
    if mode is Mode.ANALYZE:
        return ClauseDocument(
            mode=mode,
            observed=parse_observed(_require(payload, "observed", "payload")),
        )
    candidates, excluded = parse_candidates(_require(payload, "candidates", "payload"))
    return ClauseDocument(mode=mode, candidates=candidates, excluded=excluded)


def load_document(text: str) -> ClauseDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"document: invalid JSON ({err})") from None
    return parse_document(raw)


def verify_lexicon_keys(constituents, lex: Lexicon) -> list[str]:
    """Cross-check constituents against the lexicon.

    Reports unresolved keys and Hoberg indexes that contradict the resolved
    reading; meant to run right after parsing, before any engine call.
    """
    problems = []
    for c in constituents:
        if c.lexicon_key is None:
            continue
        entry = lex.get(c.lexicon_key)
        if entry is None:
            lemma = c.lexicon_key.split("#", 1)[0]
            problems.append(f"{c.id}: lexicon has no reading {c.lexicon_key!r} (lemma {lemma!r})")
            continue
        if c.hoberg_index is not None and c.hoberg_index != entry.hoberg_index:
            problems.append(
                f"{c.id}: hoberg_index {c.hoberg_index} contradicts "
                f"{entry.key} (class {entry.hoberg_index})"
            )
    return problems
