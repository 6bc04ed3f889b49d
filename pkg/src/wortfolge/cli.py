"""Command-line front-end: generate, analyze, disambiguate, corpus harness.

Exit codes: 0 ok, 1 input error, 2 generation error, 3 ungrammatical verdict,
4 corpus failure.  Machine-readable JSON is the default output; ``--pretty``
prints a compact human-readable account instead.  Reports are deterministic
byte-for-byte for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .analyze import AnalysisResult, Verdict, analyze
from .corpus import load_corpus, run_corpus
from .disambiguate import rank_readings
from .clause import Category, ClauseType, Tag
from .documents import (
    DocumentError,
    Mode,
    parse_candidates,
    parse_clause,
    parse_document,
    parse_observed,
    parse_tags,
    verify_lexicon_keys,
)
from .lexicon import LexiconError, load_default_lexicon, load_lexicon
from .linearize import (
    CooccurrenceViolation,
    InexpressibleTags,
    LinearizeError,
    NoVorfeld,
    enumerate_orders,
    linearize,
)
from .slots import SlotTableError, build_slot_table, load_slot_table

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GENERATION = 2
EXIT_UNGRAMMATICAL = 3
EXIT_CORPUS = 4

LEXICON_ENV = "WORTFOLGE_LEXICON"


class _InputError(Exception):
    pass


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise _InputError(f"cannot read {path}: {err.strerror}") from None


def _load_json(path: str):
    try:
        return json.loads(_read_file(path))
    except json.JSONDecodeError as err:
        raise _InputError(f"{path}: invalid JSON ({err})") from None


def _is_document(raw) -> bool:
    return isinstance(raw, dict) and "mode" in raw and "payload" in raw


def _unwrap_payload(raw, expected_mode: Mode, key: str):
    """Accept either a bare payload or a full clause document of the mode."""
    if _is_document(raw):
        if raw.get("mode") != expected_mode.value:
            raise _InputError(f"document mode {raw.get('mode')!r}, expected {expected_mode.value}")
        payload = raw["payload"]
        return payload.get(key, payload) if isinstance(payload, dict) else payload
    if isinstance(raw, dict) and key in raw and key not in ("clause",):
        return raw[key]
    return raw


def _resolve_lexicon(args):
    path = args.lexicon or os.environ.get(LEXICON_ENV)
    if path:
        return load_lexicon(_read_file(path))
    return load_default_lexicon()


def _resolve_table(args):
    if args.slot_table:
        return load_slot_table(_read_file(args.slot_table))
    return build_slot_table()


def _emit(payload, pretty_lines, pretty: bool):
    if pretty:
        print("\n".join(pretty_lines))
    else:
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2))


def _constituent_gloss(c, tag=None) -> str:
    base = c.category.value
    if c.category is Category.M and c.hoberg_index is not None:
        base = f"M{c.hoberg_index}"
    if c.features.svc:
        base += ":svc"
    elif c.features.pronominal:
        base += ":pron"
    else:
        if c.features.definite in "+-":
            base += c.features.definite + "d"
        if c.features.animate in "+-":
            base += c.features.animate + "a"
    if tag is not None:
        base += "+" + tag.value.lower()
    return base


def _interlinear(segments) -> list[str]:
    """Two aligned rows: surface text above, category/tag glosses below."""
    top, bottom = [], []
    for text, gloss in segments:
        width = max(len(text), len(gloss))
        top.append(text.ljust(width))
        bottom.append(gloss.ljust(width))
    return ["  ".join(top).rstrip(), "  ".join(bottom).rstrip()]


def _generation_segments(clause, tags, surface):
    tokens = list(surface.rendered)
    segments = []

    def take(count, gloss):
        nonlocal tokens
        text, tokens = " ".join(tokens[:count]), tokens[count:]
        segments.append((text, gloss))

    if clause.clause_type is ClauseType.V2:
        vorfeld = clause.by_id(surface.vorfeld)
        take(len(vorfeld.surface), _constituent_gloss(vorfeld, tags.get(vorfeld.id)))
        take(len(clause.verb.finite), "V")
        for cid in surface.mittelfeld:
            con = clause.by_id(cid)
            take(len(con.surface), _constituent_gloss(con, tags.get(cid)))
        if clause.verb.nonfinite:
            take(len(clause.verb.nonfinite), "V")
    else:
        if clause.complementizer:
            take(1, "C")
        for cid in surface.mittelfeld:
            con = clause.by_id(cid)
            take(len(con.surface), _constituent_gloss(con, tags.get(cid)))
        if clause.verb.nonfinite:
            take(len(clause.verb.nonfinite), "V")
        take(len(clause.verb.finite), "V")
    return segments


def _analysis_report(result: AnalysisResult) -> dict:
    return {
        "verdict": result.verdict.value,
        "theme": result.theme,
        "rheme": result.rheme,
        "focus": result.focus,
        "focus_options": list(result.focus_options),
        "explanation_count": len(result.explanations),
        "explanations": [
            {cid: tag.value for cid, tag in assignment} for assignment in result.explanations
        ],
        "markedness_cost": result.markedness_cost,
        "warning": (
            None
            if result.warning is None
            else {
                "verb": result.warning.verb_candidate,
                "vorfeld": result.warning.vorfeld_candidate,
            }
        ),
        "detected_focus": list(result.detected_focus),
    }


def _cmd_generate(args) -> int:
    lex = _resolve_lexicon(args)
    table = _resolve_table(args)
    raw = _load_json(args.clause)
    if _is_document(raw):
        doc = parse_document(raw)
        if doc.mode is not Mode.GENERATE:
            raise _InputError(f"document mode {doc.mode.value}, expected GENERATE")
        clause, tags = doc.clause, dict(doc.tags or {})
    else:
        clause = parse_clause(_unwrap_payload(raw, Mode.GENERATE, "clause"))
        tags = {}
    if args.tags:
        tags = parse_tags(_load_json(args.tags))

    # Cooccurrence and tagging defects are generation errors (exit 2), raised
    # by the engine itself; only lexicon inconsistencies are input errors.
    problems = verify_lexicon_keys(clause.constituents, lex)
    if problems:
        raise _InputError("; ".join(problems))

    if args.all_variants:
        variants = enumerate_orders(clause, lex, table)
        report = {
            "variants": [
                {
                    "order": list(v.order),
                    "rendered": list(v.surface.rendered),
                    "assignments": [
                        {cid: tag.value for cid, tag in assignment}
                        for assignment in v.assignments
                    ],
                }
                for v in variants
            ],
            "variant_count": len(variants),
        }
        lines = [f"{len(variants)} distinct orders:"]
        for v in variants:
            lines.append(f"  {v.surface.text}   [{len(v.assignments)} assignment(s)]")
        _emit(report, lines, args.pretty)
        return EXIT_OK

    surface = linearize(clause, tags, lex, table)
    report = {
        "rendered": list(surface.rendered),
        "text": surface.text,
        "vorfeld": surface.vorfeld,
        "mittelfeld": list(surface.mittelfeld),
        "keys": {
            cid: {
                "slot": key.slot,
                "sub_rank": key.sub_rank,
                "hoberg": key.hoberg,
                "input_ordinal": key.input_ordinal,
            }
            for cid, key in surface.keys
        },
    }
    lines = _interlinear(_generation_segments(clause, tags, surface))
    if surface.vorfeld is not None:
        lines.append(f"vorfeld: {surface.vorfeld}")
    keys = "  ".join(f"{cid}[{key.slot}.{key.sub_rank}.{key.hoberg}]" for cid, key in surface.keys)
    lines.append(f"mittelfeld slots: {keys}")
    _emit(report, lines, args.pretty)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    lex = _resolve_lexicon(args)
    table = _resolve_table(args)
    observed = parse_observed(_unwrap_payload(_load_json(args.observed), Mode.ANALYZE, "observed"))
    problems = verify_lexicon_keys(observed.constituents, lex)
    if problems:
        raise _InputError("; ".join(problems))

    result = analyze(observed, lex, table)
    report = _analysis_report(result)

    def recovered_tag(cid):
        if cid == result.focus:
            return Tag.FOCUS
        if cid == result.theme:
            return Tag.THEME
        if cid == result.rheme:
            return Tag.RHEME
        return None

    segments = []
    constituents = list(observed.constituents)
    if observed.clause_type is ClauseType.V2 and constituents:
        first = constituents.pop(0)
        segments.append((" ".join(first.surface), _constituent_gloss(first, recovered_tag(first.id))))
        segments.append((" ".join(observed.verb.finite), "V"))
    elif observed.complementizer:
        segments.append((observed.complementizer, "C"))
    for con in constituents:
        segments.append((" ".join(con.surface), _constituent_gloss(con, recovered_tag(con.id))))
    if observed.clause_type is ClauseType.V2:
        if observed.verb.nonfinite:
            segments.append((" ".join(observed.verb.nonfinite), "V"))
    else:
        segments.append((" ".join(observed.verb.nonfinite + observed.verb.finite), "V"))

    lines = _interlinear(segments)
    lines += [
        f"verdict: {result.verdict.value}",
        f"theme: {result.theme or '-'}   rheme: {result.rheme or '-'}   focus: {result.focus or '-'}",
        f"explanations: {len(result.explanations)}   markedness cost: {result.markedness_cost}",
    ]
    if result.warning is not None:
        lines.append(
            "stress expected on the finite verb "
            f"({result.warning.verb_candidate!r}) or the Vorfeld element "
            f"({result.warning.vorfeld_candidate!r})"
        )
    if result.detected_focus:
        lines.append(f"focus constructions detected on: {', '.join(result.detected_focus)}")
    _emit(report, lines, args.pretty)
    return EXIT_UNGRAMMATICAL if result.verdict is Verdict.UNGRAMMATICAL else EXIT_OK


def _cmd_disambiguate(args) -> int:
    lex = _resolve_lexicon(args)
    table = _resolve_table(args)
    raw = _unwrap_payload(_load_json(args.candidates), Mode.DISAMBIGUATE, "candidates")
    candidates, excluded = parse_candidates(raw)
    for candidate in candidates:
        problems = verify_lexicon_keys(candidate.clause.constituents, lex)
        if problems:
            raise _InputError("; ".join(problems))
    if not candidates:
        raise _InputError("no constructible candidate readings")

    ranked = rank_readings(candidates, lex, table)
    report = {
        "readings": [
            {
                "label": r.reading.label,
                "rank": r.rank,
                "constraint_ok": r.constraint_ok,
                "verdict": r.result.verdict.value,
                "markedness_cost": r.result.markedness_cost,
                "focus": r.result.focus,
            }
            for r in ranked
        ],
        "excluded": [{"label": label, "reason": reason} for label, reason in excluded],
    }
    lines = []
    for r in ranked:
        flag = "" if r.constraint_ok else "  [constraint-rejected]"
        lines.append(
            f"{r.rank}. {r.reading.label}: {r.result.verdict.value}, "
            f"focus cost {r.result.markedness_cost}{flag}"
        )
    for label, reason in excluded:
        lines.append(f"-- {label}: excluded ({reason})")
    _emit(report, lines, args.pretty)
    return EXIT_OK


def _cmd_corpus(args) -> int:
    lex = _resolve_lexicon(args)
    table = _resolve_table(args)
    cases = load_corpus(_read_file(args.corpus_file))
    summary = run_corpus(cases, lex, table, filter_id=args.filter)
    for result in summary.results:
        status = "PASS" if result.passed else "FAIL"
        suffix = "  (expected mismatch)" if result.expected_mismatch else ""
        print(f"{result.case_id}: {status}{suffix}")
        for failure in result.failures:
            print(f"    {failure}")
    counts = summary.counts
    print(
        f"total {counts['total']}, passed {counts['passed']}, "
        f"failed {counts['failed']}, expected-mismatch {counts['expected_mismatch']}"
    )
    if args.filter is not None and counts["total"] == 0:
        print(f"no case matches {args.filter!r}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK if summary.ok else EXIT_CORPUS


class _ArgumentParser(argparse.ArgumentParser):
    # Flag misuse is an input error (exit 1), not argparse's default exit 2,
    # which is reserved for generation errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _output_flags(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--pretty", action="store_true", help="human-readable output")
    group.add_argument("--json", action="store_true", help="machine-readable output (default)")


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="wortfolge",
        description="German constituent-order engine: generation, analysis, disambiguation.",
    )
    parser.add_argument("--lexicon", help=f"lexicon TSV path (default: ${LEXICON_ENV} or shipped)")
    parser.add_argument("--slot-table", help="slot table TSV path (default: shipped transcription)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="linearize a clause spec under a tag assignment")
    p_gen.add_argument("--clause", required=True, help="clause spec JSON file")
    p_gen.add_argument("--tags", help="tag assignment JSON file (id -> THEME/RHEME/FOCUS)")
    p_gen.add_argument("--all-variants", action="store_true", help="enumerate all realizable orders")
    _output_flags(p_gen)
    p_gen.set_defaults(func=_cmd_generate)

    p_ana = sub.add_parser("analyze", help="recover theme/rheme/focus from an observed order")
    p_ana.add_argument("--observed", required=True, help="observed clause JSON file")
    _output_flags(p_ana)
    p_ana.set_defaults(func=_cmd_analyze)

    p_dis = sub.add_parser("disambiguate", help="rank candidate readings by focus cost")
    p_dis.add_argument("--candidates", required=True, help="candidate readings JSON file")
    _output_flags(p_dis)
    p_dis.set_defaults(func=_cmd_disambiguate)

    p_corpus = sub.add_parser("corpus", help="corpus harness")
    corpus_sub = p_corpus.add_subparsers(dest="corpus_command", required=True)
    p_run = corpus_sub.add_parser("run", help="run a corpus file")
    p_run.add_argument("corpus_file", help="corpus JSON file")
    p_run.add_argument("--filter", help="run only the named case id")
    p_run.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_InputError, DocumentError, LexiconError, SlotTableError, ValueError) as err:
        print(f"input error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (InexpressibleTags, CooccurrenceViolation, NoVorfeld) as err:
        print(
            json.dumps(
                {"error": {"type": type(err).__name__, "message": str(err)}},
                sort_keys=True,
                ensure_ascii=False,
            )
        )
        return EXIT_GENERATION
    except LinearizeError as err:
        print(f"generation error: {err}", file=sys.stderr)
        return EXIT_GENERATION


if __name__ == "__main__":
    sys.exit(main())
