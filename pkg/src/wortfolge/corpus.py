"""Regression corpus: attested example clauses with their expected behaviour.

Each case wraps one clause document plus expectations (rendered order,
verdict, recovered tags, ranking).  Cases flagged ``expected_mismatch`` are
the spots where the shipped slot-table transcription and an attested printed
order disagree; for those the recorded discrepancy itself is asserted, and
they never fail the corpus run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .analyze import AnalysisResult, ObservedClause, analyze
from .documents import ClauseDocument, DocumentError, Mode, parse_document, verify_lexicon_keys
from .disambiguate import rank_readings
from .lexicon import Lexicon
from .linearize import LinearizeError, linearize
from .slots import SlotTable, build_slot_table


@dataclass(frozen=True)
class CorpusCase:
    case_id: str
    doc: ClauseDocument
    expected: dict
    expected_mismatch: bool = False
    printed: tuple[str, ...] = ()
    printed_order: tuple[str, ...] = ()
    printed_stress: frozenset[str] = frozenset()
    note: str = ""


@dataclass
class CaseResult:
    case_id: str
    passed: bool
    expected_mismatch: bool
    failures: list[str] = field(default_factory=list)


@dataclass
class CorpusSummary:
    results: list[CaseResult]

    @property
    def ok(self) -> bool:
        """Pass iff no non-mismatch case failed."""
        return not any(not r.passed and not r.expected_mismatch for r in self.results)

    @property
    def counts(self) -> dict:
        passed = sum(1 for r in self.results if r.passed)
        return {
            "total": len(self.results),
            "passed": passed,
            "failed": len(self.results) - passed,
            "expected_mismatch": sum(1 for r in self.results if r.expected_mismatch),
        }


def load_corpus(text: str) -> tuple[CorpusCase, ...]:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"corpus: invalid JSON ({err})") from None
    if not isinstance(raw, dict) or "cases" not in raw:
        raise DocumentError("corpus: expected an object with a 'cases' list")
    cases = []
    seen = set()
    for i, raw_case in enumerate(raw["cases"]):
        where = f"cases[{i}]"
        case_id = raw_case.get("case_id")
        if not isinstance(case_id, str) or not case_id:
            raise DocumentError(f"{where}: missing case_id")
        if case_id in seen:
            raise DocumentError(f"{where}: duplicate case_id {case_id!r}")
        seen.add(case_id)
        if "doc" not in raw_case:
            raise DocumentError(f"{where}: missing doc")
        doc = parse_document(raw_case["doc"])
        flags = raw_case.get("flags", {})
        cases.append(
            CorpusCase(
                case_id=case_id,
                doc=doc,
                expected=raw_case.get("expected", {}),
                expected_mismatch=bool(flags.get("expected_mismatch", False)),
                printed=tuple(raw_case.get("printed", [])),
                printed_order=tuple(raw_case.get("printed_order", [])),
                printed_stress=frozenset(raw_case.get("printed_stress", [])),
                note=raw_case.get("note", ""),
            )
        )
    return tuple(cases)


def load_default_corpus() -> tuple[CorpusCase, ...]:
    text = resources.files("wortfolge.data").joinpath("corpus.json").read_text("utf-8")
    return load_corpus(text)


def _check_analysis(expected: dict, result: AnalysisResult, failures: list, prefix: str = "analysis"):
    def check(field_name, actual):
        if field_name in expected and expected[field_name] != actual:
            failures.append(f"{prefix}.{field_name}: expected {expected[field_name]!r}, got {actual!r}")

    check("verdict", result.verdict.value)
    check("theme", result.theme)
    check("rheme", result.rheme)
    check("focus", result.focus)
    check("markedness_cost", result.markedness_cost)
    if "focus_options" in expected:
        check("focus_options", list(result.focus_options))
    if "detected_focus" in expected:
        check("detected_focus", list(result.detected_focus))
    if "warning" in expected:
        actual_warning = (
            None
            if result.warning is None
            else {"verb": result.warning.verb_candidate, "vorfeld": result.warning.vorfeld_candidate}
        )
        check("warning", actual_warning)
    if "has_empty_explanation" in expected:
        check("has_empty_explanation", () in result.explanations)
    if "explanation_count" in expected:
        check("explanation_count", len(result.explanations))


def _observed_from_order(spec, order, stress=frozenset()) -> ObservedClause:
    return ObservedClause(
        clause_type=spec.clause_type,
        verb=spec.verb,
        constituents=tuple(spec.by_id(cid) for cid in order),
        complementizer=spec.complementizer,
        stress=frozenset(stress),
    )


def run_case(case: CorpusCase, lex: Lexicon, table: SlotTable | None = None) -> CaseResult:
    table = table or build_slot_table()
    failures: list[str] = []
    doc = case.doc

    if doc.mode is Mode.GENERATE:
        problems = verify_lexicon_keys(doc.clause.constituents, lex)
        failures.extend(problems)
        try:
            surface = linearize(doc.clause, doc.tags or {}, lex, table)
        except (LinearizeError, ValueError) as err:
            failures.append(f"linearize failed: {err}")
            return CaseResult(case.case_id, False, case.expected_mismatch, failures)
        if "rendered" in case.expected and list(surface.rendered) != case.expected["rendered"]:
            failures.append(
                f"rendered: expected {' '.join(case.expected['rendered'])!r}, got {surface.text!r}"
            )
        if "vorfeld" in case.expected and surface.vorfeld != case.expected["vorfeld"]:
            failures.append(f"vorfeld: expected {case.expected['vorfeld']!r}, got {surface.vorfeld!r}")
        if "analysis" in case.expected:
            obs = _observed_from_order(doc.clause, surface.order)
            _check_analysis(case.expected["analysis"], analyze(obs, lex, table), failures)
        if case.expected_mismatch:
            # The transcription and the attested line disagree here; assert the
            # discrepancy is exactly the recorded one.
            if not case.printed:
                failures.append("expected_mismatch case without printed tokens")
            elif list(surface.rendered) == list(case.printed):
                failures.append("expected a mismatch against the printed order, but they agree")
            if case.printed_order and "printed_analysis" in case.expected:
                obs = _observed_from_order(doc.clause, case.printed_order, case.printed_stress)
                _check_analysis(
                    case.expected["printed_analysis"],
                    analyze(obs, lex, table),
                    failures,
                    prefix="printed_analysis",
                )

    elif doc.mode is Mode.ANALYZE:
        failures.extend(verify_lexicon_keys(doc.observed.constituents, lex))
        result = analyze(doc.observed, lex, table)
        _check_analysis(case.expected.get("analysis", {}), result, failures)

    else:
        for candidate in doc.candidates:
            failures.extend(verify_lexicon_keys(candidate.clause.constituents, lex))
        ranked = rank_readings(doc.candidates, lex, table)
        if "ranking" in case.expected:
            actual = [r.reading.label for r in ranked]
            if actual != case.expected["ranking"]:
                failures.append(f"ranking: expected {case.expected['ranking']}, got {actual}")
        if "rejected" in case.expected:
            actual = sorted(r.reading.label for r in ranked if not r.constraint_ok)
            if actual != sorted(case.expected["rejected"]):
                failures.append(f"rejected: expected {case.expected['rejected']}, got {actual}")
        if "excluded" in case.expected:
            actual = sorted(label for label, _ in doc.excluded)
            if actual != sorted(case.expected["excluded"]):
                failures.append(f"excluded: expected {case.expected['excluded']}, got {actual}")
        for label, expected_analysis in case.expected.get("readings", {}).items():
            matching = [r for r in ranked if r.reading.label == label]
            if not matching:
                failures.append(f"readings.{label}: no such candidate")
                continue
            _check_analysis(expected_analysis, matching[0].result, failures, prefix=f"readings.{label}")

    return CaseResult(case.case_id, not failures, case.expected_mismatch, failures)


def run_corpus(
    cases,
    lex: Lexicon,
    table: SlotTable | None = None,
    filter_id: str | None = None,
) -> CorpusSummary:
    table = table or build_slot_table()
    selected = [c for c in cases if filter_id is None or c.case_id == filter_id]
    return CorpusSummary(results=[run_case(c, lex, table) for c in selected])
