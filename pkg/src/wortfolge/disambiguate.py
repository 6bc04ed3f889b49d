"""Reading disambiguation: rank competing analyses by focus cost.

Focussing constructions are rare in written text, so among the grammatical
readings of an ambiguous sentence (homonymous adverbs, PP attachment) the one
that avoids contrastive focus is preferred.  Lexical usage constraints (e.g.
an adverb reading that must not fall under negation) reject readings outright.

Candidate generation is the caller's job; this module filters and ranks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analyze import AnalysisResult, ObservedClause, Verdict, analyze
from .lexicon import Lexicon, NO_NEGATION
from .slots import SlotTable, build_slot_table

#: Context atom: the ambiguous item stands in the scope of negation.
NEGATED = "NEGATED"


@dataclass(frozen=True)
class CandidateReading:
    """One reading of an ambiguous sentence, as an observed clause variant."""

    label: str
    clause: ObservedClause
    constraint_context: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "constraint_context", frozenset(self.constraint_context))


@dataclass(frozen=True)
class RankedReading:
    reading: CandidateReading
    constraint_ok: bool
    result: AnalysisResult
    rank: int


def filter_constraints(candidate: CandidateReading, lex: Lexicon) -> bool:
    """False iff a lexicon constraint of any constituent is violated in context."""
    for c in candidate.clause.constituents:
        if c.lexicon_key is None:
            continue
        entry = lex.get(c.lexicon_key)
        if entry is None:
            raise KeyError(
                f"unresolved lexicon key {c.lexicon_key!r} on {c.id} "
                f"in reading {candidate.label!r}"
            )
        if NO_NEGATION in entry.constraints and NEGATED in candidate.constraint_context:
            return False
    return True


def np_adjunct_possible(head_is_pronoun: bool) -> bool:
    """Whether a PP can attach as adjunct to the preceding NP.

    Pronouns take no adjuncts, so a pronominal head rules the reading out at
    candidate-construction time.
    """
    return not head_is_pronoun


def rank_readings(
    candidates,
    lex: Lexicon,
    table: SlotTable | None = None,
) -> tuple[RankedReading, ...]:
    """Analyze and order the candidates: avoid focus where possible.

    Constraint-violating candidates sort last and are flagged rejected;
    among the survivors ungrammatical readings rank below marked ones, and
    grammatical readings ascend by markedness cost.  Ties keep caller order.
    """
    candidates = list(candidates)
    if not candidates:
        raise ValueError("rank_readings requires at least one candidate")
    table = table or build_slot_table()

    scored = []
    for index, candidate in enumerate(candidates):
        ok = filter_constraints(candidate, lex)
        result = analyze(candidate.clause, lex, table)
        ungrammatical = result.verdict is Verdict.UNGRAMMATICAL
        sort_key = (0 if ok else 1, 1 if ungrammatical else 0, result.markedness_cost, index)
        scored.append((sort_key, candidate, ok, result))
    scored.sort(key=lambda item: item[0])
    return tuple(
        RankedReading(reading=candidate, constraint_ok=ok, result=result, rank=rank)
        for rank, (_, candidate, ok, result) in enumerate(scored, start=1)
    )
