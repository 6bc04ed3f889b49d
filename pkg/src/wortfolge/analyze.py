"""Analysis: recover focus, theme and rheme from an observed constituent order.

Focus is identified first (a sentence whose order is only derivable with a
focused constituent is contrastively stressed), then theme (the clause-initial
element unless it is the focus), then rheme (the final constituent unless it
is inherently non-rhematic: a personal pronoun or a lexically non-rhematic
modifier).  Verbs never participate: their placement is fixed and they are
never recognized as rhemes.

Grammaticality is decided by search: an order is grammatical iff some tag
assignment realizes it, and marked iff every such assignment involves focus.
Two marked constructions are additionally detected directly (a typically
rhematic element in the Vorfeld, and a pronoun to the right of a modifier);
the detections must agree with the search and are reported alongside it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .clause import Category, ClauseSpec, ClauseType, Constituent, Tag, VerbComplex
from .lexicon import Lexicon
from .linearize import (
    MAX_SEARCH_CONSTITUENTS,
    SurfaceOrder,
    TagAssignment,
    iter_assignments,
    realizations,
)
from .slots import NoSlotError, SlotTable, build_slot_table, sort_key, typically_rhematic


@dataclass(frozen=True)
class ObservedClause:
    """An ordered clause as encountered in text, with no tags.

    ``constituents`` are in surface order: in V2 the first one occupies the
    Vorfeld; in VF they follow the complementizer.  ``stress`` optionally
    names constituents the input marks as contrastively stressed (the
    capitals convention); when present it constrains the explanations.
    """

    clause_type: ClauseType
    verb: VerbComplex
    constituents: tuple[Constituent, ...]
    complementizer: str | None = None
    stress: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "constituents", tuple(self.constituents))
        object.__setattr__(self, "stress", frozenset(self.stress))

    @property
    def order(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.constituents)


def spec_of(obs: ObservedClause) -> ClauseSpec:
    """The observed clause with its order erased (tags stripped)."""
    return ClauseSpec(
        clause_type=obs.clause_type,
        verb=obs.verb,
        constituents=tuple(c.with_tag(None) for c in obs.constituents),
        complementizer=obs.complementizer,
    )


def observe(spec: ClauseSpec, surface: SurfaceOrder) -> ObservedClause:
    """Turn a generated order into an observation: keep order, erase tags."""
    return ObservedClause(
        clause_type=spec.clause_type,
        verb=spec.verb,
        constituents=tuple(spec.by_id(cid).with_tag(None) for cid in surface.order),
        complementizer=spec.complementizer,
    )


class Verdict(str, Enum):
    GRAMMATICAL_UNMARKED = "GRAMMATICAL_UNMARKED"
    GRAMMATICAL_MARKED = "GRAMMATICAL_MARKED"
    UNGRAMMATICAL = "UNGRAMMATICAL"


@dataclass(frozen=True)
class StressWarning:
    """A final inherently non-rhematic element: heavy stress is expected on
    the V2 verb or on the Vorfeld element (two candidates, unranked)."""

    verb_candidate: str
    vorfeld_candidate: str


@dataclass(frozen=True)
class AnalysisResult:
    verdict: Verdict
    theme: str | None
    rheme: str | None
    focus: str | None
    focus_options: tuple[str, ...]
    explanations: tuple[tuple[tuple[str, Tag], ...], ...]
    markedness_cost: int
    warning: StressWarning | None = None
    detected_focus: tuple[str, ...] = ()


def explain_order(
    obs: ObservedClause,
    lex: Lexicon,
    table: SlotTable | None = None,
) -> tuple[TagAssignment, ...]:
    """Every tag assignment whose realizations include the observed order.

    An empty result means the order is ungrammatical.  Stress marks, when
    present, are hard constraints: an explanation must put FOCUS exactly on
    the marked constituents.
    """
    if len(obs.constituents) > MAX_SEARCH_CONSTITUENTS:
        raise ValueError(
            f"clause has {len(obs.constituents)} constituents; "
            f"exhaustive search is capped at {MAX_SEARCH_CONSTITUENTS}"
        )
    table = table or build_slot_table()
    spec = spec_of(obs)
    target = obs.order
    out = []
    for tags in iter_assignments(spec):
        if obs.stress:
            focused = {cid for cid, t in tags.items() if t is Tag.FOCUS}
            if focused != set(obs.stress):
                continue
        for surface in realizations(spec, tags, lex, table):
            if surface.order == target:
                out.append(dict(tags))
                break
    return tuple(out)


def detect_focus_constructions(
    obs: ObservedClause,
    lex: Lexicon,
    table: SlotTable | None = None,
) -> tuple[str, ...]:
    """Direct detectors for the order patterns that require contrastive stress.

    (a) the Vorfeld holds a typically rhematic element (directional/situative/
    expansive complements, late-field categories, indefinite objects) although
    the clause offers an unmarked opener;
    (b) an early-field pronoun stands to the right of a modifier, which such
    pronouns never do in unmarked orders.
    """
    from .linearize import vorfeld_capable

    table = table or build_slot_table()

    def rheme_expressible(c: Constituent) -> bool:
        try:
            sort_key(table, c.with_tag(None), 0, tag=Tag.RHEME, lex=lex)
        except (NoSlotError, KeyError):
            return False
        return True

    hits: list[str] = []
    if obs.clause_type is ClauseType.V2 and obs.constituents:
        vorfeld = obs.constituents[0]
        if typically_rhematic(table, vorfeld):
            # Fronting a late-field element is only marked when something else
            # would have opened the clause unmarked: an early-field element
            # that no tag can move out of the way (a rheme tag could).
            has_unmarked_opener = any(
                not typically_rhematic(table, c)
                and vorfeld_capable(c, lex)
                and not rheme_expressible(c)
                for c in obs.constituents[1:]
            )
            if has_unmarked_opener:
                hits.append(vorfeld.id)
    # Pattern (b) concerns Mittelfeld order; the Vorfeld occupant is outside
    # it.  Only pronouns whose default slot precedes the modifier bands have
    # the leftward tendency the construction relies on, and rheme-capable
    # ones (genitive pronouns) can stand late without stress.
    start = 1 if obs.clause_type is ClauseType.V2 else 0
    seen_modifier = False
    for c in obs.constituents[start:]:
        if c.category is Category.M:
            seen_modifier = True
        elif c.features.pronominal and seen_modifier and c.id not in hits:
            try:
                default = sort_key(table, c.with_tag(None), 0)
            except NoSlotError:
                continue
            if default.slot < table.modifier_band_start and not rheme_expressible(c):
                hits.append(c.id)
    return tuple(hits)


def recognize_focus(
    obs: ObservedClause,
    lex: Lexicon,
    explanations,
) -> tuple[str | None, tuple[str, ...]]:
    """Obligatory focus from the explanation set.

    Returns ``(focus_id, options)``: the id when every explanation focuses the
    same constituent; when explanations disagree about which constituent is
    focused, the id is None and all candidates are listed.
    """
    if not explanations:
        return None, ()
    focused_per_explanation = []
    for tags in explanations:
        focused = [cid for cid, t in tags.items() if t is Tag.FOCUS]
        if not focused:
            return None, ()  # a focus-free explanation exists: no obligatory focus
        focused_per_explanation.append(focused[0])
    unique = sorted(set(focused_per_explanation))
    if len(unique) == 1:
        return unique[0], tuple(unique)
    return None, tuple(unique)


def recognize_theme(obs: ObservedClause, focus_ids=()) -> str | None:
    """The clause-initial constituent, unless it was identified as the focus."""
    if not obs.constituents:
        return None
    first = obs.constituents[0]
    if first.id in focus_ids:
        return None
    return first.id


def _inherently_non_rhematic(c: Constituent, lex: Lexicon) -> bool:
    if c.features.pronominal:
        return True
    if c.lexicon_key is not None:
        entry = lex.get(c.lexicon_key)
        if entry is not None and not entry.rhematic:
            return True
    return False


def recognize_rheme(obs: ObservedClause, lex: Lexicon) -> str | None:
    """The final constituent, unless it is inherently non-rhematic.

    Verbs are never candidates; the clause-final verb cluster is skipped by
    construction since only constituents are considered.
    """
    if not obs.constituents:
        return None
    last = obs.constituents[-1]
    if _inherently_non_rhematic(last, lex):
        return None
    return last.id


def analyze(
    obs: ObservedClause,
    lex: Lexicon,
    table: SlotTable | None = None,
) -> AnalysisResult:
    """Full pipeline: explanations, verdict, then focus, theme and rheme."""
    table = table or build_slot_table()
    explanations = explain_order(obs, lex, table)
    focus, focus_options = recognize_focus(obs, lex, explanations)
    theme = recognize_theme(obs, focus_ids=focus_options)
    rheme = recognize_rheme(obs, lex)
    detected = detect_focus_constructions(obs, lex, table)

    costs = [sum(1 for t in tags.values() if t is Tag.FOCUS) for tags in explanations]
    markedness_cost = min(costs) if costs else 0

    warning = None
    if (
        explanations
        and obs.clause_type is ClauseType.V2
        and obs.constituents
        and _inherently_non_rhematic(obs.constituents[-1], lex)
        and obs.constituents[-1].id not in focus_options
    ):
        warning = StressWarning(
            verb_candidate=" ".join(obs.verb.finite),
            vorfeld_candidate=obs.constituents[0].id,
        )

    if not explanations:
        verdict = Verdict.UNGRAMMATICAL
    elif markedness_cost > 0 or warning is not None:
        verdict = Verdict.GRAMMATICAL_MARKED
    else:
        verdict = Verdict.GRAMMATICAL_UNMARKED

    frozen = tuple(tuple(sorted(tags.items())) for tags in explanations)
    return AnalysisResult(
        verdict=verdict,
        theme=theme,
        rheme=rheme,
        focus=focus,
        focus_options=focus_options,
        explanations=frozen,
        markedness_cost=markedness_cost,
        warning=warning,
        detected_focus=detected,
    )
