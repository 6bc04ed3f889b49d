"""Generation: order an unordered clause under a theme/rheme/focus assignment.

The Mittelfeld is ordered by the canonical slot table; in V2 clauses one
constituent moves into the Vorfeld (the theme if there is one, otherwise the
subject); the verb positions are fixed by clause type.

:func:`linearize` is the deterministic generator.  :func:`realizations`
exposes the slightly wider realization relation the analyzer searches over:
it additionally admits the two marked constructions an observed sentence may
exhibit, namely a focused constituent fronted into the Vorfeld and a focused
constituent surfacing in the late (general) focus slot instead of the early
one.  Every output of ``linearize`` is among the ``realizations`` outputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .clause import ClauseSpec, ClauseType, Constituent, Tag, validate_clause
from .lexicon import Lexicon
from .slots import NoSlotError, SlotTable, SortKey, all_sort_keys, build_slot_table, check_cooccurrence, sort_key, typically_rhematic

#: An assignment maps constituent ids to their information-structure tag.
TagAssignment = dict[str, Tag]

MAX_SEARCH_CONSTITUENTS = 10


class LinearizeError(Exception):
    pass


class CooccurrenceViolation(LinearizeError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations))


class InexpressibleTags(LinearizeError):
    """The assignment admits no surface order (e.g. a rhematic pronoun)."""


class NoVorfeld(LinearizeError):
    """No constituent can open the clause (degenerate V2 clause)."""


@dataclass(frozen=True)
class SurfaceOrder:
    clause_type: ClauseType
    vorfeld: str | None
    mittelfeld: tuple[str, ...]
    rendered: tuple[str, ...]
    keys: tuple[tuple[str, SortKey], ...]

    @property
    def order(self) -> tuple[str, ...]:
        """Constituent ids in surface order, Vorfeld first."""
        if self.vorfeld is None:
            return self.mittelfeld
        return (self.vorfeld,) + self.mittelfeld

    @property
    def text(self) -> str:
        return " ".join(self.rendered)


def check_assignment(spec: ClauseSpec, tags: TagAssignment) -> list[str]:
    """Violations of assignment well-formedness (ids exist, one tag each kind)."""
    violations = []
    known = {c.id for c in spec.constituents}
    for cid in tags:
        if cid not in known:
            violations.append(f"unknown constituent id {cid!r}")
    for tag in Tag:
        carriers = [cid for cid, t in tags.items() if t is tag]
        if len(carriers) > 1:
            violations.append(f"{tag.value.lower()} cardinality: {', '.join(sorted(carriers))}")
    return violations


def _apply_tags(spec: ClauseSpec, tags: TagAssignment) -> ClauseSpec:
    tagged = tuple(c.with_tag(tags.get(c.id)) for c in spec.constituents)
    return replace(spec, constituents=tagged)


def _entry_for(c: Constituent, lex: Lexicon):
    if c.lexicon_key is None:
        return None
    entry = lex.get(c.lexicon_key)
    if entry is None:
        raise KeyError(f"unresolved lexicon key {c.lexicon_key!r} on {c.id}")
    return entry


def vorfeld_capable(c: Constituent, lex: Lexicon) -> bool:
    entry = _entry_for(c, lex)
    return True if entry is None else entry.vorfeld_capable


def _tagged(spec: ClauseSpec, tag: Tag) -> Constituent | None:
    for c in spec.constituents:
        if c.tag is tag:
            return c
    return None


def select_vorfeld(spec: ClauseSpec, tags: TagAssignment, lex: Lexicon, table: SlotTable | None = None) -> str:
    """Pick the Vorfeld occupant: theme, else subject, else first capable element.

    A theme that cannot open the clause (lexically Vorfeld-incapable) falls
    through to the subject; :func:`linearize` then rejects the stranded theme.
    A RHEME-tagged constituent never opens the clause, so a rhematic subject
    is skipped and its tag is resolved (or rejected) in the Mittelfeld.
    """
    table = table or build_slot_table()
    tagged_spec = _apply_tags(spec, tags)
    theme = _tagged(tagged_spec, Tag.THEME)
    if theme is not None and vorfeld_capable(theme, lex):
        return theme.id
    subject = tagged_spec.subject()
    if subject is not None and subject.tag is not Tag.RHEME:
        return subject.id
    candidates = []
    for ordinal, c in enumerate(tagged_spec.constituents):
        if c.tag is Tag.RHEME or not vorfeld_capable(c, lex):
            continue
        try:
            key = sort_key(table, c, ordinal, tag=c.tag, lex=lex)
        except NoSlotError:
            continue
        candidates.append((key, c.id))
    if not candidates:
        raise NoVorfeld("no Vorfeld-capable constituent")
    return min(candidates)[1]


def _check_theme_admissible(tagged_spec: ClauseSpec, table: SlotTable):
    theme = _tagged(tagged_spec, Tag.THEME)
    if theme is not None and typically_rhematic(table, theme):
        raise InexpressibleTags(
            f"{theme.id} defaults to the late field and cannot be thematic; "
            "it opens the clause only under contrastive focus"
        )


def _render(
    spec: ClauseSpec,
    ordered: list[Constituent],
    vorfeld: Constituent | None,
) -> tuple[str, ...]:
    def emit(c: Constituent):
        if c.tag is Tag.FOCUS:
            return tuple(tok.upper() for tok in c.surface)
        return c.surface

    tokens: list[str] = []
    if spec.clause_type is ClauseType.V2:
        assert vorfeld is not None
        tokens += emit(vorfeld)
        tokens += spec.verb.finite
        for c in ordered:
            tokens += emit(c)
        tokens += spec.verb.nonfinite
        if tokens and tokens[0]:
            tokens[0] = tokens[0][0].upper() + tokens[0][1:]
    else:
        if spec.complementizer:
            tokens.append(spec.complementizer)
        for c in ordered:
            tokens += emit(c)
        tokens += spec.verb.nonfinite
        tokens += spec.verb.finite
    return tuple(tokens)


def _sorted_mittelfeld(tagged_spec, exclude_id, lex, table):
    keyed = []
    for ordinal, c in enumerate(tagged_spec.constituents):
        if c.id == exclude_id:
            continue
        try:
            key = sort_key(table, c, ordinal, tag=c.tag, lex=lex)
        except NoSlotError as err:
            raise InexpressibleTags(str(err)) from err
        keyed.append((key, c))
    keyed.sort(key=lambda kc: kc[0])
    return keyed


def _build_surface(spec, tagged_spec, keyed, vorfeld: Constituent | None) -> SurfaceOrder:
    ordered = [c for _, c in keyed]
    return SurfaceOrder(
        clause_type=spec.clause_type,
        vorfeld=vorfeld.id if vorfeld is not None else None,
        mittelfeld=tuple(c.id for c in ordered),
        rendered=_render(tagged_spec, ordered, vorfeld),
        keys=tuple((c.id, key) for key, c in keyed),
    )


def linearize(
    spec: ClauseSpec,
    tags: TagAssignment,
    lex: Lexicon,
    table: SlotTable | None = None,
) -> SurfaceOrder:
    """Deterministic surface order for the clause under the assignment.

    V2: the Vorfeld pick is removed, the rest is sorted by slot key and the
    finite verb lands in second position.  VF: everything sorts into the
    Mittelfeld (a theme lands in the early theme slot) before the clause-final
    verb cluster.
    """
    table = table or build_slot_table()
    tagged_spec = _apply_tags(spec, tags)
    # Cooccurrence violations (slash groups, tag cardinality) outrank other
    # spec defects: they carry their own error class and exit code.
    cooccurrence = check_cooccurrence(table, tagged_spec)
    if cooccurrence:
        raise CooccurrenceViolation(cooccurrence)
    spec_violations = validate_clause(spec)
    if spec_violations:
        raise ValueError("invalid clause spec: " + "; ".join(spec_violations))
    assignment_violations = check_assignment(spec, tags)
    if assignment_violations:
        raise ValueError("invalid assignment: " + "; ".join(assignment_violations))
    _check_theme_admissible(tagged_spec, table)

    if spec.clause_type is ClauseType.V2:
        vorfeld_id = select_vorfeld(spec, tags, lex, table)
        theme = _tagged(tagged_spec, Tag.THEME)
        if theme is not None and theme.id != vorfeld_id:
            raise InexpressibleTags(
                f"theme {theme.id} cannot occupy the Vorfeld and V2 clauses "
                "admit no Mittelfeld theme"
            )
        keyed = _sorted_mittelfeld(tagged_spec, vorfeld_id, lex, table)
        return _build_surface(spec, tagged_spec, keyed, tagged_spec.by_id(vorfeld_id))

    keyed = _sorted_mittelfeld(tagged_spec, None, lex, table)
    return _build_surface(spec, tagged_spec, keyed, None)


def realizations(
    spec: ClauseSpec,
    tags: TagAssignment,
    lex: Lexicon,
    table: SlotTable | None = None,
) -> list[SurfaceOrder]:
    """All surface orders the assignment licenses (the analyzer's relation).

    Beyond the canonical :func:`linearize` output this admits, for V2 clauses
    without a theme, fronting the focused constituent into the Vorfeld, and
    for a focused constituent that also fits the late focus slot, the
    right-field placement.  Returns an empty list when the tags are
    inexpressible; raises only for invalid specs or cooccurrence violations.
    """
    table = table or build_slot_table()
    tagged_spec = _apply_tags(spec, tags)
    cooccurrence = check_cooccurrence(table, tagged_spec)
    if cooccurrence:
        raise CooccurrenceViolation(cooccurrence)
    spec_violations = validate_clause(spec)
    if spec_violations:
        raise ValueError("invalid clause spec: " + "; ".join(spec_violations))
    if check_assignment(spec, tags):
        return []
    try:
        _check_theme_admissible(tagged_spec, table)
    except InexpressibleTags:
        return []

    theme = _tagged(tagged_spec, Tag.THEME)
    focus = _tagged(tagged_spec, Tag.FOCUS)

    if spec.clause_type is ClauseType.V2:
        vorfeld_ids: list[str] = []
        if theme is not None:
            # The theme must open the clause; a Vorfeld-incapable theme has
            # no realization at all.
            if vorfeld_capable(theme, lex):
                vorfeld_ids.append(theme.id)
        else:
            try:
                vorfeld_ids.append(select_vorfeld(spec, tags, lex, table))
            except NoVorfeld:
                pass
            if (
                focus is not None
                and vorfeld_capable(focus, lex)
                and focus.id not in vorfeld_ids
            ):
                vorfeld_ids.append(focus.id)  # marked focus fronting
    else:
        vorfeld_ids = [None]

    results: list[SurfaceOrder] = []
    seen = set()
    for vorfeld_id in vorfeld_ids:
        vorfeld = tagged_spec.by_id(vorfeld_id) if vorfeld_id is not None else None
        try:
            choice_lists = []
            for ordinal, c in enumerate(tagged_spec.constituents):
                if c.id == vorfeld_id:
                    continue
                keys = all_sort_keys(table, c, ordinal, tag=c.tag, lex=lex)
                choice_lists.append([(key, c) for key in keys])
        except NoSlotError:
            continue
        for combo in itertools.product(*choice_lists):
            keyed = sorted(combo, key=lambda kc: kc[0])
            surface = _build_surface(spec, tagged_spec, keyed, vorfeld)
            if surface.order not in seen:
                seen.add(surface.order)
                results.append(surface)
    return results


def iter_assignments(spec: ClauseSpec):
    """Every tag assignment within the cardinality limits, the empty one first."""
    ids = [c.id for c in spec.constituents]
    for theme in [None] + ids:
        for rheme in [None] + ids:
            if rheme is not None and rheme == theme:
                continue
            for focus in [None] + ids:
                if focus is not None and focus in (theme, rheme):
                    continue
                tags: TagAssignment = {}
                if theme is not None:
                    tags[theme] = Tag.THEME
                if rheme is not None:
                    tags[rheme] = Tag.RHEME
                if focus is not None:
                    tags[focus] = Tag.FOCUS
                yield tags


@dataclass(frozen=True)
class OrderVariant:
    """One distinct surface order with every assignment that realizes it."""

    vorfeld: str | None
    mittelfeld: tuple[str, ...]
    surface: SurfaceOrder
    assignments: tuple[tuple[tuple[str, Tag], ...], ...]

    @property
    def order(self) -> tuple[str, ...]:
        if self.vorfeld is None:
            return self.mittelfeld
        return (self.vorfeld,) + self.mittelfeld


def _freeze_assignment(tags: TagAssignment):
    return tuple(sorted(tags.items()))


def enumerate_orders(
    spec: ClauseSpec,
    lex: Lexicon,
    table: SlotTable | None = None,
) -> tuple[OrderVariant, ...]:
    """All realizable orders of the clause, grouped by surface order.

    Exhaustive over tag assignments within cardinality limits and lexical
    flags; assignments without a realization are skipped.  Clause size is
    capped to keep the search desk-scale.
    """
    if len(spec.constituents) > MAX_SEARCH_CONSTITUENTS:
        raise ValueError(
            f"clause has {len(spec.constituents)} constituents; "
            f"exhaustive search is capped at {MAX_SEARCH_CONSTITUENTS}"
        )
    table = table or build_slot_table()
    grouped: dict[tuple, dict] = {}
    for tags in iter_assignments(spec):
        focus_free = Tag.FOCUS not in tags.values()
        for surface in realizations(spec, tags, lex, table):
            key = (surface.vorfeld, surface.mittelfeld)
            slot = grouped.setdefault(
                key, {"surface": surface, "focus_free": focus_free, "assignments": []}
            )
            # Prefer an unmarked rendering as the representative (no focus caps).
            if focus_free and not slot["focus_free"]:
                slot["surface"] = surface
                slot["focus_free"] = True
            frozen = _freeze_assignment(tags)
            if frozen not in slot["assignments"]:
                slot["assignments"].append(frozen)
    return tuple(
        OrderVariant(
            vorfeld=key[0],
            mittelfeld=key[1],
            surface=slot["surface"],
            assignments=tuple(slot["assignments"]),
        )
        for key, slot in grouped.items()
    )
