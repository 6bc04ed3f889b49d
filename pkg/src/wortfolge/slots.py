"""The canonical-form slot table: default positions plus theme/rheme/focus slots.

A single comprehensive precedence table assigns every constituent a position
key.  Untagged constituents get a fixed default slot from category and
features; tagging a constituent THEME, RHEME or FOCUS moves it into the
corresponding tagged slot instead.  Comparing the resulting keys yields the
surface order of the Mittelfeld.

The table itself ships as ``data/slot_table.tsv`` so the transcription can be
reviewed independently of the matching code.
"""

from __future__ import annotations

import functools
import io
from dataclasses import dataclass
from importlib import resources

from .clause import (
    Category,
    ClauseSpec,
    Constituent,
    MINUS,
    PLUS,
    Tag,
    VERBAL_CATEGORIES,
)
from .lexicon import Lexicon


class SlotTableError(Exception):
    """Raised for malformed slot-table data."""


class NoSlotError(Exception):
    """A constituent matches no slot under its tag: the tagging is inexpressible."""

    def __init__(self, constituent: Constituent, tag: Tag | None, reason: str = ""):
        self.constituent = constituent
        self.tag = tag
        detail = f" ({reason})" if reason else ""
        label = tag.value if tag else "untagged"
        super().__init__(f"no slot for {constituent.id} as {label}{detail}")


@dataclass(frozen=True)
class SlotPattern:
    """One slot member: category plus feature/tag/index requirements."""

    row: int
    slot: int
    sub_rank: int
    category: Category | None  # None matches any category
    definite: str | None = None
    animate: str | None = None
    pron: bool | None = None
    svc: bool = False
    required_tag: Tag | None = None
    hoberg_lo: int | None = None
    hoberg_hi: int | None = None
    annotation: str = ""

    def matches(self, c: Constituent, tag: Tag | None) -> bool:
        if tag is not self.required_tag:
            return False
        # SVC parts match only the svc-marked slot, and it matches only them.
        if c.features.svc != self.svc:
            return False
        if self.category is not None and c.category is not self.category:
            return False
        if self.pron is not None and c.features.pronominal != self.pron:
            return False
        if self.definite is not None:
            if c.features.pronominal or c.features.definite != self.definite:
                return False
        if self.animate is not None:
            if c.features.pronominal or c.features.animate != self.animate:
                return False
        if self.hoberg_lo is not None:
            if c.hoberg_index is None or not self.hoberg_lo <= c.hoberg_index <= self.hoberg_hi:
                return False
        return True


@dataclass(frozen=True, order=True)
class SortKey:
    """Lexicographic position key; total order over distinct input ordinals."""

    slot: int
    sub_rank: int
    hoberg: int
    input_ordinal: int


class SlotTable:
    """Ordered slot patterns plus derived landmarks (theme/rheme/focus slots)."""

    def __init__(self, patterns):
        self.patterns = tuple(patterns)
        slots = sorted({p.slot for p in self.patterns})
        if slots != list(range(1, len(slots) + 1)):
            raise SlotTableError("slot ordinals must be dense from 1")
        self.slot_count = len(slots)
        self.theme_slot = self._only_slot(Tag.THEME, expect_one=True)
        rheme_slots = sorted({p.slot for p in self.patterns if p.required_tag is Tag.RHEME})
        if len(rheme_slots) != 1:
            raise SlotTableError("expected exactly one RHEME slot")
        self.rheme_slot = rheme_slots[0]
        focus_slots = sorted({p.slot for p in self.patterns if p.required_tag is Tag.FOCUS})
        if len(focus_slots) != 2:
            raise SlotTableError("expected the early and the general FOCUS slots")
        self.focus_slots = tuple(focus_slots)
        if not self.theme_slot < self.rheme_slot < self.focus_slots[-1]:
            raise SlotTableError("THEME slot must precede RHEME slot must precede general FOCUS slot")
        row5_slots = [p.slot for p in self.patterns if p.row >= 5]
        self.late_field_start = min(row5_slots)
        band_slots = [
            p.slot for p in self.patterns if p.category is Category.M and p.required_tag is None
        ]
        self.modifier_band_start = min(band_slots)

    def _only_slot(self, tag, expect_one=False):
        slots = sorted({p.slot for p in self.patterns if p.required_tag is tag})
        if expect_one and len(slots) != 1:
            raise SlotTableError(f"expected exactly one {tag.value} slot")
        return slots[0]

    def matching_patterns(self, c: Constituent, tag: Tag | None):
        return [p for p in self.patterns if p.matches(c, tag)]


def _parse_features(raw: str, lineno: int):
    """Parse the feature mini-notation into (definite, animate, pron, svc)."""
    definite = animate = None
    pron: bool | None = None
    svc = False
    if raw == "-":
        return definite, animate, pron, svc
    if raw == "pron":
        return definite, animate, True, svc
    if raw == "-pron":
        return definite, animate, False, svc
    if raw == "svc":
        return definite, animate, pron, True
    rest = raw
    while rest:
        sign = rest[0]
        if sign not in (PLUS, MINUS) or len(rest) < 2:
            raise SlotTableError(f"line {lineno}: bad feature notation {raw!r}")
        letter, rest = rest[1], rest[2:]
        if letter == "d":
            definite = sign
        elif letter == "a":
            animate = sign
        else:
            raise SlotTableError(f"line {lineno}: unknown feature {sign}{letter!r}")
    # Definiteness/animacy requirements exclude pronouns: pronoun slots key
    # on the pron flag alone.
    return definite, animate, False, svc


def load_slot_table(source) -> SlotTable:
    """Parse slot-table TSV (see ``data/slot_table.tsv`` for the format)."""
    if isinstance(source, str):
        source = io.StringIO(source)
    patterns = []
    for lineno, line in enumerate(source, start=1):
        line = line.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 8:
            raise SlotTableError(f"line {lineno}: expected 8 columns, got {len(fields)}")
        raw_row, raw_slot, raw_sub, raw_cat, raw_feats, raw_tag, raw_range, annotation = fields
        try:
            row, slot, sub_rank = int(raw_row), int(raw_slot), int(raw_sub)
        except ValueError:
            raise SlotTableError(f"line {lineno}: bad row/slot/sub_rank") from None
        category = None if raw_cat == "*" else Category(raw_cat)
        definite, animate, pron, svc = _parse_features(raw_feats, lineno)
        required_tag = None if raw_tag == "-" else Tag(raw_tag)
        hoberg_lo = hoberg_hi = None
        if raw_range != "-":
            try:
                lo, hi = raw_range.split("-")
                hoberg_lo, hoberg_hi = int(lo), int(hi)
            except ValueError:
                raise SlotTableError(f"line {lineno}: bad index range {raw_range!r}") from None
        patterns.append(
            SlotPattern(
                row=row,
                slot=slot,
                sub_rank=sub_rank,
                category=category,
                definite=definite,
                animate=animate,
                pron=pron,
                svc=svc,
                required_tag=required_tag,
                hoberg_lo=hoberg_lo,
                hoberg_hi=hoberg_hi,
                annotation=annotation if annotation != "-" else "",
            )
        )
    return SlotTable(patterns)


@functools.lru_cache(maxsize=None)
def build_slot_table() -> SlotTable:
    """The slot table shipped with the package (a fixed constant)."""
    text = resources.files("wortfolge.data").joinpath("slot_table.tsv").read_text("utf-8")
    return load_slot_table(text)


def _lexical_veto(c: Constituent, tag: Tag | None, lex: Lexicon | None) -> str | None:
    if lex is None or c.lexicon_key is None or tag is None:
        return None
    entry = lex.get(c.lexicon_key)
    if entry is None:
        raise KeyError(f"unresolved lexicon key {c.lexicon_key!r} on {c.id}")
    if tag is Tag.RHEME and not entry.rhematic:
        return f"{entry.lemma} is lexically non-rhematic"
    if tag is Tag.FOCUS and not entry.focusable:
        return f"{entry.lemma} is lexically non-focusable"
    return None


def sort_key(
    table: SlotTable,
    c: Constituent,
    input_ordinal: int,
    tag: Tag | None = None,
    lex: Lexicon | None = None,
) -> SortKey:
    """Position key of the first (lowest-ordinal) slot matching the constituent.

    A tagged constituent matches only slots requiring its tag; an untagged one
    only tag-free slots.  When a focused constituent matches both the early
    and the general focus slot, the early one wins.  Raises
    :class:`NoSlotError` when nothing matches (an inexpressible tagging).
    """
    if tag is None:
        tag = c.tag
    veto = _lexical_veto(c, tag, lex)
    if veto:
        raise NoSlotError(c, tag, veto)
    for pattern in table.patterns:
        if pattern.matches(c, tag):
            return SortKey(
                slot=pattern.slot,
                sub_rank=pattern.sub_rank,
                hoberg=c.hoberg_index or 0,
                input_ordinal=input_ordinal,
            )
    raise NoSlotError(c, tag)


def all_sort_keys(
    table: SlotTable,
    c: Constituent,
    input_ordinal: int,
    tag: Tag | None = None,
    lex: Lexicon | None = None,
) -> tuple[SortKey, ...]:
    """Every slot key the constituent can occupy under the tag, in table order.

    Untagged, THEME and RHEME placements are unique; a focused constituent
    that fits both the early and the general focus slot yields both keys (the
    later one is the marked right-field realization).
    """
    if tag is None:
        tag = c.tag
    veto = _lexical_veto(c, tag, lex)
    if veto:
        raise NoSlotError(c, tag, veto)
    keys = []
    seen_slots = set()
    for pattern in table.patterns:
        if pattern.slot in seen_slots or not pattern.matches(c, tag):
            continue
        seen_slots.add(pattern.slot)
        keys.append(
            SortKey(
                slot=pattern.slot,
                sub_rank=pattern.sub_rank,
                hoberg=c.hoberg_index or 0,
                input_ordinal=input_ordinal,
            )
        )
        if tag is not Tag.FOCUS:
            break  # non-focus placements are unique: first match only
    if not keys:
        raise NoSlotError(c, tag)
    return tuple(keys)


def compare(table: SlotTable, a: tuple[Constituent, SortKey], b: tuple[Constituent, SortKey]) -> int:
    """-1/0/+1 ordering of two keyed constituents (never 0 for distinct ordinals)."""
    ka, kb = a[1], b[1]
    if ka < kb:
        return -1
    if kb < ka:
        return 1
    return 0


def typically_rhematic(table: SlotTable, c: Constituent) -> bool:
    """Whether the constituent's default position lies in the late field.

    Covers complements whose untagged slot falls in the prepositional/final
    rows (PO, SIT/DIR/EXP, nominal genitives, SVC parts, non-pronominal
    Nom/Adj) plus indefinite accusatives/datives.  Such elements open the
    clause only under contrastive focus.
    """
    if c.category in (Category.A, Category.D) and c.indefinite:
        return True
    try:
        key = sort_key(table, c.with_tag(None), 0)
    except NoSlotError:
        return False
    return key.slot >= table.late_field_start


def check_cooccurrence(table: SlotTable, spec: ClauseSpec) -> list[str]:
    """Report clause-level slash-group violations (exclusive alternatives)."""
    violations = []
    n_members = [c.id for c in spec.constituents if c.category is Category.N]
    if len(n_members) > 1:
        violations.append(f"nominative alternatives cannot cooccur: {', '.join(n_members)}")
    exclusives = [
        c.id
        for c in spec.constituents
        if c.category in (Category.SIT, Category.DIR, Category.EXP)
    ]
    if len(exclusives) > 1:
        violations.append(f"SIT/DIR/EXP cannot cooccur: {', '.join(exclusives)}")
    focused = [c.id for c in spec.constituents if c.tag is Tag.FOCUS]
    if len(focused) > 1:
        violations.append(f"focus slot admits one constituent: {', '.join(focused)}")
    for c in spec.constituents:
        if c.category in VERBAL_CATEGORIES:
            violations.append(f"{c.id}: verbs are not orderable constituents")
    return violations
