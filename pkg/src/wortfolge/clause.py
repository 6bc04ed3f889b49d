"""Core clause-domain types: categories, features, constituents, clause specs.

Everything here is immutable value data with no behaviour beyond construction
and validation, so instances are safe to share freely.  Validation collects
violations into a list instead of raising; an empty list means the clause is
well formed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum


class Category(str, Enum):
    """Syntactic category of a clause element.

    The verb categories exist so that every clause element is classifiable,
    but verbs live in :class:`VerbComplex` and are never members of the
    orderable constituent set (German verb placement admits no variation).
    """

    N = "N"        # nominative complement (subject)
    A = "A"        # accusative complement
    D = "D"        # dative complement
    G = "G"        # genitive complement
    PO = "PO"      # prepositional object
    SIT = "SIT"    # situative complement
    DIR = "DIR"    # directional complement
    EXP = "EXP"    # expansive complement
    NOM = "NOM"    # nominal complement
    ADJ = "ADJ"    # adjectival complement
    M = "M"        # modifier (adverbial), carries a Hoberg position class
    V_FIN = "V_FIN"
    V_NONFIN = "V_NONFIN"


VERBAL_CATEGORIES = frozenset({Category.V_FIN, Category.V_NONFIN})

#: Categories whose slot patterns key on definiteness/animacy; for these the
#: tri-state features must be resolved to +/- on non-pronominal, non-SVC
#: constituents, which keeps the default slot assignment total.
FEATURE_KEYED_CATEGORIES = frozenset(
    {Category.N, Category.A, Category.D, Category.PO}
)


class Tag(str, Enum):
    """Information-structure tag a constituent may carry (at most one)."""

    THEME = "THEME"
    RHEME = "RHEME"
    FOCUS = "FOCUS"


class ClauseType(str, Enum):
    V2 = "V2"  # declarative matrix clause: finite verb in second position
    VF = "VF"  # subordinate clause: verb cluster in final position


PLUS = "+"
MINUS = "-"
NA = "na"

TRISTATE_VALUES = (PLUS, MINUS, NA)


@dataclass(frozen=True)
class FeatureBundle:
    """Definiteness/animacy tri-states plus pronominal and SVC flags.

    Pronominal constituents are matched on the pronoun flag alone (their
    definiteness/animacy are ignored during slot matching), and parts of
    support-verb constructions only ever match the clause-final SVC slot.
    """

    definite: str = NA
    animate: str = NA
    pronominal: bool = False
    svc: bool = False

    def __post_init__(self):
        if self.definite not in TRISTATE_VALUES:
            raise ValueError(f"definite must be one of {TRISTATE_VALUES}, got {self.definite!r}")
        if self.animate not in TRISTATE_VALUES:
            raise ValueError(f"animate must be one of {TRISTATE_VALUES}, got {self.animate!r}")


@dataclass(frozen=True)
class Constituent:
    """One orderable clause element.

    Constituents are pre-tokenized records; morphology, case assignment and
    parsing of raw text happen upstream.  ``hoberg_index`` is present exactly
    for modifiers, ``lexicon_key`` points at a dictionary reading
    (``"lemma#reading_id"``) when per-word flags matter.
    """

    id: str
    category: Category
    surface: tuple[str, ...]
    features: FeatureBundle = FeatureBundle()
    hoberg_index: int | None = None
    lexicon_key: str | None = None
    tag: Tag | None = None

    def __post_init__(self):
        object.__setattr__(self, "surface", tuple(self.surface))

    def with_tag(self, tag: Tag | None) -> "Constituent":
        return replace(self, tag=tag)

    @property
    def indefinite(self) -> bool:
        return self.features.definite == MINUS


@dataclass(frozen=True)
class VerbComplex:
    """The clause's verb material: finite part plus optional non-finite rest."""

    finite: tuple[str, ...]
    nonfinite: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "finite", tuple(self.finite))
        object.__setattr__(self, "nonfinite", tuple(self.nonfinite))


@dataclass(frozen=True)
class ClauseSpec:
    """An unordered clause: type, verb complex, constituent multiset.

    ``constituents`` is stored as a tuple for determinism but its order
    carries no meaning; all operations treat it as a multiset.
    """

    clause_type: ClauseType
    verb: VerbComplex
    constituents: tuple[Constituent, ...]
    complementizer: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "constituents", tuple(self.constituents))

    def by_id(self, cid: str) -> Constituent:
        for c in self.constituents:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def subject(self) -> Constituent | None:
        for c in self.constituents:
            if c.category is Category.N:
                return c
        return None

    def embedded_tags(self) -> dict[str, Tag]:
        """Tags carried on the constituents themselves, as an assignment."""
        return {c.id: c.tag for c in self.constituents if c.tag is not None}


_EXCLUSIVE_ADVERBIALS = (Category.SIT, Category.DIR, Category.EXP)


def validate_clause(spec: ClauseSpec) -> list[str]:
    """Check a clause spec against the domain invariants.

    Returns every violated invariant as a human-readable string; an empty
    list means the clause is well formed.  This is a total function: malformed
    input produces violations, never exceptions.
    """
    violations = []

    if not spec.verb.finite:
        violations.append("verb complex has no finite part")
    if spec.complementizer is not None and spec.clause_type is not ClauseType.VF:
        violations.append("complementizer requires a verb-final clause")

    seen_ids = set()
    n_count = 0
    exclusive_count = 0
    tag_counts = {Tag.THEME: 0, Tag.RHEME: 0, Tag.FOCUS: 0}
    for c in spec.constituents:
        if c.id in seen_ids:
            violations.append(f"duplicate constituent id {c.id!r}")
        seen_ids.add(c.id)
        if c.category in VERBAL_CATEGORIES:
            violations.append(f"{c.id}: verbs belong in the verb complex, not the constituent set")
            continue
        if not c.surface:
            violations.append(f"{c.id}: empty surface")
        if c.category is Category.M:
            if c.hoberg_index is None:
                violations.append(f"{c.id}: modifier without Hoberg index")
            elif not 1 <= c.hoberg_index <= 44:
                violations.append(f"{c.id}: Hoberg index {c.hoberg_index} outside 1..44")
        elif c.hoberg_index is not None:
            violations.append(f"{c.id}: Hoberg index on non-modifier")
        if c.category is Category.N:
            n_count += 1
        if c.category in _EXCLUSIVE_ADVERBIALS:
            exclusive_count += 1
        if (
            c.category in FEATURE_KEYED_CATEGORIES
            and not c.features.pronominal
            and not c.features.svc
        ):
            if c.features.definite == NA or c.features.animate == NA:
                violations.append(
                    f"{c.id}: {c.category.value} requires resolved definiteness/animacy"
                )
        if c.tag is not None:
            tag_counts[c.tag] += 1

    if n_count > 1:
        violations.append("duplicate nominative")
    if exclusive_count > 1:
        violations.append("SIT/DIR/EXP cannot cooccur")
    if tag_counts[Tag.THEME] > 1:
        violations.append("theme cardinality")
    if tag_counts[Tag.RHEME] > 1:
        violations.append("rheme cardinality")
    if tag_counts[Tag.FOCUS] > 1:
        violations.append("focus cardinality")

    return violations
