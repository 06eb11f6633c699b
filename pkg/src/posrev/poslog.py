"""Weighted belief bases: proof theory and induced semantics.

A base is a finite list of formulas, each weighted by a lower bound on its
necessity. The proof side works by weighted resolution refutation; the
semantic side reads the base as the least specific distribution satisfying
every weight bound. The two sides agree exactly, which the test suite
exercises at scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import clauses as clausemod
from .distribution import PossibilityDistribution
from .errors import DomainError, InconsistentBaseError, ParseError
from .formulas import (
    Formula,
    Not,
    atoms,
    evaluate,
    format_formula,
    parse_formula,
)
from .scale import ONE, ZERO, as_scale, format_scale, parse_scale
from .worlds import Universe


@dataclass(frozen=True)
class BeliefBase:
    """Ordered weighted entries over a fixed atom vocabulary."""

    entries: tuple[tuple[Formula, Fraction], ...]
    vocabulary: tuple[str, ...]

    def __post_init__(self) -> None:
        checked = []
        known = set(self.vocabulary)
        if len(known) != len(self.vocabulary):
            raise ValueError("duplicate atoms in vocabulary")
        for formula, weight in self.entries:
            weight = as_scale(weight)
            if weight == ZERO:
                raise ValueError(f"entry ({format_formula(formula)}) has weight 0")
            stray = [a for a in atoms(formula) if a not in known]
            if stray:
                raise ValueError(
                    f"entry ({format_formula(formula)}) uses undeclared atoms {stray}"
                )
            checked.append((formula, weight))
        object.__setattr__(self, "entries", tuple(checked))

    @classmethod
    def build(
        cls,
        entries: Iterable[tuple[Formula, Fraction | int | str]],
        vocabulary: Iterable[str] | None = None,
    ) -> "BeliefBase":
        """Base from (formula, weight) pairs.

        Without an explicit vocabulary the atoms are collected in order of
        first occurrence across the entries.
        """
        pairs = tuple((f, as_scale(w)) for f, w in entries)
        if vocabulary is None:
            seen: dict[str, None] = {}
            for formula, _ in pairs:
                for name in atoms(formula):
                    seen.setdefault(name, None)
            vocabulary = tuple(seen)
        return cls(pairs, tuple(vocabulary))

    def __len__(self) -> int:
        return len(self.entries)

    def formulas(self) -> tuple[Formula, ...]:
        return tuple(f for f, _ in self.entries)


def _extended_vocabulary(base: BeliefBase, formula: Formula | None) -> tuple[str, ...]:
    if formula is None:
        return base.vocabulary
    extra = [a for a in atoms(formula) if a not in base.vocabulary]
    return base.vocabulary + tuple(extra)


def _packed_base(
    base: BeliefBase, vocabulary: Sequence[str]
) -> dict[clausemod.MaskClause, Fraction]:
    index = {name: i for i, name in enumerate(vocabulary)}
    weighted: list[clausemod.WeightedClause] = []
    for formula, weight in base.entries:
        weighted.extend(clausemod.to_weighted_clauses(formula, weight))
    return clausemod.pack_clauses(weighted, index)


def inconsistency_degree(base: BeliefBase) -> Fraction:
    """Largest weight at which the empty clause is derivable; 0 when the
    base is consistent."""
    return clausemod.refutation_weight(_packed_base(base, base.vocabulary))


def prove(base: BeliefBase, formula: Formula) -> Fraction:
    """Best weight at which the base derives ``formula`` by refutation.

    The negation is added with full weight and the refutation weight of the
    union is returned. Atoms foreign to the base are allowed; they simply
    never resolve.
    """
    vocabulary = _extended_vocabulary(base, formula)
    index = {name: i for i, name in enumerate(vocabulary)}
    packed = _packed_base(base, vocabulary)
    negation = clausemod.pack_clauses(
        clausemod.to_weighted_clauses(Not(formula), ONE), index
    )
    for key, weight in negation.items():
        if packed.get(key, ZERO) < weight:
            packed[key] = weight
    return clausemod.refutation_weight(packed)


def entails_pref(base: BeliefBase, formula: Formula) -> bool:
    """Provable strictly above the base's own inconsistency level."""
    inc = inconsistency_degree(base)
    if inc == ONE:
        raise InconsistentBaseError(
            "completely inconsistent base has no non-trivial consequences"
        )
    return prove(base, formula) > inc


def induced_distribution(
    base: BeliefBase, extra_atoms: Iterable[str] = ()
) -> PossibilityDistribution:
    """Least specific distribution satisfying every entry's weight bound.

    A world's degree is the minimum, over the entries it violates, of one
    minus the weight; worlds violating nothing get 1. The universe ranges
    over the base's vocabulary plus ``extra_atoms``.
    """
    vocabulary = base.vocabulary + tuple(
        a for a in extra_atoms if a not in base.vocabulary
    )
    if not vocabulary:
        raise DomainError("base has no atoms; declare a vocabulary")
    universe = Universe.from_atoms(vocabulary)
    values = []
    for world in universe:
        assignment = dict(zip(vocabulary, world.assignment))  # type: ignore[arg-type]
        degree = ONE
        for formula, weight in base.entries:
            if not evaluate(formula, assignment):
                degree = min(degree, ONE - weight)
        values.append(degree)
    return PossibilityDistribution(universe, tuple(values))


def semantic_entails(base: BeliefBase, formula: Formula, alpha: Fraction | int | str) -> bool:
    """Whether every model of the base's semantics accepts the formula at
    ``alpha``: pointwise, the induced degree may not exceed
    max(truth, 1 - alpha)."""
    alpha = as_scale(alpha)
    extra = [a for a in atoms(formula) if a not in base.vocabulary]
    pi = induced_distribution(base, extra)
    cap = ONE - alpha
    for world, degree in zip(pi.universe, pi.values):
        assignment = dict(zip(pi.universe.atoms, world.assignment))  # type: ignore[arg-type]
        if not evaluate(formula, assignment) and degree > cap:
            return False
    return True


def consistent_part_distribution(base: BeliefBase) -> PossibilityDistribution:
    """Distribution of the consistent part of a partially inconsistent base.

    Computed two ways that must agree: raising the induced distribution's
    top plateau to 1, and inducing from the entries weighted strictly above
    the inconsistency level.
    """
    inc = inconsistency_degree(base)
    if inc == ONE:
        raise InconsistentBaseError("base is completely inconsistent")
    pi = induced_distribution(base)
    threshold = ONE - inc
    plateau = PossibilityDistribution(
        pi.universe, tuple(ONE if v >= threshold else v for v in pi.values)
    )
    surviving = BeliefBase(
        tuple((f, w) for f, w in base.entries if w > inc), base.vocabulary
    )
    closed_form = induced_distribution(surviving)
    assert plateau == closed_form, "plateau and closed form disagree"
    return plateau


def check_ee_coherence(base: BeliefBase) -> bool:
    """Every entry's weight must equal the best provable level of its
    formula; requires a consistent base."""
    if inconsistency_degree(base) > ZERO:
        raise InconsistentBaseError("coherence is defined for consistent bases only")
    return all(prove(base, f) == w for f, w in base.entries)


def restore_ee_coherence(base: BeliefBase) -> BeliefBase:
    """Raise every entry's weight to its best provable level.

    Idempotent, and the induced distribution is unchanged.
    """
    if inconsistency_degree(base) > ZERO:
        raise InconsistentBaseError("coherence is defined for consistent bases only")
    entries = tuple((f, prove(base, f)) for f, _ in base.entries)
    return BeliefBase(entries, base.vocabulary)


# ------------------------------------------------------------- text format

def parse_base(text: str) -> BeliefBase:
    """Parse the line format: optional ``atoms:`` header, then one
    ``formula : weight`` entry per line; ``#`` starts a comment."""
    entries: list[tuple[Formula, Fraction]] = []
    declared: tuple[str, ...] | None = None
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not saw_content and line.startswith("atoms:"):
            names = line[len("atoms:"):].split()
            if not names:
                raise ParseError("empty atoms header", lineno)
            declared = tuple(names)
            saw_content = True
            continue
        saw_content = True
        if ":" not in line:
            raise ParseError("expected 'formula : weight'", lineno)
        formula_text, weight_text = line.rsplit(":", 1)
        try:
            formula = parse_formula(formula_text.rstrip(), lineno)
        except ParseError:
            raise
        try:
            weight = parse_scale(weight_text)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if weight == ZERO:
            raise ParseError("entry weight must be positive", lineno)
        entries.append((formula, weight))
    try:
        return BeliefBase.build(entries, declared)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_base(base: BeliefBase) -> str:
    """Canonical text; re-parsing gives back an equal base."""
    lines = []
    if base.vocabulary:
        lines.append("atoms: " + " ".join(base.vocabulary))
    for formula, weight in base.entries:
        lines.append(f"{format_formula(formula)} : {format_scale(weight)}")
    return "\n".join(lines) + "\n"
