"""Revision performed directly on weighted bases.

Four operators: expansion appends the input with full weight and refuses
inconsistency; brutal revision keeps only the entries weighted strictly
above the inconsistency level of the expanded base; preferred-subbase
revision enumerates every maximal consistent way of keeping entries, with
an optional lexicographic refinement; base adjustment installs the input at
an intermediate confidence using the two brutal revisions as scaffolding.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable

from .errors import CoherenceError, DomainError, ExpansionRefusedError
from .formulas import Formula, Not, atoms, canonical, format_formula, is_satisfiable
from .poslog import (
    BeliefBase,
    check_ee_coherence,
    format_base,
    inconsistency_degree,
    induced_distribution,
)
from .scale import ONE, ZERO, as_scale


def _extended(base: BeliefBase, formula: Formula) -> tuple[str, ...]:
    return base.vocabulary + tuple(
        a for a in atoms(formula) if a not in base.vocabulary
    )


def expand(base: BeliefBase, formula: Formula) -> BeliefBase:
    """Append the input with full weight; refuse if that is inconsistent."""
    candidate = BeliefBase(
        base.entries + ((formula, ONE),), _extended(base, formula)
    )
    if inconsistency_degree(candidate) > ZERO:
        raise ExpansionRefusedError(
            f"adding ({format_formula(formula)} 1) makes the base inconsistent; "
            "use a revision operator"
        )
    return candidate


def brutal_revise(base: BeliefBase, formula: Formula) -> BeliefBase:
    """Install the input with full weight, dropping every entry at or below
    the resulting inconsistency level."""
    if not is_satisfiable(formula):
        raise DomainError("cannot revise by a contradictory formula")
    vocabulary = _extended(base, formula)
    expanded = BeliefBase(base.entries + ((formula, ONE),), vocabulary)
    level = inconsistency_degree(expanded)
    kept = tuple((f, w) for f, w in base.entries if w > level)
    return BeliefBase(((formula, ONE),) + kept, vocabulary)


def preferred_subbase_revise(
    base: BeliefBase, formula: Formula
) -> tuple[BeliefBase, ...]:
    """All maximal consistent ways of keeping entries next to the input.

    A kept set qualifies when adding the input at weight 1 stays consistent
    and re-adding any excluded entry makes the base inconsistent at least at
    that entry's own weight. Candidates are returned fewest-exclusions
    first, then in canonical text order.
    """
    if not is_satisfiable(formula):
        raise DomainError("cannot revise by a contradictory formula")
    vocabulary = _extended(base, formula)
    entries = base.entries
    added = (formula, ONE)

    def with_input(kept: tuple[tuple[Formula, Fraction], ...]) -> BeliefBase:
        deduped = tuple(e for e in kept if e != added)
        return BeliefBase((added,) + deduped, vocabulary)

    candidates: dict[BeliefBase, None] = {}
    for mask in range(2 ** len(entries)):
        kept = tuple(e for i, e in enumerate(entries) if mask >> i & 1)
        revised = with_input(kept)
        if inconsistency_degree(revised) > ZERO:
            continue
        excluded = [e for i, e in enumerate(entries) if not mask >> i & 1]
        if all(
            inconsistency_degree(
                BeliefBase(revised.entries + (entry,), vocabulary)
            )
            >= entry[1]
            for entry in excluded
        ):
            candidates.setdefault(revised, None)
    ordered = sorted(
        candidates,
        key=lambda b: (len(base.entries) - len(b.entries), format_base(b)),
    )
    return tuple(ordered)


def _exclusion_profile(
    candidate: BeliefBase, base: BeliefBase
) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    """Weights the candidate dropped (descending) and the base indices it
    kept, matching duplicates greedily in base order."""
    available = Counter(candidate.entries)
    kept_indices = []
    excluded_weights = []
    for i, entry in enumerate(base.entries):
        if available[entry] > 0:
            available[entry] -= 1
            kept_indices.append(i)
        else:
            excluded_weights.append(entry[1])
    excluded_weights.sort(reverse=True)
    return tuple(excluded_weights), tuple(kept_indices)


def lex_refine(candidates: Iterable[BeliefBase], base: BeliefBase) -> BeliefBase:
    """Pick the candidate dropping the least under descending lexicographic
    comparison of excluded weights; remaining ties go to the candidate
    keeping the earliest entries of ``base``."""
    pool = tuple(candidates)
    if not pool:
        raise DomainError("no candidates to refine")
    return min(pool, key=lambda c: _exclusion_profile(c, base))


def adjust_base(
    base: BeliefBase, formula: Formula, alpha: Fraction | int | str
) -> BeliefBase:
    """Install the input at confidence ``alpha`` exactly.

    Both brutal revisions (by the input and by its negation) are computed;
    every formula occurring in either gets weight min of its level in the
    first and the max of alpha with its level in the second, zero weights
    dropped. Requires a weight-coherent base, and the input must be neither
    accepted nor refuted with certainty.

    The weights are read off the two revisions syntactically, so a formula
    that one of them merely implies counts as absent there and its weight
    can come out lower than the distribution-level revision would assign.
    The induced distribution of the result therefore dominates the
    distribution-level one pointwise (it is never more committed), agrees
    with it in the common case, and always puts the input at confidence
    exactly ``alpha``.  Compare against ``revise_uncertain`` on
    ``induced_distribution(base)`` when the exact semantic result matters.
    """
    alpha = as_scale(alpha)
    if alpha == ZERO:
        raise DomainError("alpha must be positive; use contraction for level 0")
    if not check_ee_coherence(base):
        raise CoherenceError(
            "base weights are not coherent; run restore_ee_coherence first"
        )
    negation = Not(formula)
    vocabulary = _extended(base, formula)
    pi = induced_distribution(base, atoms(formula))
    universe = pi.universe
    if (
        pi.possibility(universe.models(formula)) == ZERO
        or pi.possibility(universe.models(negation)) == ZERO
    ):
        raise DomainError(
            "the base already settles the input with certainty; adjustment "
            "needs both the input and its negation possible"
        )
    toward = brutal_revise(base, formula)
    away = brutal_revise(base, negation)

    def weight_table(revised: BeliefBase) -> dict[Formula, Fraction]:
        table: dict[Formula, Fraction] = {}
        for f, w in revised.entries:
            key = canonical(f)
            if table.get(key, ZERO) < w:
                table[key] = w
        return table

    toward_weights = weight_table(toward)
    away_weights = weight_table(away)
    entries = []
    seen: set[Formula] = set()
    for f, _ in toward.entries + away.entries:
        key = canonical(f)
        if key in seen:
            continue
        seen.add(key)
        weight = min(
            toward_weights.get(key, ZERO),
            max(alpha, away_weights.get(key, ZERO)),
        )
        if weight > ZERO:
            entries.append((f, weight))
    return BeliefBase(tuple(entries), vocabulary)
