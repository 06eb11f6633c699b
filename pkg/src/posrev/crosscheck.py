"""Named consistency identities relating the engine's independent routes.

Each check recomputes the same quantity along two implementations that share
no code (measure algebra vs. pointwise revision, resolution vs. model
counting, integer ranks vs. the 2^-k scale) and reports agreement. The CLI
exposes the suite as ``crosscheck``; the test suite calls it directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .baserev import brutal_revise
from .conditioning import Mode, condition, condition_min
from .distribution import PossibilityDistribution
from .errors import NotDyadicError, SubnormalizedError
from .formulas import Atom, Formula, Not
from .poslog import (
    BeliefBase,
    consistent_part_distribution,
    inconsistency_degree,
    induced_distribution,
    prove,
)
from .ranking import (
    INF,
    KappaFunction,
    PartitionRanking,
    kappa_adjust,
    kappa_condition,
    kappa_conditionalize,
    kappa_partition_conditionalize,
    kappa_to_pi,
    pi_to_kappa,
)
from .revision import PartitionInput, adjust, revise_partition, revise_uncertain
from .scale import ONE, ZERO
from .worlds import Event, Universe

SAMPLE_SEED = 172022
EXHAUSTIVE_WORLDS = 5
SAMPLE_EVENTS = 48

ADJUST_LEVELS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), ONE)
BRIDGE_STEPS = (1, 2)


@dataclass
class CheckResult:
    """Outcome of one identity: ``cases`` comparisons, all equal or not."""

    name: str
    passed: bool
    cases: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f"  ({self.detail})" if self.detail else ""
        return f"{status} {self.name} [{self.cases} cases]{suffix}"


def _sample_events(universe: Universe, rng: random.Random) -> list[Event]:
    """All events on small universes, a seeded distinct sample otherwise."""
    if len(universe) <= EXHAUSTIVE_WORLDS:
        return list(universe.iter_events())
    events = [universe.nothing, universe.everything]
    seen = {frozenset(), frozenset(universe.labels)}
    while len(events) < SAMPLE_EVENTS:
        members = frozenset(l for l in universe.labels if rng.random() < 0.5)
        if members not in seen:
            seen.add(members)
            events.append(Event(universe, members))
    return events


def check_chain_rule(
    pi: PossibilityDistribution, mode: Mode, rng: random.Random
) -> CheckResult:
    """Joint possibility must factor through conditioning:
    poss(A and B) = poss(B given A) combined with poss(A)."""
    name = f"chain-rule-{mode.value}"
    events = _sample_events(pi.universe, rng)
    cases = 0
    for a in events:
        top = pi.possibility(a)
        if top == ZERO:
            continue
        conditioned = condition(pi, a, mode)
        for b in events:
            cases += 1
            joint = pi.possibility(a & b)
            factored = mode.combine(conditioned.possibility(b), top)
            if joint != factored:
                return CheckResult(
                    name,
                    False,
                    cases,
                    f"A={a.labels_in_order()} B={b.labels_in_order()}: "
                    f"{joint} != {factored}",
                )
    return CheckResult(name, True, cases)


def check_adjustment_equivalence(
    pi: PossibilityDistribution, rng: random.Random
) -> CheckResult:
    """For positive target levels the rank-shuffling adjustment and the
    constraint-style revision (min mode) must produce the same state."""
    name = "adjustment-equivalence"
    cases = 0
    for event in _sample_events(pi.universe, rng):
        if pi.possibility(event) == ZERO or pi.possibility(~event) == ZERO:
            continue
        for alpha in ADJUST_LEVELS:
            cases += 1
            left = adjust(pi, event, alpha)
            right = revise_uncertain(pi, event, alpha, Mode.MIN)
            if left != right:
                return CheckResult(
                    name,
                    False,
                    cases,
                    f"A={event.labels_in_order()} alpha={alpha}: "
                    f"{left.values} != {right.values}",
                )
    return CheckResult(name, True, cases)


def _bridge_kappas(
    pi: PossibilityDistribution, rng: random.Random
) -> list[KappaFunction]:
    """The ranking family used for the bridge check: the distribution's own
    ranking when it lives on the dyadic scale, otherwise a normalized family
    on the same universe."""
    try:
        return [pi_to_kappa(pi)]
    except NotDyadicError:
        pass
    universe = pi.universe
    ranks = (0, 1, 2, INF)
    if len(universe) <= 4:
        family = [
            KappaFunction(universe, combo)
            for combo in iter_product(ranks, repeat=len(universe))
            if min(combo) == 0
        ]
    else:
        family = []
        while len(family) < 40:
            combo = tuple(rng.choice(ranks) for _ in universe.labels)
            if min(combo) == 0:
                family.append(KappaFunction(universe, combo))
    return family


def check_ranking_bridge(
    pi: PossibilityDistribution, rng: random.Random
) -> CheckResult:
    """The four ranking operations must commute with their graded
    counterparts through the 2^-rank embedding."""
    name = "ranking-bridge"
    cases = 0
    for kappa in _bridge_kappas(pi, rng):
        mirror = kappa_to_pi(kappa)
        universe = kappa.universe
        for event in _sample_events(universe, rng):
            if kappa.rank_of(event) == INF or kappa.rank_of(~event) == INF:
                continue
            pairs = [
                (
                    kappa_to_pi(kappa_condition(kappa, event)),
                    condition(mirror, event, Mode.PRODUCT),
                    "condition",
                )
            ]
            for n in BRIDGE_STEPS:
                level = ONE - Fraction(1, 2**n)
                pairs.append(
                    (
                        kappa_to_pi(kappa_conditionalize(kappa, event, n)),
                        revise_uncertain(mirror, event, level, Mode.PRODUCT),
                        f"conditionalize n={n}",
                    )
                )
                pairs.append(
                    (
                        kappa_to_pi(
                            kappa_partition_conditionalize(
                                kappa,
                                PartitionRanking(((event, 0), (~event, n))),
                            )
                        ),
                        revise_partition(
                            mirror,
                            PartitionInput(
                                ((event, ONE), (~event, Fraction(1, 2**n)))
                            ),
                            Mode.PRODUCT,
                        ),
                        f"partition n={n}",
                    )
                )
                pairs.append(
                    (
                        kappa_to_pi(kappa_adjust(kappa, event, n)),
                        adjust(mirror, event, level),
                        f"adjust n={n}",
                    )
                )
            for left, right, op in pairs:
                cases += 1
                if left != right:
                    return CheckResult(
                        name,
                        False,
                        cases,
                        f"{op}, A={event.labels_in_order()}, "
                        f"ranks={kappa.ranks}: {left.values} != {right.values}",
                    )
    return CheckResult(name, True, cases)


def _deterministic_queries(base: BeliefBase) -> list[Formula]:
    """A fixed query battery: every vocabulary literal, pairwise
    disjunctions/conjunctions over the first few atoms, and the base's own
    formulas."""
    names = base.vocabulary[:4]
    queries: list[Formula] = []
    for name in names:
        queries.append(Atom(name))
        queries.append(Not(Atom(name)))
    for i, left in enumerate(names):
        for right in names[i + 1:]:
            queries.append(Atom(left) | Atom(right))
            queries.append(Atom(left) & Atom(right))
            queries.append(Not(Atom(left)) | Atom(right))
    queries.extend(formula for formula, _ in base.entries)
    return queries


def _semantic_necessity(
    pi: PossibilityDistribution, formula: Formula
) -> Fraction:
    return pi.necessity(pi.universe.models(formula))


def check_proof_semantics(base: BeliefBase) -> CheckResult:
    """Resolution-based answers must match the model-based ones: the
    inconsistency degree equals one minus the height of the induced
    distribution, and every proof weight equals the semantic necessity."""
    name = "proof-soundness-completeness"
    if not base.vocabulary:
        return CheckResult(name, True, 0, "no atoms, nothing to prove")
    pi = induced_distribution(base)
    cases = 1
    inc = inconsistency_degree(base)
    height = max(value for _, value in pi)
    if inc != ONE - height:
        return CheckResult(
            name, False, cases, f"inconsistency {inc} != 1 - height {height}"
        )
    for query in _deterministic_queries(base):
        cases += 1
        proved = prove(base, query)
        semantic = _semantic_necessity(pi, query)
        if proved != semantic:
            return CheckResult(
                name,
                False,
                cases,
                f"prove({query}) = {proved}, semantic necessity = {semantic}",
            )
    return CheckResult(name, True, cases)


def check_brutal_conditioning(base: BeliefBase) -> CheckResult:
    """Throwing away everything at or below the clash level and then asserting
    the input must mirror min-conditioning of the induced distribution."""
    name = "brutal-conditioning-equivalence"
    if not base.vocabulary:
        return CheckResult(name, True, 0, "no atoms, nothing to revise by")
    if inconsistency_degree(base) != ZERO:
        return CheckResult(
            name, True, 0, "inconsistent base: conditioning undefined, skipped"
        )
    pi = induced_distribution(base)
    cases = 0
    for atom_name in base.vocabulary:
        for formula in (Atom(atom_name), Not(Atom(atom_name))):
            event = pi.universe.models(formula)
            if pi.possibility(event) == ZERO:
                continue
            cases += 1
            revised = brutal_revise(base, formula)
            syntactic = induced_distribution(revised)
            semantic = condition_min(pi, event)
            if syntactic != semantic:
                return CheckResult(
                    name,
                    False,
                    cases,
                    f"input {formula}: {syntactic.values} != {semantic.values}",
                )
    return CheckResult(name, True, cases)


def check_distribution(
    pi: PossibilityDistribution, rng: random.Random | None = None
) -> list[CheckResult]:
    """The identity suite for a bare distribution."""
    if not pi.normalized:
        raise SubnormalizedError(
            "crosschecks need a normalized distribution (some world at 1)"
        )
    rng = rng or random.Random(SAMPLE_SEED)
    return [
        check_chain_rule(pi, Mode.MIN, rng),
        check_chain_rule(pi, Mode.PRODUCT, rng),
        check_adjustment_equivalence(pi, rng),
        check_ranking_bridge(pi, rng),
    ]


def check_base(
    base: BeliefBase, rng: random.Random | None = None
) -> list[CheckResult]:
    """The identity suite for a weighted base: proof-theoretic checks plus
    the distribution suite on the base's semantics (its consistent part when
    the base clashes)."""
    rng = rng or random.Random(SAMPLE_SEED)
    results = [check_proof_semantics(base), check_brutal_conditioning(base)]
    if base.vocabulary:
        if inconsistency_degree(base) == ZERO:
            pi = induced_distribution(base)
        else:
            pi = consistent_part_distribution(base)
        results.extend(check_distribution(pi, rng))
    return results


def all_passed(results: list[CheckResult]) -> bool:
    return all(result.passed for result in results)


def format_results(results: list[CheckResult]) -> str:
    return "\n".join(result.line() for result in results) + "\n"
