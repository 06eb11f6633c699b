"""Revision by inputs that are themselves uncertain.

The central operator takes an event A with a target confidence alpha and
produces the least committed distribution in which A is fully possible and
accepted exactly to degree alpha. It splits the universe in two, conditions
on each side, and caps the complement's side at 1 - alpha. Variants cover
partition-valued inputs, inputs of doubtful provenance, the gentle revision
that promotes A's best worlds while demoting its complement just below
every ordinary level, and the piecewise adjustment operator that reaches
the same place through contraction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .conditioning import Mode, condition, contract
from .distribution import PossibilityDistribution
from .errors import (
    DomainError,
    PartitionError,
    UndefinedConditioningError,
    UniverseMismatchError,
)
from .scale import ONE, ZERO, as_scale
from .worlds import Event


@dataclass(frozen=True)
class UncertainInput:
    """An event with a confidence degree and the reading attached to it.

    ``constraint`` means "accept A to exactly this degree"; ``unreliable``
    means "A was reported, with this much trust in the report".
    """

    event: Event
    degree: Fraction
    semantics: str = "constraint"

    def __post_init__(self) -> None:
        object.__setattr__(self, "degree", as_scale(self.degree))
        if self.semantics not in ("constraint", "unreliable"):
            raise ValueError(f"unknown input semantics {self.semantics!r}")


@dataclass(frozen=True)
class PartitionInput:
    """Cells covering the universe exactly once, each with a target
    possibility level; at least one cell must sit at level 1."""

    cells: tuple[tuple[Event, Fraction], ...]

    def __init__(self, cells: Iterable[tuple[Event, Fraction | int | str]]):
        normalized = tuple((event, as_scale(level)) for event, level in cells)
        object.__setattr__(self, "cells", normalized)
        if not normalized:
            raise PartitionError("a partition needs at least one cell")
        universe = normalized[0][0].universe
        seen: set[str] = set()
        for event, _ in normalized:
            if event.universe != universe:
                raise PartitionError("cells live on different universes")
            if seen & event.members:
                raise PartitionError("cells overlap")
            seen |= event.members
        if seen != set(universe.labels):
            raise PartitionError("cells do not cover the universe")
        if max(level for _, level in normalized) != ONE:
            raise PartitionError("no cell has level 1")


def revise_uncertain(
    pi: PossibilityDistribution,
    event: Event,
    alpha: Fraction | int | str,
    mode: Mode | str = Mode.MIN,
) -> PossibilityDistribution:
    """Accept ``event`` to exactly degree ``alpha``.

    The result is the pointwise maximum of conditioning on the event and of
    conditioning on its complement capped at 1 - alpha. Afterwards the
    event's possibility is 1 and its necessity is exactly alpha.
    """
    mode = Mode(mode)
    alpha = as_scale(alpha)
    inside = condition(pi, event, mode)
    outside = condition(pi, ~event, mode)
    cap = ONE - alpha
    values = tuple(
        max(a, mode.combine(cap, b)) for a, b in zip(inside.values, outside.values)
    )
    return PossibilityDistribution(pi.universe, values)


def revise_partition(
    pi: PossibilityDistribution,
    partition: PartitionInput | Iterable[tuple[Event, Fraction]],
    mode: Mode | str = Mode.MIN,
) -> PossibilityDistribution:
    """Impose a target possibility level on every cell of a partition.

    Cells with level 0 are wiped out; every other cell is conditioned on and
    scaled to its level, and the results are superposed by maximum.
    """
    mode = Mode(mode)
    if not isinstance(partition, PartitionInput):
        partition = PartitionInput(partition)
    for event, level in partition.cells:
        if event.universe != pi.universe:
            raise UniverseMismatchError("cell lives on a different universe")
        if level > ZERO and pi.possibility(event) == ZERO:
            raise UndefinedConditioningError(
                "a cell with positive target level has possibility 0"
            )
    values = [ZERO] * len(pi.universe)
    for event, level in partition.cells:
        if level == ZERO:
            continue
        conditioned = condition(pi, event, mode)
        for i, v in enumerate(conditioned.values):
            candidate = mode.combine(level, v)
            if candidate > values[i]:
                values[i] = candidate
    return PossibilityDistribution(pi.universe, tuple(values))


def revise_unreliable(
    pi: PossibilityDistribution,
    event: Event,
    alpha: Fraction | int | str,
    mode: Mode | str = Mode.MIN,
) -> PossibilityDistribution:
    """Revise by a report trusted to degree ``alpha``.

    The prior survives at level 1 - alpha next to the conditioned
    distribution, so nothing is ever ruled out completely. With full trust
    this is plain conditioning; with no trust the report is vacuous and the
    prior is returned untouched.
    """
    mode = Mode(mode)
    alpha = as_scale(alpha)
    if pi.possibility(event) == ZERO:
        raise UndefinedConditioningError("report concerns an event of possibility 0")
    if alpha == ZERO:
        return pi
    inside = condition(pi, event, mode)
    cap = ONE - alpha
    values = tuple(
        max(a, mode.combine(cap, b)) for a, b in zip(inside.values, pi.values)
    )
    return PossibilityDistribution(pi.universe, values)


def apply_input(
    pi: PossibilityDistribution, uncertain: UncertainInput, mode: Mode | str = Mode.MIN
) -> PossibilityDistribution:
    """Dispatch on the input's semantics tag."""
    if uncertain.semantics == "constraint":
        return revise_uncertain(pi, uncertain.event, uncertain.degree, mode)
    return revise_unreliable(pi, uncertain.event, uncertain.degree, mode)


class OrderingProvisoWarning(UserWarning):
    """The side conditions for order-preserving (gentle) revision fail."""


def default_natural_beta(pi: PossibilityDistribution) -> Fraction:
    """Midpoint between 1 and the largest degree strictly below 1 in ``pi``."""
    second = max((v for v in pi.values if v < ONE), default=ZERO)
    return (ONE + second) / 2


def natural_revision(
    pi: PossibilityDistribution,
    event: Event,
    beta: Fraction | int | str | None = None,
    mode: Mode | str = Mode.MIN,
) -> PossibilityDistribution:
    """Promote the event's best worlds to 1 and demote its complement to
    ``beta``, a level meant to sit just below 1.

    When ``beta`` collides with an existing degree of a complement world, or
    when the event is already fully possible, the result no longer preserves
    the prior plausibility ordering; those cases are reported through an
    ``OrderingProvisoWarning`` rather than refused.
    """
    mode = Mode(mode)
    if beta is None:
        beta = default_natural_beta(pi)
    else:
        beta = as_scale(beta)
    if not ZERO < beta < ONE:
        raise DomainError(f"beta must lie strictly between 0 and 1, got {beta}")
    complement = ~event
    if pi.possibility(event) == ZERO or pi.possibility(complement) == ZERO:
        raise UndefinedConditioningError("both the event and its complement must be possible")
    index = pi.universe.index
    if any(pi.values[index(l)] == beta for l in complement.members):
        warnings.warn(
            OrderingProvisoWarning(
                f"a world outside the event already sits at level {beta}; "
                "the prior ordering is not preserved"
            ),
            stacklevel=2,
        )
    if pi.possibility(event) == ONE:
        warnings.warn(
            OrderingProvisoWarning(
                "the event is already fully possible; demoting its complement "
                "does not preserve the prior ordering"
            ),
            stacklevel=2,
        )
    inside = condition(pi, event, mode)
    outside = condition(pi, complement, mode)
    values = tuple(
        max(a, mode.combine(beta, b)) for a, b in zip(inside.values, outside.values)
    )
    return PossibilityDistribution(pi.universe, values)


def _cushion(
    pi: PossibilityDistribution, event: Event, alpha: Fraction
) -> PossibilityDistribution:
    """Condition ordinally inside the event, cap the outside at 1 - alpha."""
    top = pi.possibility(event)
    if top == ZERO:
        raise UndefinedConditioningError("adjusting toward an event of possibility 0")
    cap = ONE - alpha
    values = tuple(
        ((ONE if v == top else v) if l in event.members else min(cap, v))
        for l, v in zip(pi.universe.labels, pi.values)
    )
    return PossibilityDistribution(pi.universe, values)


def adjust(
    pi: PossibilityDistribution, event: Event, alpha: Fraction | int | str
) -> PossibilityDistribution:
    """Piecewise adjustment to confidence ``alpha`` in the event.

    Three cases: zero alpha simply contracts; a target below the current
    confidence contracts first and then rebuilds to the lower level; any
    other target is reached directly. Whenever alpha is positive this lands
    on the same distribution as ``revise_uncertain`` in min mode, but the
    route through contraction is kept deliberately distinct so the two can
    cross-check each other.
    """
    alpha = as_scale(alpha)
    if alpha == ZERO:
        return contract(pi, event)
    if not pi.normalized:
        raise DomainError("adjustment needs a normalized distribution")
    if alpha < pi.necessity(event):
        return _cushion(contract(pi, event), event, alpha)
    return _cushion(pi, event, alpha)
