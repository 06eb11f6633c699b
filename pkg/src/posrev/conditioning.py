"""Conditioning, contraction, and the minimal-change view of revision.

Two conditioning rules share the same defining equation, one for each way
of combining degrees: the possibility of "B given A" times-or-min the
possibility of A must give back the possibility of A-and-B. Ordinal (min)
conditioning shifts the most plausible A-worlds to 1 and leaves the rest
alone; numerical (product) conditioning rescales proportionally.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .distribution import PossibilityDistribution
from .errors import DomainError, SubnormalizedError, UndefinedConditioningError
from .scale import ONE, ZERO
from .worlds import Event


class Mode(str, Enum):
    """How degrees combine: ordinal ``min`` or numerical ``product``."""

    MIN = "min"
    PRODUCT = "product"

    def combine(self, a: Fraction, b: Fraction) -> Fraction:
        if self is Mode.MIN:
            return min(a, b)
        return a * b


def condition_min(pi: PossibilityDistribution, event: Event) -> PossibilityDistribution:
    """Ordinal conditioning: A's most plausible worlds rise to 1, the other
    A-worlds keep their degree, everything outside A drops to 0."""
    pi._check_event(event)
    if not pi.normalized:
        raise SubnormalizedError("min-conditioning needs a normalized distribution")
    top = pi.possibility(event)
    if top == ZERO:
        raise UndefinedConditioningError("conditioning on an event of possibility 0")
    values = tuple(
        (ONE if v == top else v) if l in event.members else ZERO
        for l, v in zip(pi.universe.labels, pi.values)
    )
    return PossibilityDistribution(pi.universe, values)


def condition_product(pi: PossibilityDistribution, event: Event) -> PossibilityDistribution:
    """Numerical conditioning: degrees inside A are divided by A's possibility."""
    pi._check_event(event)
    top = pi.possibility(event)
    if top == ZERO:
        raise UndefinedConditioningError("conditioning on an event of possibility 0")
    values = tuple(
        v / top if l in event.members else ZERO
        for l, v in zip(pi.universe.labels, pi.values)
    )
    return PossibilityDistribution(pi.universe, values)


def condition(
    pi: PossibilityDistribution, event: Event, mode: Mode | str = Mode.MIN
) -> PossibilityDistribution:
    mode = Mode(mode)
    if mode is Mode.MIN:
        return condition_min(pi, event)
    return condition_product(pi, event)


def contract(pi: PossibilityDistribution, event: Event) -> PossibilityDistribution:
    """Stop accepting the event: the best worlds outside it rise to 1.

    After contraction both the event and its complement are fully possible,
    so the event is no longer believed. Contracting the whole universe is
    refused (there is nothing outside it to raise); contracting the empty
    event changes nothing, since its complement already reaches 1.
    """
    pi._check_event(event)
    if not pi.normalized:
        raise SubnormalizedError("contraction needs a normalized distribution")
    if len(event) == len(pi.universe):
        raise DomainError("cannot contract the whole universe")
    complement = ~event
    level = pi.possibility(complement)
    values = tuple(
        ONE if l in complement.members and v == level else v
        for l, v in zip(pi.universe.labels, pi.values)
    )
    return PossibilityDistribution(pi.universe, values)


def minimal_change_revisions(
    pi: PossibilityDistribution, event: Event
) -> tuple[PossibilityDistribution, ...]:
    """All ways to accept the event with certainty while moving least.

    Each candidate picks one most-plausible world of the event, raises it to
    1, keeps the other most-plausible ones at their level, keeps the rest of
    the event unchanged and annihilates the complement. Their pointwise
    maximum is exactly ordinal conditioning.
    """
    pi._check_event(event)
    if not pi.normalized:
        raise SubnormalizedError("revision needs a normalized distribution")
    top = pi.possibility(event)
    if top == ZERO:
        raise UndefinedConditioningError("revising by an event of possibility 0")
    labels = pi.universe.labels
    maximal = [l for l, v in zip(labels, pi.values) if l in event.members and v == top]
    revisions = []
    for chosen in maximal:
        values = tuple(
            (ONE if l == chosen else (top if l in maximal else v))
            if l in event.members
            else ZERO
            for l, v in zip(labels, pi.values)
        )
        revisions.append(PossibilityDistribution(pi.universe, values))
    return tuple(revisions)
