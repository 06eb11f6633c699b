"""Ordinal ranking functions and their dyadic bridge to possibility.

A ranking assigns every world a degree of surprise: a natural number, or
infinity for the impossible. Rank 0 worlds are the expected ones. The map
``pi = 2**-kappa`` embeds rankings into dyadic possibility distributions
and turns ranking conditionalization into product-mode revision; the
translation of confidence levels is ``alpha = 1 - 2**-n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .distribution import PossibilityDistribution
from .errors import (
    DomainError,
    NotDyadicError,
    PartitionError,
    UndefinedConditioningError,
)
from .formulas import Formula, evaluate
from .scale import ONE, ZERO
from .worlds import Event, Universe

INF = math.inf
Rank = Union[int, float]


def _check_rank(rank: Rank) -> Rank:
    if rank is INF or rank == INF:
        return INF
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise ValueError(f"rank must be a nonnegative integer or INF, got {rank!r}")
    if rank < 0:
        raise ValueError(f"negative rank {rank}")
    return rank


@dataclass(frozen=True)
class KappaFunction:
    """World-wise surprise ranks; normalized means some world has rank 0."""

    universe: Universe
    ranks: tuple[Rank, ...]
    subnormalized: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.ranks) != len(self.universe):
            raise ValueError(f"{len(self.ranks)} ranks for {len(self.universe)} worlds")
        object.__setattr__(self, "ranks", tuple(_check_rank(r) for r in self.ranks))
        if not self.subnormalized and min(self.ranks) != 0:
            raise ValueError(
                "no world has rank 0; pass subnormalized=True if that is intended"
            )

    @classmethod
    def from_mapping(
        cls, universe: Universe, mapping: Mapping[str, Rank], subnormalized: bool = False
    ) -> "KappaFunction":
        missing = [l for l in universe.labels if l not in mapping]
        if missing:
            raise ValueError(f"no rank for worlds {missing}")
        return cls(universe, tuple(mapping[l] for l in universe.labels), subnormalized)

    def __getitem__(self, label: str) -> Rank:
        return self.ranks[self.universe.index(label)]

    def rank_of(self, event: Event) -> Rank:
        """Least rank among the event's worlds; INF for the empty event."""
        if event.universe != self.universe:
            raise DomainError("event lives on a different universe")
        index = self.universe.index
        return min((self.ranks[index(l)] for l in event.members), default=INF)


@dataclass(frozen=True)
class PartitionRanking:
    """Target ranks for the cells of a partition; least cell rank must be 0."""

    cells: tuple[tuple[Event, Rank], ...]

    def __init__(self, cells: Iterable[tuple[Event, Rank]]):
        normalized = tuple((event, _check_rank(rank)) for event, rank in cells)
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
        if min(rank for _, rank in normalized) != 0:
            raise PartitionError("no cell has rank 0")


def kappa_to_pi(kappa: KappaFunction) -> PossibilityDistribution:
    """Dyadic image: rank k becomes degree 2**-k, infinity becomes 0."""
    values = tuple(
        ZERO if r == INF else Fraction(1, 2**r) for r in kappa.ranks
    )
    return PossibilityDistribution(kappa.universe, values)


def pi_to_kappa(pi: PossibilityDistribution) -> KappaFunction:
    """Inverse of the dyadic image; defined only for degrees 0 and 2**-k."""
    ranks: list[Rank] = []
    for label, value in pi:
        if value == ZERO:
            ranks.append(INF)
            continue
        if value.numerator != 1 or value.denominator & (value.denominator - 1):
            raise NotDyadicError(
                f"degree {value} of world {label!r} is not of the form 2**-k"
            )
        ranks.append(value.denominator.bit_length() - 1)
    subnormalized = min(ranks) != 0
    return KappaFunction(pi.universe, tuple(ranks), subnormalized)


def kappa_condition(kappa: KappaFunction, event: Event) -> KappaFunction:
    """Shift the event's ranks down to start at 0; its complement becomes
    impossible."""
    base = kappa.rank_of(event)
    if base == INF:
        raise UndefinedConditioningError("conditioning on an event of rank infinity")
    values = tuple(
        r - base if l in event.members else INF
        for l, r in zip(kappa.universe.labels, kappa.ranks)
    )
    return KappaFunction(kappa.universe, values)


def kappa_conditionalize(kappa: KappaFunction, event: Event, n: Rank) -> KappaFunction:
    """Make the event's complement exactly ``n`` ranks more surprising than
    the event, conditioning within each side."""
    n = _check_rank(n)
    complement = ~event
    inside = kappa.rank_of(event)
    outside = kappa.rank_of(complement)
    if inside == INF or outside == INF:
        raise UndefinedConditioningError(
            "both the event and its complement must have finite rank"
        )
    values = tuple(
        r - inside if l in event.members else n + (r - outside)
        for l, r in zip(kappa.universe.labels, kappa.ranks)
    )
    return KappaFunction(kappa.universe, values)


def kappa_partition_conditionalize(
    kappa: KappaFunction, ranking: PartitionRanking
) -> KappaFunction:
    """Impose the given rank on every cell, conditioning inside each cell."""
    labels = kappa.universe.labels
    values: list[Rank] = [INF] * len(labels)
    for event, target in ranking.cells:
        if event.universe != kappa.universe:
            raise DomainError("cell lives on a different universe")
        base = kappa.rank_of(event)
        if base == INF:
            if target != INF:
                raise UndefinedConditioningError(
                    "a cell with finite target rank has rank infinity"
                )
            continue
        if target == INF:
            continue
        for label in event.members:
            i = kappa.universe.index(label)
            values[i] = target + (kappa.ranks[i] - base)
    return KappaFunction(kappa.universe, tuple(values))


def kappa_adjust(kappa: KappaFunction, event: Event, n: Rank) -> KappaFunction:
    """Adjust to surprise level ``n`` for the complement of the event.

    Uses the qualitative conditioning that only shifts the event's least
    surprising worlds to 0 and keeps the other ranks as they are. A zero
    target is refused: reaching "no confidence" is contraction's job, and
    the formula would not do it correctly.
    """
    n = _check_rank(n)
    if n == 0:
        raise DomainError("target rank 0 is not an adjustment; contract instead")
    complement = ~event

    def qualitative(e: Event) -> dict[str, Rank]:
        base = kappa.rank_of(e)
        if base == INF:
            raise UndefinedConditioningError("conditioning on an event of rank infinity")
        out: dict[str, Rank] = {}
        for label in kappa.universe.labels:
            if label not in e.members:
                out[label] = INF
            else:
                r = kappa[label]
                out[label] = 0 if r == base else r
        return out

    inside = qualitative(event)
    outside = qualitative(complement)
    values = tuple(
        min(inside[l], max(n, outside[l])) for l in kappa.universe.labels
    )
    return KappaFunction(kappa.universe, values)


def minimal_ranking(
    entries: Iterable[tuple[Formula, int]], vocabulary: Iterable[str]
) -> KappaFunction:
    """Least surprising ranking compatible with a layered base.

    A world satisfying every formula gets rank 0; otherwise its rank is the
    highest layer it violates. Layers are positive integers, higher meaning
    more entrenched.
    """
    pairs = tuple(entries)
    for _, layer in pairs:
        if isinstance(layer, bool) or not isinstance(layer, int) or layer < 1:
            raise ValueError(f"layer must be a positive integer, got {layer!r}")
    universe = Universe.from_atoms(vocabulary)
    ranks: list[Rank] = []
    for world in universe:
        assignment = dict(zip(universe.atoms, world.assignment))  # type: ignore[arg-type]
        violated = [layer for f, layer in pairs if not evaluate(f, assignment)]
        ranks.append(max(violated) if violated else 0)
    subnormalized = min(ranks) != 0 if ranks else False
    return KappaFunction(universe, tuple(ranks), subnormalized)


def layer_to_weight(layer: int) -> Fraction:
    """Dyadic certainty weight of a layer: 1 - 2**-layer."""
    if isinstance(layer, bool) or not isinstance(layer, int) or layer < 1:
        raise ValueError(f"layer must be a positive integer, got {layer!r}")
    return ONE - Fraction(1, 2**layer)


def weight_to_layer(weight: Fraction) -> int:
    """Inverse of ``layer_to_weight``; defined only on weights 1 - 2**-n."""
    complement = ONE - weight
    if (
        complement <= ZERO
        or complement.numerator != 1
        or complement.denominator & (complement.denominator - 1)
    ):
        raise NotDyadicError(f"weight {weight} is not of the form 1 - 2**-n")
    return complement.denominator.bit_length() - 1
