"""Probabilistic counterparts of the revision rules.

Kept deliberately small: Jeffrey's rule for one event, its partition form,
and the expected-conditional update for an observation that may be vacuous.
They document the structural analogy with the possibilistic operators
(replace sum and product scaling by max and combination) and give the test
suite an independent numeric family to cross-read.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import DomainError, PartitionError, UniverseMismatchError
from .scale import ONE, ZERO, as_scale
from .worlds import Event, Universe


@dataclass(frozen=True)
class ProbabilityDistribution:
    universe: Universe
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.universe):
            raise ValueError(f"{len(self.values)} values for {len(self.universe)} worlds")
        values = tuple(Fraction(v) for v in self.values)
        if any(v < ZERO for v in values):
            raise ValueError("negative probability")
        if sum(values) != ONE:
            raise ValueError(f"probabilities sum to {sum(values)}, not 1")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_mapping(
        cls, universe: Universe, mapping: Mapping[str, Fraction | int | str]
    ) -> "ProbabilityDistribution":
        missing = [l for l in universe.labels if l not in mapping]
        if missing:
            raise ValueError(f"no probability for worlds {missing}")
        return cls(universe, tuple(Fraction(mapping[l]) for l in universe.labels))

    def __getitem__(self, label: str) -> Fraction:
        return self.values[self.universe.index(label)]

    def __iter__(self) -> Iterator[tuple[str, Fraction]]:
        return iter(zip(self.universe.labels, self.values))

    def probability(self, event: Event) -> Fraction:
        if event.universe != self.universe:
            raise UniverseMismatchError("event lives on a different universe")
        index = self.universe.index
        return sum((self.values[index(l)] for l in event.members), start=ZERO)


def jeffrey(
    P: ProbabilityDistribution, event: Event, alpha: Fraction | int | str
) -> ProbabilityDistribution:
    """Move the event's mass to exactly ``alpha``, preserving the ratios
    inside the event and inside its complement."""
    alpha = as_scale(alpha)
    if P.probability(event) == ZERO or P.probability(~event) == ZERO:
        raise DomainError("both the event and its complement need positive probability")
    return jeffrey_partition(P, [(event, alpha), (~event, ONE - alpha)])


def jeffrey_partition(
    P: ProbabilityDistribution,
    cells: Iterable[tuple[Event, Fraction | int | str]],
) -> ProbabilityDistribution:
    """Give each cell of a partition exactly the prescribed mass."""
    pairs = [(event, as_scale(mass)) for event, mass in cells]
    if not pairs:
        raise PartitionError("a partition needs at least one cell")
    seen: set[str] = set()
    for event, _ in pairs:
        if event.universe != P.universe:
            raise PartitionError("cells live on different universes")
        if seen & event.members:
            raise PartitionError("cells overlap")
        seen |= event.members
    if seen != set(P.universe.labels):
        raise PartitionError("cells do not cover the universe")
    if sum(mass for _, mass in pairs) != ONE:
        raise PartitionError("cell masses do not sum to 1")
    values = list(P.values)
    index = P.universe.index
    for event, mass in pairs:
        current = P.probability(event)
        if current == ZERO:
            if mass > ZERO:
                raise DomainError("cannot move mass onto a cell of probability 0")
            continue
        for label in event.members:
            i = index(label)
            values[i] = mass * P.values[i] / current
    return ProbabilityDistribution(P.universe, tuple(values))


def unreliable_update(
    P: ProbabilityDistribution, event: Event, alpha: Fraction | int | str
) -> ProbabilityDistribution:
    """Expected posterior for an observation trusted with probability
    ``alpha``: mix the conditional on the event with the prior."""
    alpha = as_scale(alpha)
    total = P.probability(event)
    if total == ZERO:
        raise DomainError("observed event has probability 0")
    index = P.universe.index
    values = []
    for label, prior in P:
        conditional = prior / total if label in event.members else ZERO
        values.append(alpha * conditional + (ONE - alpha) * prior)
    return ProbabilityDistribution(P.universe, tuple(values))
