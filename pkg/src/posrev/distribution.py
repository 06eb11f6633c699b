"""Possibility distributions and the measures they induce.

A distribution maps every world of a universe to an exact degree in [0, 1].
The possibility of an event is the maximum degree over its members; the
necessity is one minus the possibility of the complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import SubnormalizedError, UniverseMismatchError
from .scale import ONE, ZERO, as_scale
from .worlds import Event, Universe


@dataclass(frozen=True)
class PossibilityDistribution:
    universe: Universe
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.universe):
            raise ValueError(
                f"{len(self.values)} values for {len(self.universe)} worlds"
            )
        object.__setattr__(self, "values", tuple(as_scale(v) for v in self.values))

    @classmethod
    def from_mapping(
        cls, universe: Universe, mapping: Mapping[str, Fraction | int | str]
    ) -> "PossibilityDistribution":
        missing = [l for l in universe.labels if l not in mapping]
        if missing:
            raise ValueError(f"no degree for worlds {missing}")
        extra = [l for l in mapping if l not in universe]
        if extra:
            raise ValueError(f"degrees for unknown worlds {extra}")
        return cls(universe, tuple(as_scale(mapping[l]) for l in universe.labels))

    def __getitem__(self, label: str) -> Fraction:
        return self.values[self.universe.index(label)]

    def __iter__(self) -> Iterator[tuple[str, Fraction]]:
        return iter(zip(self.universe.labels, self.values))

    @property
    def normalized(self) -> bool:
        return max(self.values) == ONE

    def _check_event(self, event: Event) -> None:
        if event.universe != self.universe:
            raise UniverseMismatchError("event lives on a different universe")

    def possibility(self, event: Event) -> Fraction:
        """Largest degree among the event's worlds; zero for the empty event."""
        self._check_event(event)
        index = self.universe.index
        return max((self.values[index(l)] for l in event.members), default=ZERO)

    def necessity(self, event: Event) -> Fraction:
        return ONE - self.possibility(~event)

    def believes(self, event: Event) -> bool:
        """Whether the event is accepted, i.e. has positive necessity.

        Only meaningful when the distribution is normalized; anything else
        raises rather than returning a junk answer.
        """
        if not self.normalized:
            raise SubnormalizedError("belief query on a subnormalized distribution")
        return self.necessity(event) > ZERO

    def core(self) -> Event:
        """Event of the maximally plausible worlds."""
        top = max(self.values)
        members = [l for l, v in zip(self.universe.labels, self.values) if v == top]
        return Event(self.universe, frozenset(members))

    def hamming_distance(
        self, other: "PossibilityDistribution", level_indexed: bool = False
    ) -> Fraction:
        """Sum of world-wise absolute differences; may exceed 1.

        With ``level_indexed`` the distinct degrees appearing in either
        distribution are first replaced by their ranks 0, 1, 2, ... so the
        distance counts level steps instead of raw differences.
        """
        if other.universe != self.universe:
            raise UniverseMismatchError("distributions live on different universes")
        if level_indexed:
            levels = sorted(set(self.values) | set(other.values))
            rank = {v: i for i, v in enumerate(levels)}
            return Fraction(
                sum(abs(rank[a] - rank[b]) for a, b in zip(self.values, other.values))
            )
        return sum(
            (abs(a - b) for a, b in zip(self.values, other.values)), start=Fraction(0)
        )

    def replace(self, **changes: Fraction | int | str) -> "PossibilityDistribution":
        """Copy with the degrees of the named worlds changed."""
        mapping = dict(zip(self.universe.labels, self.values))
        for label, value in changes.items():
            if label not in mapping:
                raise KeyError(label)
            mapping[label] = as_scale(value)
        return PossibilityDistribution(
            self.universe, tuple(mapping[l] for l in self.universe.labels)
        )
