"""Finite universes of worlds and the events over them.

A universe is an ordered finite set of labelled worlds. It may be generated
from a propositional vocabulary, in which case every world carries a truth
assignment and events can be given by formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import formulas
from .errors import GuardError, UniverseMismatchError

MAX_ATOMS = 16


@dataclass(frozen=True)
class World:
    """One interpretation; ``assignment`` is aligned with the universe's atoms."""

    label: str
    assignment: tuple[bool, ...] | None = None


class Universe:
    """Ordered, duplicate-free collection of worlds."""

    __slots__ = ("worlds", "atoms", "_index")

    def __init__(self, worlds: Iterable[World], atoms: tuple[str, ...] | None = None):
        self.worlds = tuple(worlds)
        self.atoms = atoms
        if not self.worlds:
            raise ValueError("a universe needs at least one world")
        index: dict[str, int] = {}
        for position, world in enumerate(self.worlds):
            if world.label in index:
                raise ValueError(f"duplicate world label {world.label!r}")
            if atoms is not None:
                if world.assignment is None or len(world.assignment) != len(atoms):
                    raise ValueError(f"world {world.label!r} lacks a full assignment")
            index[world.label] = position
        self._index = index

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> "Universe":
        return cls(World(label) for label in labels)

    @classmethod
    def from_atoms(cls, names: Iterable[str]) -> "Universe":
        """All truth assignments over ``names``; labels are bit strings.

        The all-true world comes first and the order counts down through the
        bit patterns, e.g. 11, 10, 01, 00 for two atoms.
        """
        atom_tuple = tuple(names)
        if not atom_tuple:
            raise ValueError("need at least one atom")
        if len(atom_tuple) > MAX_ATOMS:
            raise GuardError(f"{len(atom_tuple)} atoms exceed the limit of {MAX_ATOMS}")
        if len(set(atom_tuple)) != len(atom_tuple):
            raise ValueError("duplicate atoms")
        for name in atom_tuple:
            if not formulas.ATOM_RE.fullmatch(name):
                raise ValueError(f"bad atom name {name!r}")
        worlds = []
        for number in range(2 ** len(atom_tuple) - 1, -1, -1):
            bits = tuple(bool(number >> i & 1) for i in reversed(range(len(atom_tuple))))
            label = "".join("1" if b else "0" for b in bits)
            worlds.append(World(label, bits))
        return cls(worlds, atom_tuple)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(world.label for world in self.worlds)

    def __len__(self) -> int:
        return len(self.worlds)

    def __iter__(self) -> Iterator[World]:
        return iter(self.worlds)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Universe):
            return NotImplemented
        return self.worlds == other.worlds and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash((self.worlds, self.atoms))

    def __repr__(self) -> str:
        return f"Universe({list(self.labels)!r}, atoms={self.atoms!r})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no world labelled {label!r} in this universe") from None

    def world(self, label: str) -> World:
        return self.worlds[self.index(label)]

    def assignment_map(self, label: str) -> dict[str, bool]:
        if self.atoms is None:
            raise ValueError("universe has no atom vocabulary")
        world = self.world(label)
        assert world.assignment is not None
        return dict(zip(self.atoms, world.assignment))

    def event(self, labels: Iterable[str] = ()) -> "Event":
        members = frozenset(labels)
        for label in members:
            self.index(label)
        return Event(self, members)

    def models(self, formula: formulas.Formula) -> "Event":
        """Event of all worlds satisfying ``formula`` (atom universes only)."""
        if self.atoms is None:
            raise ValueError("universe has no atom vocabulary; events must be label sets")
        unknown = [a for a in formulas.atoms(formula) if a not in self.atoms]
        if unknown:
            raise ValueError(f"formula mentions atoms outside the universe: {unknown}")
        satisfied = [
            world.label
            for world in self.worlds
            if formulas.evaluate(formula, dict(zip(self.atoms, world.assignment)))  # type: ignore[arg-type]
        ]
        return Event(self, frozenset(satisfied))

    @property
    def everything(self) -> "Event":
        return Event(self, frozenset(self.labels))

    @property
    def nothing(self) -> "Event":
        return Event(self, frozenset())

    def iter_events(self) -> Iterator["Event"]:
        """All subsets of the universe, empty set first."""
        if len(self.worlds) > MAX_ATOMS:
            raise GuardError(f"refusing to enumerate events over {len(self.worlds)} worlds")
        labels = self.labels
        for mask in range(2 ** len(labels)):
            yield Event(self, frozenset(l for i, l in enumerate(labels) if mask >> i & 1))


@dataclass(frozen=True)
class Event:
    """A subset of one universe's worlds, by label."""

    universe: Universe
    members: frozenset[str]

    def _check(self, other: "Event") -> None:
        if self.universe != other.universe:
            raise UniverseMismatchError("events live on different universes")

    def __invert__(self) -> "Event":
        return Event(self.universe, frozenset(self.universe.labels) - self.members)

    def __and__(self, other: "Event") -> "Event":
        self._check(other)
        return Event(self.universe, self.members & other.members)

    def __or__(self, other: "Event") -> "Event":
        self._check(other)
        return Event(self.universe, self.members | other.members)

    def __contains__(self, label: object) -> bool:
        return label in self.members

    def __len__(self) -> int:
        return len(self.members)

    @property
    def is_empty(self) -> bool:
        return not self.members

    def labels_in_order(self) -> tuple[str, ...]:
        return tuple(l for l in self.universe.labels if l in self.members)

    def __repr__(self) -> str:
        return f"Event({{{', '.join(self.labels_in_order())}}})"
