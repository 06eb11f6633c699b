"""Shared fixtures-by-convention for the test modules: the canonical
four-world universe, the 5-level value grid, and corpus generators."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from posrev import (
    And,
    Atom,
    BeliefBase,
    Implies,
    Not,
    Or,
    PossibilityDistribution,
    Universe,
)

GRID = (
    Fraction(0),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(1),
)
POSITIVE_GRID = GRID[1:]

U4 = Universe.from_labels(["w1", "w2", "w3", "w4"])
EVENTS4 = tuple(U4.iter_events())

PI0 = PossibilityDistribution(
    U4, (Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(0))
)


def dist(*values) -> PossibilityDistribution:
    return PossibilityDistribution(U4, tuple(Fraction(v) for v in values))


def grid_distributions(universe: Universe = U4):
    """Every normalized distribution over ``universe`` with grid values."""
    for combo in product(GRID, repeat=len(universe)):
        if max(combo) == 1:
            yield PossibilityDistribution(universe, combo)


def random_formula(rng: random.Random, names, depth: int):
    """Random propositional formula of the given maximum depth."""
    if depth == 0 or rng.random() < 0.3:
        leaf = Atom(rng.choice(names))
        return Not(leaf) if rng.random() < 0.4 else leaf
    kind = rng.randrange(4)
    left = random_formula(rng, names, depth - 1)
    if kind == 0:
        return Not(left)
    right = random_formula(rng, names, depth - 1)
    if kind == 1:
        return And(left, right)
    if kind == 2:
        return Or(left, right)
    return Implies(left, right)


def random_base(rng: random.Random, max_atoms: int = 4, max_formulas: int = 5) -> BeliefBase:
    """Random weighted base: <= ``max_atoms`` atoms, <= ``max_formulas``
    entries of depth <= 3, weights from the positive grid."""
    names = ["a", "b", "c", "d"][: rng.randint(1, max_atoms)]
    count = rng.randint(1, max_formulas)
    entries = []
    for _ in range(count):
        formula = random_formula(rng, names, rng.randint(0, 3))
        entries.append((formula, rng.choice(POSITIVE_GRID)))
    return BeliefBase.build(entries, vocabulary=names)
