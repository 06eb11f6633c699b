"""Weighted clauses, clausal form, and weighted resolution.

A clause is a set of literals read disjunctively; its weight is a lower
bound on the necessity of the disjunction. Resolving two clauses yields
their resolvent at the minimum of the two weights. Refutation weight is
computed best-first: clauses are settled in descending weight order, so the
first time the empty clause settles, its weight is the answer.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import GuardError
from .formulas import And, Atom, Formula, Implies, Not, Or
from .scale import ONE, ZERO, as_scale

Literal = tuple[str, bool]

MAX_CLAUSES = 4096


@dataclass(frozen=True)
class WeightedClause:
    literals: frozenset[Literal]
    weight: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "weight", as_scale(self.weight))
        if self.weight == 0:
            raise ValueError("a weighted clause carries no information at weight 0")
        names = {name for name, _ in self.literals}
        if len(names) != len(self.literals):
            raise ValueError("clause contains complementary literals")

    @property
    def is_empty(self) -> bool:
        return not self.literals

    def __str__(self) -> str:
        if self.is_empty:
            return f"(<empty> {self.weight})"
        body = " | ".join(
            name if positive else "!" + name
            for name, positive in sorted(self.literals)
        )
        return f"({body} {self.weight})"


def resolve(first: WeightedClause, second: WeightedClause) -> WeightedClause:
    """Resolve on the unique complementary pair; weight is the minimum.

    Refuses when there is no complementary pair, or several (the resolvent
    would be tautological).
    """
    clashes = [
        (name, positive)
        for name, positive in first.literals
        if (name, not positive) in second.literals
    ]
    if not clashes:
        raise ValueError("clauses have no complementary pair")
    if len(clashes) > 1:
        raise ValueError("more than one complementary pair; resolvent is tautological")
    name, positive = clashes[0]
    literals = (first.literals - {(name, positive)}) | (
        second.literals - {(name, not positive)}
    )
    return WeightedClause(frozenset(literals), min(first.weight, second.weight))


def _nnf(formula: Formula, negated: bool) -> Formula:
    if isinstance(formula, Atom):
        return Not(formula) if negated else formula
    if isinstance(formula, Not):
        return _nnf(formula.operand, not negated)
    if isinstance(formula, Implies):
        return _nnf(Or(Not(formula.left), formula.right), negated)
    if isinstance(formula, And):
        pair = (_nnf(formula.left, negated), _nnf(formula.right, negated))
        return Or(*pair) if negated else And(*pair)
    if isinstance(formula, Or):
        pair = (_nnf(formula.left, negated), _nnf(formula.right, negated))
        return And(*pair) if negated else Or(*pair)
    raise TypeError(f"not a formula: {formula!r}")


def _clause_sets(formula: Formula) -> list[frozenset[Literal]]:
    """Clausal form of a negation-normal formula, tautologies included."""
    if isinstance(formula, Atom):
        return [frozenset({(formula.name, True)})]
    if isinstance(formula, Not):
        assert isinstance(formula.operand, Atom)
        return [frozenset({(formula.operand.name, False)})]
    if isinstance(formula, And):
        left = _clause_sets(formula.left)
        right = _clause_sets(formula.right)
        if len(left) + len(right) > MAX_CLAUSES:
            raise GuardError(f"clausal form exceeds {MAX_CLAUSES} clauses")
        return left + right
    if isinstance(formula, Or):
        left = _clause_sets(formula.left)
        right = _clause_sets(formula.right)
        if len(left) * len(right) > MAX_CLAUSES:
            raise GuardError(f"clausal form exceeds {MAX_CLAUSES} clauses")
        return [a | b for a in left for b in right]
    raise TypeError(f"unexpected node in negation normal form: {formula!r}")


def _tautological(literals: frozenset[Literal]) -> bool:
    return any((name, not positive) in literals for name, positive in literals)


def to_weighted_clauses(formula: Formula, weight: Fraction) -> frozenset[WeightedClause]:
    """Clausal form of ``formula`` with every clause at ``weight``.

    Tautological clauses are dropped; a tautology therefore yields no
    clauses at all.
    """
    weight = as_scale(weight)
    clauses = {
        literals for literals in _clause_sets(_nnf(formula, False))
        if not _tautological(literals)
    }
    if len(clauses) > MAX_CLAUSES:
        raise GuardError(f"clausal form exceeds {MAX_CLAUSES} clauses")
    return frozenset(WeightedClause(literals, weight) for literals in clauses)


# ----------------------------------------------------------- saturation core
#
# Clauses are packed as (positive-mask, negative-mask) int pairs against a
# fixed atom indexing; settling proceeds in descending weight, Dijkstra
# style, so a clause's settled weight is the best weight of any derivation.

MaskClause = tuple[int, int]


def pack_clauses(
    clauses: Iterable[WeightedClause], index: Mapping[str, int]
) -> dict[MaskClause, Fraction]:
    packed: dict[MaskClause, Fraction] = {}
    for clause in clauses:
        pos = neg = 0
        for name, positive in clause.literals:
            bit = 1 << index[name]
            if positive:
                pos |= bit
            else:
                neg |= bit
        key = (pos, neg)
        if packed.get(key, ZERO) < clause.weight:
            packed[key] = clause.weight
    return packed


def refutation_weight(packed: Mapping[MaskClause, Fraction]) -> Fraction:
    """Best weight at which the empty clause can be derived; 0 if it cannot.

    Clauses already tautological are skipped. Resolvents that would repeat a
    settled clause, or that a settled clause subsumes at equal or better
    weight, are pruned; neither pruning can lower the empty clause's best
    derivation weight.
    """
    heap: list[tuple[Fraction, int, int]] = []
    for (pos, neg), weight in packed.items():
        if pos & neg:
            continue
        heapq.heappush(heap, (-weight, pos, neg))
    settled: dict[MaskClause, Fraction] = {}
    settled_list: list[tuple[int, int, Fraction]] = []
    while heap:
        negated, pos, neg = heapq.heappop(heap)
        weight = -negated
        key = (pos, neg)
        if key in settled:
            continue
        # settled weights are all >= the popped weight, so plain set
        # inclusion is enough for subsumption
        if any(sp & pos == sp and sn & neg == sn for sp, sn, _ in settled_list):
            continue
        settled[key] = weight
        if pos == 0 and neg == 0:
            return weight
        settled_list.append((pos, neg, weight))
        for other_pos, other_neg, other_weight in list(settled_list):
            clash = (pos & other_neg) | (other_pos & neg)
            if clash == 0 or clash & (clash - 1):
                continue
            new_pos = (pos | other_pos) & ~clash
            new_neg = (neg | other_neg) & ~clash
            if new_pos & new_neg:
                continue
            new_weight = min(weight, other_weight)
            if (new_pos, new_neg) in settled:
                continue
            heapq.heappush(heap, (-new_weight, new_pos, new_neg))
    return ZERO
