"""Propositional formulas: syntax tree, parser, evaluation, printing.

Connectives are ``!`` (negation), ``&``, ``|`` and ``->``, binding in that
order; ``->`` associates to the right. Atoms match [a-z][a-z0-9_]*.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import GuardError, ParseError

ATOM_RE = re.compile(r"[a-z][a-z0-9_]*")

# truth-table satisfiability refuses to enumerate beyond this many atoms
ENUMERATION_LIMIT = 16


class Formula:
    """Base class of the syntax tree; concrete nodes are frozen dataclasses."""

    __slots__ = ()

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __invert__(self) -> "Formula":
        return Not(self)

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self) -> None:
        if not ATOM_RE.fullmatch(self.name):
            raise ValueError(f"bad atom name {self.name!r}")


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


def atoms(formula: Formula) -> tuple[str, ...]:
    """Atom names in order of first occurrence."""
    seen: dict[str, None] = {}

    def walk(f: Formula) -> None:
        if isinstance(f, Atom):
            seen.setdefault(f.name, None)
        elif isinstance(f, Not):
            walk(f.operand)
        else:
            walk(f.left)  # type: ignore[attr-defined]
            walk(f.right)  # type: ignore[attr-defined]

    walk(formula)
    return tuple(seen)


def evaluate(formula: Formula, assignment: Mapping[str, bool]) -> bool:
    """Truth value of ``formula`` under a total assignment of its atoms."""
    if isinstance(formula, Atom):
        return assignment[formula.name]
    if isinstance(formula, Not):
        return not evaluate(formula.operand, assignment)
    if isinstance(formula, And):
        return evaluate(formula.left, assignment) and evaluate(formula.right, assignment)
    if isinstance(formula, Or):
        return evaluate(formula.left, assignment) or evaluate(formula.right, assignment)
    if isinstance(formula, Implies):
        return (not evaluate(formula.left, assignment)) or evaluate(formula.right, assignment)
    raise TypeError(f"not a formula: {formula!r}")


def eliminate_implications(formula: Formula) -> Formula:
    """Rewrite every ``a -> b`` into ``!a | b``."""
    if isinstance(formula, Atom):
        return formula
    if isinstance(formula, Not):
        return Not(eliminate_implications(formula.operand))
    if isinstance(formula, And):
        return And(eliminate_implications(formula.left), eliminate_implications(formula.right))
    if isinstance(formula, Or):
        return Or(eliminate_implications(formula.left), eliminate_implications(formula.right))
    if isinstance(formula, Implies):
        return Or(Not(eliminate_implications(formula.left)), eliminate_implications(formula.right))
    raise TypeError(f"not a formula: {formula!r}")


def canonical(formula: Formula) -> Formula:
    """Identity used when two entries must count as the same formula.

    Implications are eliminated, then the two arguments of each ``&`` and
    ``|`` are put in a fixed order. Purely syntactic: ``p | q`` and
    ``q | p`` coincide, ``p`` and ``!!p`` do not.
    """

    def sort_args(f: Formula) -> Formula:
        if isinstance(f, Atom):
            return f
        if isinstance(f, Not):
            return Not(sort_args(f.operand))
        left = sort_args(f.left)  # type: ignore[attr-defined]
        right = sort_args(f.right)  # type: ignore[attr-defined]
        if format_formula(right) < format_formula(left):
            left, right = right, left
        return type(f)(left, right)

    return sort_args(eliminate_implications(formula))


def assignments(names: tuple[str, ...]) -> Iterator[dict[str, bool]]:
    """All total assignments of ``names``, all-true first."""
    if len(names) > ENUMERATION_LIMIT:
        raise GuardError(
            f"refusing to enumerate assignments of {len(names)} atoms "
            f"(limit {ENUMERATION_LIMIT})"
        )
    for bits in itertools.product((True, False), repeat=len(names)):
        yield dict(zip(names, bits))


def is_satisfiable(formula: Formula) -> bool:
    return any(evaluate(formula, a) for a in assignments(atoms(formula)))


def is_tautology(formula: Formula) -> bool:
    return all(evaluate(formula, a) for a in assignments(atoms(formula)))


# ---------------------------------------------------------------- printing

_PRECEDENCE = {Implies: 1, Or: 2, And: 3, Not: 4, Atom: 5}


def format_formula(formula: Formula) -> str:
    """Render with minimal parentheses under the grammar's precedence."""

    def render(f: Formula, minimum: int) -> str:
        level = _PRECEDENCE[type(f)]
        if isinstance(f, Atom):
            text = f.name
        elif isinstance(f, Not):
            text = "!" + render(f.operand, level)
        elif isinstance(f, Implies):
            # right-associative, so only the left child needs strengthening
            text = render(f.left, level + 1) + " -> " + render(f.right, level)
        else:
            symbol = " & " if isinstance(f, And) else " | "
            text = render(f.left, level) + symbol + render(f.right, level + 1)
        if level < minimum:
            return "(" + text + ")"
        return text

    return render(formula, 0)


# ----------------------------------------------------------------- parsing

_TOKEN_RE = re.compile(r"[a-z][a-z0-9_]*|->|[!&|()]|\S")


def _tokenize(text: str, line: int) -> list[tuple[str, int]]:
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        tok = match.group()
        col = match.start() + 1
        if tok not in ("->", "!", "&", "|", "(", ")") and not ATOM_RE.fullmatch(tok):
            raise ParseError(f"unexpected character {tok!r}", line, col)
        tokens.append((tok, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, int]], line: int, length: int):
        self.tokens = tokens
        self.pos = 0
        self.line = line
        self.end_column = length + 1

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def column(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return self.end_column

    def take(self) -> str:
        tok = self.tokens[self.pos][0]
        self.pos += 1
        return tok

    def fail(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.column())

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "->":
            self.take()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.peek() == "|":
            self.take()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.peek() == "&":
            self.take()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok == "(":
            self.take()
            inner = self.implication()
            if self.peek() != ")":
                raise self.fail("expected ')'")
            self.take()
            return inner
        if tok is not None and ATOM_RE.fullmatch(tok):
            self.take()
            return Atom(tok)
        raise self.fail("expected an atom, '!' or '('" if tok is None else f"unexpected {tok!r}")


def parse_formula(text: str, line: int = 1) -> Formula:
    """Parse one formula; raises ParseError with line/column on bad input."""
    parser = _Parser(_tokenize(text, line), line, len(text))
    formula = parser.implication()
    if parser.peek() is not None:
        raise parser.fail(f"trailing input {parser.peek()!r}")
    return formula
