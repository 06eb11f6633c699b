"""Line-oriented text formats for distributions and rankings.

Shared shape: an optional ``atoms: p q`` first line, then one
``world-label : value`` line per world, ``#`` starting comments. With a
declared vocabulary the labels are bit strings (``10``) or signed literal
lists (``p -q``) and every assignment must appear exactly once; labels are
normalized to bit strings. Without a vocabulary the labels are free
identifiers and define the universe in file order.

The base format lives next to the proof machinery in ``poslog``.
"""

from __future__ import annotations

import re

from .distribution import PossibilityDistribution
from .errors import GuardError, ParseError
from .formulas import ATOM_RE
from .probability import ProbabilityDistribution
from .ranking import INF, KappaFunction, Rank
from .scale import format_scale, format_scale_decimal, parse_scale
from .worlds import MAX_ATOMS, Universe, World

_LABEL_RE = re.compile(r"[A-Za-z0-9_\-]+$")
_BITS_RE = re.compile(r"[01]+$")
_INT_RE = re.compile(r"\d+$")


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    return lines


def _split_header(
    lines: list[tuple[int, str]]
) -> tuple[tuple[str, ...] | None, list[tuple[int, str]]]:
    if lines and lines[0][1].startswith("atoms:"):
        lineno, line = lines[0]
        names = tuple(line[len("atoms:"):].split())
        if not names:
            raise ParseError("empty atoms header", lineno)
        if len(names) > MAX_ATOMS:
            raise GuardError(f"{len(names)} atoms exceed the limit of {MAX_ATOMS}")
        if len(set(names)) != len(names):
            raise ParseError("duplicate atom in header", lineno)
        for name in names:
            if not ATOM_RE.fullmatch(name):
                raise ParseError(f"bad atom name {name!r}", lineno)
        return names, lines[1:]
    return None, lines


def _parse_world(
    label_text: str, atoms: tuple[str, ...], lineno: int
) -> tuple[str, tuple[bool, ...]]:
    """Resolve a bit-string or signed-literal label to its assignment."""
    tokens = label_text.split()
    if len(tokens) == 1 and _BITS_RE.match(tokens[0]):
        bits_text = tokens[0]
        if len(bits_text) != len(atoms):
            raise ParseError(
                f"label {bits_text!r} has {len(bits_text)} bits for "
                f"{len(atoms)} atoms",
                lineno,
            )
        bits = tuple(c == "1" for c in bits_text)
        return bits_text, bits
    signs: dict[str, bool] = {}
    for token in tokens:
        name = token[1:] if token.startswith("-") else token
        if name not in atoms:
            raise ParseError(f"unknown atom {name!r} in world label", lineno)
        if name in signs:
            raise ParseError(f"atom {name!r} repeated in world label", lineno)
        signs[name] = not token.startswith("-")
    missing = [a for a in atoms if a not in signs]
    if missing:
        raise ParseError(f"world label does not assign atoms {missing}", lineno)
    bits = tuple(signs[a] for a in atoms)
    return "".join("1" if b else "0" for b in bits), bits


def _parse_table(text: str) -> tuple[Universe, list[tuple[int, str, str]]]:
    """Common front half: build the universe, return (lineno, label, value
    text) rows in file order."""
    atoms, lines = _split_header(_content_lines(text))
    worlds: list[World] = []
    rows: list[tuple[int, str, str]] = []
    for lineno, line in lines:
        if ":" not in line:
            raise ParseError("expected 'world-label : value'", lineno)
        label_text, value_text = line.rsplit(":", 1)
        label_text = label_text.strip()
        if atoms is not None:
            label, bits = _parse_world(label_text, atoms, lineno)
            worlds.append(World(label, bits))
        else:
            if not _LABEL_RE.match(label_text):
                raise ParseError(f"bad world label {label_text!r}", lineno)
            worlds.append(World(label_text))
        rows.append((lineno, worlds[-1].label, value_text.strip()))
    if not worlds:
        raise ParseError("no worlds in file")
    if atoms is not None and len(worlds) != 2 ** len(atoms):
        raise ParseError(
            f"{len(worlds)} worlds listed for {len(atoms)} atoms; "
            f"expected {2 ** len(atoms)}"
        )
    try:
        universe = Universe(worlds, atoms)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return universe, rows


def parse_distribution(text: str) -> PossibilityDistribution:
    universe, rows = _parse_table(text)
    values = []
    for lineno, _, value_text in rows:
        try:
            values.append(parse_scale(value_text))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    return PossibilityDistribution(universe, tuple(values))


def parse_probability(text: str) -> ProbabilityDistribution:
    universe, rows = _parse_table(text)
    values = []
    for lineno, _, value_text in rows:
        try:
            values.append(parse_scale(value_text))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    try:
        return ProbabilityDistribution(universe, tuple(values))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_kappa(text: str) -> KappaFunction:
    universe, rows = _parse_table(text)
    ranks: list[Rank] = []
    for lineno, _, value_text in rows:
        if value_text == "inf":
            ranks.append(INF)
        elif _INT_RE.match(value_text):
            ranks.append(int(value_text))
        else:
            raise ParseError(
                f"bad rank {value_text!r}: expected a nonnegative integer or 'inf'",
                lineno,
            )
    subnormalized = min(ranks) != 0
    return KappaFunction(universe, tuple(ranks), subnormalized)


def _header(universe: Universe) -> list[str]:
    if universe.atoms is not None:
        return ["atoms: " + " ".join(universe.atoms)]
    return []


def format_distribution(pi: PossibilityDistribution, decimal: bool = False) -> str:
    render = format_scale_decimal if decimal else format_scale
    lines = _header(pi.universe)
    lines.extend(f"{label} : {render(value)}" for label, value in pi)
    return "\n".join(lines) + "\n"


def format_probability(P: ProbabilityDistribution, decimal: bool = False) -> str:
    render = format_scale_decimal if decimal else format_scale
    lines = _header(P.universe)
    lines.extend(f"{label} : {render(value)}" for label, value in P)
    return "\n".join(lines) + "\n"


def format_kappa(kappa: KappaFunction) -> str:
    lines = _header(kappa.universe)
    lines.extend(
        f"{label} : {'inf' if rank == INF else rank}"
        for label, rank in zip(kappa.universe.labels, kappa.ranks)
    )
    return "\n".join(lines) + "\n"
