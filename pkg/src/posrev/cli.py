"""Command-line front end.

One verb per operation; distributions, rankings, and bases are read from
text files in the formats defined by `fileio` and `poslog`. Events on the
command line are space-separated world labels, or a formula when the
universe carries a propositional vocabulary. Output value format defaults
to exact fractions; ``--decimal`` switches to 6-digit decimals for human
scanning only.

Exit codes: 0 success, 1 query answered no (or a failed crosscheck),
2 unreadable input, 3 operation outside its preconditions, 4 internal
guard tripped.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from . import crosscheck as checks
from .baserev import adjust_base, brutal_revise, lex_refine, preferred_subbase_revise
from .conditioning import Mode, condition, contract
from .distribution import PossibilityDistribution
from .errors import DomainError, GuardError, ParseError
from .fileio import (
    format_distribution,
    format_kappa,
    parse_distribution,
    parse_kappa,
)
from .formulas import Formula, parse_formula
from .poslog import (
    BeliefBase,
    entails_pref,
    format_base,
    induced_distribution,
    inconsistency_degree,
    parse_base,
    prove,
)
from .ranking import (
    KappaFunction,
    PartitionRanking,
    kappa_adjust,
    kappa_condition,
    kappa_conditionalize,
    kappa_partition_conditionalize,
    kappa_to_pi,
    minimal_ranking,
    pi_to_kappa,
    weight_to_layer,
)
from .revision import (
    PartitionInput,
    adjust,
    natural_revision,
    revise_partition,
    revise_uncertain,
    revise_unreliable,
)
from .scale import ZERO, format_scale, format_scale_decimal, parse_scale
from .worlds import Event, Universe


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_distribution(path: str) -> PossibilityDistribution:
    return parse_distribution(_read_text(path))


def _load_kappa(path: str) -> KappaFunction:
    return parse_kappa(_read_text(path))


def _load_base(path: str) -> BeliefBase:
    return parse_base(_read_text(path))


def _parse_event(universe: Universe, text: str) -> Event:
    """World-label list if every token is a label, else a formula (when the
    universe has a vocabulary). An empty string is the empty event."""
    tokens = text.split()
    if all(token in universe for token in tokens):
        return universe.event(tokens)
    if universe.atoms is not None:
        formula = parse_formula(text)
        try:
            return universe.models(formula)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    unknown = [t for t in tokens if t not in universe]
    raise ParseError(f"unknown world labels {unknown} (universe has no vocabulary)")


def _parse_scale_arg(text: str) -> Fraction:
    try:
        return parse_scale(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _parse_formula_arg(text: str) -> Formula:
    return parse_formula(text)


def _split_cell(text: str) -> tuple[str, str]:
    if ":" not in text:
        raise ParseError(f"cell {text!r} must look like 'EVENT : VALUE'")
    left, right = text.rsplit(":", 1)
    return left.strip(), right.strip()


def _render_value(value, decimal: bool) -> str:
    return format_scale_decimal(value) if decimal else format_scale(value)


def _print_distribution(pi: PossibilityDistribution, decimal: bool) -> None:
    sys.stdout.write(format_distribution(pi, decimal))


def _print_kappa(kappa: KappaFunction) -> None:
    sys.stdout.write(format_kappa(kappa))


def _relay_warnings(caught: list[warnings.WarningMessage]) -> None:
    for item in caught:
        print(f"warning: {item.message}", file=sys.stderr)


# ---------------------------------------------------------------- commands


def _cmd_pi(args) -> int:
    base = _load_base(args.base)
    _print_distribution(induced_distribution(base), args.decimal)
    return 0


def _cmd_inc(args) -> int:
    base = _load_base(args.base)
    print(_render_value(inconsistency_degree(base), args.decimal))
    return 0


def _cmd_prove(args) -> int:
    base = _load_base(args.base)
    weight = prove(base, _parse_formula_arg(args.formula))
    print(_render_value(weight, args.decimal))
    return 0 if weight > ZERO else 1


def _cmd_entail_pref(args) -> int:
    base = _load_base(args.base)
    answer = entails_pref(base, _parse_formula_arg(args.formula))
    print("true" if answer else "false")
    return 0 if answer else 1


def _cmd_condition(args) -> int:
    pi = _load_distribution(args.distribution)
    event = _parse_event(pi.universe, args.event)
    _print_distribution(condition(pi, event, Mode(args.op)), args.decimal)
    return 0


def _cmd_contract(args) -> int:
    pi = _load_distribution(args.distribution)
    event = _parse_event(pi.universe, args.event)
    _print_distribution(contract(pi, event), args.decimal)
    return 0


def _cmd_revise_uncertain(args) -> int:
    pi = _load_distribution(args.distribution)
    event = _parse_event(pi.universe, args.event)
    alpha = _parse_scale_arg(args.alpha)
    _print_distribution(revise_uncertain(pi, event, alpha, Mode(args.mode)), args.decimal)
    return 0


def _cmd_revise_partition(args) -> int:
    pi = _load_distribution(args.distribution)
    cells = []
    for cell_text in args.cell:
        event_text, level_text = _split_cell(cell_text)
        cells.append(
            (_parse_event(pi.universe, event_text), _parse_scale_arg(level_text))
        )
    partition = PartitionInput(cells)
    _print_distribution(revise_partition(pi, partition, Mode(args.mode)), args.decimal)
    return 0


def _cmd_unreliable(args) -> int:
    pi = _load_distribution(args.distribution)
    event = _parse_event(pi.universe, args.event)
    alpha = _parse_scale_arg(args.alpha)
    _print_distribution(revise_unreliable(pi, event, alpha, Mode(args.mode)), args.decimal)
    return 0


def _cmd_natural(args) -> int:
    pi = _load_distribution(args.distribution)
    event = _parse_event(pi.universe, args.event)
    beta = _parse_scale_arg(args.beta) if args.beta is not None else None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        revised = natural_revision(pi, event, beta, Mode(args.mode))
    _relay_warnings(caught)
    _print_distribution(revised, args.decimal)
    return 0


def _cmd_adjust(args) -> int:
    pi = _load_distribution(args.distribution)
    event = _parse_event(pi.universe, args.event)
    alpha = _parse_scale_arg(args.alpha)
    _print_distribution(adjust(pi, event, alpha), args.decimal)
    return 0


def _cmd_kappa_condition(args) -> int:
    kappa = _load_kappa(args.kappa)
    event = _parse_event(kappa.universe, args.event)
    _print_kappa(kappa_condition(kappa, event))
    return 0


def _cmd_kappa_conditionalize(args) -> int:
    kappa = _load_kappa(args.kappa)
    event = _parse_event(kappa.universe, args.event)
    _print_kappa(kappa_conditionalize(kappa, event, args.n))
    return 0


def _cmd_kappa_adjust(args) -> int:
    kappa = _load_kappa(args.kappa)
    event = _parse_event(kappa.universe, args.event)
    _print_kappa(kappa_adjust(kappa, event, args.n))
    return 0


def _parse_rank_text(text: str):
    if text == "inf":
        return float("inf")
    if text.isdigit():
        return int(text)
    raise ParseError(f"bad rank {text!r}: expected a nonnegative integer or 'inf'")


def _cmd_kappa_partition(args) -> int:
    kappa = _load_kappa(args.kappa)
    cells = []
    for cell_text in args.cell:
        event_text, rank_text = _split_cell(cell_text)
        cells.append(
            (_parse_event(kappa.universe, event_text), _parse_rank_text(rank_text))
        )
    ranking = PartitionRanking(cells)
    _print_kappa(kappa_partition_conditionalize(kappa, ranking))
    return 0


def _cmd_kappa_to_pi(args) -> int:
    kappa = _load_kappa(args.kappa)
    _print_distribution(kappa_to_pi(kappa), args.decimal)
    return 0


def _cmd_pi_to_kappa(args) -> int:
    pi = _load_distribution(args.distribution)
    _print_kappa(pi_to_kappa(pi))
    return 0


def _cmd_kappa_minrank(args) -> int:
    base = _load_base(args.base)
    layered = [
        (formula, weight_to_layer(weight)) for formula, weight in base.entries
    ]
    _print_kappa(minimal_ranking(layered, base.vocabulary))
    return 0


def _cmd_revise_base(args) -> int:
    base = _load_base(args.base)
    formula = _parse_formula_arg(args.formula)
    if args.op == "brutal":
        sys.stdout.write(format_base(brutal_revise(base, formula)))
        return 0
    if args.op == "preferred":
        candidates = preferred_subbase_revise(base, formula)
        if args.refine:
            sys.stdout.write(format_base(lex_refine(candidates, base)))
            return 0
        for position, candidate in enumerate(candidates, start=1):
            print(f"# candidate {position} of {len(candidates)}")
            sys.stdout.write(format_base(candidate))
        return 0
    if args.alpha is None:
        raise ParseError("revise-base --op adjust needs --alpha")
    revised = adjust_base(base, formula, _parse_scale_arg(args.alpha))
    sys.stdout.write(format_base(revised))
    return 0


def _cmd_crosscheck(args) -> int:
    text = _read_text(args.input)
    suffix = Path(args.input).suffix
    if suffix == ".base":
        results = checks.check_base(parse_base(text))
    elif suffix in (".pi", ".dist"):
        results = checks.check_distribution(parse_distribution(text))
    else:
        try:
            results = checks.check_base(parse_base(text))
        except ParseError:
            try:
                results = checks.check_distribution(parse_distribution(text))
            except ParseError:
                raise ParseError(
                    f"{args.input}: not readable as a belief base or a distribution"
                ) from None
    sys.stdout.write(checks.format_results(results))
    return 0 if checks.all_passed(results) else 1


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    values = common.add_mutually_exclusive_group()
    values.add_argument(
        "--rational",
        dest="decimal",
        action="store_false",
        help="print exact fractions (default)",
    )
    values.add_argument(
        "--decimal",
        dest="decimal",
        action="store_true",
        help="print 6-digit decimals instead of exact fractions",
    )
    common.set_defaults(decimal=False)

    parser = argparse.ArgumentParser(
        prog="posrev",
        description="Possibilistic belief states: conditioning, revision, "
        "ranked and logical representations.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def add(name, func, help_text, parents=(common,)):
        p = sub.add_parser(name, help=help_text, parents=list(parents))
        p.set_defaults(func=func)
        return p

    p = add("pi", _cmd_pi, "print the distribution induced by a belief base")
    p.add_argument("base", help="path to a .base file")

    p = add("inc", _cmd_inc, "degree of inconsistency of a belief base")
    p.add_argument("base")

    p = add("prove", _cmd_prove, "best proof weight of a formula from a base")
    p.add_argument("base")
    p.add_argument("formula")

    p = add(
        "entail-pref",
        _cmd_entail_pref,
        "does the base entail the formula above its inconsistency level?",
    )
    p.add_argument("base")
    p.add_argument("formula")

    p = add("condition", _cmd_condition, "condition a distribution on an event")
    p.add_argument("--op", choices=["min", "product"], default="min")
    p.add_argument("distribution")
    p.add_argument("event")

    p = add("contract", _cmd_contract, "give up belief in an event")
    p.add_argument("distribution")
    p.add_argument("event")

    p = add(
        "revise-uncertain",
        _cmd_revise_uncertain,
        "revise so the event is accepted exactly at level alpha",
    )
    p.add_argument("--mode", choices=["min", "product"], default="min")
    p.add_argument("--alpha", required=True)
    p.add_argument("distribution")
    p.add_argument("event")

    p = add(
        "revise-partition",
        _cmd_revise_partition,
        "revise onto target levels over a partition of the worlds",
    )
    p.add_argument("--mode", choices=["min", "product"], default="min")
    p.add_argument(
        "--cell",
        action="append",
        required=True,
        metavar="'EVENT : LEVEL'",
        help="one partition cell; repeat for each cell",
    )
    p.add_argument("distribution")

    p = add(
        "unreliable",
        _cmd_unreliable,
        "revise by an observation trusted only to degree alpha",
    )
    p.add_argument("--mode", choices=["min", "product"], default="min")
    p.add_argument("--alpha", required=True)
    p.add_argument("distribution")
    p.add_argument("event")

    p = add(
        "natural",
        _cmd_natural,
        "promote the event's best worlds, demote its complement to beta",
    )
    p.add_argument("--mode", choices=["min", "product"], default="min")
    p.add_argument("--beta", default=None)
    p.add_argument("distribution")
    p.add_argument("event")

    p = add("adjust", _cmd_adjust, "transmute the event's acceptance level to alpha")
    p.add_argument("distribution")
    p.add_argument("event")
    p.add_argument("alpha")

    p = add("kappa-condition", _cmd_kappa_condition, "condition a ranking on an event")
    p.add_argument("kappa")
    p.add_argument("event")

    p = add(
        "kappa-conditionalize",
        _cmd_kappa_conditionalize,
        "shift the event's complement up to rank n",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("kappa")
    p.add_argument("event")

    p = add(
        "kappa-adjust",
        _cmd_kappa_adjust,
        "ordinal transmutation fixing the complement at rank n",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("kappa")
    p.add_argument("event")

    p = add(
        "kappa-partition",
        _cmd_kappa_partition,
        "impose target ranks over a partition of the worlds",
    )
    p.add_argument(
        "--cell",
        action="append",
        required=True,
        metavar="'EVENT : RANK'",
        help="one partition cell; repeat for each cell",
    )
    p.add_argument("kappa")

    p = add("kappa-to-pi", _cmd_kappa_to_pi, "ranking to distribution via 2^-rank")
    p.add_argument("kappa")

    p = add(
        "pi-to-kappa",
        _cmd_pi_to_kappa,
        "distribution to ranking (dyadic degrees only)",
    )
    p.add_argument("distribution")

    p = add(
        "kappa-minrank",
        _cmd_kappa_minrank,
        "least surprising ranking of a base with weights 1 - 2^-k",
    )
    p.add_argument("base")

    p = add("revise-base", _cmd_revise_base, "syntactic revision of a belief base")
    p.add_argument("--op", choices=["brutal", "preferred", "adjust"], required=True)
    p.add_argument("--alpha", default=None, help="target level for --op adjust")
    p.add_argument(
        "--refine",
        action="store_true",
        help="with --op preferred: print only the lexicographically best candidate",
    )
    p.add_argument("base")
    p.add_argument("formula")

    p = add(
        "crosscheck",
        _cmd_crosscheck,
        "run the named consistency identities on a base or distribution",
    )
    p.add_argument("input")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
