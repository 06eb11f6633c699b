"""Command-line plumbing: verbs, exit codes, and the round-trip contract.

Expected values for the heavier verbs come from the library itself — the
operators have their own test files; here the subject is argument
handling, file loading, and faithful printing.
"""

from fractions import Fraction

import pytest

from posrev import (
    KappaFunction,
    Mode,
    PartitionRanking,
    adjust_base,
    brutal_revise,
    format_base,
    format_distribution,
    format_kappa,
    induced_distribution,
    kappa_adjust,
    kappa_condition,
    kappa_conditionalize,
    kappa_partition_conditionalize,
    lex_refine,
    minimal_ranking,
    parse_base,
    parse_distribution,
    parse_formula,
    parse_kappa,
    preferred_subbase_revise,
    revise_uncertain,
    weight_to_layer,
)
import posrev.cli as cli
from posrev.cli import main
from posrev.crosscheck import CheckResult

from support import U4

PI0_TEXT = "w1 : 1\nw2 : 1/2\nw3 : 1/4\nw4 : 0\n"
PQ_TEXT = "atoms: p q\n11 : 1\n10 : 1/2\n01 : 1/4\n00 : 0\n"
KAPPA_TEXT = "w1 : 0\nw2 : 1\nw3 : 2\nw4 : inf\n"
WORKED_BASE = "atoms: p q\np : 7/10\n!p | q : 3/5\n!q : 2/5\n"
EXAMPLE42 = "atoms: p q\n!p : 3/4\nq : 1/4\np : 1\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# base queries


def test_inc_prints_the_clash_level(write, capsys):
    path = write("example42.base", EXAMPLE42)
    code, out, _ = run(capsys, "inc", path)
    assert (code, out) == (0, "3/4\n")


def test_inc_decimal_rendering(write, capsys):
    code, out, _ = run(capsys, "inc", write("b.base", EXAMPLE42), "--decimal")
    assert (code, out) == (0, "0.750000\n")


def test_pi_prints_the_induced_distribution(write, capsys):
    code, out, _ = run(capsys, "pi", write("b.base", WORKED_BASE))
    assert code == 0
    assert out == format_distribution(induced_distribution(parse_base(WORKED_BASE)))
    assert parse_distribution(out).values == (
        Fraction(3, 5),
        Fraction(2, 5),
        Fraction(3, 10),
        Fraction(3, 10),
    )


def test_prove_answers_with_the_weight(write, capsys):
    path = write("b.base", WORKED_BASE)
    assert run(capsys, "prove", path, "q") == (0, "3/5\n", "")
    # weight 0 means "not proved": the code says no even though output prints
    code, out, _ = run(capsys, "prove", write("c.base", "atoms: p\np : 1/2\n"), "!p")
    assert (code, out) == (1, "0\n")


def test_entail_pref_answers_true_false(write, capsys):
    path = write("b.base", WORKED_BASE)
    assert run(capsys, "entail-pref", path, "q")[:2] == (0, "true\n")
    assert run(capsys, "entail-pref", path, "!q")[:2] == (1, "false\n")


def test_entail_pref_on_a_fully_contradictory_base_is_a_domain_error(write, capsys):
    path = write("b.base", "atoms: p\np : 1\n!p : 1\n")
    code, _, err = run(capsys, "entail-pref", path, "p")
    assert code == 3 and "error:" in err


# ---------------------------------------------------------------------------
# distribution verbs


def test_condition_worked_example(write, capsys):
    code, out, _ = run(
        capsys, "condition", "--op", "min", write("dist.pi", PI0_TEXT), "w2 w3"
    )
    assert code == 0
    assert out == "w1 : 0\nw2 : 1\nw3 : 1/4\nw4 : 0\n"


def test_condition_accepts_formula_events_on_atom_universes(write, capsys):
    path = write("d.pi", PQ_TEXT)
    by_formula = run(capsys, "condition", path, "p")
    by_labels = run(capsys, "condition", path, "11 10")
    assert by_formula == by_labels and by_formula[0] == 0


def test_condition_on_an_impossible_event_is_a_domain_error(write, capsys):
    code, _, err = run(capsys, "condition", write("d.pi", PI0_TEXT), "w4")
    assert code == 3 and "error:" in err


def test_worlds_keep_file_order(write, capsys):
    scrambled = "w3 : 1/4\nw1 : 1\nw2 : 1/2\n"
    code, out, _ = run(capsys, "condition", write("d.pi", scrambled), "w1")
    assert code == 0
    assert out.splitlines()[0].startswith("w3")


def test_contract(write, capsys):
    code, out, _ = run(capsys, "contract", write("d.pi", PI0_TEXT), "w1")
    assert code == 0
    assert parse_distribution(out).values == (1, 1, Fraction(1, 4), 0)


def test_revise_uncertain_output_reparses_to_the_library_answer(write, capsys):
    path = write("d.pi", PI0_TEXT)
    code, out, _ = run(
        capsys, "revise-uncertain", "--alpha", "3/5", path, "w2 w3"
    )
    assert code == 0
    pi = parse_distribution(PI0_TEXT)
    expected = revise_uncertain(pi, U4.event(("w2", "w3")), Fraction(3, 5), Mode.MIN)
    back = parse_distribution(out)
    assert back.values == expected.values
    assert back.universe.labels == U4.labels


def test_revise_uncertain_alpha_outside_the_scale_is_a_parse_error(write, capsys):
    code, _, err = run(
        capsys, "revise-uncertain", "--alpha", "3/2", write("d.pi", PI0_TEXT), "w1"
    )
    assert code == 2 and "error:" in err


def test_revise_partition_with_formula_cells(write, capsys):
    path = write("d.pi", PQ_TEXT)
    code, out, _ = run(
        capsys,
        "revise-partition",
        "--cell",
        "p : 1",
        "--cell",
        "!p : 1/2",
        path,
    )
    assert code == 0
    assert parse_distribution(out).values == (
        1,
        Fraction(1, 2),
        Fraction(1, 2),
        0,
    )


def test_revise_partition_malformed_cell_is_a_parse_error(write, capsys):
    code, _, err = run(
        capsys, "revise-partition", "--cell", "p 1", write("d.pi", PQ_TEXT)
    )
    assert code == 2 and "must look like" in err


def test_unreliable(write, capsys):
    code, out, _ = run(
        capsys, "unreliable", "--alpha", "1/2", write("d.pi", PI0_TEXT), "w2 w3"
    )
    assert code == 0
    assert parse_distribution(out).values == (
        Fraction(1, 2),
        1,
        Fraction(1, 4),
        0,
    )


def test_natural_relays_the_tie_warning(write, capsys):
    text = "w1 : 1\nw2 : 1/2\nw3 : 1/4\nw4 : 1/2\n"
    code, out, err = run(
        capsys, "natural", "--beta", "1/2", write("d.pi", text), "w2 w3"
    )
    assert code == 0
    assert "warning:" in err
    assert parse_distribution(out).values == (
        Fraction(1, 2),
        1,
        Fraction(1, 4),
        Fraction(1, 2),
    )


def test_natural_default_beta(write, capsys):
    code, out, err = run(capsys, "natural", write("d.pi", PI0_TEXT), "w2 w3")
    assert code == 0 and err == ""
    assert parse_distribution(out).values == (
        Fraction(3, 4),
        1,
        Fraction(1, 4),
        0,
    )


def test_adjust_takes_a_positional_level(write, capsys):
    code, out, _ = run(capsys, "adjust", write("d.pi", PI0_TEXT), "w2 w3", "1/2")
    assert code == 0
    assert parse_distribution(out).values == (Fraction(1, 2), 1, Fraction(1, 4), 0)


# ---------------------------------------------------------------------------
# ranking verbs


def test_kappa_verbs_mirror_the_library(write, capsys):
    path = write("r.kappa", KAPPA_TEXT)
    kappa = parse_kappa(KAPPA_TEXT)
    event = U4.event(("w2", "w3"))

    code, out, _ = run(capsys, "kappa-condition", path, "w2 w3")
    assert (code, out) == (0, format_kappa(kappa_condition(kappa, event)))

    code, out, _ = run(capsys, "kappa-conditionalize", "--n", "1", path, "w2 w3")
    assert (code, out) == (0, format_kappa(kappa_conditionalize(kappa, event, 1)))

    code, out, _ = run(capsys, "kappa-adjust", "--n", "1", path, "w2 w3")
    assert (code, out) == (0, format_kappa(kappa_adjust(kappa, event, 1)))

    code, out, _ = run(
        capsys, "kappa-partition", "--cell", "w2 w3 : 0", "--cell", "w1 w4 : 2", path
    )
    ranking = PartitionRanking(((event, 0), (U4.event(("w1", "w4")), 2)))
    assert (code, out) == (
        0,
        format_kappa(kappa_partition_conditionalize(kappa, ranking)),
    )


def test_kappa_pi_round_trip_through_the_cli(write, capsys):
    kappa_path = write("r.kappa", KAPPA_TEXT)
    code, pi_text, _ = run(capsys, "kappa-to-pi", kappa_path)
    assert code == 0
    assert parse_distribution(pi_text).values == (1, Fraction(1, 2), Fraction(1, 4), 0)
    code, back, _ = run(capsys, "pi-to-kappa", write("d.pi", pi_text))
    assert (code, back) == (0, KAPPA_TEXT)


def test_pi_to_kappa_rejects_non_dyadic_degrees(write, capsys):
    code, _, err = run(
        capsys, "pi-to-kappa", write("d.pi", "w1 : 1\nw2 : 1/3\n")
    )
    assert code == 3 and "error:" in err


def test_kappa_minrank(write, capsys):
    text = "atoms: p q\np : 1/2\nq : 3/4\n"
    code, out, _ = run(capsys, "kappa-minrank", write("b.base", text))
    assert code == 0
    base = parse_base(text)
    layered = [(f, weight_to_layer(w)) for f, w in base.entries]
    assert out == format_kappa(minimal_ranking(layered, base.vocabulary))


def test_kappa_minrank_needs_dyadic_weights(write, capsys):
    code, _, err = run(
        capsys, "kappa-minrank", write("b.base", "atoms: p\np : 1/3\n")
    )
    assert code == 3 and "error:" in err


# ---------------------------------------------------------------------------
# base revision verbs


def test_revise_base_brutal(write, capsys):
    path = write("b.base", "atoms: p q\n!p : 3/4\nq : 1/4\n")
    code, out, _ = run(capsys, "revise-base", "--op", "brutal", path, "p")
    base = parse_base("atoms: p q\n!p : 3/4\nq : 1/4\n")
    assert (code, out) == (0, format_base(brutal_revise(base, parse_formula("p"))))


def test_revise_base_preferred_lists_candidates(write, capsys):
    text = "atoms: p q\n!p : 1/2\n!p | !q : 1/2\nq : 1/2\n"
    path = write("b.base", text)
    code, out, _ = run(capsys, "revise-base", "--op", "preferred", path, "p")
    assert code == 0
    assert "# candidate 1 of 2" in out and "# candidate 2 of 2" in out
    candidates = preferred_subbase_revise(parse_base(text), parse_formula("p"))
    for candidate in candidates:
        assert format_base(candidate) in out


def test_revise_base_preferred_refine_prints_one(write, capsys):
    text = "atoms: p q\n!p : 1/2\n!p | !q : 1/2\nq : 1/2\n"
    path = write("b.base", text)
    code, out, _ = run(
        capsys, "revise-base", "--op", "preferred", "--refine", path, "p"
    )
    base = parse_base(text)
    best = lex_refine(preferred_subbase_revise(base, parse_formula("p")), base)
    assert (code, out) == (0, format_base(best))
    assert "# candidate" not in out


def test_revise_base_adjust_round_trips(write, capsys):
    text = "atoms: p q\n!p : 3/4\nq : 1/4\n"
    path = write("b.base", text)
    code, out, _ = run(
        capsys, "revise-base", "--op", "adjust", "--alpha", "1/2", path, "p"
    )
    assert code == 0
    expected = adjust_base(parse_base(text), parse_formula("p"), Fraction(1, 2))
    assert parse_base(out) == expected


def test_revise_base_adjust_needs_alpha(write, capsys):
    path = write("b.base", "atoms: p q\n!p : 3/4\nq : 1/4\n")
    code, _, err = run(capsys, "revise-base", "--op", "adjust", path, "p")
    assert code == 2 and "--alpha" in err


# ---------------------------------------------------------------------------
# error plumbing


def test_unreadable_file_exits_2(capsys):
    code, _, err = run(capsys, "prove", "missing.base", "q")
    assert code == 2 and "error:" in err


def test_unknown_labels_without_vocabulary_exit_2(write, capsys):
    code, _, err = run(capsys, "condition", write("d.pi", PI0_TEXT), "w9")
    assert code == 2 and "w9" in err


def test_guard_trip_exits_4(write, capsys):
    names = " ".join(f"a{i}" for i in range(17))
    code, _, err = run(capsys, "condition", write("d.pi", f"atoms: {names}\n"), "a0")
    assert code == 4 and "error:" in err


# ---------------------------------------------------------------------------
# crosscheck


def test_crosscheck_base_reports_every_identity_by_name(write, capsys):
    code, out, _ = run(capsys, "crosscheck", write("b.base", WORKED_BASE))
    assert code == 0
    for name in (
        "proof-soundness-completeness",
        "brutal-conditioning-equivalence",
        "chain-rule-min",
        "chain-rule-product",
        "adjustment-equivalence",
        "ranking-bridge",
    ):
        assert f"PASS {name}" in out
    assert "FAIL" not in out


def test_crosscheck_distribution(write, capsys):
    code, out, _ = run(capsys, "crosscheck", write("d.pi", PI0_TEXT))
    assert code == 0
    assert "PASS chain-rule-min" in out and "PASS ranking-bridge" in out


def test_crosscheck_subnormalized_distribution_is_a_domain_error(write, capsys):
    code, _, err = run(capsys, "crosscheck", write("d.pi", "w1 : 1/2\nw2 : 1/4\n"))
    assert code == 3 and "error:" in err


def test_crosscheck_gibberish_exits_2(write, capsys):
    code, _, err = run(capsys, "crosscheck", write("x.txt", "not a thing\n"))
    assert code == 2 and "not readable" in err


def test_crosscheck_failure_exits_1(write, capsys, monkeypatch):
    monkeypatch.setattr(
        cli.checks,
        "check_base",
        lambda base: [CheckResult("fabricated-identity", False, 3, "1 != 2")],
    )
    code, out, _ = run(capsys, "crosscheck", write("b.base", WORKED_BASE))
    assert code == 1
    assert "FAIL fabricated-identity [3 cases]  (1 != 2)" in out
