"""Revision by uncertain, partitioned, unreliable, and gentle inputs."""

import random
import warnings
from fractions import Fraction

import pytest

from posrev import (
    DomainError,
    Mode,
    OrderingProvisoWarning,
    PartitionError,
    PartitionInput,
    SubnormalizedError,
    UncertainInput,
    UndefinedConditioningError,
    UniverseMismatchError,
    Universe,
    adjust,
    apply_input,
    condition,
    condition_min,
    contract,
    default_natural_beta,
    natural_revision,
    revise_partition,
    revise_uncertain,
    revise_unreliable,
)

from support import EVENTS4, GRID, PI0, POSITIVE_GRID, U4, dist, grid_distributions


def ev(*labels):
    return U4.event(labels)


def both_sides_possible(pi, event):
    return pi.possibility(event) > 0 and pi.possibility(~event) > 0


# ---------------------------------------------------------------------------
# revision by a graded constraint


def test_revise_uncertain_min_example():
    out = revise_uncertain(PI0, ev("w2", "w3"), "3/5")
    assert out.values == dist("2/5", 1, "1/4", 0).values


def test_revise_uncertain_product_example():
    out = revise_uncertain(PI0, ev("w2", "w3"), "1/2", Mode.PRODUCT)
    assert out.values == dist("1/2", 1, "1/2", 0).values


def test_revise_uncertain_alpha_zero_keeps_both_sides_open():
    out = revise_uncertain(PI0, ev("w2", "w3"), 0)
    assert out.values == dist(1, 1, "1/4", 0).values
    assert out.necessity(ev("w2", "w3")) == 0
    assert out.possibility(ev("w2", "w3")) == 1


def test_revise_uncertain_full_confidence_is_conditioning():
    for mode in (Mode.MIN, Mode.PRODUCT):
        for event in (ev("w2", "w3"), ev("w2"), ev("w1", "w3")):
            assert (
                revise_uncertain(PI0, event, 1, mode).values
                == condition(PI0, event, mode).values
            )


def test_revise_uncertain_needs_both_sides_even_at_full_confidence():
    with pytest.raises(UndefinedConditioningError):
        revise_uncertain(PI0, ev("w4"), "1/2")
    with pytest.raises(UndefinedConditioningError):
        revise_uncertain(PI0, U4.everything, 1)
    with pytest.raises(UndefinedConditioningError):
        revise_uncertain(dist(1, "1/4", 0, 0), ev("w1", "w2"), 1)


def test_revise_uncertain_rejects_floats():
    with pytest.raises(TypeError):
        revise_uncertain(PI0, ev("w2", "w3"), 0.5)


def test_revise_uncertain_reaches_the_target_confidence():
    for pi in grid_distributions():
        for event in EVENTS4:
            if not both_sides_possible(pi, event):
                continue
            for alpha in GRID:
                for mode in (Mode.MIN, Mode.PRODUCT):
                    out = revise_uncertain(pi, event, alpha, mode)
                    assert out.possibility(event) == 1
                    assert out.necessity(event) == alpha


# ---------------------------------------------------------------------------
# partition-valued inputs


def test_revise_partition_can_leave_the_prior_alone():
    cells = ((ev("w1", "w4"), 1), (ev("w2", "w3"), "1/2"))
    assert revise_partition(PI0, cells).values == PI0.values


def test_revise_partition_reorders_cells():
    cells = ((ev("w1", "w4"), "1/2"), (ev("w2", "w3"), 1))
    assert revise_partition(PI0, cells).values == dist("1/2", 1, "1/4", 0).values


def test_revise_partition_single_cell_identity():
    assert revise_partition(PI0, ((U4.everything, 1),)).values == PI0.values


def test_revise_partition_wipes_zero_cells():
    cells = ((ev("w1", "w2"), 1), (ev("w3", "w4"), 0))
    assert revise_partition(PI0, cells).values == dist(1, "1/2", 0, 0).values
    # a level-0 cell may be impossible to begin with
    cells = ((ev("w1", "w2", "w3"), 1), (ev("w4"), 0))
    assert revise_partition(PI0, cells).values == PI0.values


def test_revise_partition_rejects_positive_level_on_impossible_cell():
    cells = ((ev("w1", "w2", "w3"), 1), (ev("w4"), "1/2"))
    with pytest.raises(UndefinedConditioningError):
        revise_partition(PI0, cells)


def test_partition_input_validation():
    with pytest.raises(PartitionError):
        PartitionInput(())
    with pytest.raises(PartitionError):  # overlap
        PartitionInput(((ev("w1", "w2"), 1), (ev("w2", "w3", "w4"), "1/2")))
    with pytest.raises(PartitionError):  # gap
        PartitionInput(((ev("w1"), 1), (ev("w2"), "1/2")))
    with pytest.raises(PartitionError):  # nothing fully possible
        PartitionInput(((ev("w1", "w2"), "1/2"), (ev("w3", "w4"), "1/2")))
    other = Universe.from_labels(["a", "b"])
    with pytest.raises(PartitionError):
        PartitionInput(((ev("w1", "w2"), 1), (other.event(["a", "b"]), "1/2")))


def test_revise_partition_checks_the_universe():
    other = Universe.from_labels(["a", "b", "c", "d"])
    pi = dist(1, "1/2", "1/4", 0)
    cells = PartitionInput(
        ((other.event(["a", "b"]), 1), (other.event(["c", "d"]), "1/2"))
    )
    with pytest.raises(UniverseMismatchError):
        revise_partition(pi, cells)


def test_two_cell_partition_matches_graded_constraint():
    rng = random.Random(23)
    pool = list(grid_distributions())
    for pi in rng.sample(pool, 40):
        for event in EVENTS4:
            if not both_sides_possible(pi, event):
                continue
            for alpha in GRID:
                cells = ((event, 1), (~event, 1 - Fraction(alpha)))
                for mode in (Mode.MIN, Mode.PRODUCT):
                    assert (
                        revise_partition(pi, cells, mode).values
                        == revise_uncertain(pi, event, alpha, mode).values
                    )


# ---------------------------------------------------------------------------
# unreliable reports


def test_revise_unreliable_example():
    out = revise_unreliable(PI0, ev("w3"), "1/2")
    assert out.values == dist("1/2", "1/2", 1, 0).values


def test_revise_unreliable_already_confident_enough():
    pi = dist(1, "1/5", 0, 0)
    out = revise_unreliable(pi, ev("w1", "w2"), "3/5")
    assert out.values == pi.values


def test_revise_unreliable_zero_trust_is_vacuous():
    assert revise_unreliable(PI0, ev("w3"), 0) is PI0
    with pytest.raises(UndefinedConditioningError):
        revise_unreliable(PI0, ev("w4"), 0)


def test_revise_unreliable_full_trust_is_conditioning():
    for mode in (Mode.MIN, Mode.PRODUCT):
        for event in (ev("w2", "w3"), ev("w3"), ev("w1")):
            assert (
                revise_unreliable(PI0, event, 1, mode).values
                == condition(PI0, event, mode).values
            )


def test_unreliable_report_never_wipes_the_complement():
    # a trusted constraint forces the confidence down to alpha; a merely
    # trusted *report* keeps any stronger prior confidence
    out_report = revise_unreliable(PI0, ev("w1", "w2"), "1/2")
    out_constraint = revise_uncertain(PI0, ev("w1", "w2"), "1/2")
    assert out_report.values == PI0.values
    assert out_constraint.values == dist(1, "1/2", "1/2", 0).values
    assert out_report.necessity(ev("w1", "w2")) == Fraction(3, 4)
    assert out_constraint.necessity(ev("w1", "w2")) == Fraction(1, 2)


def test_unreliable_report_defined_where_constraint_is_not():
    pi = dist(1, "1/4", 0, 0)
    event = ev("w1", "w2")
    assert revise_unreliable(pi, event, "1/2").values == pi.values
    with pytest.raises(UndefinedConditioningError):
        revise_uncertain(pi, event, "1/2")


def test_unreliable_confidence_is_max_of_trust_and_prior():
    for pi in grid_distributions():
        for event in EVENTS4:
            if pi.possibility(event) == 0:
                continue
            for alpha in GRID:
                out = revise_unreliable(pi, event, alpha)
                assert out.necessity(event) == max(
                    Fraction(alpha), pi.necessity(event)
                )
                prior_floor = 1 - Fraction(alpha)
                assert all(
                    v >= min(prior_floor, p) for v, p in zip(out.values, pi.values)
                )


def test_unreliable_product_confidence_scales_residual_doubt():
    for pi in grid_distributions():
        for event in EVENTS4:
            if pi.possibility(event) == 0:
                continue
            for alpha in POSITIVE_GRID:
                out = revise_unreliable(pi, event, alpha, Mode.PRODUCT)
                doubt = (1 - Fraction(alpha)) * pi.possibility(~event)
                assert out.possibility(~event) == doubt


# ---------------------------------------------------------------------------
# input records


def test_apply_input_dispatches_on_semantics():
    constraint = UncertainInput(ev("w2", "w3"), Fraction(3, 5))
    report = UncertainInput(ev("w3"), "1/2", semantics="unreliable")
    assert (
        apply_input(PI0, constraint).values
        == revise_uncertain(PI0, ev("w2", "w3"), "3/5").values
    )
    assert (
        apply_input(PI0, report).values
        == revise_unreliable(PI0, ev("w3"), "1/2").values
    )


def test_uncertain_input_validation():
    with pytest.raises(ValueError):
        UncertainInput(ev("w1"), "1/2", semantics="gossip")
    with pytest.raises(TypeError):
        UncertainInput(ev("w1"), 0.5)
    with pytest.raises(ValueError):
        UncertainInput(ev("w1"), "3/2")


# ---------------------------------------------------------------------------
# gentle (order-keeping) revision


def test_natural_revision_example():
    out = natural_revision(PI0, ev("w2", "w3"), "1/2")
    assert out.values == dist("1/2", 1, "1/4", 0).values


def test_natural_revision_product_mode():
    out = natural_revision(PI0, ev("w2", "w3"), "1/2", Mode.PRODUCT)
    assert out.values == dist("1/2", 1, "1/2", 0).values


def test_natural_revision_matches_constraint_at_complementary_level():
    for beta in POSITIVE_GRID[:-1]:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", OrderingProvisoWarning)
            gentle = natural_revision(PI0, ev("w2", "w3"), beta)
        constrained = revise_uncertain(PI0, ev("w2", "w3"), 1 - Fraction(beta))
        assert gentle.values == constrained.values


def test_natural_revision_beta_must_be_interior():
    for beta in (0, 1):
        with pytest.raises(DomainError):
            natural_revision(PI0, ev("w2", "w3"), beta)
    with pytest.raises(ValueError):
        natural_revision(PI0, ev("w2", "w3"), "3/2")


def test_natural_revision_needs_both_sides():
    with pytest.raises(UndefinedConditioningError):
        natural_revision(PI0, ev("w4"), "1/2")
    with pytest.raises(UndefinedConditioningError):
        natural_revision(PI0, U4.everything, "1/2")


def test_natural_revision_warns_on_level_collision():
    pi = dist(1, "1/2", "1/4", "1/2")
    with pytest.warns(OrderingProvisoWarning):
        out = natural_revision(pi, ev("w2", "w3"), "1/2")
    assert out.values == dist("1/2", 1, "1/4", "1/2").values


def test_natural_revision_warns_when_event_already_fully_possible():
    with pytest.warns(OrderingProvisoWarning):
        out = natural_revision(PI0, ev("w1"), "1/2")
    assert out.values == PI0.values


def test_default_beta_sits_between_the_top_two_levels():
    assert default_natural_beta(PI0) == Fraction(3, 4)
    assert default_natural_beta(dist(1, 1, 1, 1)) == Fraction(1, 2)
    assert default_natural_beta(dist(1, "9/10", 0, 0)) == Fraction(19, 20)


def test_natural_revision_default_beta_keeps_the_ordering():
    rng = random.Random(29)
    pool = list(grid_distributions())
    for pi in rng.sample(pool, 60):
        for event in EVENTS4:
            if not both_sides_possible(pi, event):
                continue
            if pi.possibility(event) == 1:
                continue
            with warnings.catch_warnings():
                warnings.simplefilter("error", OrderingProvisoWarning)
                out = natural_revision(pi, event)
            beta = default_natural_beta(pi)
            top_in = pi.possibility(event)
            top_out = pi.possibility(~event)
            for label, before, after in zip(U4.labels, pi.values, out.values):
                if label in event.members:
                    assert after == (1 if before == top_in else before)
                else:
                    assert after == (beta if before == top_out else before)


# ---------------------------------------------------------------------------
# piecewise adjustment


def test_adjust_example():
    out = adjust(dist("1/4", 1, "1/2", 0), ev("w2", "w3"), "1/2")
    assert out.values == dist("1/2", 1, "1/2", 0).values


def test_adjust_zero_is_contraction():
    assert adjust(PI0, ev("w2", "w3"), 0).values == contract(PI0, ev("w2", "w3")).values
    assert adjust(PI0, ev("w2", "w3"), 0).values == PI0.values
    assert adjust(PI0, ev("w1"), 0).values == dist(1, 1, "1/4", 0).values


def test_adjust_zero_differs_from_zero_constraint():
    event = ev("w2", "w3")
    assert adjust(PI0, event, 0).values == PI0.values
    assert revise_uncertain(PI0, event, 0).values == dist(1, 1, "1/4", 0).values


def test_adjust_direct_raise():
    # target above the current confidence: no contraction step needed
    out = adjust(PI0, ev("w1"), "3/4")
    assert out.values == dist(1, "1/4", "1/4", 0).values


def test_adjust_down_through_contraction():
    pi = dist(1, "1/4", 0, 0)
    out = adjust(pi, ev("w1", "w2"), "1/2")
    assert out.values == dist(1, "1/4", "1/2", "1/2").values
    assert out.necessity(ev("w1", "w2")) == Fraction(1, 2)


def test_adjust_requires_normalization():
    with pytest.raises(DomainError):
        adjust(dist("1/2", "1/4", 0, 0), ev("w1"), "1/2")
    with pytest.raises(SubnormalizedError):
        adjust(dist("1/2", "1/4", 0, 0), ev("w1"), 0)


def test_adjust_matches_graded_constraint_for_positive_targets():
    rng = random.Random(31)
    pool = list(grid_distributions())
    for pi in rng.sample(pool, 80):
        for event in EVENTS4:
            if not both_sides_possible(pi, event):
                continue
            for alpha in POSITIVE_GRID:
                assert (
                    adjust(pi, event, alpha).values
                    == revise_uncertain(pi, event, alpha).values
                )


def test_adjust_reaches_the_target_even_without_possible_complement():
    for pi in grid_distributions():
        for event in EVENTS4:
            if event.is_empty or len(event) == len(U4):
                continue
            if pi.possibility(event) == 0:
                continue
            for alpha in POSITIVE_GRID:
                out = adjust(pi, event, alpha)
                assert out.possibility(event) == 1
                assert out.necessity(event) == alpha


def test_adjust_cannot_doubt_the_whole_universe():
    # full confidence in the tautology is a fixpoint; anything lower is
    # unreachable, one way or another
    assert adjust(PI0, U4.everything, 1).values == PI0.values
    with pytest.raises(DomainError):
        adjust(PI0, U4.everything, "1/2")
    with pytest.raises(DomainError):
        adjust(PI0, U4.everything, 0)
