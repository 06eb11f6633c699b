"""posrev: exact-arithmetic possibilistic belief revision.

Graded belief states as possibility distributions over finite worlds, the
two conditioning rules (ordinal min, numerical product), revision by
uncertain inputs, integer implausibility rankings with a dyadic bridge, a
weighted-clause resolution prover for stratified belief bases, syntactic
base revision, and a small probabilistic mirror for comparison. All degrees
are `fractions.Fraction`; every equality in the package is exact.
"""

from .baserev import (
    adjust_base,
    brutal_revise,
    expand,
    lex_refine,
    preferred_subbase_revise,
)
from .clauses import MAX_CLAUSES, WeightedClause, resolve, to_weighted_clauses
from .conditioning import (
    Mode,
    condition,
    condition_min,
    condition_product,
    contract,
    minimal_change_revisions,
)
from .distribution import PossibilityDistribution
from .errors import (
    CoherenceError,
    DomainError,
    EngineError,
    ExpansionRefusedError,
    GuardError,
    InconsistentBaseError,
    NotDyadicError,
    ParseError,
    PartitionError,
    SubnormalizedError,
    UndefinedConditioningError,
    UniverseMismatchError,
)
from .fileio import (
    format_distribution,
    format_kappa,
    format_probability,
    parse_distribution,
    parse_kappa,
    parse_probability,
)
from .formulas import (
    And,
    Atom,
    atoms,
    Formula,
    Implies,
    Not,
    Or,
    canonical,
    evaluate,
    format_formula,
    is_satisfiable,
    is_tautology,
    parse_formula,
)
from .poslog import (
    BeliefBase,
    check_ee_coherence,
    consistent_part_distribution,
    entails_pref,
    format_base,
    induced_distribution,
    inconsistency_degree,
    parse_base,
    prove,
    restore_ee_coherence,
    semantic_entails,
)
from .probability import (
    ProbabilityDistribution,
    jeffrey,
    jeffrey_partition,
    unreliable_update,
)
from .ranking import (
    INF,
    KappaFunction,
    PartitionRanking,
    kappa_adjust,
    kappa_condition,
    kappa_conditionalize,
    kappa_partition_conditionalize,
    kappa_to_pi,
    layer_to_weight,
    minimal_ranking,
    pi_to_kappa,
    weight_to_layer,
)
from .revision import (
    OrderingProvisoWarning,
    PartitionInput,
    UncertainInput,
    adjust,
    apply_input,
    default_natural_beta,
    natural_revision,
    revise_partition,
    revise_uncertain,
    revise_unreliable,
)
from .scale import ONE, ZERO, as_scale, format_scale, parse_scale
from .worlds import Event, Universe, World

__version__ = "0.1.0"

__all__ = [
    "And",
    "Atom",
    "BeliefBase",
    "CoherenceError",
    "DomainError",
    "EngineError",
    "Event",
    "ExpansionRefusedError",
    "Formula",
    "GuardError",
    "INF",
    "Implies",
    "InconsistentBaseError",
    "KappaFunction",
    "MAX_CLAUSES",
    "Mode",
    "Not",
    "NotDyadicError",
    "ONE",
    "Or",
    "OrderingProvisoWarning",
    "ParseError",
    "PartitionError",
    "PartitionInput",
    "PartitionRanking",
    "PossibilityDistribution",
    "ProbabilityDistribution",
    "SubnormalizedError",
    "UncertainInput",
    "UndefinedConditioningError",
    "Universe",
    "UniverseMismatchError",
    "WeightedClause",
    "World",
    "ZERO",
    "adjust",
    "adjust_base",
    "apply_input",
    "as_scale",
    "atoms",
    "brutal_revise",
    "canonical",
    "check_ee_coherence",
    "condition",
    "condition_min",
    "condition_product",
    "consistent_part_distribution",
    "contract",
    "default_natural_beta",
    "entails_pref",
    "evaluate",
    "expand",
    "format_base",
    "format_distribution",
    "format_formula",
    "format_kappa",
    "format_probability",
    "format_scale",
    "inconsistency_degree",
    "induced_distribution",
    "is_satisfiable",
    "is_tautology",
    "jeffrey",
    "jeffrey_partition",
    "kappa_adjust",
    "kappa_condition",
    "kappa_conditionalize",
    "kappa_partition_conditionalize",
    "kappa_to_pi",
    "layer_to_weight",
    "lex_refine",
    "minimal_change_revisions",
    "minimal_ranking",
    "natural_revision",
    "parse_base",
    "parse_distribution",
    "parse_formula",
    "parse_kappa",
    "parse_probability",
    "parse_scale",
    "pi_to_kappa",
    "preferred_subbase_revise",
    "prove",
    "resolve",
    "restore_ee_coherence",
    "revise_partition",
    "revise_uncertain",
    "revise_unreliable",
    "semantic_entails",
    "to_weighted_clauses",
    "unreliable_update",
    "weight_to_layer",
]
