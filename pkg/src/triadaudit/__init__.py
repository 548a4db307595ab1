"""Inconsistency indices for pairwise-comparison triads plus a seeded
axiom-falsification engine that audits, compares and ranks them."""

from .analysis import (
    CharacterizationVerdict,
    ConcordanceStats,
    ImplicationRule,
    ImplicationVerdict,
    IndependenceTable,
    IMPLICATION_RULES,
    audit_implications,
    characterization_check,
    implication_audit,
    independence_table,
    ranking_concordance,
)
from .axioms import (
    AuditConfig,
    AuditReport,
    AxiomVerdict,
    UnknownAxiomError,
    Witness,
    audit,
    check_axiom,
    probe_rng,
    replay_witness,
    sample_consistent_triad,
    sample_triad,
)
from .core import (
    CanonicalForm,
    DomainError,
    ReciprocalMatrix,
    ReductionStep,
    Triad,
    apply_permutation,
    canonicalize,
    consistency_ratio,
    is_consistent,
    make_triad,
    permute_triad,
    power_transform,
    replay_reduction,
    scale_transform,
    single_entry_perturb,
    transpose_triad,
    triad_from_weights,
)
from .eigen import dominant_eigenvalue, saaty_ci_oracle
from .indices import (
    AXIOMS,
    CATALOG,
    INDEX_IDS,
    IndexDescriptor,
    UnknownIndexError,
    eval_catalog,
    get_index,
    koczkodaj_index,
    natural_index,
    saaty_ci,
    scale_dependent_index,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # core
    "Triad",
    "ReciprocalMatrix",
    "CanonicalForm",
    "ReductionStep",
    "DomainError",
    "make_triad",
    "triad_from_weights",
    "consistency_ratio",
    "is_consistent",
    "canonicalize",
    "replay_reduction",
    "apply_permutation",
    "permute_triad",
    "transpose_triad",
    "power_transform",
    "single_entry_perturb",
    "scale_transform",
    # indices
    "AXIOMS",
    "CATALOG",
    "INDEX_IDS",
    "IndexDescriptor",
    "UnknownIndexError",
    "get_index",
    "eval_catalog",
    "natural_index",
    "scale_dependent_index",
    "koczkodaj_index",
    "saaty_ci",
    # eigen oracle
    "dominant_eigenvalue",
    "saaty_ci_oracle",
    # axiom engine
    "AuditConfig",
    "AuditReport",
    "AxiomVerdict",
    "Witness",
    "UnknownAxiomError",
    "probe_rng",
    "sample_triad",
    "sample_consistent_triad",
    "check_axiom",
    "audit",
    "replay_witness",
    # analysis
    "IMPLICATION_RULES",
    "ImplicationRule",
    "ImplicationVerdict",
    "IndependenceTable",
    "ConcordanceStats",
    "CharacterizationVerdict",
    "independence_table",
    "implication_audit",
    "audit_implications",
    "ranking_concordance",
    "characterization_check",
]
