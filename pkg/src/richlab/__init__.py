"""Palindrome-rich words: constructions, symmetry groups, and audits.

The package builds lazy infinite words (digit-sum fixed points, mechanical
words, morphic fixed points), pushes them through the sliding-sum operator,
and measures palindromic richness with respect to groups of symmetries of
the alphabet.  Everything an experiment reports is recomputed from scratch
on a finite prefix; nothing is tabulated ahead of time.
"""

from ._version import __version__
from .analysis import (
    FactorIndex,
    WelldocResult,
    build_index,
    welldoc2_check,
    welldoc_residues,
)
from .eertree import (
    PalTree,
    naive_pal_complexity,
    naive_pal_factors,
    pal_complexity,
    pal_factors,
    pal_total,
)
from .experiments import EXPERIMENTS, Experiment, experiment_names, run_experiment
from .exprs import parse_group, parse_word
from .gtm import GtmTables, gtm_factor_sets, gtm_tables, q_value
from .report import Check, Report, Series, render_csv, render_json, render_text
from .richness import (
    RELIABLE_RATIO,
    BispecialEntry,
    EqualityAudit,
    GroupProfile,
    IdentityCheck,
    ReturnWordAudit,
    RichnessVerdict,
    TransferAudit,
    analyze_profile,
    bispecial_audit,
    defect,
    defect_profile,
    equality_audit,
    pal_orbit_count,
    pal_profile,
    return_word_audit,
    reversal_identity_check,
    richness_verdict,
    sum_image_transfer,
    t_series,
)
from .symmetry import (
    SymmetryElement,
    SymmetryGroup,
    antimorphism,
    classify_palindrome,
    exchange_reversal,
    gamma_group,
    gamma_psi,
    generate_group,
    group_e,
    group_h,
    group_i2,
    group_i2_even,
    group_r,
    identity,
    is_group_palindrome,
    is_one_distinguishing,
    morphism,
    orbit,
    orbit_canonical,
    reversal,
)
from .transform import (
    CenterClassification,
    PQDecomposition,
    decompose_pq,
    palindrome_center_classify,
    periodic_structure_check,
    s_apply,
    s_commutation_check,
    s_preimage,
    s_preimage_set,
)
from .words import (
    DigitSum,
    Explicit,
    Mechanical,
    Morphic,
    Periodic,
    SImage,
    SPreimage,
    Substitution,
    Word,
    WordSource,
    digit_sum,
    max_prefix_cap,
    period_doubling,
    rote,
    sturmian,
    thue_morse,
)

__all__ = [
    "__version__",
    "BispecialEntry",
    "Check",
    "CenterClassification",
    "DigitSum",
    "EXPERIMENTS",
    "EqualityAudit",
    "Experiment",
    "Explicit",
    "FactorIndex",
    "GroupProfile",
    "GtmTables",
    "IdentityCheck",
    "Mechanical",
    "Morphic",
    "PQDecomposition",
    "PalTree",
    "Periodic",
    "RELIABLE_RATIO",
    "Report",
    "ReturnWordAudit",
    "RichnessVerdict",
    "SImage",
    "SPreimage",
    "Series",
    "Substitution",
    "SymmetryElement",
    "SymmetryGroup",
    "TransferAudit",
    "WelldocResult",
    "Word",
    "WordSource",
    "analyze_profile",
    "antimorphism",
    "bispecial_audit",
    "build_index",
    "classify_palindrome",
    "decompose_pq",
    "defect",
    "defect_profile",
    "digit_sum",
    "equality_audit",
    "exchange_reversal",
    "experiment_names",
    "gamma_group",
    "gamma_psi",
    "generate_group",
    "group_e",
    "group_h",
    "group_i2",
    "group_i2_even",
    "group_r",
    "gtm_factor_sets",
    "gtm_tables",
    "identity",
    "is_group_palindrome",
    "is_one_distinguishing",
    "max_prefix_cap",
    "morphism",
    "naive_pal_complexity",
    "naive_pal_factors",
    "orbit",
    "orbit_canonical",
    "pal_complexity",
    "pal_factors",
    "pal_orbit_count",
    "pal_profile",
    "pal_total",
    "palindrome_center_classify",
    "parse_group",
    "parse_word",
    "period_doubling",
    "periodic_structure_check",
    "q_value",
    "render_csv",
    "render_json",
    "render_text",
    "return_word_audit",
    "reversal",
    "reversal_identity_check",
    "richness_verdict",
    "rote",
    "run_experiment",
    "s_apply",
    "s_commutation_check",
    "s_preimage",
    "s_preimage_set",
    "sturmian",
    "sum_image_transfer",
    "t_series",
    "thue_morse",
    "welldoc2_check",
    "welldoc_residues",
]
