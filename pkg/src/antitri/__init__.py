"""Generalized inverses for dense complex matrices.

Drazin/group inverse core, closed-form block representations for
anti-triangular block matrices ([[E,I],[F,0]], [[E,F],[I,0]] and the
identical-subblock pattern [[E,F],[F,0]]), hypothesis checkers and
seeded instance generators, and a brute-force oracle that verifies
every formula against the Drazin inverse of the assembled matrix.
"""

from .core import (
    DEFAULT_TOL,
    RankFactorization,
    ShapeError,
    SingularMatrixError,
    add,
    conj_transpose,
    diag,
    frobenius_norm,
    identity,
    invert,
    matrix,
    matrix_power,
    mul,
    rank,
    rank_factorize,
    solve,
    transpose,
    zeros,
)
from .geninv import (
    DrazinResult,
    GroupResult,
    NoGroupInverseError,
    RankToleranceError,
    drazin,
    group_inverse,
    index_of,
    spectral_idempotent,
    verify_drazin_axioms,
)
from .formulas import (
    BlockPair,
    BlockResult,
    GroupFormulaBlocks,
    HypothesisError,
    InverseKind,
    NoGroupInverse,
    Pattern,
    Thm25Intermediates,
    apply_formula,
    cline,
    cor26,
    cor32_group,
    cor34_group,
    cor35_group,
    cor42_group,
    cor43_group,
    cor44_group,
    lemma21_triangular,
    lemma22_additive,
    lemma24_additive,
    thm23,
    thm25,
    thm27,
    thm31_group,
    thm33_group,
    thm41_group,
)
from .conditions import (
    GeneratorRecipe,
    InfeasibleRecipeError,
    PATTERN_FOR,
    THEOREM_IDS,
    check_conditions,
    example_45,
    generate,
)
from .oracle import COMPARE_TOL, ComparisonVerdict, assemble, compare, oracle_inverse
from .reports import ConditionEntry, ConditionReport
from .sweep import SweepSummary, existence_sweep, run_sweep

__all__ = [
    "COMPARE_TOL",
    "DEFAULT_TOL",
    "BlockPair",
    "BlockResult",
    "ComparisonVerdict",
    "ConditionEntry",
    "ConditionReport",
    "DrazinResult",
    "GeneratorRecipe",
    "GroupFormulaBlocks",
    "GroupResult",
    "HypothesisError",
    "InfeasibleRecipeError",
    "InverseKind",
    "NoGroupInverse",
    "NoGroupInverseError",
    "PATTERN_FOR",
    "Pattern",
    "RankFactorization",
    "RankToleranceError",
    "ShapeError",
    "SingularMatrixError",
    "SweepSummary",
    "THEOREM_IDS",
    "Thm25Intermediates",
    "add",
    "apply_formula",
    "assemble",
    "check_conditions",
    "cline",
    "compare",
    "conj_transpose",
    "cor26",
    "cor32_group",
    "cor34_group",
    "cor35_group",
    "cor42_group",
    "cor43_group",
    "cor44_group",
    "diag",
    "drazin",
    "example_45",
    "existence_sweep",
    "frobenius_norm",
    "generate",
    "group_inverse",
    "identity",
    "index_of",
    "invert",
    "lemma21_triangular",
    "lemma22_additive",
    "lemma24_additive",
    "matrix",
    "matrix_power",
    "mul",
    "oracle_inverse",
    "rank",
    "rank_factorize",
    "run_sweep",
    "solve",
    "spectral_idempotent",
    "thm23",
    "thm25",
    "thm27",
    "thm31_group",
    "thm33_group",
    "thm41_group",
    "transpose",
    "verify_drazin_axioms",
    "zeros",
]
