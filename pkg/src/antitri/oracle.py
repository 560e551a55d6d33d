"""Brute-force verification path for the block formulas.

The oracle assembles the 2n x 2n matrix for a pattern, treats it as an
opaque dense matrix, and Drazin/group-inverts it directly through
:mod:`antitri.geninv`.  It never consumes the block structure beyond
assembly; that independence from the formula path is its entire value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import block2x2, frobenius_norm, identity, zeros
from .geninv import DrazinResult, GroupResult, drazin, index_of, verify_drazin_axioms
from .formulas import BlockPair, BlockResult, GroupFormulaBlocks, InverseKind, NoGroupInverse, Pattern
from .reports import ConditionReport

COMPARE_TOL = 1e-8  # looser than the computation tolerance: series terms compound rounding


@dataclass(frozen=True)
class ComparisonVerdict:
    relative_error: float
    tolerance: float
    passed: bool
    oracle_index: int
    formula_kind: InverseKind
    axioms: ConditionReport


def assemble(pair: BlockPair) -> np.ndarray:
    """Dense 2n x 2n matrix for the pair's pattern; identity blocks are exact."""
    n = pair.E.shape[0]
    i, z = identity(n), zeros(n, n)
    if pair.pattern is Pattern.EI_F0:
        return block2x2(pair.E, i, pair.F, z)
    if pair.pattern is Pattern.EF_I0:
        return block2x2(pair.E, pair.F, i, z)
    return block2x2(pair.E, pair.F, pair.F, z)


def oracle_inverse(
    pair: BlockPair, kind: InverseKind = InverseKind.DRAZIN, tol: float = 1e-10
) -> DrazinResult | GroupResult | NoGroupInverse:
    """Direct generalized inverse of the assembled matrix.

    For kind Group an index >= 2 yields a NoGroupInverse verdict rather
    than an exception: nonexistence is an answer the formulas must match.
    """
    m = assemble(pair)
    result = drazin(m, tol)
    if kind is InverseKind.GROUP:
        if result.index > 1:
            return NoGroupInverse(
                failed=("oracle_index",), residuals={"ind(M)": float(result.index)}
            )
        return GroupResult(group=result.drazin, idempotent=result.idempotent)
    return result


def compare(
    formula: BlockResult | GroupFormulaBlocks,
    pair: BlockPair,
    tol: float = COMPARE_TOL,
    compute_tol: float = 1e-10,
) -> ComparisonVerdict:
    """Relative Frobenius error of the formula blocks against the oracle.

    The formula output is additionally re-verified against the Drazin
    axioms for the assembled matrix (at the oracle's index).
    """
    if formula.pattern is not pair.pattern:
        raise ValueError(f"pattern mismatch: formula {formula.pattern} vs pair {pair.pattern}")
    m = assemble(pair)
    oracle = drazin(m, compute_tol)
    assembled = formula.assemble()
    if assembled.shape != m.shape:
        raise ValueError(f"shape mismatch: formula {assembled.shape} vs assembled {m.shape}")
    rel = frobenius_norm(assembled - oracle.drazin) / max(1.0, frobenius_norm(oracle.drazin))
    axioms = verify_drazin_axioms(m, assembled, oracle.index, compute_tol)
    return ComparisonVerdict(
        relative_error=rel,
        tolerance=tol,
        passed=rel <= tol,
        oracle_index=oracle.index,
        formula_kind=formula.kind,
        axioms=axioms,
    )


def oracle_has_group_inverse(pair: BlockPair, tol: float = 1e-10) -> tuple[bool, int]:
    """(index <= 1, index) for the assembled matrix."""
    k = index_of(assemble(pair), tol)
    return k <= 1, k
