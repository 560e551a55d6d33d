import numpy as np
import pytest

from antitri import (
    BlockPair,
    GeneratorRecipe,
    GroupResult,
    InverseKind,
    NoGroupInverse,
    Pattern,
    assemble,
    compare,
    drazin,
    example_45,
    frobenius_norm,
    generate,
    identity,
    matrix,
    oracle_inverse,
    thm41_group,
    verify_drazin_axioms,
    zeros,
)
from conftest import assert_close, jordan_nilpotent


def test_assemble_patterns():
    z = zeros(2, 2)
    pair = BlockPair(E=z, F=z, pattern=Pattern.EI_F0)
    assert np.array_equal(
        assemble(pair), np.block([[z, identity(2)], [z, z]])
    )
    ex = example_45()
    m = assemble(ex)
    expected = np.block([[ex.E, ex.F], [ex.F, zeros(2, 2)]])
    assert np.array_equal(m, expected)
    sym_pair = BlockPair(E=matrix([[1, 2], [2, 3]]), F=matrix([[0, 1], [1, 0]]), pattern=Pattern.EF_F0)
    sm = assemble(sym_pair)
    assert frobenius_norm(sm - sm.T) == 0  # symmetric blocks give a symmetric assembly


def test_oracle_inverse_group_fixture():
    ex = example_45()
    out = oracle_inverse(ex, InverseKind.GROUP)
    assert isinstance(out, GroupResult)
    expected = matrix(
        [[0, 1, -1j, -1j], [0, -1, 0, 0], [-1j, -1j, 1, 1], [0, 0, 0, 0]]
    )
    assert_close(out.group, expected, 1e-12)


def test_oracle_inverse_involution():
    pair = BlockPair(E=zeros(2, 2), F=identity(2), pattern=Pattern.EI_F0)
    out = oracle_inverse(pair, InverseKind.DRAZIN)
    assert_close(out.drazin, assemble(pair), 1e-12)  # M^2 = I


def test_oracle_inverse_no_group():
    pair = BlockPair(E=jordan_nilpotent(2), F=zeros(2, 2), pattern=Pattern.EI_F0)
    out = oracle_inverse(pair, InverseKind.GROUP)
    assert isinstance(out, NoGroupInverse)
    assert out.residuals["ind(M)"] >= 2


def test_compare_fixture_and_corruption():
    ex = example_45()
    res = thm41_group(ex.E, ex.F)
    verdict = compare(res, ex)
    assert verdict.passed and verdict.relative_error <= 1e-12
    assert verdict.oracle_index == 1
    assert verdict.axioms.overall

    from dataclasses import replace

    corrupted = replace(res, Gamma=res.Gamma + 1.0)
    bad = compare(corrupted, ex)
    assert not bad.passed
    assert not bad.axioms.overall


def test_compare_pattern_mismatch():
    ex = example_45()
    res = thm41_group(ex.E, ex.F)
    wrong = BlockPair(E=ex.E, F=ex.F, pattern=Pattern.EI_F0)
    with pytest.raises(ValueError):
        compare(res, wrong)


def test_oracle_self_consistency():
    for seed in range(20):
        pair = generate(GeneratorRecipe("thm25", 1 + seed % 4, seed))
        m = assemble(pair)
        r = drazin(m)
        assert verify_drazin_axioms(m, r.drazin, r.index).overall


def test_pattern_coherence_similarity():
    # [[E,F],[I,0]] = P^-1 [[E,I],[F,0]] P with P = [[0,I],[I,-E]], exactly
    # on integer fixtures
    e = matrix([[1, 2], [0, -1]])
    f = matrix([[1, 1], [0, 0]])
    n = 2
    m_eif0 = assemble(BlockPair(E=e, F=f, pattern=Pattern.EI_F0))
    m_efi0 = assemble(BlockPair(E=e, F=f, pattern=Pattern.EF_I0))
    p = np.block([[zeros(n, n), identity(n)], [identity(n), -e]])
    p_inv = np.block([[e, identity(n)], [identity(n), zeros(n, n)]])
    assert frobenius_norm(p_inv @ p - identity(2 * n)) == 0
    assert frobenius_norm(m_efi0 - p_inv @ m_eif0 @ p) <= 1e-12
