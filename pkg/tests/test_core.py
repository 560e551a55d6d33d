import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antitri import (
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
    rank_factorize,
    solve,
    transpose,
    zeros,
)
from conftest import jordan_nilpotent, random_complex, rel_err, well_conditioned


def test_matrix_rejects_non_finite():
    with pytest.raises(ValueError):
        matrix([[np.nan, 0], [0, 1]])
    with pytest.raises(ValueError):
        matrix([[np.inf]])
    with pytest.raises(ShapeError):
        matrix([1, 2, 3])


def test_add_identities():
    z = zeros(2, 2)
    assert np.array_equal(add(z, z), z)
    a = matrix([[1, 2], [3, 4]])
    assert np.array_equal(add(a, -a), z)
    assert np.array_equal(add(matrix([[1]]), matrix([[1j]])), matrix([[1 + 1j]]))
    with pytest.raises(ShapeError):
        add(zeros(2, 2), zeros(3, 3))


def test_mul_identities():
    a = matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert np.allclose(mul(identity(3), a), a)
    assert np.array_equal(mul(a, zeros(3, 3)), zeros(3, 3))
    n = jordan_nilpotent(2)
    assert np.array_equal(mul(n, n), zeros(2, 2))
    with pytest.raises(ShapeError):
        mul(zeros(2, 3), zeros(2, 3))


def test_transpose_examples():
    assert np.array_equal(transpose(identity(3)), identity(3))
    a = matrix([[1j, 2], [3, 4 - 1j]])
    assert np.array_equal(transpose(transpose(a)), a)
    assert np.array_equal(transpose(matrix([[1j, 1j], [0, 0]])), matrix([[1j, 0], [1j, 0]]))
    assert np.array_equal(conj_transpose(matrix([[1j]])), matrix([[-1j]]))


def test_frobenius_norm_examples():
    assert frobenius_norm(zeros(3, 3)) == 0.0
    assert frobenius_norm(identity(4)) == pytest.approx(2.0)
    assert frobenius_norm(matrix([[3, 4j]])) == pytest.approx(5.0)


def test_matrix_power_examples():
    a = matrix([[1, 1], [0, 1]])
    assert np.array_equal(matrix_power(a, 0), identity(2))
    assert np.array_equal(matrix_power(a, 1), a)
    assert np.array_equal(matrix_power(jordan_nilpotent(2), 2), zeros(2, 2))


def test_rank_factorize_examples():
    assert rank_factorize(zeros(3, 3), 1e-10).rank == 0
    assert rank_factorize(identity(3)).rank == 3
    a = matrix([[1, 2], [2, 4]])
    f = rank_factorize(a)
    assert f.rank == 1
    assert frobenius_norm(a - f.left @ f.right) <= 1e-12


def test_rank_zero_factors_are_empty():
    f = rank_factorize(zeros(2, 2))
    assert f.left.shape == (2, 0) and f.right.shape == (0, 2)
    assert np.array_equal(f.left @ f.right, zeros(2, 2))


def test_invert_examples():
    assert np.allclose(invert(identity(3)), identity(3))
    assert np.allclose(invert(diag(2, 4)), diag(0.5, 0.25))
    with pytest.raises(SingularMatrixError):
        invert(jordan_nilpotent(2))


def test_solve_shapes():
    with pytest.raises(ShapeError):
        solve(zeros(2, 3), zeros(2, 2))
    with pytest.raises(ShapeError):
        solve(identity(2), zeros(3, 1))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 8))
def test_matmul_associativity(seed, n):
    rng = np.random.default_rng(seed)
    a, b, c = (random_complex(rng, n) for _ in range(3))
    assert rel_err((a @ b) @ c, a @ (b @ c)) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(2, 8))
def test_rank_factorize_reconstruction(seed, n):
    rng = np.random.default_rng(seed)
    r = int(rng.integers(1, n))
    a = random_complex(rng, n, r) @ random_complex(rng, r, n)  # rank <= r by construction
    tol = 1e-10
    f = rank_factorize(a, tol)
    assert f.rank <= r
    assert frobenius_norm(a - f.left @ f.right) <= 10 * tol * max(1.0, frobenius_norm(a))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 8))
def test_solve_residual(seed, n):
    rng = np.random.default_rng(seed)
    a = well_conditioned(rng, n)
    b = random_complex(rng, n, 2)
    x = solve(a, b)
    assert frobenius_norm(a @ x - b) <= 1e-10 * max(1.0, frobenius_norm(a)) * max(
        1.0, frobenius_norm(x)
    )


def test_empty_matrices_behave_as_zero():
    tall = zeros(3, 0)
    wide = zeros(0, 3)
    assert np.array_equal(tall @ wide, zeros(3, 3))
    assert frobenius_norm(tall) == 0.0
