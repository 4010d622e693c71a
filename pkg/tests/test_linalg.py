"""DenseMatrix container and the one-sided Jacobi SVD.

numpy's own decompositions appear here only as independent oracles.
"""

import numpy as np
import pytest

from lsacluster.errors import DimensionMismatch, NonFiniteInput
from lsacluster.linalg import DenseMatrix, SvdFactors, matmul, svd


class TestDenseMatrix:
    def test_copies_input_as_float64(self):
        source = [[1, 2], [3, 4]]
        m = DenseMatrix(source)
        source[0][0] = 99
        assert m.data.dtype == np.float64
        assert m.data[0, 0] == 1.0

    def test_shape_accessors(self):
        m = DenseMatrix(np.ones((3, 2)))
        assert (m.rows, m.cols) == (3, 2)
        assert m.shape == (3, 2)

    def test_rejects_wrong_rank_and_empty(self):
        with pytest.raises(ValueError):
            DenseMatrix([1.0, 2.0])
        with pytest.raises(ValueError):
            DenseMatrix(np.zeros((0, 3)))
        with pytest.raises(ValueError):
            DenseMatrix(np.zeros((3, 0)))

    def test_rejects_non_finite(self):
        with pytest.raises(NonFiniteInput):
            DenseMatrix([[1.0, float("nan")]])
        with pytest.raises(NonFiniteInput):
            DenseMatrix([[float("inf")]])

    def test_data_is_read_only(self):
        m = DenseMatrix([[1.0]])
        with pytest.raises(ValueError):
            m.data[0, 0] = 2.0

    def test_to_array_is_writable_copy(self):
        m = DenseMatrix([[1.0]])
        arr = m.to_array()
        arr[0, 0] = 5.0
        assert m.data[0, 0] == 1.0

    def test_zeros_identity_transpose(self):
        assert np.array_equal(DenseMatrix.zeros(2, 3).data, np.zeros((2, 3)))
        assert np.array_equal(DenseMatrix.identity(3).data, np.eye(3))
        m = DenseMatrix([[1.0, 2.0], [3.0, 4.0]])
        assert np.array_equal(m.transpose().data, m.data.T)

    def test_matmul_known_product(self):
        a = DenseMatrix([[1.0, 2.0], [3.0, 4.0]])
        b = DenseMatrix([[5.0], [6.0]])
        assert np.array_equal((a @ b).data, [[17.0], [39.0]])
        assert np.array_equal(matmul(a, b).data, [[17.0], [39.0]])

    def test_matmul_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            matmul(DenseMatrix.zeros(2, 3), DenseMatrix.zeros(2, 3))


def _check_factors(arr: np.ndarray, factors: SvdFactors) -> None:
    m, n = arr.shape
    r = factors.rank
    assert factors.u.shape == (m, r)
    assert factors.sigma.shape == (r,)
    assert factors.v.shape == (n, r)
    assert np.all(factors.sigma > 0)
    assert np.all(np.diff(factors.sigma) <= 0)
    scale = max(1.0, float(np.linalg.norm(arr)))
    assert np.max(np.abs(factors.reconstruct() - arr)) <= 1e-10 * scale
    if r:
        assert np.max(np.abs(factors.u.T @ factors.u - np.eye(r))) <= 1e-10
        assert np.max(np.abs(factors.v.T @ factors.v - np.eye(r))) <= 1e-10


class TestSvd:
    def test_random_matrices_match_numpy_singular_values(self):
        rng = np.random.default_rng(314)
        for _ in range(30):
            m = int(rng.integers(1, 20))
            n = int(rng.integers(1, 12))
            arr = rng.normal(size=(m, n)) * float(rng.uniform(0.1, 50))
            factors = svd(arr)
            _check_factors(arr, factors)
            reference = np.linalg.svd(arr, compute_uv=False)
            assert factors.rank == len(reference[reference > 1e-10 * max(m, n) * np.max(np.abs(arr))])
            np.testing.assert_allclose(factors.sigma, reference[:factors.rank],
                                       rtol=1e-10, atol=1e-12)

    def test_accepts_dense_matrix_and_ndarray(self):
        arr = np.array([[3.0, 0.0], [4.0, 5.0]])
        from_arr = svd(arr)
        from_dm = svd(DenseMatrix(arr))
        np.testing.assert_array_equal(from_arr.sigma, from_dm.sigma)
        np.testing.assert_array_equal(from_arr.v, from_dm.v)

    def test_zero_matrix_has_rank_zero(self):
        factors = svd(np.zeros((3, 5)))
        assert factors.rank == 0
        assert factors.u.shape == (3, 0)
        assert factors.sigma.shape == (0,)
        assert factors.v.shape == (5, 0)
        assert np.array_equal(factors.reconstruct(), np.zeros((3, 0)) @ np.zeros((0, 5)))

    def test_rank_one_outer_product(self):
        arr = np.outer([1.0, 2.0, 2.0], [3.0, 0.0, 4.0, 0.0])
        factors = svd(arr)
        assert factors.rank == 1
        assert factors.sigma[0] == pytest.approx(15.0, rel=1e-12)
        _check_factors(arr, factors)

    def test_rank_deficient_duplicate_columns(self):
        rng = np.random.default_rng(9)
        base = rng.normal(size=(6, 2))
        arr = np.column_stack([base[:, 0], base[:, 1], base[:, 0] + base[:, 1], base[:, 0]])
        factors = svd(arr)
        assert factors.rank == 2
        _check_factors(arr, factors)

    def test_wide_matrix_goes_through_transpose_path(self):
        rng = np.random.default_rng(23)
        arr = rng.normal(size=(3, 9))
        factors = svd(arr)
        _check_factors(arr, factors)
        np.testing.assert_allclose(factors.sigma, np.linalg.svd(arr, compute_uv=False)[:factors.rank],
                                   rtol=1e-10, atol=1e-12)

    def test_sign_convention_pins_v_columns(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            arr = rng.normal(size=(7, 4))
            factors = svd(arr)
            for j in range(factors.rank):
                column = factors.v[:, j]
                assert column[np.argmax(np.abs(column))] > 0

    def test_known_diagonal(self):
        factors = svd(np.diag([4.0, 9.0, 1.0]))
        np.testing.assert_allclose(factors.sigma, [9.0, 4.0, 1.0], rtol=0, atol=1e-14)

    def test_explicit_tolerance_truncates(self):
        arr = np.diag([1.0, 1e-9])
        assert svd(arr).rank == 2
        assert svd(arr, tol=1e-6).rank == 1

    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValueError):
            svd(np.eye(2), tol=0.0)
        with pytest.raises(ValueError):
            svd(np.eye(2), tol=-1.0)

    def test_rejects_non_finite_and_bad_shape(self):
        with pytest.raises(NonFiniteInput):
            svd(np.array([[np.nan, 1.0]]))
        with pytest.raises(ValueError):
            svd(np.zeros((0, 2)))

    def test_outputs_are_read_only(self):
        factors = svd(np.eye(3))
        with pytest.raises(ValueError):
            factors.sigma[0] = 7.0

    def test_deterministic_for_same_input(self):
        rng = np.random.default_rng(77)
        arr = rng.normal(size=(8, 5))
        first = svd(arr)
        second = svd(arr)
        np.testing.assert_array_equal(first.u, second.u)
        np.testing.assert_array_equal(first.sigma, second.sigma)
        np.testing.assert_array_equal(first.v, second.v)
