from bloch_lab.linalg import (
    ComplexMatrix,
    PowerIterationConfig,
    determinant,
    lemma_a_lower_bound,
    operator_norm,
)
from bloch_lab.utils import DomainError
from hypothesis import given
from hypothesis import strategies as st
import numpy as np
import pytest


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def unit_vectors(rng, count, n):
    vectors = random_complex(rng, (count, n))
    return vectors / np.linalg.norm(vectors, axis=1, keepdims=True)


entries = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
matrices_3x3 = st.lists(entries, min_size=18, max_size=18).map(
    lambda v: ComplexMatrix((np.array(v[:9]) + 1j * np.array(v[9:])).reshape(3, 3))
)


class TestComplexMatrix:
    def test_immutable(self):
        matrix = ComplexMatrix.identity(2)
        with pytest.raises(AttributeError):
            matrix._entries = np.zeros((2, 2))
        with pytest.raises(ValueError):
            matrix.entries[0, 0] = 5

    def test_to_numpy_is_a_copy(self):
        matrix = ComplexMatrix.identity(2)
        copy = matrix.to_numpy()
        copy[0, 0] = 7
        assert matrix.entries[0, 0] == 1

    @pytest.mark.parametrize(
        "entries",
        [[[1, 2, 3], [4, 5, 6]], [[np.nan, 0], [0, 1]], [[np.inf, 0], [0, 1]]],
    )
    def test_invalid_entries(self, entries):
        with pytest.raises(ValueError):
            ComplexMatrix(entries)

    def test_product_and_adjoint(self):
        a = ComplexMatrix([[1, 1j], [0, 2]])
        assert a.conjugate_transpose() == ComplexMatrix([[1, 0], [-1j, 2]])
        assert a @ ComplexMatrix.identity(2) == a
        np.testing.assert_allclose(a.apply([1, 1]), [1 + 1j, 2])

    def test_equal_matrices_hash_equal(self):
        assert hash(ComplexMatrix.diagonal(1, 2j)) == hash(ComplexMatrix([[1, 0], [0, 2j]]))


class TestOperatorNorm:
    def test_simple_values(self):
        assert operator_norm(ComplexMatrix.identity(3)) == pytest.approx(1.0, abs=1e-12)
        assert operator_norm(ComplexMatrix.diagonal(3, 4j)) == pytest.approx(4.0, rel=1e-10)
        assert operator_norm(ComplexMatrix(np.zeros((2, 2)))) == 0.0

    def test_matches_singular_values(self, rng):
        for _ in range(100):
            matrix = random_complex(rng, (3, 3))
            expected = np.linalg.svd(matrix, compute_uv=False)[0]
            assert operator_norm(ComplexMatrix(matrix)) == pytest.approx(expected, rel=1e-8)

    def test_matches_sampled_maximization(self, rng):
        thetas = unit_vectors(rng, 100_000, 3)
        for _ in range(100):
            matrix = random_complex(rng, (3, 3))
            sampled = np.max(np.linalg.norm(thetas @ matrix.T, axis=1))
            norm = operator_norm(ComplexMatrix(matrix))
            assert sampled <= norm * (1 + 1e-9)
            assert sampled >= norm * (1 - 1e-2)

    def test_rank_one_matrix(self):
        u = np.array([1, 2j, -1])
        v = np.array([0.5, 0, 1j])
        matrix = ComplexMatrix(np.outer(u, v.conj()))
        expected = np.linalg.norm(u) * np.linalg.norm(v)
        assert operator_norm(matrix) == pytest.approx(expected, rel=1e-10)

    @given(matrices_3x3, st.integers(min_value=0, max_value=2**32 - 1))
    def test_norm_bounds_stretch(self, matrix, seed):
        theta = unit_vectors(np.random.default_rng(seed), 1, 3)[0]
        stretch = np.linalg.norm(matrix.apply(theta))
        assert operator_norm(matrix) >= stretch * (1 - 1e-6) - 1e-9

    @given(matrices_3x3, matrices_3x3)
    def test_submultiplicative(self, a, b):
        assert operator_norm(a @ b) <= operator_norm(a) * operator_norm(b) * (1 + 1e-6) + 1e-9

    def test_config_validation(self):
        with pytest.raises(ValueError):
            PowerIterationConfig(tolerance=0)
        with pytest.raises(ValueError):
            PowerIterationConfig(max_iterations=0)


class TestDeterminant:
    def test_known_values(self):
        assert determinant(ComplexMatrix([[0, 1], [1, 0]])) == pytest.approx(-1)
        assert determinant(ComplexMatrix.diagonal(2, 3j, 1 - 1j)) == pytest.approx(6j * (1 - 1j))
        assert determinant(ComplexMatrix([[1, 2], [2, 4]])) == pytest.approx(0, abs=1e-14)

    def test_matches_numpy(self, rng):
        for n in (1, 2, 3, 5):
            matrix = random_complex(rng, (n, n))
            expected = np.linalg.det(matrix)
            assert abs(determinant(ComplexMatrix(matrix)) - expected) <= 1e-10 * abs(expected)

    @given(matrices_3x3)
    def test_hadamard_type_bound(self, matrix):
        norm = operator_norm(matrix)
        assert abs(determinant(matrix)) <= norm**3 * (1 + 1e-6) + 1e-9


class TestLemmaA:
    def test_identity(self):
        assert lemma_a_lower_bound(ComplexMatrix.identity(3)) == pytest.approx(1.0)

    def test_lower_bound_holds(self, rng):
        thetas = unit_vectors(rng, 2_000, 3)
        for _ in range(20):
            matrix = random_complex(rng, (3, 3))
            bound = lemma_a_lower_bound(ComplexMatrix(matrix))
            stretches = np.linalg.norm(thetas @ matrix.T, axis=1)
            assert np.all(stretches >= bound * (1 - 1e-9))

    def test_equality_for_unitary(self, rng):
        thetas = unit_vectors(rng, 500, 3)
        for _ in range(10):
            unitary, _ = np.linalg.qr(random_complex(rng, (3, 3)))
            bound = lemma_a_lower_bound(ComplexMatrix(unitary))
            stretches = np.linalg.norm(thetas @ unitary.T, axis=1)
            assert bound == pytest.approx(1.0, rel=1e-9)
            assert stretches.min() == pytest.approx(bound, rel=1e-9)

    def test_zero_matrix(self):
        with pytest.raises(DomainError):
            lemma_a_lower_bound(ComplexMatrix(np.zeros((2, 2))))
