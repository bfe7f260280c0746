import numpy as np
from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from subfactorkit.algebra.matrices import identity
from subfactorkit.algebra.matrices import matrix_unit
from subfactorkit.algebra.matrices import shift_matrix
from subfactorkit.algebra.subalgebras import conjugate_subalgebra
from subfactorkit.algebra.subalgebras import diagonal_algebra
from subfactorkit.algebra.subalgebras import full_algebra
from subfactorkit.algebra.subalgebras import generate_subalgebra
from subfactorkit.algebra.subalgebras import relative_commutant
from subfactorkit.algebra.subalgebras import scalars
from subfactorkit.algebra.subalgebras import StarSubalgebra
from subfactorkit.algebra.subalgebras import tensor_with_identity
from subfactorkit.core.exceptions import DegenerateBasis
from subfactorkit.core.exceptions import DimensionMismatch
from subfactorkit.core.exceptions import PreconditionFailed

from ..base import MatrixAssertionsMixin


def block_algebra():
    """M_2 (+) C inside M_3."""
    elements = [matrix_unit(3, i, j) for i in range(2) for j in range(2)]
    elements.append(matrix_unit(3, 2, 2))
    return StarSubalgebra.from_spanning_set(elements, 3, label="M_2+C")


class StarSubalgebraTests(MatrixAssertionsMixin, SimpleTestCase):
    def test_dimensions(self):
        self.assertEqual(scalars(4).dim, 1)
        self.assertEqual(diagonal_algebra(4).dim, 4)
        self.assertEqual(full_algebra(3).dim, 9)
        self.assertEqual(block_algebra().dim, 5)

    def test_non_orthonormal_basis_is_rejected(self):
        with self.assertRaises(DegenerateBasis):
            StarSubalgebra(np.array([2 * identity(2)]), 2)
        with self.assertRaises(DimensionMismatch):
            StarSubalgebra(np.array([identity(2)]), 3)

    def test_spanning_set_drops_dependent_elements(self):
        sub = StarSubalgebra.from_spanning_set(
            [identity(2), 2 * identity(2), np.diag([1, 0])], 2
        )
        self.assertEqual(sub.dim, 2)
        self.assertLess(sub.gram_residual(), 1e-12)

    def test_conditional_expectation_onto_diagonal(self):
        x = np.arange(9).reshape(3, 3)
        self.assertMatrixEqual(
            diagonal_algebra(3).conditional_expectation(x), np.diag([0, 4, 8])
        )
        self.assertMatrixEqual(scalars(3).conditional_expectation(x), 4 * identity(3))

    def test_containment(self):
        diagonal = diagonal_algebra(3)
        self.assertTrue(diagonal.contains(np.diag([1, 2, 3])))
        self.assertFalse(diagonal.contains(shift_matrix(3)))
        self.assertTrue(full_algebra(3).includes(diagonal))
        self.assertFalse(diagonal.includes(full_algebra(3)))
        self.assertTrue(diagonal.contains_unit)

    def test_closure(self):
        self.assertLess(block_algebra().closure_residual(), 1e-10)

    def test_center_and_summands(self):
        algebra = block_algebra()
        self.assertEqual(algebra.center().dim, 2)
        self.assertFalse(algebra.is_simple())
        self.assertFalse(algebra.is_abelian())
        summands = algebra.simple_summands(seed=3)
        self.assertEqual(sorted((size, mult) for __, size, mult in summands), [(1, 1), (2, 1)])
        self.assertMatrixEqual(sum(z for z, __, __ in summands), identity(3))

    def test_central_projections_of_abelian_algebra(self):
        projections = diagonal_algebra(3).central_projections(seed=1)
        self.assertEqual(len(projections), 3)
        for k, p in enumerate(projections):
            self.assertMatrixEqual(p, matrix_unit(3, k, k), tol=1e-8)

    def test_matrix_units(self):
        units = full_algebra(3).matrix_units(seed=2)
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    for m in range(3):
                        expected = units[i][m] if j == k else np.zeros((3, 3))
                        self.assertMatrixEqual(units[i][j] @ units[k][m], expected, tol=1e-8)
        self.assertMatrixEqual(sum(units[i][i] for i in range(3)), identity(3), tol=1e-8)

    def test_minimal_projections_need_a_simple_algebra(self):
        with self.assertRaises(PreconditionFailed):
            diagonal_algebra(2).minimal_projections()

    def test_conjugate(self):
        s = shift_matrix(3)
        conjugated = diagonal_algebra(3).conjugate(s)
        self.assertTrue(conjugated.contains(s @ np.diag([1, 2, 3]) @ s.conj().T))
        self.assertEqual(conjugated.dim, 3)

    def test_conjugate_subalgebra(self):
        s = shift_matrix(3)
        conjugated = conjugate_subalgebra(diagonal_algebra(3), s, label="SDS*")
        self.assertEqual(conjugated.label, "SDS*")
        self.assertTrue(conjugated.contains(matrix_unit(3, 1, 1)))
        with self.assertRaises(PreconditionFailed):
            conjugate_subalgebra(diagonal_algebra(3), 2 * identity(3))


class GenerationTests(MatrixAssertionsMixin, SimpleTestCase):
    def test_generated_algebra(self):
        sub = generate_subalgebra([shift_matrix(3)], 3)
        # the shift generates the circulant matrices
        self.assertEqual(sub.dim, 3)
        self.assertTrue(sub.contains(identity(3)))

    def test_generated_full_algebra(self):
        sub = generate_subalgebra([shift_matrix(3), np.diag([1, 2, 3])], 3)
        self.assertEqual(sub.dim, 9)

    def test_relative_commutant(self):
        commutant = relative_commutant(diagonal_algebra(3), full_algebra(3))
        self.assertEqual(commutant.dim, 3)
        self.assertTrue(diagonal_algebra(3).includes(commutant))
        self.assertEqual(relative_commutant(full_algebra(2), full_algebra(2)).dim, 1)

    def test_tensor_with_identity(self):
        right = tensor_with_identity(full_algebra(2), 3, side="right")
        left = tensor_with_identity(full_algebra(3), 2, side="left")
        self.assertEqual(right.ambient_dim, 6)
        self.assertEqual(relative_commutant(right, full_algebra(6)).dim, 9)
        self.assertLess(right.gram_residual(), 1e-12)
        self.assertTrue(relative_commutant(left, full_algebra(6)).includes(
            tensor_with_identity(full_algebra(2), 3, side="right")
        ))


unit_entries = arrays(
    np.float64, (2, 3, 3), elements=st.floats(min_value=-1, max_value=1, allow_nan=False)
)


def complex_matrix(parts):
    return parts[0] + 1j * parts[1]


class ConditionalExpectationPropertyTests(MatrixAssertionsMixin, SimpleTestCase):
    def setUp(self):
        super().setUp()
        self.sub = block_algebra()

    @hypothesis_settings(max_examples=30, deadline=None)
    @given(unit_entries)
    def test_idempotent_and_adjoint_preserving(self, parts):
        x = complex_matrix(parts)
        e = self.sub.conditional_expectation(x)
        self.assertTrue(self.sub.contains(e, tol=1e-9))
        self.assertMatrixEqual(self.sub.conditional_expectation(e), e, tol=1e-9)
        self.assertMatrixEqual(
            self.sub.conditional_expectation(x.conj().T), e.conj().T, tol=1e-9
        )

    @hypothesis_settings(max_examples=30, deadline=None)
    @given(unit_entries, unit_entries, unit_entries)
    def test_bimodule_property(self, x_parts, a_parts, b_parts):
        x = complex_matrix(x_parts)
        a = self.sub.conditional_expectation(complex_matrix(a_parts))
        b = self.sub.conditional_expectation(complex_matrix(b_parts))
        self.assertMatrixEqual(
            self.sub.conditional_expectation(a @ x @ b),
            a @ self.sub.conditional_expectation(x) @ b,
            tol=1e-8,
        )

    @hypothesis_settings(max_examples=30, deadline=None)
    @given(unit_entries)
    def test_positive(self, parts):
        x = complex_matrix(parts)
        e = self.sub.conditional_expectation(x.conj().T @ x)
        self.assertMatrixEqual(e, e.conj().T, tol=1e-9)
        self.assertGreater(np.linalg.eigvalsh((e + e.conj().T) / 2).min(), -1e-9)
