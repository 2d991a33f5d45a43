from fractions import Fraction

from django.test import SimpleTestCase

from graverlab.exceptions import GraverLabInputError, GraverLabResourceError
from graverlab.linalg import IntegerMatrix
from graverlab.testsets import (
    CIRCUITS, GRAVER, TestSet, circuits, conformal_multiple, conforms,
    decompose_integer_conformal, decompose_real_conformal, distinct_steepness_values,
    graver_basis, graver_complexity, graver_oracle, kernel_points, minimal_decomposition_length)

from .utils import GraverLabTestMixin, matrix


class ConformalOrderTests(SimpleTestCase):
    def test_examples(self):
        self.assertTrue(conforms((1, 0, -1), (2, 0, -1)))
        self.assertFalse(conforms((1, 0), (-1, 0)))
        self.assertTrue(conforms((0, 0), (5, -3)))
        self.assertFalse(conforms((2, 0), (1, 0)))

    def test_length_mismatch(self):
        with self.assertRaises(GraverLabInputError):
            conforms((1, 0), (1, 0, 0))

    def test_conformal_multiple(self):
        self.assertEqual(conformal_multiple((1, -1, 0), (3, -2, 0)), 2)
        self.assertEqual(conformal_multiple((1, 1, 1), (3, 1, 2)), 1)
        self.assertEqual(conformal_multiple((1, -1, 0), (-1, 1, 0)), 0)


class TestSetTests(GraverLabTestMixin, SimpleTestCase):
    def test_symmetric_and_sorted(self):
        T = TestSet(matrix([1, -1]), GRAVER, [(1, 1)])
        self.assertEqual(T.elements, ((-1, -1), (1, 1)))
        self.assertIn((1, 1), T)
        self.assertIn([-1, -1], T)
        self.assertEqual(len(T), 2)
        self.assertEqual(T.representatives(), [(1, 1)])

    def test_norms(self):
        T = TestSet(matrix([1, 1, -2]), GRAVER, [(2, 0, 1), (1, -1, 0)])
        self.assertEqual(T.max_norm_inf, 2)
        self.assertEqual(T.max_norm_1, 3)
        self.assertEqual(TestSet(IntegerMatrix.identity(2), CIRCUITS, []).max_norm_inf, 0)

    def test_json(self):
        T = graver_basis(matrix([1, 1, 1]))
        data = T.to_json()
        self.assertEqual(data["kind"], "graver")
        self.assertEqual(data["matrix"], [[1, 1, 1]])
        self.assertEqual(data["elements"], sorted(data["elements"]))
        self.assertEqual(TestSet.from_json(data), T)
        with self.assertRaises(GraverLabInputError):
            TestSet.from_json({"kind": "graver"})

    def test_rejects_bad_input(self):
        with self.assertRaises(GraverLabInputError):
            TestSet(matrix([1, 1]), "hilbert", [])
        with self.assertRaisesMessage(GraverLabInputError, "wrong length"):
            TestSet(matrix([1, 1]), GRAVER, [(1, -1, 0)])


class GraverBasisTests(GraverLabTestMixin, SimpleTestCase):
    def test_examples(self):
        self.assertElementsEqual(graver_basis(matrix([1, -1])), [(1, 1)])
        self.assertElementsEqual(graver_basis(matrix([1, 1, 1])),
                                 [(1, -1, 0), (1, 0, -1), (0, 1, -1)])
        self.assertElementsEqual(graver_basis(matrix([1, 1, -2])),
                                 [(1, -1, 0), (2, 0, 1), (0, 2, 1), (1, 1, 1)])

    def test_trivial_kernel(self):
        self.assertEqual(len(graver_basis(IntegerMatrix.identity(2))), 0)

    def test_zero_matrix(self):
        self.assertElementsEqual(graver_basis(matrix([0, 0])), [(1, 0), (0, 1)])

    def test_twisted_cubic(self):
        # the classic example whose Graver basis is strictly larger than its circuits
        A = matrix([1, 1, 1, 1], [0, 1, 2, 3])
        G = graver_basis(A)
        self.assertEqual(G, graver_oracle(A, G.max_norm_inf))
        self.assertIn((1, -2, 1, 0), G)
        self.assertIn((1, -1, -1, 1), G)
        for g in G:
            self.assertInKernel(A, g)

    def test_matches_oracle(self):
        A = matrix([1, 2, 3], [2, -1, 1])
        G = graver_basis(A)
        self.assertEqual(G, graver_oracle(A, max(G.max_norm_inf, 1)))

    def test_cap(self):
        with self.assertRaises(GraverLabResourceError) as cm:
            graver_basis(matrix([1, 2, 3, 5]), cap=4)
        self.assertEqual(cm.exception.cap_name, 'GRAVER_CAP')


class GraverOracleTests(GraverLabTestMixin, SimpleTestCase):
    def test_examples(self):
        self.assertElementsEqual(graver_oracle(matrix([1, -1]), 1), [(1, 1)])
        self.assertEqual(len(graver_oracle(matrix([1, 1, 1]), 1)), 6)
        self.assertEqual(len(graver_oracle(IntegerMatrix.identity(2), 5)), 0)

    def test_kernel_points(self):
        points = kernel_points(matrix([1, -1]), 2)
        self.assertEqual(points, [(-2, -2), (-1, -1), (1, 1), (2, 2)])

    def test_enumeration_cap(self):
        with self.assertRaises(GraverLabResourceError) as cm:
            kernel_points(matrix([1, 1, 1, 1]), 3, cap=1000)
        self.assertEqual(cm.exception.cap_name, 'ENUMERATION_CAP')
        self.assertEqual(cm.exception.observed, 7 ** 4)


class CircuitTests(GraverLabTestMixin, SimpleTestCase):
    def test_examples(self):
        self.assertElementsEqual(circuits(matrix([1, 0, -1], [0, 1, -1])), [(1, 1, 1)])
        self.assertElementsEqual(circuits(matrix([1, 1, 1])),
                                 [(1, -1, 0), (1, 0, -1), (0, 1, -1)])
        self.assertElementsEqual(circuits(matrix([1, 1, -2])),
                                 [(1, -1, 0), (2, 0, 1), (0, 2, 1)])

    def test_circuits_are_graver_elements(self):
        A = matrix([1, 1, 1, 1], [0, 1, 2, 3])
        G = graver_basis(A)
        C = circuits(A)
        self.assertLess(len(C), len(G))
        for z in C:
            self.assertIn(z, G)

    def test_trivial_kernel(self):
        self.assertEqual(len(circuits(IntegerMatrix.identity(3))), 0)


class DecompositionTests(GraverLabTestMixin, SimpleTestCase):
    def setUp(self):
        self.A = matrix([1, 1, -2])
        self.G = graver_basis(self.A)
        self.C = circuits(self.A)

    def test_integer_examples(self):
        self.assertEqual(decompose_integer_conformal((1, 1, 1), self.G), [(1, (1, 1, 1))])
        self.assertEqual(decompose_integer_conformal((2, -2, 0), self.G), [(2, (1, -1, 0))])
        terms = decompose_integer_conformal((3, 1, 2), self.G)
        self.assertEqual(terms, [(1, (1, 1, 1)), (1, (2, 0, 1))])

    def test_integer_decomposition_is_conformal(self):
        for z in kernel_points(self.A, 3):
            terms = decompose_integer_conformal(z, self.G)
            total = tuple(sum(alpha * g[i] for alpha, g in terms) for i in range(3))
            self.assertEqual(total, z)
            for alpha, g in terms:
                self.assertGreater(alpha, 0)
                self.assertTrue(conforms(tuple(alpha * x for x in g), z))

    def test_real_examples(self):
        self.assertEqual(decompose_real_conformal((3, 1, 2), self.C),
                         [(Fraction(1, 2), (0, 2, 1)), (Fraction(3, 2), (2, 0, 1))])
        self.assertEqual(decompose_real_conformal((5, -5, 0), self.C), [(5, (1, -1, 0))])
        C = circuits(matrix([1, 0, -1], [0, 1, -1]))
        self.assertEqual(decompose_real_conformal((1, 1, 1), C), [(1, (1, 1, 1))])

    def test_rejects_non_kernel_vectors(self):
        with self.assertRaisesMessage(GraverLabInputError, "not in ker(A)"):
            decompose_integer_conformal((1, 0, 0), self.G)
        with self.assertRaisesMessage(GraverLabInputError, "zero vector"):
            decompose_real_conformal((0, 0, 0), self.C)
        with self.assertRaisesMessage(GraverLabInputError, "wrong length"):
            decompose_integer_conformal((1, 1), self.G)

    def test_minimal_decomposition_length(self):
        self.assertEqual(minimal_decomposition_length((1, 1, 1), self.G), 1)
        self.assertEqual(minimal_decomposition_length((4, -4, 0), self.G), 1)
        self.assertEqual(minimal_decomposition_length((3, 1, 2), self.G), 2)


class GraverComplexityTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(graver_complexity(matrix([1, 1]), matrix([1, 0])), 2)
        self.assertEqual(graver_complexity(matrix([1, -1]), IntegerMatrix.identity(2)), 2)
        self.assertEqual(graver_complexity(matrix([1, 1]), matrix([0, 0])), 1)

    def test_trivial_kernel(self):
        self.assertEqual(graver_complexity(IntegerMatrix.identity(2), IntegerMatrix.identity(2)), 0)

    def test_column_mismatch(self):
        with self.assertRaises(GraverLabInputError):
            graver_complexity(matrix([1, 1]), matrix([1, 0, 0]))


class SteepnessValueTests(SimpleTestCase):
    def test_distinct_positive_values(self):
        G = graver_basis(matrix([1, 1, 1]))
        # c=(1,2,3): (1,0,-1) and (-1,0,1) give ±1, the other pairs ±1/2
        self.assertEqual(distinct_steepness_values(G, (1, 2, 3)), {Fraction(1), Fraction(1, 2)})
        self.assertEqual(distinct_steepness_values(G, (0, 0, 0)), set())
