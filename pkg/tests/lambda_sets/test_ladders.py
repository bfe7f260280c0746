from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import strategies as st

from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.lambda_sets import beta_m
from subfactorkit.lambda_sets import grid_dimension_exponent
from subfactorkit.lambda_sets import lambda_ladder
from subfactorkit.lambda_sets import phi4_closed_form
from subfactorkit.lambda_sets import phi4_iterate
from subfactorkit.lambda_sets import phi_map
from subfactorkit.lambda_sets import sigma_membership


class LadderTests(SimpleTestCase):
    def test_ladders_for_four(self):
        first, second = lambda_ladder(4, 3)
        self.assertEqual(first, [0, Fraction(4, 3), Fraction(8, 5)])
        self.assertEqual(second, [1, Fraction(3, 2), Fraction(5, 3)])
        self.assertEqual(lambda_ladder(4, 4)[1][-1], Fraction(7, 4))

    def test_ladders_for_three_are_finite(self):
        first, second = lambda_ladder(3, 10)
        self.assertEqual(first, [0, Fraction(3, 2)])
        self.assertEqual(second, [1])

    def test_arguments(self):
        with self.assertRaises(ParameterOutOfRange):
            lambda_ladder(2, 3)
        with self.assertRaises(ParameterOutOfRange):
            lambda_ladder(5, 0)

    def test_phi_map_pole(self):
        self.assertIsNone(phi_map(3, 2))
        self.assertEqual(phi_map(5, 1), Fraction(4, 3))

    def test_phi4(self):
        for k in range(65):
            with self.subTest(k=k):
                self.assertEqual(phi4_iterate(1, k), phi4_closed_form(k))
        self.assertEqual(beta_m(0), 1)
        self.assertEqual(beta_m(1), Fraction(3, 2))
        self.assertEqual(beta_m(2), Fraction(7, 4))
        with self.assertRaises(ParameterOutOfRange):
            beta_m(-1)

    def test_beta_m_closed_form_and_grid_divisibility(self):
        for m in range(1, 21):
            if m <= 12:
                self.assertEqual(phi4_iterate(1, 2 ** m - 1), beta_m(m))
            self.assertEqual(beta_m(m), Fraction(2 ** (m + 1) - 1, 2 ** m))
            for r in range(13):
                with self.subTest(m=m, r=r):
                    self.assertEqual(
                        (4 ** r * beta_m(m)).denominator == 1, 4 ** r % 2 ** m == 0
                    )

    @given(st.integers(min_value=0, max_value=12))
    def test_beta_m_needs_small_grids(self, m):
        r = grid_dimension_exponent(m)
        self.assertEqual((4 ** r * beta_m(m)).denominator, 1)
        if r:
            self.assertNotEqual((4 ** (r - 1) * beta_m(m)).denominator, 1)


class SigmaMembershipTests(SimpleTestCase):
    def test_ladder_members(self):
        witness = sigma_membership(Fraction(3, 2), 3)
        self.assertTrue(witness.member)
        self.assertEqual(witness.part, "ladder")
        self.assertEqual((witness.ladder, witness.position), (1, 1))

    def test_reflected(self):
        witness = sigma_membership(Fraction(5, 2), 4)
        self.assertTrue(witness.member)
        self.assertEqual(witness.part, "reflected_ladder")
        self.assertEqual(witness.ladder, 2)

    def test_interval(self):
        self.assertEqual(sigma_membership(2, 4).part, "interval")
        self.assertEqual(sigma_membership(Fraction(5, 2), 6).part, "interval")

    def test_non_member_brackets(self):
        witness = sigma_membership(Fraction(1, 2), 4)
        self.assertFalse(witness.member)
        self.assertEqual(
            witness.as_dict()["bracket"], [["0", "4/3"], [None, "1"]]
        )

    def test_single_projection(self):
        self.assertTrue(sigma_membership(0, 1).member)
        self.assertTrue(sigma_membership(1, 1).member)
        self.assertFalse(sigma_membership(Fraction(1, 2), 1).member)

    def test_out_of_range(self):
        self.assertFalse(sigma_membership(5, 4).member)
        self.assertFalse(sigma_membership(-1, 4).member)
        with self.assertRaises(ParameterOutOfRange):
            sigma_membership(1, 0)

    @given(
        st.integers(min_value=1, max_value=7),
        st.fractions(min_value=0, max_value=7, max_denominator=60),
    )
    def test_reflection_symmetry(self, r, alpha):
        if alpha <= r:
            self.assertEqual(
                sigma_membership(alpha, r).member, sigma_membership(r - alpha, r).member
            )
