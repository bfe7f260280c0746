from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from subfactorkit.core.exceptions import DimensionMismatch
from subfactorkit.core.exceptions import MalformedInput
from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.projection_sums import enumerate_profiles
from subfactorkit.projection_sums import exact_construct
from subfactorkit.projection_sums import ProjectionTuple
from subfactorkit.projection_sums import RankProfile

from ..base import MatrixAssertionsMixin


class RankProfileTests(SimpleTestCase):
    def test_profile(self):
        profile = RankProfile(ranks=(2, 2, 1, 1), dim=4, beta=Fraction(3, 2))
        self.assertEqual(profile.r, 4)
        self.assertEqual(profile.as_dict(), {"ranks": [2, 2, 1, 1], "dim": 4, "beta": "3/2"})

    def test_invalid_profiles(self):
        with self.assertRaises(ParameterOutOfRange):
            RankProfile(ranks=(2, 1), dim=2, beta=2)
        with self.assertRaises(ParameterOutOfRange):
            RankProfile(ranks=(3, 0), dim=2, beta=Fraction(3, 2))

    def test_enumerate(self):
        profiles = enumerate_profiles(3, Fraction(3, 2), 2)
        self.assertEqual([p.ranks for p in profiles], [(1, 1, 1), (2, 1, 0)])
        self.assertEqual(enumerate_profiles(4, Fraction(1, 3), 2), [])

    def test_enumerate_balanced_first(self):
        profiles = enumerate_profiles(4, 2, 4)
        self.assertEqual(profiles[0].ranks, (2, 2, 2, 2))
        self.assertTrue(all(sum(p.ranks) == 8 for p in profiles))
        self.assertEqual(len({p.ranks for p in profiles}), len(profiles))


class ProjectionTupleTests(MatrixAssertionsMixin, SimpleTestCase):
    def setUp(self):
        super().setUp()
        self.tuple = exact_construct(3, Fraction(3, 2), 2)

    def test_basic_properties(self):
        self.assertEqual((self.tuple.r, self.tuple.dim), (3, 2))
        self.assertEqual(self.tuple.ranks(), [1, 1, 1])
        self.assertEqual(self.tuple.profile().ranks, (1, 1, 1))
        self.assertTrue(self.tuple.is_valid())

    def test_complement(self):
        complement = self.tuple.complement()
        self.assertEqual(complement.beta, Fraction(3, 2))
        self.assertTrue(complement.is_valid())

    def test_tensor_and_padding(self):
        lifted = self.tuple.tensor_identity(3)
        self.assertEqual(lifted.dim, 6)
        self.assertTrue(lifted.is_valid())
        padded = self.tuple.padded(zeros=1, identities=2)
        self.assertEqual((padded.r, padded.beta), (6, Fraction(7, 2)))
        self.assertTrue(padded.is_valid())

    def test_direct_sum(self):
        total = self.tuple.direct_sum(self.tuple.tensor_identity(2))
        self.assertEqual(total.dim, 6)
        self.assertTrue(total.is_valid())
        with self.assertRaises(ParameterOutOfRange):
            self.tuple.direct_sum(self.tuple.complement().padded(identities=1))

    def test_invalid_tuples(self):
        with self.assertRaises(MalformedInput):
            ProjectionTuple([], 1)
        with self.assertRaises(DimensionMismatch):
            ProjectionTuple([np.eye(2), np.eye(3)], 1)
        broken = ProjectionTuple([np.eye(2) / 2] * 2, 1)
        self.assertFalse(broken.is_valid())
        self.assertAlmostEqual(broken.residuals["idempotency"], 0.25)

    def test_as_dict(self):
        data = self.tuple.as_dict()
        self.assertEqual(data["beta"], "3/2")
        self.assertEqual(data["ranks"], [1, 1, 1])
        self.assertEqual(data["info"]["construction"], "exact")
