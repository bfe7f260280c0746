from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from subfactorkit.core.exceptions import DimensionMismatch
from subfactorkit.core.exceptions import MalformedInput
from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.core.exceptions import PreconditionFailed
from subfactorkit.projection_sums import certify_lambda_element
from subfactorkit.projection_sums import exact_construct
from subfactorkit.projection_sums import LambdaCertificate
from subfactorkit.projection_sums import ProjectionTuple
from subfactorkit.projection_sums.certificates import block_tags


class CertificateTests(SimpleTestCase):
    def setUp(self):
        super().setUp()
        self.base = exact_construct(4, Fraction(3, 2), 4)

    def test_gamma_one_zero(self):
        certificate = certify_lambda_element(3, 1, self.base, 0)
        self.assertEqual(certificate.alpha, Fraction(1, 4))
        self.assertTrue(certificate)
        self.assertTrue(certificate.in_band)
        self.assertEqual(certificate.model, "spin:6")
        self.assertEqual(certificate.blocks, ("q1", "q2", "q3", "q4", "0", "0"))
        self.assertLess(certificate.residuals["expectation"], 1e-12)

    def test_every_padding_at_stage_one(self):
        for i in range(3):
            with self.subTest(i=i):
                certificate = certify_lambda_element(3, 1, self.base, i)
                self.assertEqual(certificate.alpha, (Fraction(3, 2) + i) / 6)
                self.assertLess(certificate.residuals["expectation"], 1e-8)
                self.assertTrue(certificate.passed)

    def test_padding_with_identities(self):
        certificate = certify_lambda_element(3, 1, self.base, 2)
        self.assertEqual(certificate.alpha, Fraction(7, 12))
        self.assertTrue(certificate.in_band)
        self.assertTrue(certificate.passed)

    def test_vertex_model(self):
        certificate = certify_lambda_element(3, 1, self.base, 1, model="vertex")
        self.assertEqual(certificate.model, "vertex:6")
        self.assertEqual(certificate.index, 36)
        self.assertEqual(certificate.alpha, Fraction(5, 12))

    def test_arguments(self):
        with self.assertRaises(ParameterOutOfRange):
            certify_lambda_element(3, 1, self.base, 3)
        with self.assertRaises(ParameterOutOfRange):
            certify_lambda_element(2, 1, self.base, 0)
        with self.assertRaises(ParameterOutOfRange):
            certify_lambda_element(3, 1, self.base, 0, model="onb")
        with self.assertRaises(DimensionMismatch):
            certify_lambda_element(3, 2, self.base, 0)
        with self.assertRaises(ParameterOutOfRange):
            certify_lambda_element(3, 1, exact_construct(3, Fraction(3, 2), 4), 0)

    def test_base_must_be_a_projection_tuple(self):
        broken = ProjectionTuple([np.eye(4) / 2] * 4, 2)
        with self.assertRaises(PreconditionFailed):
            certify_lambda_element(3, 1, broken, 0)

    def test_block_tags(self):
        self.assertEqual(block_tags(4, 1), ("q1", "q2", "q3", "q4", "1", "0", "0", "0"))

    def test_round_trip(self):
        certificate = certify_lambda_element(3, 1, self.base, 2)
        data = certificate.to_dict()
        self.assertEqual(data["alpha"], "7/12")
        self.assertEqual(data["provenance"], "padded grid projections")
        self.assertEqual(data["bands"], {"6": True, "36": True})
        self.assertEqual(
            set(data),
            {
                "model", "stage", "i", "alpha", "in_band", "bands", "blocks",
                "residuals", "tolerance", "pass", "provenance", "base",
            },
        )
        restored = LambdaCertificate.from_dict(data)
        self.assertEqual(restored.alpha, certificate.alpha)
        self.assertTrue(restored.revalidate())

    def test_tampered_alpha(self):
        data = certify_lambda_element(3, 1, self.base, 2).to_dict()
        data["alpha"] = "2/3"
        with self.assertRaises(MalformedInput):
            LambdaCertificate.from_dict(data)
        del data["base"]
        with self.assertRaises(MalformedInput):
            LambdaCertificate.from_dict(data)
