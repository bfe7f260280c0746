from django.core.checks import Error
from django.core.checks import registry
from django.core.checks import Warning
from django.test import SimpleTestCase

from subfactorkit.checks import Tags

from ..base import subfactorkit_override_settings


class CheckTests(SimpleTestCase):
    def test_defaults_pass(self):
        self.assertEqual(registry.run_checks(tags=[Tags.tolerances]), [])
        self.assertEqual(registry.run_checks(tags=[Tags.resources]), [])

    def test_tolerance_must_be_positive(self):
        with subfactorkit_override_settings(SUBFACTORKIT_TOLERANCE=-1):
            errors = registry.run_checks(tags=[Tags.tolerances])
        self.assertEqual(
            errors,
            [
                Error(
                    "SUBFACTORKIT_TOLERANCE must be a positive finite number, got -1",
                    id="subfactorkit.E001",
                )
            ],
        )

    def test_solver_tolerance_tighter_than_tolerance(self):
        with subfactorkit_override_settings(SUBFACTORKIT_SOLVER_TOLERANCE=1e-12):
            messages = registry.run_checks(tags=[Tags.tolerances])
        self.assertEqual(len(messages), 1)
        self.assertIsInstance(messages[0], Warning)
        self.assertEqual(messages[0].id, "subfactorkit.W002")

    def test_resources(self):
        with subfactorkit_override_settings(
            SUBFACTORKIT_DIMENSION_CAP=0, SUBFACTORKIT_SOLVER_RESTARTS="many"
        ):
            errors = registry.run_checks(tags=[Tags.resources])
        self.assertEqual([e.id for e in errors], ["subfactorkit.E003", "subfactorkit.E004"])
