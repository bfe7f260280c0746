import json
import os
import tempfile
from io import StringIO

import numpy as np
from django.core.management import call_command
from django.test import override_settings

from subfactorkit.core.utils import object_to_json

TOLERANCE = 1e-10


class subfactorkit_override_settings(override_settings):
    def enable(self):
        super().enable()
        self.reload_subfactorkit_settings()

    def disable(self):
        super().disable()
        self.reload_subfactorkit_settings()

    def reload_subfactorkit_settings(self):
        from importlib import reload
        from subfactorkit.conf import settings

        reload(settings)


class MatrixAssertionsMixin:
    """
    Assertions on matrices and residual reports shared by the algebra tests.
    """

    tolerance = TOLERANCE

    def assertMatrixEqual(self, a, b, tol=None):
        tol = self.tolerance if tol is None else tol
        a, b = np.asarray(a), np.asarray(b)
        self.assertEqual(a.shape, b.shape)
        self.assertLess(float(np.max(np.abs(a - b), initial=0.0)), tol)

    def assertPasses(self, report):
        self.assertTrue(report.passed, "check failed: %s" % (report.as_dict(),))

    def assertFails(self, report):
        self.assertFalse(report.passed, "check unexpectedly passed: %s" % (report.as_dict(),))


class CommandTestMixin:
    """
    Runs management commands through call_command and parses their JSON.
    Temporary input files are removed on tearDown.
    """

    def setUp(self):
        super().setUp()
        self._paths = []

    def tearDown(self):
        for path in self._paths:
            if os.path.exists(path):
                os.unlink(path)
        super().tearDown()

    def write_json(self, document):
        handle = tempfile.NamedTemporaryFile("w", delete=False, suffix=".json")
        with handle:
            handle.write(object_to_json(document))
        self._paths.append(handle.name)
        return handle.name

    def temporary_path(self):
        handle = tempfile.NamedTemporaryFile("w", delete=False, suffix=".json")
        handle.close()
        self._paths.append(handle.name)
        return handle.name

    def run_command(self, name, *args, **options):
        out = StringIO()
        call_command(name, *args, stdout=out, **options)
        return json.loads(out.getvalue())
