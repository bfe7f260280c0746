from io import StringIO

import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from subfactorkit.algebra.subalgebras import diagonal_algebra
from subfactorkit.algebra.subalgebras import full_algebra
from subfactorkit.algebra.subalgebras import scalars
from subfactorkit.commuting_square import QuadrupleOfAlgebras
from subfactorkit.core.serialization import basis_to_dict
from subfactorkit.core.serialization import matrix_to_dict
from subfactorkit.hadamard import fourier_hadamard
from subfactorkit.hadamard import spin_square
from subfactorkit.hadamard import swap_matrix
from subfactorkit.pimsner_popa import FLAGS
from subfactorkit.pimsner_popa import shift_basis

from ..base import CommandTestMixin


class CommandExitCodeMixin:
    def assertExitCode(self, code, name, *args, **options):
        with self.assertRaises(CommandError) as cm:
            call_command(name, *args, stdout=StringIO(), **options)
        self.assertEqual(cm.exception.returncode, code)
        return cm.exception


class HadamardCommandTests(CommandTestMixin, CommandExitCodeMixin, SimpleTestCase):
    def test_verify_hadamard(self):
        path = self.write_json(matrix_to_dict(fourier_hadamard(4).matrix))
        document = self.run_command("verify_hadamard", path)
        self.assertTrue(document["pass"])
        self.assertEqual(document["order"], 4)

    def test_not_hadamard(self):
        path = self.write_json(matrix_to_dict(np.ones((2, 2))))
        self.assertExitCode(1, "verify_hadamard", path)

    def test_report_is_written_before_failing(self):
        path = self.write_json(matrix_to_dict(np.ones((2, 2))))
        out = self.temporary_path()
        self.assertExitCode(1, "verify_hadamard", path, out=out)
        with open(out, encoding="utf-8") as handle:
            self.assertIn('"pass": false', handle.read())

    def test_input_errors(self):
        self.assertExitCode(2, "verify_hadamard", "/nonexistent/matrix.json")
        path = self.temporary_path()
        with open(path, "w", encoding="utf-8") as handle:
            handle.write("{not json")
        self.assertExitCode(2, "verify_hadamard", path)
        path = self.write_json({"dim": 3, "entries": [1]})
        self.assertExitCode(2, "verify_hadamard", path)

    def test_bad_tolerance(self):
        path = self.write_json(matrix_to_dict(fourier_hadamard(2).matrix))
        self.assertExitCode(2, "verify_hadamard", path, tol=-1.0)

    def test_verify_biunitary(self):
        path = self.write_json(matrix_to_dict(np.eye(6)))
        self.assertTrue(self.run_command("verify_biunitary", path, n=2, k=3)["pass"])
        path = self.write_json(matrix_to_dict(swap_matrix(2)))
        self.assertExitCode(1, "verify_biunitary", path, n=2, k=2)

    def test_spin_square(self):
        path = self.write_json(matrix_to_dict(fourier_hadamard(3).matrix))
        document = self.run_command("spin_square", path)
        self.assertTrue(document["commuting"])
        self.assertTrue(document["nondegenerate"])
        self.assertEqual(len(document["reports"]), 2)

    def test_spin_square_of_a_non_hadamard_matrix(self):
        path = self.write_json(matrix_to_dict(np.ones((2, 2))))
        self.assertExitCode(1, "spin_square", path)

    def test_spin_tower(self):
        path = self.write_json(matrix_to_dict(fourier_hadamard(2).matrix))
        document = self.run_command("spin_tower", path, stages=2)
        self.assertEqual(document["dimensions"], [2, 4, 4])
        self.assertTrue(document["pass"])
        self.assertExitCode(2, "spin_tower", path, stages=3, cap=4)


class SquareCommandTests(CommandTestMixin, CommandExitCodeMixin, SimpleTestCase):
    def test_check_square(self):
        path = self.write_json(spin_square(fourier_hadamard(2)).as_dict())
        document = self.run_command("check_square", path)
        self.assertTrue(document["commuting"])
        self.assertEqual(document["span_dimension"], 4)

    def test_non_commuting_square(self):
        square = QuadrupleOfAlgebras(
            N=scalars(2), P=diagonal_algebra(2), Q=diagonal_algebra(2), M=full_algebra(2)
        )
        self.assertExitCode(1, "check_square", self.write_json(square.as_dict()))

    def test_malformed_quadruple(self):
        self.assertExitCode(2, "check_square", self.write_json({"N": {}}))


class BasisCommandTests(CommandTestMixin, CommandExitCodeMixin, SimpleTestCase):
    def test_verify_basis(self):
        path = self.write_json(basis_to_dict(shift_basis(3), claims=FLAGS))
        document = self.run_command("verify_basis", path)
        self.assertTrue(document["pass"])
        self.assertEqual(document["claims"], list(FLAGS))

    def test_unknown_claim(self):
        path = self.write_json(basis_to_dict(shift_basis(2), claims=["orthogonal"]))
        self.assertExitCode(2, "verify_basis", path)

    def test_failed_claim(self):
        candidate = shift_basis(2)
        data = basis_to_dict(candidate, claims=["right"])
        data["elements"] = data["elements"][:1]
        self.assertExitCode(1, "verify_basis", self.write_json(data))

    def test_mu_construct(self):
        path = self.write_json(basis_to_dict(shift_basis(3)))
        document = self.run_command("mu_construct", path, partial_sums=True)
        self.assertTrue(document["pass"])
        self.assertEqual(len(document["mu"]), 3)
        self.assertEqual(len(document["partial_sums"]["rows"]), 3)

    def test_dob(self):
        document = self.run_command("dob", self.write_json(basis_to_dict(shift_basis(3))))
        self.assertAlmostEqual(document["d_ob"], 3.0)
