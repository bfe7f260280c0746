from subfactorkit.commuting_square import is_commuting_square
from subfactorkit.commuting_square import is_nondegenerate
from subfactorkit.core.serialization import matrix_from_dict
from subfactorkit.hadamard import HadamardMatrix
from subfactorkit.hadamard import spin_square
from subfactorkit.management.base import ReportCommand


class Command(ReportCommand):
    help = "Build the spin model commuting square of a Hadamard matrix and check it."

    def add_command_arguments(self, parser):
        parser.add_argument("file", help="Hadamard matrix JSON file")

    def report(self, config, **options):
        u = HadamardMatrix.from_matrix(
            matrix_from_dict(self.load(options["file"])), tol=config.tolerance
        )
        quadruple = spin_square(u, tol=config.tolerance)
        commuting = is_commuting_square(quadruple, tol=config.tolerance)
        nondegenerate = is_nondegenerate(quadruple, tol=config.tolerance)
        document = {
            "check": "spin_square",
            "order": u.order,
            "commuting": commuting.passed,
            "nondegenerate": nondegenerate.passed,
            "reports": [commuting, nondegenerate],
            "pass": commuting.passed and nondegenerate.passed,
        }
        return document, document["pass"]
