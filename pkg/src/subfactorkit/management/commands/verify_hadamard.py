from subfactorkit.core.serialization import matrix_from_dict
from subfactorkit.hadamard import verify_hadamard
from subfactorkit.management.base import ReportCommand


class Command(ReportCommand):
    help = "Check that a matrix file holds a complex Hadamard matrix."

    def add_command_arguments(self, parser):
        parser.add_argument("file", help="matrix JSON file")

    def report(self, config, **options):
        m = matrix_from_dict(self.load(options["file"]))
        result = verify_hadamard(m, tol=config.tolerance)
        return result.as_dict(), result.passed
