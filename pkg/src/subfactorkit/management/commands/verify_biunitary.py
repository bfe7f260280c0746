from subfactorkit.core.serialization import matrix_from_dict
from subfactorkit.hadamard import verify_biunitary
from subfactorkit.management.base import ReportCommand


class Command(ReportCommand):
    help = "Check that a matrix in M_n (x) M_k is bi-unitary."

    def add_command_arguments(self, parser):
        parser.add_argument("file", help="matrix JSON file")
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--k", type=int, required=True)

    def report(self, config, **options):
        m = matrix_from_dict(self.load(options["file"]))
        result = verify_biunitary(m, options["n"], options["k"], tol=config.tolerance)
        return result.as_dict(), result.passed
