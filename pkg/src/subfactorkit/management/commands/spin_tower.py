from subfactorkit.core.reports import residual_report
from subfactorkit.core.serialization import matrix_from_dict
from subfactorkit.hadamard import HadamardMatrix
from subfactorkit.hadamard import spin_tower
from subfactorkit.management.base import ReportCommand


class Command(ReportCommand):
    help = "Build the tower unitaries u_0, ..., u_K of a spin model grid."

    def add_command_arguments(self, parser):
        parser.add_argument("file", help="Hadamard matrix JSON file")
        parser.add_argument("--stages", type=int, required=True, help="K")

    def report(self, config, **options):
        u = HadamardMatrix.from_matrix(
            matrix_from_dict(self.load(options["file"])), tol=config.tolerance
        )
        tower = spin_tower(u, options["stages"], cap=config.dimension_cap)
        unitarity = residual_report(
            "spin_tower_unitarity", tower.unitarity_residuals(), config.tolerance
        )
        recursion = residual_report(
            "spin_tower_recursion", tower.recursion_residuals(), config.tolerance
        )
        document = {
            "check": "spin_tower",
            "stages": tower.depth,
            "dimensions": [stage.shape[0] for stage in tower.stages],
            "reports": [unitarity, recursion],
            "pass": unitarity.passed and recursion.passed,
        }
        return document, document["pass"]
