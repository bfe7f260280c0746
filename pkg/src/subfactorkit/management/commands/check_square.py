from subfactorkit.commuting_square import is_commuting_square
from subfactorkit.commuting_square import is_nondegenerate
from subfactorkit.core.serialization import quadruple_from_dict
from subfactorkit.management.base import ReportCommand


class Command(ReportCommand):
    help = "Check a quadruple of algebras for the commuting square conditions."

    def add_command_arguments(self, parser):
        parser.add_argument("file", help="quadruple JSON file with N, P, Q and M")

    def report(self, config, **options):
        quadruple = quadruple_from_dict(self.load(options["file"]))
        commuting = is_commuting_square(quadruple, tol=config.tolerance)
        nondegenerate = is_nondegenerate(quadruple, tol=config.tolerance)
        residuals = dict(commuting.residuals)
        residuals.update(nondegenerate.residuals)
        document = {
            "check": "commuting_square",
            "commuting": commuting.passed,
            "nondegenerate": nondegenerate.passed,
            "residuals": residuals,
            "worst": commuting.worst,
            "span_dimension": nondegenerate.details["span_dimension"],
        }
        # Degenerate commuting squares are reported, not failed.
        return document, commuting.passed
