from subfactorkit.core.utils import parse_range
from subfactorkit.lambda_sets.orbits import gamma_limit
from subfactorkit.lambda_sets.orbits import zeta_matrix
from subfactorkit.management.base import ReportCommand


class Command(ReportCommand):
    help = "Exact zeta matrix over gamma_{m,i}, with distinctness and band checks."

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--i", type=int, required=True)
        parser.add_argument("--m", default="1..5", help="range a..b")
        parser.add_argument("--k", default="0..5", help="range a..b")
        parser.add_argument(
            "--single-step",
            action="store_true",
            help="columns advance by one orbit step g instead of g o g",
        )

    def report(self, config, **options):
        matrix = zeta_matrix(
            options["n"],
            options["i"],
            parse_range(options["m"]),
            parse_range(options["k"]),
            single_step=options.get("single_step", False),
        )
        document = matrix.as_dict()
        document["ks"] = list(parse_range(options["k"]))
        document["limit"] = gamma_limit(options["n"], options["i"])
        document["pass"] = document["distinct"] and document["in_band"]
        return document, document["pass"]
