from subfactorkit.core.utils import parse_rational
from subfactorkit.lambda_sets import band_contains
from subfactorkit.lambda_sets import band_edges
from subfactorkit.management.base import ReportCommand


class Command(ReportCommand):
    help = "Decide alpha in (t, 1 - t) exactly for a given index > 4."

    def add_command_arguments(self, parser):
        parser.add_argument("--index", required=True, help="index as p/q")
        parser.add_argument("--alpha", help="relative dimension as p/q")
        parser.add_argument("--digits", type=int, help="decimal digits of the band edges")

    def report(self, config, **options):
        index = parse_rational(options["index"])
        document = {"index": index, "edges": band_edges(index, digits=options.get("digits"))}
        if options.get("alpha") is not None:
            alpha = parse_rational(options["alpha"])
            document.update(
                {
                    "alpha": alpha,
                    "in_band": band_contains(index, alpha),
                    "alpha_times_complement": alpha * (1 - alpha),
                    "inverse_index": 1 / index,
                }
            )
        return document, True
