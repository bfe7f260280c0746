from subfactorkit.core.grids.registry import get_grid
from subfactorkit.lambda_sets import band_edges
from subfactorkit.lambda_sets import decimal_string
from subfactorkit.lambda_sets import known_families
from subfactorkit.management.base import ReportCommand


class Command(ReportCommand):
    help = "Emit (alpha, family) rows and the band edges of a model for plotting."

    def add_command_arguments(self, parser):
        parser.add_argument("--model", required=True)
        parser.add_argument("--families", default="all")
        parser.add_argument("--digits", type=int)

    def report(self, config, **options):
        grid = get_grid(options["model"])
        digits = options.get("digits")
        rows = [
            {
                "alpha": decimal_string(element.value, digits),
                "exact": element.value,
                "family": element.family,
                "tag": element.tag,
                "in_band": element.in_band,
            }
            for element in sorted(
                known_families(grid, families=options["families"]),
                key=lambda element: (element.value, element.tag),
            )
        ]
        document = {"model": grid.label, "index": grid.index, "rows": rows}
        if grid.index > 4:
            document["band"] = band_edges(grid.index, digits=digits)
        return document, True
