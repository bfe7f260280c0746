from subfactorkit.core.grids.registry import get_grid
from subfactorkit.lambda_sets import band_edges
from subfactorkit.lambda_sets import known_families
from subfactorkit.management.base import ReportCommand


class Command(ReportCommand):
    help = "List the explicit relative dimension families of a grid model."

    def add_command_arguments(self, parser):
        parser.add_argument("--model", required=True, help="e.g. spin:6, vertex:3, onb:4")
        parser.add_argument(
            "--families", default="all", help="comma separated family names or 'all'"
        )
        parser.add_argument("--json", dest="out", help="alias of --out")

    def report(self, config, **options):
        grid = get_grid(options["model"])
        elements = known_families(grid, families=options["families"])
        document = {
            "model": grid.label,
            "index": grid.index,
            "count": len(elements),
            "elements": elements,
        }
        if grid.index > 4:
            document["band"] = band_edges(grid.index)
        return document, True
