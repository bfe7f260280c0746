from subfactorkit.conf import settings
from subfactorkit.core.utils import parse_rational
from subfactorkit.management.base import ReportCommand
from subfactorkit.projection_sums import exact_construct
from subfactorkit.projection_sums import feasibility
from subfactorkit.projection_sums import solve_sum


class Command(ReportCommand):
    help = "Realize beta 1_dim as a sum of r projections."

    def add_command_arguments(self, parser):
        parser.add_argument("--r", type=int, required=True)
        parser.add_argument("--beta", required=True, help="p/q")
        parser.add_argument("--dim", type=int, required=True)
        parser.add_argument(
            "--method", choices=("auto", "exact", "solver"), default="auto"
        )
        parser.add_argument("--restarts", type=int)
        parser.add_argument("--workers", type=int)
        parser.add_argument("--solver-tol", type=float)

    def report(self, config, **options):
        r, dim = options["r"], options["dim"]
        beta = parse_rational(options["beta"])
        solver_tol = options.get("solver_tol") or settings.SOLVER_TOLERANCE
        verdict = feasibility(r, beta, dim)
        result = None
        if options["method"] in ("auto", "exact"):
            result = exact_construct(r, beta, dim)
        if result is None and options["method"] != "exact":
            result = solve_sum(
                r,
                beta,
                dim,
                seed=config.seed,
                tol=solver_tol,
                restarts=options.get("restarts"),
                workers=options.get("workers"),
                cap=config.dimension_cap,
            )
        document = {"feasibility": verdict, "solver_tolerance": solver_tol}
        if result is None:
            document["tuple"] = None
            document["reason"] = "no closed form; rerun with --method auto or solver"
            document["pass"] = False
        else:
            document["tuple"] = result
            document["pass"] = result.max_residual < solver_tol
        return document, document["pass"]
