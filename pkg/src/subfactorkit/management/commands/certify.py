from subfactorkit.conf import settings
from subfactorkit.core.exceptions import MalformedInput
from subfactorkit.core.serialization import projection_tuple_from_dict
from subfactorkit.core.utils import parse_rational
from subfactorkit.management.base import ReportCommand
from subfactorkit.projection_sums import certify_lambda_element
from subfactorkit.projection_sums import exact_construct
from subfactorkit.projection_sums import LambdaCertificate
from subfactorkit.projection_sums import solve_sum


class Command(ReportCommand):
    help = (
        "Certify (beta + i)/(2n) as a relative dimension of a spin or vertex grid "
        "stage, or re-validate a stored certificate."
    )

    def add_command_arguments(self, parser):
        parser.add_argument("--model", help="spin:2n or vertex:2n")
        parser.add_argument("--stage", type=int, default=1, help="k; the base lives in M_{4^k}")
        parser.add_argument("--i", type=int, default=0)
        parser.add_argument("--base", help="projection tuple JSON file (4 projections)")
        parser.add_argument("--beta", help="build the base tuple for this beta instead")
        parser.add_argument("--check", help="re-validate a certificate JSON file")
        parser.add_argument("--solver-tol", type=float)

    def base_tuple(self, config, options, tol):
        if options.get("base"):
            return projection_tuple_from_dict(self.load(options["base"]))
        if options.get("beta") is None:
            raise MalformedInput("certify needs --base or --beta")
        beta = parse_rational(options["beta"])
        dim = 4 ** options["stage"]
        base = exact_construct(4, beta, dim)
        if base is None:
            base = solve_sum(4, beta, dim, seed=config.seed, tol=tol, cap=config.dimension_cap)
        return base

    def report(self, config, **options):
        tol = options.get("solver_tol") or settings.SOLVER_TOLERANCE
        if options.get("check"):
            certificate = LambdaCertificate.from_dict(self.load(options["check"]))
            document = certificate.to_dict()
            document["revalidated"] = certificate.revalidate()
            return document, document["revalidated"]
        if not options.get("model"):
            raise MalformedInput("certify needs --model (or --check)")
        slug, __, order = options["model"].partition(":")
        try:
            order = int(order)
        except ValueError:
            raise MalformedInput("model must look like spin:6, got %r" % options["model"])
        if order % 2:
            raise MalformedInput("certificates need an even order 2n, got %d" % order)
        base = self.base_tuple(config, options, tol)
        certificate = certify_lambda_element(
            order // 2, options["stage"], base, options["i"], model=slug, tol=tol
        )
        return certificate.to_dict(), certificate.passed
