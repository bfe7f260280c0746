from subfactorkit.algebra.basic_construction import basic_construction
from subfactorkit.core.serialization import basis_from_dict
from subfactorkit.core.serialization import matrix_to_dict
from subfactorkit.management.base import ReportCommand
from subfactorkit.pimsner_popa import mu_unitaries
from subfactorkit.pimsner_popa import partial_sum_projections


class Command(ReportCommand):
    help = (
        "Build the unitaries mu_j = sum_k omega^(jk) l_k e_1 l_k* of a two-sided "
        "orthonormal basis in the basic construction."
    )

    def add_command_arguments(self, parser):
        parser.add_argument("file", help="basis JSON file")
        parser.add_argument(
            "--partial-sums",
            action="store_true",
            help="also report the projections sum_{i<=m} l_i e_1 l_i*",
        )

    def report(self, config, **options):
        candidate, __ = basis_from_dict(self.load(options["file"]))
        construction = basic_construction(
            candidate.sub, candidate.ambient, tol=config.tolerance, cap=config.dimension_cap
        )
        mus, result = mu_unitaries(candidate, construction, tol=config.tolerance)
        document = result.as_dict()
        document["mu"] = [matrix_to_dict(mu) for mu in mus]
        passed = result.passed
        if options.get("partial_sums"):
            partial = partial_sum_projections(candidate, construction, tol=config.tolerance)
            document["partial_sums"] = partial.as_dict()
            passed = passed and partial.residuals["projection"] < config.tolerance
        return document, passed
