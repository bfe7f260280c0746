from subfactorkit.core.exceptions import MalformedInput
from subfactorkit.core.serialization import basis_from_dict
from subfactorkit.management.base import ReportCommand
from subfactorkit.pimsner_popa import FLAGS
from subfactorkit.pimsner_popa import verify_basis


class Command(ReportCommand):
    help = "Measure the Pimsner-Popa flags of a basis file against its claims."

    def add_command_arguments(self, parser):
        parser.add_argument("file", help="basis JSON file")

    def report(self, config, **options):
        candidate, claims = basis_from_dict(self.load(options["file"]))
        unknown = [claim for claim in claims if claim not in FLAGS]
        if unknown:
            raise MalformedInput("unknown claims: %s" % ", ".join(unknown))
        flags = verify_basis(candidate, tol=config.tolerance)
        document = flags.as_dict()
        document["claims"] = list(claims)
        document["pass"] = flags.holds(*claims)
        return document, document["pass"]
