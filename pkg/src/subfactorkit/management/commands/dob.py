from subfactorkit.core.serialization import basis_from_dict
from subfactorkit.management.base import ReportCommand
from subfactorkit.pimsner_popa import d_ob_value


class Command(ReportCommand):
    help = "||sum_j m_j* m_j|| of a right orthonormal basis."

    def add_command_arguments(self, parser):
        parser.add_argument("file", help="basis JSON file")

    def report(self, config, **options):
        candidate, __ = basis_from_dict(self.load(options["file"]))
        value = d_ob_value(candidate, tol=config.tolerance)
        return {"check": "d_ob", "size": len(candidate), "d_ob": value, "pass": True}, True
