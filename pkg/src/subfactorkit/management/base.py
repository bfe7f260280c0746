import logging
import math
from dataclasses import dataclass

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from subfactorkit.conf import settings
from subfactorkit.core import exceptions
from subfactorkit.core.utils import load_json
from subfactorkit.core.utils import object_to_json

log = logging.getLogger("subfactorkit")

#: Errors that mean "the input was understood and is wrong" (exit code 1).
#: Every other SubfactorkitError is a usage or input error (exit code 2).
VERIFICATION_ERRORS = (
    exceptions.InvalidHadamard,
    exceptions.InvalidBiUnitary,
    exceptions.Infeasible,
    exceptions.NotFound,
)

VERBOSITY_LEVELS = {
    0: logging.ERROR,
    1: logging.WARNING,
    2: logging.INFO,
    3: logging.DEBUG,
}


@dataclass(frozen=True)
class RunConfig:
    tolerance: float
    dimension_cap: int
    seed: int
    output: str = None

    def __post_init__(self):
        if not (self.tolerance > 0 and math.isfinite(self.tolerance)):
            raise CommandError(
                "--tol must be positive and finite, got %r" % self.tolerance, returncode=2
            )
        if self.dimension_cap < 1:
            raise CommandError(
                "--cap must be >= 1, got %r" % self.dimension_cap, returncode=2
            )

    @classmethod
    def from_options(cls, options):
        def pick(name, default):
            value = options.get(name)
            return default if value is None else value

        return cls(
            tolerance=float(pick("tol", settings.TOLERANCE)),
            dimension_cap=int(pick("cap", settings.DIMENSION_CAP)),
            seed=int(pick("seed", settings.SEED)),
            output=options.get("out"),
        )


class ReportCommand(BaseCommand):
    """
    Base for every subfactorkit command: adds the global --tol, --cap, --seed
    and --out flags, writes the JSON report and turns the outcome into an
    exit code. Subclasses implement ``report(config, **options)`` and return
    ``(document, passed)``.
    """

    requires_system_checks = []

    def add_arguments(self, parser):
        self.add_command_arguments(parser)
        parser.add_argument("--tol", type=float, help="verification tolerance")
        parser.add_argument("--cap", type=int, help="largest matrix dimension to build")
        parser.add_argument("--seed", type=int, help="seed for randomized steps")
        parser.add_argument("--out", help="write the JSON report here instead of stdout")

    def add_command_arguments(self, parser):
        pass

    def load(self, path):
        return load_json(path)

    def emit(self, document, config):
        text = object_to_json(document)
        if config.output:
            with open(config.output, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            self.stdout.write(text, ending="")

    def handle(self, *args, **options):
        log.setLevel(VERBOSITY_LEVELS.get(options.get("verbosity", 1), logging.DEBUG))
        config = RunConfig.from_options(options)
        try:
            document, passed = self.report(config, **options)
        except VERIFICATION_ERRORS as e:
            raise CommandError(str(e), returncode=1)
        except exceptions.SubfactorkitError as e:
            raise CommandError(str(e), returncode=2)
        except OSError as e:
            raise CommandError(str(e), returncode=2)
        self.emit(document, config)
        if not passed:
            raise CommandError("verification failed", returncode=1)

    def report(self, config, **options):
        raise NotImplementedError
