from .certificates import certify_lambda_element  # noqa
from .certificates import LambdaCertificate  # noqa
from .constructions import exact_construct  # noqa
from .feasibility import feasibility  # noqa
from .feasibility import FeasibilityVerdict  # noqa
from .oracle import brute_force_oracle  # noqa
from .solver import solve_sum  # noqa
from .types import enumerate_profiles  # noqa
from .types import ProjectionTuple  # noqa
from .types import RankProfile  # noqa
