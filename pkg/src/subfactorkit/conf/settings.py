import os

from django.conf import settings as django_settings

# Library use without a Django project: configure a minimal settings object
# so that every SUBFACTORKIT_* lookup below falls back to its default.
if not django_settings.configured and not os.environ.get("DJANGO_SETTINGS_MODULE"):
    django_settings.configure(
        INSTALLED_APPS=["subfactorkit"],
        LOGGING={
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "plain": {"format": "%(levelname)s %(name)s: %(message)s"},
            },
            "handlers": {
                "console": {
                    "class": "logging.StreamHandler",
                    "formatter": "plain",
                },
            },
            "loggers": {
                "subfactorkit": {"handlers": ["console"], "level": "WARNING"},
            },
        },
    )

#: Tolerance used by every matrix-level predicate (unitarity, projections,
#: span membership, commuting squares, basis checks). Reports always carry
#: the tolerance they were judged against.
TOLERANCE = getattr(django_settings, "SUBFACTORKIT_TOLERANCE", 1e-10)

#: Convergence tolerance of the numerical projection-sum solver. Converged
#: configurations are polished afterwards and both residuals are recorded.
SOLVER_TOLERANCE = getattr(django_settings, "SUBFACTORKIT_SOLVER_TOLERANCE", 1e-8)

#: Largest ambient matrix dimension any construction may materialize.
#: Crossing the cap raises ``DimensionCapExceeded``.
DIMENSION_CAP = getattr(django_settings, "SUBFACTORKIT_DIMENSION_CAP", 4096)

#: Default seed for every randomized step (solver restarts, generic elements
#: used to split centers into minimal projections).
SEED = getattr(django_settings, "SUBFACTORKIT_SEED", 0)

#: Number of restarts the solver may spend before reporting ``not-found``.
SOLVER_RESTARTS = getattr(django_settings, "SUBFACTORKIT_SOLVER_RESTARTS", 50)

#: Alternating-projection sweeps per restart.
SOLVER_MAX_ITERATIONS = getattr(
    django_settings, "SUBFACTORKIT_SOLVER_MAX_ITERATIONS", 3000
)

#: Worker threads used for solver restarts. Results do not depend on it.
SOLVER_WORKERS = getattr(django_settings, "SUBFACTORKIT_SOLVER_WORKERS", 1)

#: Residual below which an alternating-projection run is handed over to the
#: Gauss-Newton polish.
POLISH_THRESHOLD = getattr(django_settings, "SUBFACTORKIT_POLISH_THRESHOLD", 1e-3)

#: Maximum Gauss-Newton steps of the polish.
POLISH_STEPS = getattr(django_settings, "SUBFACTORKIT_POLISH_STEPS", 12)

#: Profiles tried per solver call when the caller does not fix one.
SOLVER_PROFILES = getattr(django_settings, "SUBFACTORKIT_SOLVER_PROFILES", 6)

#: Eigenvalues closer than this are treated as one spectral cluster when
#: splitting centers and simple algebras into projections.
CLUSTER_TOLERANCE = getattr(django_settings, "SUBFACTORKIT_CLUSTER_TOLERANCE", 1e-6)

#: Residual norms use the operator norm up to this dimension and the
#: Frobenius norm (an upper bound) above it.
EXACT_NORM_LIMIT = getattr(django_settings, "SUBFACTORKIT_EXACT_NORM_LIMIT", 512)

#: Digits used when band edges are rendered as decimals.
DECIMAL_DIGITS = getattr(django_settings, "SUBFACTORKIT_DECIMAL_DIGITS", 40)

#: Indentation of emitted JSON documents.
JSON_INDENT = getattr(django_settings, "SUBFACTORKIT_JSON_INDENT", 2)

#: Number of m values emitted for the gamma family by ``known_families``.
GAMMA_DEPTH = getattr(django_settings, "SUBFACTORKIT_GAMMA_DEPTH", 4)

#: Number of even steps emitted per seeded Popa orbit.
ORBIT_STEPS = getattr(django_settings, "SUBFACTORKIT_ORBIT_STEPS", 3)
