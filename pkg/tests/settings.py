import os

TESTS_DATA_ROOT = os.path.dirname(__file__)

DEBUG = True
INSTALLED_APPS = [
    "subfactorkit.apps.SubfactorkitConfig",
]
SECRET_KEY = "subfactorkit-tests-only"
USE_TZ = True

SUBFACTORKIT_SEED = 7
SUBFACTORKIT_SOLVER_RESTARTS = 20

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {"null": {"class": "logging.NullHandler"}},
    "loggers": {"subfactorkit": {"handlers": ["null"], "level": "WARNING"}},
}
