from django.apps import AppConfig
from django.core.checks import register

from subfactorkit.core.grids.loader import load_grids

from . import checks


class SubfactorkitConfig(AppConfig):
    name = "subfactorkit"
    verbose_name = "Subfactorkit"

    def ready(self):
        register(checks.check_tolerances, checks.Tags.tolerances)
        register(checks.check_resources, checks.Tags.resources)
        load_grids()
