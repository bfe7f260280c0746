import math

from django.core.checks import Error
from django.core.checks import Warning


class Tags:
    tolerances = "subfactorkit_tolerances"
    resources = "subfactorkit_resources"


def check_tolerances(app_configs, **kwargs):
    from subfactorkit.conf import settings

    messages = []
    tolerance = settings.TOLERANCE
    if not (isinstance(tolerance, (int, float)) and math.isfinite(tolerance) and tolerance > 0):
        messages.append(
            Error(
                "SUBFACTORKIT_TOLERANCE must be a positive finite number, got %r"
                % (tolerance,),
                id="subfactorkit.E001",
            )
        )
    elif settings.SOLVER_TOLERANCE < tolerance:
        messages.append(
            Warning(
                "SUBFACTORKIT_SOLVER_TOLERANCE (%r) is tighter than "
                "SUBFACTORKIT_TOLERANCE (%r)" % (settings.SOLVER_TOLERANCE, tolerance),
                hint="Set it to at least SUBFACTORKIT_TOLERANCE.",
                id="subfactorkit.W002",
            )
        )
    return messages


def check_resources(app_configs, **kwargs):
    from subfactorkit.conf import settings

    messages = []
    if not isinstance(settings.DIMENSION_CAP, int) or settings.DIMENSION_CAP < 1:
        messages.append(
            Error(
                "SUBFACTORKIT_DIMENSION_CAP must be an integer >= 1, got %r"
                % (settings.DIMENSION_CAP,),
                id="subfactorkit.E003",
            )
        )
    if not isinstance(settings.SOLVER_RESTARTS, int) or settings.SOLVER_RESTARTS < 1:
        messages.append(
            Error(
                "SUBFACTORKIT_SOLVER_RESTARTS must be an integer >= 1, got %r"
                % (settings.SOLVER_RESTARTS,),
                id="subfactorkit.E004",
            )
        )
    return messages
