from dataclasses import dataclass
from dataclasses import field


@dataclass(frozen=True)
class CheckReport:
    """
    Outcome of a verification predicate.

    Predicates never raise for a failed check; they hand back one of these.
    ``residuals`` maps a residual name to its value, ``worst`` names the
    element that produced the largest residual (when that is meaningful) and
    ``details`` carries check-specific extras that end up in the JSON report.
    """

    check: str
    passed: bool
    residuals: dict
    tolerance: float
    worst: str = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    @property
    def max_residual(self):
        return max(self.residuals.values(), default=0.0)

    def as_dict(self):
        data = {
            "check": self.check,
            "pass": self.passed,
            "tolerance": self.tolerance,
            "residuals": {key: float(value) for key, value in self.residuals.items()},
        }
        if self.worst is not None:
            data["worst"] = self.worst
        data.update(self.details)
        return data


def residual_report(check, residuals, tolerance, worst=None, **details):
    """Build a report that passes iff every residual is below ``tolerance``."""
    passed = all(value < tolerance for value in residuals.values())
    return CheckReport(
        check=check,
        passed=passed,
        residuals=dict(residuals),
        tolerance=tolerance,
        worst=worst,
        details=details,
    )


@dataclass(frozen=True)
class FlagReport:
    """
    A family of named claims, each judged by its own residual.

    Used for Pimsner-Popa bases where right, left, orthonormal, two-sided and
    unitary are independent flags.
    """

    check: str
    residuals: dict
    tolerance: float
    worst: dict = field(default_factory=dict)

    @property
    def flags(self):
        return {name: value < self.tolerance for name, value in self.residuals.items()}

    def __getitem__(self, name):
        return self.flags[name]

    def holds(self, *names):
        flags = self.flags
        return all(flags[name] for name in names)

    def as_dict(self):
        return {
            "check": self.check,
            "tolerance": self.tolerance,
            "flags": self.flags,
            "residuals": {key: float(value) for key, value in self.residuals.items()},
            "worst": dict(self.worst),
        }
