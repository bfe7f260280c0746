"""
Which scalars beta 1_N are sums of r projections: exactly when beta lies in
Sigma_r and N beta is an integer.
"""
from dataclasses import dataclass
from fractions import Fraction

from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.core.utils import format_rational
from subfactorkit.lambda_sets.ladders import MembershipWitness
from subfactorkit.lambda_sets.ladders import sigma_membership


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    r: int
    beta: Fraction
    dim: int
    reason: str
    membership: MembershipWitness

    def __bool__(self):
        return self.feasible

    def as_dict(self):
        return {
            "feasible": self.feasible,
            "r": self.r,
            "beta": format_rational(self.beta),
            "dim": self.dim,
            "reason": self.reason,
            "membership": self.membership.as_dict(),
        }


def check_arguments(r, beta, dim):
    beta = Fraction(beta)
    if r < 1:
        raise ParameterOutOfRange("r must be >= 1, got %d" % r)
    if dim < 1:
        raise ParameterOutOfRange("dimension must be >= 1, got %d" % dim)
    if beta < 0:
        raise ParameterOutOfRange("beta must be >= 0, got %s" % beta)
    return beta


def feasibility(r, beta, dim):
    beta = check_arguments(r, beta, dim)
    membership = sigma_membership(beta, r)
    integral = (dim * beta).denominator == 1
    failures = []
    if not membership.member:
        failures.append("%s is not in Sigma_%d" % (format_rational(beta), r))
    if not integral:
        failures.append(
            "%d * %s is not an integer" % (dim, format_rational(beta))
        )
    return FeasibilityVerdict(
        feasible=not failures,
        r=r,
        beta=beta,
        dim=dim,
        reason="; ".join(failures) or "%s part of Sigma_%d" % (membership.part, r),
        membership=membership,
    )
