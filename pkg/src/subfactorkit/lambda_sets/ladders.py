"""
The sets Sigma_r of scalars b for which b 1 is a sum of r projections.

Sigma_r consists of two increasing ladders (the orbits of 0 and 1 under
x -> 1 + 1/(r - 1 - x)), their reflections x -> r - x, and, for r >= 4, the
closed interval of all b with b (r - b) >= r. Everything here is exact.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from subfactorkit.core.exceptions import ParameterOutOfRange

log = logging.getLogger(__name__)


def phi_map(n, x):
    """One ladder step x -> 1 + 1/(n - 1 - x); None once the pole is reached."""
    denominator = n - 1 - Fraction(x)
    if denominator <= 0:
        return None
    return 1 + 1 / denominator


def _ladder(n, start, depth=None):
    """Yield the ladder from ``start`` while it stays at or below n/2."""
    x = Fraction(start)
    produced = 0
    while x <= Fraction(n, 2) and x * (n - x) < n:
        yield x
        produced += 1
        if depth is not None and produced >= depth:
            return
        following = phi_map(n, x)
        if following is None or following <= x:
            return
        x = following


def lambda_ladder(n, depth):
    """
    The first ``depth`` terms of the two ladders of Sigma_n, starting at 0 and
    at 1. Sequences end early once a term would exceed n/2.
    """
    if n < 3:
        raise ParameterOutOfRange("ladders are defined for n >= 3, got %d" % n)
    if depth < 1:
        raise ParameterOutOfRange("depth must be >= 1, got %d" % depth)
    return list(_ladder(n, 0, depth)), list(_ladder(n, 1, depth))


def phi4_iterate(x, k):
    """k-fold iteration of Phi_4(x) = 1 + 1/(3 - x)."""
    x = Fraction(x)
    for __ in range(k):
        x = 1 + 1 / (3 - x)
    return x


def phi4_closed_form(k):
    """Phi_4^(k)(1) = (2k + 1)/(k + 1)."""
    if k < 0:
        raise ParameterOutOfRange("k must be >= 0, got %d" % k)
    return Fraction(2 * k + 1, k + 1)


def beta_m(m):
    """beta_m = Phi_4^(2^m - 1)(1) = (2^(m+1) - 1)/2^m."""
    if m < 0:
        raise ParameterOutOfRange("m must be >= 0, got %d" % m)
    return phi4_closed_form(2 ** m - 1)


def grid_dimension_exponent(m):
    """Least r with 4^r beta_m an integer, i.e. 2^m | 4^r."""
    return (m + 1) // 2


@dataclass(frozen=True)
class MembershipWitness:
    """
    ``part`` is one of "interval", "ladder", "reflected_ladder" for members.
    For non-members ``bracket`` holds, per ladder, the last term below and
    the first term above the (reflected) value.
    """

    member: bool
    value: Fraction
    r: int
    part: str = None
    ladder: int = None
    position: int = None
    bracket: tuple = ()

    def as_dict(self):
        from subfactorkit.core.utils import format_rational

        data = {
            "member": self.member,
            "value": format_rational(self.value),
            "r": self.r,
            "part": self.part,
        }
        if self.ladder is not None:
            data["ladder"] = self.ladder
            data["position"] = self.position
        if self.bracket:
            data["bracket"] = [
                [None if x is None else format_rational(x) for x in pair]
                for pair in self.bracket
            ]
        return data


def sigma_membership(alpha, r):
    """
    Exact decision of alpha in Sigma_r, with a witness.

    The ladders increase towards r t < r/2 and stay strictly below the
    interval, so iterating until a term passes alpha terminates.
    """
    alpha = Fraction(alpha)
    if r < 1:
        raise ParameterOutOfRange("r must be >= 1, got %d" % r)
    if alpha < 0 or alpha > r:
        return MembershipWitness(member=False, value=alpha, r=r)
    if r >= 4 and alpha * (r - alpha) >= r:
        return MembershipWitness(member=True, value=alpha, r=r, part="interval")
    reflected = alpha > Fraction(r, 2)
    target = r - alpha if reflected else alpha
    bracket = []
    for number, start in enumerate((0, 1), start=1):
        below = above = None
        for position, term in enumerate(_ladder(r, start)):
            if term == target:
                return MembershipWitness(
                    member=True,
                    value=alpha,
                    r=r,
                    part="reflected_ladder" if reflected else "ladder",
                    ladder=number,
                    position=position,
                )
            if term > target:
                above = term
                break
            below = term
        bracket.append((below, above))
    log.debug("%s is not in Sigma_%d (brackets %s)", alpha, r, bracket)
    return MembershipWitness(member=False, value=alpha, r=r, bracket=tuple(bracket))
