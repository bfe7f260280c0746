"""
The band (t, 1 - t) of an index > 4, with t(1 - t) = 1/index and t < 1/2.

Membership is decided exactly: alpha lies strictly inside the band iff
alpha (1 - alpha) > 1/index. Floating point never enters.
"""
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from subfactorkit.conf import settings
from subfactorkit.core.exceptions import BandUndefined
from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.core.utils import format_rational


@dataclass(frozen=True)
class BandSpec:
    index: Fraction

    def __post_init__(self):
        index = Fraction(self.index)
        if index <= 0:
            raise ParameterOutOfRange("an index must be positive, got %s" % index)
        object.__setattr__(self, "index", index)

    @property
    def defined(self):
        return self.index > 4

    def contains(self, alpha):
        return band_contains(self.index, alpha)

    def edges(self, digits=None):
        return band_edges(self.index, digits=digits)


def band_contains(index, alpha):
    index, alpha = Fraction(index), Fraction(alpha)
    if index <= 4:
        raise BandUndefined("the band is empty or degenerate for index %s <= 4" % index)
    if not 0 <= alpha <= 1:
        raise ParameterOutOfRange("relative dimensions lie in [0, 1], got %s" % alpha)
    return alpha * (1 - alpha) > 1 / index


def band_edges(index, digits=None):
    """t and 1 - t as decimal strings, plus the exact expression they evaluate."""
    index = Fraction(index)
    if index <= 4:
        raise BandUndefined("the band is empty or degenerate for index %s <= 4" % index)
    digits = settings.DECIMAL_DIGITS if digits is None else digits
    with mpmath.workdps(digits + 10):
        root = mpmath.sqrt(1 - 4 / mpmath.mpf(index.numerator) * index.denominator)
        lower = (1 - root) / 2
        upper = (1 + root) / 2
        return {
            "index": format_rational(index),
            "t": mpmath.nstr(lower, digits),
            "one_minus_t": mpmath.nstr(upper, digits),
            "t_expression": "(1 - sqrt(1 - 4/(%s)))/2" % format_rational(index),
            "one_minus_t_expression": "(1 + sqrt(1 - 4/(%s)))/2" % format_rational(index),
        }


def decimal_string(value, digits=None):
    """A rational rendered as a decimal with ``digits`` significant digits."""
    value = Fraction(value)
    digits = settings.DECIMAL_DIGITS if digits is None else digits
    with mpmath.workdps(digits + 10):
        return mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, digits)
