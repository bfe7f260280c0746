from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.core.utils import format_rational

from .bands import band_contains


@dataclass(frozen=True)
class LambdaFamilyElement:
    """
    A claimed relative dimension alpha (E_N(p) = alpha 1 for some projection
    p) of a model of the given index.

    ``family`` is the tag of the construction, ``params`` its parameters,
    ``provenance`` a short description of the construction, ``covered``
    whether the parameters lie in the range the construction is proved for,
    and ``bands`` the exact band flag for every index the element is
    checked against (the model index first).
    """

    value: Fraction
    family: str
    index: Fraction
    provenance: str
    params: tuple = ()
    covered: bool = True
    notes: tuple = ()
    extra_indices: tuple = ()
    bands: tuple = field(init=False, default=())

    def __post_init__(self):
        value = Fraction(self.value)
        if not 0 <= value <= 1:
            raise ParameterOutOfRange("relative dimension %s outside [0, 1]" % value)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "index", Fraction(self.index))
        indices = (self.index,) + tuple(Fraction(i) for i in self.extra_indices)
        object.__setattr__(
            self,
            "bands",
            tuple((i, band_contains(i, value) if i > 4 else None) for i in indices),
        )

    @property
    def in_band(self):
        """Exact band flag for the model index; False when the band is undefined."""
        return bool(self.bands[0][1])

    @property
    def tag(self):
        if not self.params:
            return self.family
        return "%s(%s)" % (
            self.family,
            ",".join("%s=%s" % (key, value) for key, value in self.params),
        )

    def complement(self, provenance="complement closure"):
        return LambdaFamilyElement(
            value=1 - self.value,
            family="complement",
            index=self.index,
            provenance=provenance,
            params=(("of", self.tag),),
            covered=self.covered,
            extra_indices=self.extra_indices,
        )

    def as_dict(self):
        return {
            "value": format_rational(self.value),
            "family": self.tag,
            "provenance": self.provenance,
            "in_band": self.in_band,
            "covered": self.covered,
            "index": format_rational(self.index),
            "bands": {
                format_rational(index): flag for index, flag in self.bands
            },
            "notes": list(self.notes),
        }
