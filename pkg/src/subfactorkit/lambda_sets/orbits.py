"""
Popa's recursive orbit and the grid families built on it.

g(x) = (1/index) / (1 - x) maps the band onto itself, fixes t and 1 - t,
and strictly decreases every point of the band towards t. Even iterates of
an element of Lambda(N c M) stay in Lambda(N c M); odd iterates land in
Lambda(M c M_1). G = g o g satisfies G(x) = (2n - 1/(1 - x))^-1 for
index 2n.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from subfactorkit.core.exceptions import BandUndefined
from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.core.utils import format_rational

from .bands import band_contains
from .elements import LambdaFamilyElement
from .ladders import beta_m

log = logging.getLogger(__name__)

GAMMA_PROVENANCE = "padded grid projections over the Phi_4 ladder"


def popa_map(index, x):
    index, x = Fraction(index), Fraction(x)
    if x >= 1:
        raise ParameterOutOfRange("the orbit map is defined for x < 1, got %s" % x)
    return (1 / index) / (1 - x)


def popa_double_map(index, x):
    """G = g o g."""
    return popa_map(index, popa_map(index, x))


@dataclass(frozen=True)
class OrbitTerm:
    step: int
    value: Fraction

    @property
    def parity(self):
        return "even" if self.step % 2 == 0 else "odd"

    @property
    def inclusion(self):
        return "N c M" if self.step % 2 == 0 else "M c M_1"

    def as_dict(self):
        return {
            "step": self.step,
            "value": format_rational(self.value),
            "parity": self.parity,
            "inclusion": self.inclusion,
        }


def popa_orbit(index, seed, steps):
    """
    seed, g(seed), ..., g^steps(seed) with parity labels. The seed must lie
    in (t, 1/2).
    """
    index, seed = Fraction(index), Fraction(seed)
    if index <= 4:
        raise BandUndefined("the orbit needs index > 4, got %s" % index)
    if not (0 < seed < Fraction(1, 2) and band_contains(index, seed)):
        raise ParameterOutOfRange(
            "seed %s is not in (t, 1/2) for index %s" % (seed, index)
        )
    if steps < 0:
        raise ParameterOutOfRange("steps must be >= 0, got %d" % steps)
    terms = [OrbitTerm(step=0, value=seed)]
    for step in range(1, steps + 1):
        terms.append(OrbitTerm(step=step, value=popa_map(index, terms[-1].value)))
    return terms


def gamma_value(n, m, i):
    """gamma_{m,i} = (4 alpha_m + i)/(2n) with 4 alpha_m = beta_m = 2 - 2^-m."""
    return (beta_m(m) + i) / (2 * n)


def gamma_limit(n, i):
    return Fraction(2 + i, 2 * n)


def gamma_sequence(n, i, ms):
    """
    gamma_{m,i} for m in ``ms``. Band flags are computed for index 2n (spin
    grid) and (2n)^2 (vertex grid); the limit (2 + i)/(2n) rides along in
    the notes.
    """
    if n < 3:
        raise ParameterOutOfRange("gamma families need n >= 3, got %d" % n)
    if not 0 <= i <= 2 * n - 4:
        raise ParameterOutOfRange("need 0 <= i <= %d, got %d" % (2 * n - 4, i))
    limit = gamma_limit(n, i)
    elements = []
    for m in ms:
        if m < 1:
            raise ParameterOutOfRange("m must be >= 1, got %d" % m)
        elements.append(
            LambdaFamilyElement(
                value=gamma_value(n, m, i),
                family="gamma",
                index=2 * n,
                provenance=GAMMA_PROVENANCE,
                params=(("m", m), ("i", i)),
                extra_indices=((2 * n) ** 2,),
                notes=("limit %s" % format_rational(limit),),
            )
        )
    return elements


@dataclass(frozen=True)
class ZetaMatrix:
    n: int
    i: int
    rows: dict
    single_step: bool = False

    @property
    def index(self):
        return 2 * self.n

    def entries(self):
        return [value for row in self.rows.values() for value in row]

    @property
    def distinct(self):
        values = self.entries()
        return len(set(values)) == len(values)

    def in_band(self):
        return all(band_contains(self.index, value) for value in self.entries())

    def as_dict(self):
        return {
            "n": self.n,
            "i": self.i,
            "index": self.index,
            "step": "g" if self.single_step else "g o g",
            "rows": {
                str(m): [format_rational(v) for v in row] for m, row in self.rows.items()
            },
            "distinct": self.distinct,
            "in_band": self.in_band(),
        }


def zeta_matrix(n, i, ms, ks, single_step=False):
    """
    Row m, column k holds zeta^(k)_{m,i}: column 0 is gamma_{m,i} and each
    further column applies G = g o g (or g alone when ``single_step``) for
    index 2n.
    """
    index = 2 * n
    step = popa_map if single_step else popa_double_map
    ks = list(ks)
    if not ks or min(ks) < 0:
        raise ParameterOutOfRange("k values must be >= 0")
    rows = {}
    for element in gamma_sequence(n, i, ms):
        m = dict(element.params)["m"]
        chain = [element.value]
        for __ in range(max(ks)):
            chain.append(step(index, chain[-1]))
        rows[m] = [chain[k] for k in ks]
    matrix = ZetaMatrix(n=n, i=i, rows=rows, single_step=single_step)
    log.debug("zeta matrix n=%d i=%d: %d entries", n, i, len(matrix.entries()))
    return matrix


def double_map_closed_form(index, x):
    """(index - 1/(1 - x))^-1; agrees with G for every x < 1 with G defined."""
    x = Fraction(x)
    return 1 / (Fraction(index) - 1 / (1 - x))
