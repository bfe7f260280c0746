"""
Built-in grid models: spin models of Hadamard matrices, vertex models of
bi-unitary matrices, and inclusions with a unitary orthonormal basis.
"""
import dataclasses
from fractions import Fraction

from subfactorkit.conf import settings
from subfactorkit.core.grids import registry
from subfactorkit.core.grids.base import BaseGrid
from subfactorkit.lambda_sets.elements import LambdaFamilyElement
from subfactorkit.lambda_sets.orbits import gamma_sequence

#: Carried in the notes of the reciprocal families.
BAND_EDGE_NOTE = "band edge taken as t < 1/2 where the statement reads t > 1/2"


class SpinGrid(BaseGrid):
    """u Delta_n u* c M_n over Delta_n c C; the limit has index n."""

    slug = "spin"
    families = ("multiples", "midpoint", "reciprocal", "reciprocal_complement", "gamma")

    @property
    def index(self):
        return Fraction(self.n)

    def _element(self, value, family, provenance, covered=True, notes=(), **params):
        return LambdaFamilyElement(
            value=value,
            family=family,
            index=self.index,
            provenance=provenance,
            params=tuple(params.items()),
            covered=covered,
            notes=notes,
        )

    def multiples(self):
        # E_Delta(w P_k w*) = k/n for any complex Hadamard w
        return [
            self._element(Fraction(k, self.n), "multiples", "Hadamard rank projections", k=k)
            for k in range(self.n + 1)
        ]

    def midpoint(self):
        k = (self.n + 1) // 2
        return [
            self._element(
                Fraction(k, self.n),
                "midpoint",
                "midpoint of the Hadamard multiples",
                covered=self.n > 4,
                k=k,
            )
        ]

    def reciprocal(self):
        return [
            self._element(
                Fraction(1, k),
                "reciprocal",
                "reciprocal family of the amplified multiples",
                covered=self.n > 4 and 2 <= k <= self.n - 2,
                notes=(BAND_EDGE_NOTE,),
                k=k,
            )
            for k in range(2, self.n + 1)
        ]

    def reciprocal_complement(self):
        return [
            self._element(
                Fraction(k - 1, k),
                "reciprocal_complement",
                "reciprocal family of the amplified multiples",
                covered=self.n > 4 and 2 <= k <= self.n - 2,
                notes=(BAND_EDGE_NOTE,),
                k=k,
            )
            for k in range(2, self.n + 1)
        ]

    def gamma(self):
        """gamma_{m,i} for even orders n = 2n' with n' >= 3."""
        if self.n % 2 or self.n < 6:
            return []
        half = self.n // 2
        ms = range(1, settings.GAMMA_DEPTH + 1)
        return [
            element
            for i in range(self.n - 3)
            for element in gamma_sequence(half, i, ms)
        ]

    def orbit_seeds(self, elements):
        return [e for e in elements if e.family == "reciprocal"]


class VertexGrid(BaseGrid):
    """Ad_v(C (x) M_n) c M_n (x) M_n over C c M_n (x) C; the limit has index n^2."""

    slug = "vertex"
    families = ("multiples", "reciprocal", "reciprocal_complement", "gamma")
    discrepancy = "printed as (nk - 1)/k, which exceeds 1; complement 1 - 1/(nk) emitted"

    @property
    def index(self):
        return Fraction(self.n ** 2)

    def _element(self, value, family, provenance, covered=True, notes=(), **params):
        return LambdaFamilyElement(
            value=value,
            family=family,
            index=self.index,
            provenance=provenance,
            params=tuple(params.items()),
            covered=covered,
            notes=notes,
        )

    def multiples(self):
        # E_C is the normalized trace on M_n (x) C, so rank k projections give k/n
        return [
            self._element(
                Fraction(k, self.n),
                "multiples",
                "trace of rank projections in M_n",
                covered=self.n > 2,
                k=k,
            )
            for k in range(self.n + 1)
        ]

    def reciprocal(self):
        return [
            self._element(
                Fraction(1, self.n * k),
                "reciprocal",
                "reciprocal family of the amplified vertex multiples",
                covered=self.n > 2 and 1 <= k <= self.n - 1,
                notes=(BAND_EDGE_NOTE,),
                k=k,
            )
            for k in range(1, self.n + 1)
        ]

    def reciprocal_complement(self):
        return [
            self._element(
                1 - Fraction(1, self.n * k),
                "reciprocal_complement",
                "reciprocal family of the amplified vertex multiples",
                covered=self.n > 2 and 1 <= k <= self.n - 1,
                notes=(self.discrepancy, BAND_EDGE_NOTE),
                k=k,
            )
            for k in range(1, self.n + 1)
        ]

    def gamma(self):
        """gamma_{m,i} for index (2n')^2, i.e. even n = 2n' with n' >= 3."""
        if self.n % 2 or self.n < 6:
            return []
        half = self.n // 2
        ms = range(1, settings.GAMMA_DEPTH + 1)
        return [
            dataclasses.replace(element, index=self.index, extra_indices=(self.n,))
            for i in range(self.n - 3)
            for element in gamma_sequence(half, i, ms)
        ]

    def orbit_seeds(self, elements):
        return [e for e in elements if e.family == "reciprocal"]


class UnitaryBasisGrid(BaseGrid):
    """
    N c M with a unitary orthonormal basis of size n, so [M : N] = n and the
    partial sums of the basis give m/n in Lambda(M_1, M).
    """

    slug = "onb"
    aliases = ("unitary_onb",)
    families = ("multiples",)

    @property
    def index(self):
        return Fraction(self.n)

    def multiples(self):
        return [
            LambdaFamilyElement(
                value=Fraction(m, self.n),
                family="multiples",
                index=self.index,
                provenance="partial sums of a unitary orthonormal basis",
                params=(("m", m),),
            )
            for m in range(self.n + 1)
        ]


registry.register(SpinGrid)
registry.register(VertexGrid)
registry.register(UnitaryBasisGrid)
