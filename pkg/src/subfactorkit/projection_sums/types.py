from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import block_diag

from subfactorkit.algebra.matrices import adjoint
from subfactorkit.algebra.matrices import as_matrix
from subfactorkit.algebra.matrices import identity
from subfactorkit.algebra.matrices import norm
from subfactorkit.conf import settings
from subfactorkit.core.exceptions import DimensionMismatch
from subfactorkit.core.exceptions import MalformedInput
from subfactorkit.core.exceptions import ParameterOutOfRange


@dataclass(frozen=True)
class RankProfile:
    """Ranks of r projections in dimension ``dim`` summing to beta 1."""

    ranks: tuple
    dim: int
    beta: Fraction

    def __post_init__(self):
        beta = Fraction(self.beta)
        ranks = tuple(int(k) for k in self.ranks)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "ranks", ranks)
        if any(k < 0 or k > self.dim for k in ranks):
            raise ParameterOutOfRange(
                "ranks must lie in 0..%d, got %s" % (self.dim, list(ranks))
            )
        if sum(ranks) != self.dim * beta:
            raise ParameterOutOfRange(
                "ranks %s do not sum to %d * %s" % (list(ranks), self.dim, beta)
            )

    @property
    def r(self):
        return len(self.ranks)

    def as_dict(self):
        from subfactorkit.core.utils import format_rational

        return {"ranks": list(self.ranks), "dim": self.dim, "beta": format_rational(self.beta)}


def enumerate_profiles(r, beta, dim):
    """
    Every rank profile (as a non-increasing tuple) for r projections summing
    to beta 1 in dimension ``dim``. Balanced profiles come first.
    """
    total = dim * Fraction(beta)
    if total.denominator != 1:
        return []
    total = int(total)
    profiles = []

    def extend(prefix, remaining, slots, ceiling):
        if slots == 0:
            if remaining == 0:
                profiles.append(tuple(prefix))
            return
        if remaining > slots * ceiling:
            return
        for k in range(min(ceiling, remaining), -1, -1):
            extend(prefix + [k], remaining - k, slots - 1, k)

    extend([], total, r, dim)
    profiles.sort(key=lambda ranks: (max(ranks, default=0), tuple(-k for k in ranks)))
    return [RankProfile(ranks=ranks, dim=dim, beta=beta) for ranks in profiles]


class ProjectionTuple:
    """
    r projections of one dimension meant to sum to beta 1. ``info`` holds
    provenance such as the solver profile and seed.
    """

    def __init__(self, projections, beta, info=None):
        projections = [as_matrix(p) for p in projections]
        if not projections:
            raise MalformedInput("a projection tuple needs at least one projection")
        dims = {p.shape[0] for p in projections}
        if len(dims) != 1:
            raise DimensionMismatch("projections of dimensions %s" % sorted(dims))
        self.projections = projections
        self.beta = Fraction(beta)
        self.info = dict(info or {})

    @property
    def dim(self):
        return self.projections[0].shape[0]

    @property
    def r(self):
        return len(self.projections)

    def total(self):
        return np.sum(self.projections, axis=0)

    @property
    def residuals(self):
        eye = identity(self.dim)
        return {
            "idempotency": max(norm(p @ p - p) for p in self.projections),
            "hermiticity": max(norm(p - adjoint(p)) for p in self.projections),
            "sum": norm(self.total() - float(self.beta) * eye),
        }

    @property
    def max_residual(self):
        return max(self.residuals.values())

    def is_valid(self, tol=None):
        tol = settings.TOLERANCE if tol is None else tol
        return self.max_residual < tol

    def ranks(self):
        # Eigenvalues of a near-projection cluster at 0 and 1.
        return [
            int(np.sum(np.linalg.eigvalsh((p + adjoint(p)) / 2) > 0.5))
            for p in self.projections
        ]

    def profile(self):
        return RankProfile(ranks=tuple(self.ranks()), dim=self.dim, beta=self.beta)

    def complement(self):
        eye = identity(self.dim)
        return ProjectionTuple(
            [eye - p for p in self.projections], self.r - self.beta, info=self.info
        )

    def tensor_identity(self, m):
        """q_j = 1_m (x) p_j."""
        eye = identity(m)
        return ProjectionTuple(
            [np.kron(eye, p) for p in self.projections], self.beta, info=self.info
        )

    def padded(self, zeros=0, identities=0):
        eye = identity(self.dim)
        extra = [np.zeros_like(eye)] * zeros + [eye] * identities
        return ProjectionTuple(
            self.projections + extra, self.beta + identities, info=self.info
        )

    def direct_sum(self, other):
        """Blockwise sum of two tuples with one beta; the shorter one is padded with zeros."""
        if other.beta != self.beta:
            raise ParameterOutOfRange(
                "direct sums need equal beta, got %s and %s" % (self.beta, other.beta)
            )
        r = max(self.r, other.r)
        left = self.padded(zeros=r - self.r)
        right = other.padded(zeros=r - other.r)
        return ProjectionTuple(
            [block_diag(p, q) for p, q in zip(left.projections, right.projections)],
            self.beta,
        )

    def as_dict(self):
        from subfactorkit.core.serialization import projection_tuple_to_dict

        data = projection_tuple_to_dict(self)
        data["residuals"] = self.residuals
        data["ranks"] = self.ranks()
        if self.info:
            data["info"] = self.info
        return data

    def __repr__(self):
        return "<ProjectionTuple r=%d dim=%d beta=%s>" % (self.r, self.dim, self.beta)
