"""
The basic construction for an inclusion of finite-dimensional algebras.

Given small c big inside M_D with the normalized trace, big acts on its trace
Hilbert space L^2(big) by left multiplication. Using big's orthonormal basis
b_1..b_d as coordinates, L^2(big) = C^d and

    (L_x)_{kl} = tr(b_k* x b_l),

the Jones projection e_1 is the orthogonal projection onto the image of
small, and the tower <big, e_1> is the algebra generated by L(big) and e_1
inside M_d (with its own normalized trace).
"""
import logging
from dataclasses import dataclass

import numpy as np

from subfactorkit.conf import settings
from subfactorkit.core.exceptions import DimensionMismatch
from subfactorkit.core.exceptions import NotContained
from subfactorkit.core.exceptions import NotFaithful

from .matrices import adjoint
from .matrices import as_matrix
from .matrices import check_cap
from .matrices import norm
from .matrices import projection_residual
from .matrices import TraceForm
from .subalgebras import generate_subalgebra
from .subalgebras import StarSubalgebra

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BasicConstruction:
    small: StarSubalgebra
    big: StarSubalgebra
    represented_big: StarSubalgebra
    represented_small: StarSubalgebra
    jones_projection: np.ndarray
    tower: StarSubalgebra

    @property
    def hilbert_dim(self):
        return self.big.dim

    def represent(self, x):
        """Left multiplication by ``x`` (an element of big) on L^2(big)."""
        x = as_matrix(x, self.big.ambient_dim)
        return left_regular_matrix(self.big, x)

    def expectation_onto_big(self, y):
        return self.represented_big.conditional_expectation(y)

    def expectation_onto_small(self, y):
        return self.represented_small.conditional_expectation(y)

    def pimsner_popa_residual(self):
        """
        max over big's basis x of ||e_1 L_x e_1 - L_{E(x)} e_1||, the defining
        relation of the Jones projection.
        """
        e = self.jones_projection
        worst = 0.0
        for x in self.big.basis:
            lhs = e @ self.represent(x) @ e
            rhs = self.represent(self.small.conditional_expectation(x)) @ e
            worst = max(worst, norm(lhs - rhs))
        return worst

    def __iter__(self):
        yield self.represented_big
        yield self.jones_projection
        yield self.tower


def left_regular_matrix(big, x):
    d, dim = big.dim, big.ambient_dim
    products = np.einsum("ij,ljk->lik", x, big.basis)
    # tr(b_k* y) for every k at once, then row-stacked by l.
    frame = big.basis.reshape(d, -1).conj()
    return (frame @ products.reshape(d, -1).T) / dim


def basic_construction(small, big, trace=None, tol=None, cap=None):
    """
    Build ``(represented_big, jones_projection, tower)`` for small c big.

    ``trace`` must be the normalized trace of the common ambient algebra; it
    is faithful on any subalgebra, but a mismatching ambient dimension is
    rejected.
    """
    tol = settings.TOLERANCE if tol is None else tol
    if small.ambient_dim != big.ambient_dim:
        raise DimensionMismatch("small and big live in different ambient algebras")
    trace = trace or TraceForm(big.ambient_dim)
    if trace.ambient_dim != big.ambient_dim:
        raise NotFaithful(
            "trace on M_%d is not the normalized trace of M_%d"
            % (trace.ambient_dim, big.ambient_dim)
        )
    if not big.includes(small, tol=tol):
        raise NotContained(
            "%s is not contained in %s (residual %.3e)"
            % (small.label, big.label, big.containment_residual(small))
        )
    d = check_cap(big.dim, cap)

    # L(big) is orthonormalized again: the trace of M_d restricts to the
    # original trace only when the latter is Markov for C c big.
    represented_big = StarSubalgebra.from_spanning_set(
        [left_regular_matrix(big, b) for b in big.basis],
        d,
        label="L(%s)" % big.label,
        tol=tol,
    )
    represented_small = StarSubalgebra.from_spanning_set(
        [left_regular_matrix(big, s) for s in small.basis],
        d,
        label="L(%s)" % small.label,
        tol=tol,
    )

    coordinates = np.array([big.coefficients(s) for s in small.basis]).T
    # The columns are orthonormal because small's basis is.
    e1 = coordinates @ adjoint(coordinates)
    if projection_residual(e1) > tol * d:
        raise NotContained("image of %s is not a subspace of L^2" % small.label)

    tower = generate_subalgebra(
        list(represented_big.basis) + [e1],
        d,
        label="<%s, e1>" % big.label,
        tol=tol,
    )
    log.debug(
        "basic construction of %s c %s: L^2 dimension %d, tower dimension %d",
        small.label,
        big.label,
        d,
        tower.dim,
    )
    return BasicConstruction(
        small=small,
        big=big,
        represented_big=represented_big,
        represented_small=represented_small,
        jones_projection=e1,
        tower=tower,
    )
