"""
Unital *-subalgebras of M_D stored as trace-orthonormal spanning sets.

A subalgebra is a stack of D x D matrices b_1..b_d with tr(b_k* b_l) = delta,
tr the normalized trace of the ambient M_D. With that normalization the
trace-preserving conditional expectation is the orthogonal projection

    E(x) = sum_k tr(b_k* x) b_k

and every question about block structure (centers, summands, minimal
projections, relative commutants) is answered on demand from the basis.
"""
import logging

import numpy as np
from scipy.linalg import null_space

from subfactorkit.conf import settings
from subfactorkit.core.exceptions import DegenerateBasis
from subfactorkit.core.exceptions import DimensionMismatch
from subfactorkit.core.exceptions import PreconditionFailed
from subfactorkit.core.exceptions import RankDeficiency

from .matrices import adjoint
from .matrices import as_matrix
from .matrices import identity
from .matrices import is_unitary
from .matrices import matrix_unit
from .matrices import norm
from .matrices import spectral_projections
from .matrices import TraceForm

log = logging.getLogger(__name__)


class StarSubalgebra:
    """
    A unital *-subalgebra of M_{ambient_dim}.

    Instances are immutable; every transformation returns a new subalgebra.
    """

    def __init__(self, basis, ambient_dim, label="", tol=None, validate=True):
        basis = np.asarray(basis, dtype=np.complex128)
        if basis.ndim != 3 or basis.shape[1:] != (ambient_dim, ambient_dim):
            raise DimensionMismatch(
                "basis of shape %s does not live in M_%d" % (basis.shape, ambient_dim)
            )
        basis.setflags(write=False)
        self.basis = basis
        self.ambient_dim = ambient_dim
        self.label = label
        # Rows of _frame are orthonormal for the standard inner product.
        self._frame = basis.reshape(len(basis), -1) / np.sqrt(ambient_dim)
        if validate:
            tol = settings.TOLERANCE if tol is None else tol
            residual = self.gram_residual()
            if residual > tol * max(1, ambient_dim):
                raise DegenerateBasis(
                    "basis of %s is not trace-orthonormal (residual %.3e)"
                    % (label or "subalgebra", residual)
                )

    def __repr__(self):
        return "<StarSubalgebra %s dim=%d in M_%d>" % (
            self.label or "?",
            self.dim,
            self.ambient_dim,
        )

    def __len__(self):
        return self.dim

    @classmethod
    def from_spanning_set(cls, elements, ambient_dim, label="", tol=None):
        """
        Orthonormalize a spanning set. Directions with singular value below
        ``tol * ambient_dim`` are dropped.
        """
        tol = settings.TOLERANCE if tol is None else tol
        stack = [as_matrix(e, ambient_dim) for e in elements]
        if not stack:
            stack = [identity(ambient_dim)]
        rows = np.array(stack).reshape(len(stack), -1) / np.sqrt(ambient_dim)
        __, singular, vh = np.linalg.svd(rows, full_matrices=False)
        rank = int(np.sum(singular > tol * ambient_dim))
        basis = vh[:rank].reshape(rank, ambient_dim, ambient_dim) * np.sqrt(ambient_dim)
        return cls(basis, ambient_dim, label=label, validate=False)

    @property
    def dim(self):
        return self.basis.shape[0]

    @property
    def trace(self):
        return TraceForm(self.ambient_dim)

    @property
    def contains_unit(self):
        return self.contains(identity(self.ambient_dim))

    def elements(self):
        return list(self.basis)

    def coefficients(self, x):
        x = as_matrix(x, self.ambient_dim)
        return self._frame.conj() @ x.ravel() / np.sqrt(self.ambient_dim)

    def conditional_expectation(self, x):
        c = self.coefficients(x)
        return (c @ self._frame).reshape(self.ambient_dim, self.ambient_dim) * np.sqrt(
            self.ambient_dim
        )

    def containment_residual_of(self, x):
        x = as_matrix(x, self.ambient_dim)
        return norm(x - self.conditional_expectation(x))

    def contains(self, x, tol=None):
        tol = settings.TOLERANCE if tol is None else tol
        return self.containment_residual_of(x) < tol

    def containment_residual(self, other):
        """Largest distance of a basis element of ``other`` from this span."""
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch(
                "cannot compare subalgebras of M_%d and M_%d"
                % (other.ambient_dim, self.ambient_dim)
            )
        return max(
            (self.containment_residual_of(b) for b in other.basis), default=0.0
        )

    def includes(self, other, tol=None):
        tol = settings.TOLERANCE if tol is None else tol
        return self.containment_residual(other) < tol

    def gram_residual(self):
        gram = self._frame.conj() @ self._frame.T
        return float(np.max(np.abs(gram - np.eye(self.dim)), initial=0.0))

    def closure_residual(self):
        """Worst distance of a product b_k b_l or adjoint b_k* from the span."""
        worst = 0.0
        for a in self.basis:
            worst = max(worst, self.containment_residual_of(adjoint(a)))
            for b in self.basis:
                worst = max(worst, self.containment_residual_of(a @ b))
        return worst

    def conjugate(self, u, label=None):
        """The image Ad_u(A) = u A u* for a unitary u."""
        u = as_matrix(u, self.ambient_dim)
        basis = np.einsum("ij,kjl,ml->kim", u, self.basis, u.conj())
        return StarSubalgebra(
            basis,
            self.ambient_dim,
            label=label or "Ad(%s)" % (self.label or "?"),
            validate=False,
        )

    def random_hermitian(self, rng):
        """A generic self-adjoint element (random real combination)."""
        coefficients = rng.standard_normal(self.dim) + 1j * rng.standard_normal(self.dim)
        x = np.tensordot(coefficients, self.basis, axes=1)
        return (x + adjoint(x)) / 2

    def center(self, tol=None):
        return relative_commutant(self, self, tol=tol, label="Z(%s)" % self.label)

    def is_abelian(self, tol=None):
        return self.center(tol=tol).dim == self.dim

    def is_simple(self, tol=None):
        return self.center(tol=tol).dim == 1

    def central_projections(self, seed=None, tol=None):
        """Minimal central projections, as D x D matrices."""
        center = self.center(tol=tol)
        if center.dim == 1:
            return [identity(self.ambient_dim)]
        rng = np.random.default_rng(settings.SEED if seed is None else seed)
        projections = spectral_projections(center.random_hermitian(rng))
        projections.sort(key=_support_start)
        if len(projections) != center.dim:
            raise RankDeficiency(
                "center of %s splits into %d projections but has dimension %d"
                % (self.label, len(projections), center.dim),
                effective_dimension=len(projections),
            )
        return projections

    def simple_summands(self, seed=None, tol=None):
        """
        ``(central projection, matrix size, multiplicity)`` per simple summand.

        A summand z A is isomorphic to M_m, represented with multiplicity
        rank(z) / m in the ambient algebra.
        """
        tol = settings.TOLERANCE if tol is None else tol
        summands = []
        for z in self.central_projections(seed=seed, tol=tol):
            compressed = StarSubalgebra.from_spanning_set(
                [z @ b for b in self.basis], self.ambient_dim, tol=tol
            )
            size = int(round(np.sqrt(compressed.dim)))
            rank = int(round(np.trace(z).real))
            summands.append((z, size, rank // size))
        return summands

    def minimal_projections(self, seed=None, tol=None):
        """Minimal projections summing to 1 for a simple algebra."""
        if not self.is_simple(tol=tol):
            raise PreconditionFailed("%s is not simple" % (self.label or "algebra"))
        size = int(round(np.sqrt(self.dim)))
        rng = np.random.default_rng(settings.SEED if seed is None else seed)
        projections = spectral_projections(self.random_hermitian(rng))
        projections.sort(key=_support_start)
        if len(projections) != size:
            raise RankDeficiency(
                "generic element of %s has %d spectral projections, expected %d"
                % (self.label, len(projections), size),
                effective_dimension=len(projections),
            )
        return projections

    def matrix_units(self, seed=None, tol=None):
        """
        A system of matrix units e[i][j] for a simple algebra, built from its
        minimal projections: e_1j is p_1 a p_j rescaled to a partial isometry
        and e_ij = e_1i* e_1j.
        """
        projections = self.minimal_projections(seed=seed, tol=tol)
        rng = np.random.default_rng((settings.SEED if seed is None else seed) + 1)
        generic = self.random_hermitian(rng) + 1j * self.random_hermitian(rng)
        first = projections[0]
        rank = np.trace(first).real
        row = []
        for p in projections:
            x = first @ generic @ p
            scale = np.trace(x @ adjoint(x)).real / rank
            row.append(x / np.sqrt(scale))
        size = len(projections)
        return [[adjoint(row[i]) @ row[j] for j in range(size)] for i in range(size)]

    def as_dict(self):
        from subfactorkit.core.serialization import subalgebra_to_dict

        return subalgebra_to_dict(self)


def _support_start(p):
    """First coordinate in the support of a projection; fixes a canonical order."""
    return int(np.flatnonzero(np.linalg.norm(p, axis=0) > 1e-6)[0])


def conditional_expectation(sub, x):
    """Trace-preserving conditional expectation of M_D onto ``sub``."""
    return sub.conditional_expectation(x)


def conjugate_subalgebra(sub, u, label=None, tol=None):
    """
    Ad_u(sub) for a unitary u. Relative dimension sets do not change under
    the conjugation, so uNu* can stand in for N.
    """
    u = as_matrix(u, sub.ambient_dim)
    if not is_unitary(u, tol):
        raise PreconditionFailed("conjugating by a non-unitary matrix")
    return sub.conjugate(u, label=label)


def _orthonormal_rows(rows, threshold):
    __, singular, vh = np.linalg.svd(rows, full_matrices=False)
    keep = singular > threshold
    grey = (singular > threshold) & (singular < np.sqrt(threshold))
    return vh[keep], int(np.sum(grey))


def generate_subalgebra(generators, ambient_dim, label="", tol=None):
    """
    The smallest unital *-algebra containing ``generators``.

    Iterated span closure: starting from the unit, the newest directions are
    multiplied on the left by an orthonormal basis of span(G u G*) and
    whatever is not already in the span is added. Terminates because the
    dimension is bounded by ambient_dim ** 2.
    """
    tol = settings.TOLERANCE if tol is None else tol
    threshold = tol * ambient_dim
    gens = [as_matrix(g, ambient_dim) for g in generators]
    words = StarSubalgebra.from_spanning_set(
        gens + [adjoint(g) for g in gens] or [identity(ambient_dim)],
        ambient_dim,
        tol=tol,
    ).basis
    scale = np.sqrt(ambient_dim)
    frame = identity(ambient_dim).reshape(1, -1) / scale
    frontier = frame * scale
    rounds = 0
    while len(frontier):
        rounds += 1
        frontier = frontier.reshape(-1, ambient_dim, ambient_dim)
        candidates = np.einsum("wij,fjk->wfik", words, frontier).reshape(
            -1, ambient_dim * ambient_dim
        )
        candidates = candidates / scale
        candidates = candidates - (candidates @ frame.conj().T) @ frame
        new_rows, grey = _orthonormal_rows(candidates, threshold)
        if grey:
            raise RankDeficiency(
                "closure of %d generators is numerically ambiguous in round %d"
                % (len(gens), rounds),
                effective_dimension=len(frame) + len(new_rows),
            )
        # Re-orthogonalize against the accumulated frame once more.
        new_rows = new_rows - (new_rows @ frame.conj().T) @ frame
        new_rows, __ = _orthonormal_rows(new_rows, threshold)
        frame = np.vstack([frame, new_rows])
        frontier = new_rows * scale
        log.debug(
            "closure round %d: +%d directions, dimension %d",
            rounds,
            len(new_rows),
            len(frame),
        )
    basis = frame.reshape(-1, ambient_dim, ambient_dim) * scale
    return StarSubalgebra(basis, ambient_dim, label=label, validate=False)


def relative_commutant(small, big, tol=None, label=None):
    """B' n A: elements of ``big`` commuting with every element of ``small``."""
    tol = settings.TOLERANCE if tol is None else tol
    if small.ambient_dim != big.ambient_dim:
        raise DimensionMismatch("relative commutant across different ambients")
    columns = []
    for a in big.basis:
        columns.append(
            np.concatenate([(a @ b - b @ a).ravel() for b in small.basis])
        )
    system = np.array(columns).T
    kernel = null_space(system, rcond=tol * big.ambient_dim)
    elements = [np.tensordot(c, big.basis, axes=1) for c in kernel.T]
    return StarSubalgebra.from_spanning_set(
        elements,
        big.ambient_dim,
        label=label or "%s' n %s" % (small.label, big.label),
        tol=tol,
    )


def scalars(dim):
    return StarSubalgebra(identity(dim)[None], dim, label="C", validate=False)


def diagonal_algebra(n):
    basis = [matrix_unit(n, i, i) * np.sqrt(n) for i in range(n)]
    return StarSubalgebra(np.array(basis), n, label="D_%d" % n, validate=False)


def full_algebra(n):
    basis = [matrix_unit(n, i, j) * np.sqrt(n) for i in range(n) for j in range(n)]
    return StarSubalgebra(np.array(basis), n, label="M_%d" % n, validate=False)


def tensor_with_identity(sub, k, side="right"):
    """
    ``A (x) 1_k`` for side="right", ``1_k (x) A`` for side="left". The
    normalized trace is multiplicative, so the basis stays orthonormal.
    """
    eye = identity(k)
    if side == "right":
        basis = [np.kron(b, eye) for b in sub.basis]
        label = "%s(x)1" % sub.label
    else:
        basis = [np.kron(eye, b) for b in sub.basis]
        label = "1(x)%s" % sub.label
    return StarSubalgebra(np.array(basis), sub.ambient_dim * k, label=label, validate=False)
