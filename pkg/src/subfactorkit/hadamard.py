"""
Complex Hadamard matrices, bi-unitary matrices and the commuting squares
(spin and vertex models) they generate, plus the tower unitaries of the spin
model grid.

Index conventions for M_n (x) M_k: the basis vector e_alpha (x) e_a sits at
position alpha * k + a, so a matrix w has entries w[(alpha, a), (beta, b)].
"""
import logging
from dataclasses import dataclass

import numpy as np

from subfactorkit.algebra.matrices import adjoint
from subfactorkit.algebra.matrices import as_matrix
from subfactorkit.algebra.matrices import check_cap
from subfactorkit.algebra.matrices import identity
from subfactorkit.algebra.matrices import matrix_unit
from subfactorkit.algebra.matrices import norm
from subfactorkit.algebra.matrices import root_of_unity
from subfactorkit.algebra.matrices import unitary_residual
from subfactorkit.algebra.subalgebras import diagonal_algebra
from subfactorkit.algebra.subalgebras import full_algebra
from subfactorkit.algebra.subalgebras import scalars
from subfactorkit.algebra.subalgebras import tensor_with_identity
from subfactorkit.conf import settings
from subfactorkit.core.exceptions import DimensionMismatch
from subfactorkit.core.exceptions import InvalidBiUnitary
from subfactorkit.core.exceptions import InvalidHadamard
from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.core.reports import residual_report

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    """Unimodular entries and u u* = n 1. ``unitary`` is u / sqrt(n)."""

    order: int
    matrix: np.ndarray

    @classmethod
    def from_matrix(cls, m, tol=None):
        m = as_matrix(m)
        report = verify_hadamard(m, tol=tol)
        if not report:
            raise InvalidHadamard(
                "not a complex Hadamard matrix (residuals %s)" % report.residuals
            )
        return cls(order=m.shape[0], matrix=m)

    @property
    def unitary(self):
        return self.matrix / np.sqrt(self.order)


@dataclass(frozen=True, eq=False)
class BiUnitaryMatrix:
    n: int
    k: int
    matrix: np.ndarray

    @classmethod
    def from_matrix(cls, m, n, k, tol=None):
        m = as_matrix(m)
        report = verify_biunitary(m, n, k, tol=tol)
        if not report:
            raise InvalidBiUnitary(
                "not bi-unitary for (n, k) = (%d, %d) (residuals %s)"
                % (n, k, report.residuals)
            )
        return cls(n=n, k=k, matrix=m)


@dataclass(frozen=True, eq=False)
class SpinTower:
    u: HadamardMatrix
    stages: tuple
    d_u: np.ndarray

    @property
    def depth(self):
        return len(self.stages) - 1

    def unitarity_residuals(self):
        return {"u_%d" % j: unitary_residual(stage) for j, stage in enumerate(self.stages)}

    def recursion_residuals(self):
        """Re-evaluate every recursion step from its predecessor."""
        n = self.u.order
        u_hat = self.u.unitary
        residuals = {}
        for j in range(1, len(self.stages)):
            half = (j - 1) // 2 if j % 2 else j // 2
            expected = _tower_step(self.stages[j - 1], j, u_hat, self.d_u, n, half)
            residuals["u_%d" % j] = norm(self.stages[j] - expected)
        return residuals


def fourier_hadamard(n):
    """F_n with entries omega^(jk), omega = exp(2 pi i / n)."""
    if n < 1:
        raise ParameterOutOfRange("Fourier matrices need n >= 1, got %d" % n)
    j = np.arange(n)
    return HadamardMatrix(order=n, matrix=root_of_unity(n) ** np.outer(j, j))


def tensor_hadamard(u, v):
    """The Kronecker product of two Hadamard matrices is Hadamard."""
    return HadamardMatrix(order=u.order * v.order, matrix=np.kron(u.matrix, v.matrix))


def verify_hadamard(m, tol=None):
    tol = settings.TOLERANCE if tol is None else tol
    m = as_matrix(m)
    n = m.shape[0]
    residuals = {
        "unimodular": float(np.max(np.abs(np.abs(m) - 1.0))),
        "orthogonality": norm(m @ adjoint(m) - n * identity(n)),
    }
    return residual_report("hadamard", residuals, tol, order=n)


def block_transpose(w, n, k):
    """
    The block transpose: output entry (alpha a, beta b) is input entry
    (beta a, alpha b). A linear involution and a Frobenius isometry.
    """
    w = as_matrix(w)
    if w.shape[0] != n * k:
        raise DimensionMismatch(
            "a %dx%d matrix does not factor as (%d*%d)^2" % (*w.shape, n, k)
        )
    return w.reshape(n, k, n, k).transpose(2, 1, 0, 3).reshape(n * k, n * k)


def verify_biunitary(w, n, k, tol=None):
    tol = settings.TOLERANCE if tol is None else tol
    w = as_matrix(w)
    residuals = {
        "unitary": unitary_residual(w),
        "block_transpose_unitary": unitary_residual(block_transpose(w, n, k)),
    }
    return residual_report("biunitary", residuals, tol, n=n, k=k)


def swap_matrix(n):
    """The flip of C^n (x) C^n: unitary, but its block transpose is not."""
    w = np.zeros((n * n, n * n), dtype=np.complex128)
    for alpha in range(n):
        for a in range(n):
            w[a * n + alpha, alpha * n + a] = 1.0
    return w


def diagonal_biunitary(phases, n, k):
    """A diagonal unitary in M_n (x) M_k; diagonal unitaries are bi-unitary."""
    phases = np.asarray(phases, dtype=float).reshape(n * k)
    return BiUnitaryMatrix(n=n, k=k, matrix=np.diag(np.exp(1j * phases)))


def hadamard_projection(u, k):
    """
    p_k = w (E_11 + ... + E_kk) w* with w = u / sqrt(n). Since w has
    entries of modulus 1/sqrt(n), E_Delta(p_k) = (k / n) 1.
    """
    n = u.order
    if not 0 <= k <= n:
        raise ParameterOutOfRange("need 0 <= k <= %d, got %d" % (n, k))
    w = u.unitary
    return w[:, :k] @ adjoint(w[:, :k])


def spin_square(u, tol=None):
    """(C c Delta_n, Ad_u(Delta_n) c M_n) for a Hadamard matrix u."""
    from subfactorkit.commuting_square import QuadrupleOfAlgebras

    if not isinstance(u, HadamardMatrix):
        u = HadamardMatrix.from_matrix(u, tol=tol)
    n = u.order
    delta = diagonal_algebra(n)
    return QuadrupleOfAlgebras(
        N=scalars(n),
        P=delta,
        Q=delta.conjugate(u.unitary, label="Ad_u(D_%d)" % n),
        M=full_algebra(n),
        tol=tol,
    )


def vertex_square(v, n=None, k=None, tol=None):
    """(C c M_n (x) C, Ad_v(C (x) M_k) c M_n (x) M_k) for a bi-unitary v."""
    from subfactorkit.commuting_square import QuadrupleOfAlgebras

    if not isinstance(v, BiUnitaryMatrix):
        v = BiUnitaryMatrix.from_matrix(v, n, k, tol=tol)
    n, k = v.n, v.k
    return QuadrupleOfAlgebras(
        N=scalars(n * k),
        P=tensor_with_identity(full_algebra(n), k, side="right"),
        Q=tensor_with_identity(full_algebra(k), n, side="left").conjugate(
            v.matrix, label="Ad_v(1(x)M_%d)" % k
        ),
        M=full_algebra(n * k),
        tol=tol,
    )


def d_matrix(u):
    """D_u = sqrt(n) sum conj(w_ij) E_ii (x) E_jj with w = u / sqrt(n)."""
    n = u.order
    d = np.zeros((n * n, n * n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            d += np.conj(u.matrix[i, j]) * np.kron(matrix_unit(n, i, i), matrix_unit(n, j, j))
    return d


def _tower_step(previous, j, u_hat, d_u, n, half):
    if j % 2:
        # u_{2h+1} = (1_n (x) u_{2h}) (D_u (x) 1_{n^h})
        return np.kron(identity(n), previous) @ np.kron(d_u, identity(n ** half))
    # u_{2h} = u_{2h-1} (u (x) 1_{n^h})
    return previous @ np.kron(u_hat, identity(n ** half))


def spin_tower(u, stages, cap=None):
    """
    The tower unitaries u_0 = u, u_1, ..., u_K of the spin model grid.

    Stage j acts on (C^n)^(ceil(j/2) + 1). Every stage is checked against the
    dimension cap before anything is allocated.
    """
    if stages < 0:
        raise ParameterOutOfRange("number of stages must be >= 0, got %d" % stages)
    if not isinstance(u, HadamardMatrix):
        u = HadamardMatrix.from_matrix(u)
    n = u.order
    check_cap(n ** ((stages + 1) // 2 + 1), cap)
    u_hat = u.unitary
    d_u = d_matrix(u)
    tower = [u_hat]
    for j in range(1, stages + 1):
        half = (j - 1) // 2 if j % 2 else j // 2
        tower.append(_tower_step(tower[-1], j, u_hat, d_u, n, half))
        log.debug("spin tower stage %d: dimension %d", j, tower[-1].shape[0])
    return SpinTower(u=u, stages=tuple(tower), d_u=d_u)
