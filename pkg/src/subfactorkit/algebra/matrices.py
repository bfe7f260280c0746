"""
Dense complex matrices and the normalized trace.

Matrices are plain ``numpy`` arrays of dtype complex128; this module only adds
the predicates, residuals and small constructors the rest of the package
shares. All residuals are norms of a defect (``x x* - 1`` and friends), so a
predicate is simply "residual below tolerance".
"""
import logging
from dataclasses import dataclass

import numpy as np

from subfactorkit.conf import settings
from subfactorkit.core.exceptions import DimensionCapExceeded
from subfactorkit.core.exceptions import DimensionMismatch
from subfactorkit.core.exceptions import MalformedInput

log = logging.getLogger(__name__)


def as_matrix(x, dim=None):
    """Coerce ``x`` to a square complex128 array, optionally of size ``dim``."""
    try:
        m = np.asarray(x, dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise MalformedInput("not a numeric matrix: %s" % e)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch("expected a square matrix, got shape %s" % (m.shape,))
    if dim is not None and m.shape[0] != dim:
        raise DimensionMismatch("expected a %dx%d matrix, got %dx%d" % (dim, dim, *m.shape))
    if not np.all(np.isfinite(m)):
        raise MalformedInput("matrix has non-finite entries")
    return m


def check_cap(dimension, cap=None):
    cap = settings.DIMENSION_CAP if cap is None else cap
    if dimension > cap:
        raise DimensionCapExceeded(dimension, cap)
    return dimension


def norm(x):
    """Operator norm of ``x``; Frobenius norm above ``EXACT_NORM_LIMIT``."""
    if x.shape[0] <= settings.EXACT_NORM_LIMIT:
        return float(np.linalg.norm(x, 2))
    return float(np.linalg.norm(x))


def adjoint(x):
    return x.conj().T


def identity(dim):
    return np.eye(dim, dtype=np.complex128)


def matrix_unit(dim, i, j):
    e = np.zeros((dim, dim), dtype=np.complex128)
    e[i, j] = 1.0
    return e


def hermitian_residual(x):
    return norm(x - adjoint(x))


def unitary_residual(x):
    eye = identity(x.shape[0])
    return max(norm(x @ adjoint(x) - eye), norm(adjoint(x) @ x - eye))


def projection_residual(x):
    return max(norm(x @ x - x), hermitian_residual(x))


def is_hermitian(x, tol=None):
    tol = settings.TOLERANCE if tol is None else tol
    return hermitian_residual(x) < tol


def is_unitary(x, tol=None):
    tol = settings.TOLERANCE if tol is None else tol
    return unitary_residual(x) < tol


def is_projection(x, tol=None):
    tol = settings.TOLERANCE if tol is None else tol
    return projection_residual(x) < tol


def numerical_rank(x, tol=None):
    tol = settings.TOLERANCE if tol is None else tol
    if x.size == 0:
        return 0
    singular = np.linalg.svd(x, compute_uv=False)
    return int(np.sum(singular > tol * max(x.shape)))


def root_of_unity(n):
    return np.exp(2j * np.pi / n)


def shift_matrix(n):
    """Cyclic shift S with S e_j = e_{j+1}."""
    return np.roll(identity(n), 1, axis=0)


def clock_matrix(n):
    return np.diag(root_of_unity(n) ** np.arange(n))


def spectral_projections(h, cluster_tol=None):
    """
    Spectral projections of a Hermitian matrix, one per eigenvalue cluster,
    in increasing eigenvalue order.
    """
    cluster_tol = settings.CLUSTER_TOLERANCE if cluster_tol is None else cluster_tol
    values, vectors = np.linalg.eigh((h + adjoint(h)) / 2)
    projections = []
    start = 0
    for k in range(1, len(values) + 1):
        if k == len(values) or values[k] - values[k - 1] > cluster_tol:
            block = vectors[:, start:k]
            projections.append(block @ adjoint(block))
            start = k
    return projections


@dataclass(frozen=True)
class TraceForm:
    """
    The normalized trace on M_n, tr(1) = 1, and its inner product
    <a, b> = tr(a* b).
    """

    ambient_dim: int

    @property
    def normalization(self):
        return 1.0 / self.ambient_dim

    def __call__(self, x):
        return complex(np.trace(x)) * self.normalization

    def inner(self, a, b):
        return complex(np.vdot(a, b)) * self.normalization

    def norm(self, a):
        return float(np.sqrt(max(self.inner(a, a).real, 0.0)))
