"""
Inclusion matrices and Markov traces.

For small c big with simple summands indexed by j (small) and i (big), the
inclusion matrix Lambda has Lambda[i, j] = multiplicity of small's j-th
summand inside big's i-th summand. A trace on small is described by the
vector t of traces of minimal projections; it is Markov when

    Lambda^t Lambda t = ||Lambda||^2 t.
"""
import logging
from dataclasses import dataclass
from dataclasses import field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from subfactorkit.conf import settings
from subfactorkit.core.exceptions import DisconnectedInclusion
from subfactorkit.core.exceptions import MalformedInput
from subfactorkit.core.reports import residual_report

from .matrices import identity
from .matrices import norm

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class InclusionData:
    inclusion_matrix: np.ndarray
    trace_vector: np.ndarray = None
    modulus: float = None
    small_dimensions: np.ndarray = None

    def __post_init__(self):
        matrix = np.atleast_2d(np.asarray(self.inclusion_matrix))
        if matrix.ndim != 2 or np.any(matrix < 0) or np.any(matrix != np.round(matrix)):
            raise MalformedInput("inclusion matrix must be a nonnegative integer matrix")
        object.__setattr__(self, "inclusion_matrix", matrix.astype(np.int64))
        if self.small_dimensions is None:
            object.__setattr__(self, "small_dimensions", np.ones(matrix.shape[1], dtype=np.int64))

    @property
    def is_connected(self):
        return is_connected(self.inclusion_matrix)

    def markov_residual(self):
        """Relative residual of the Markov eigen-equation for ``trace_vector``."""
        lam = self.inclusion_matrix.astype(float)
        t = np.asarray(self.trace_vector, dtype=float)
        beta = self.modulus if self.modulus is not None else spectral_norm_squared(lam)
        return float(np.linalg.norm(lam.T @ lam @ t - beta * t) / np.linalg.norm(t))


@dataclass(frozen=True, eq=False)
class MarkovTrace:
    trace_vector: np.ndarray
    modulus: float
    big_trace_vector: np.ndarray
    residual: float
    details: dict = field(default_factory=dict)


def spectral_norm_squared(matrix):
    return float(np.linalg.norm(np.asarray(matrix, dtype=float), 2) ** 2)


def is_connected(matrix):
    """Connectivity of the bipartite graph with adjacency ``matrix``."""
    matrix = np.asarray(matrix)
    rows, cols = matrix.shape
    if np.any(matrix.sum(axis=1) == 0) or np.any(matrix.sum(axis=0) == 0):
        return False
    adjacency = np.zeros((rows + cols, rows + cols))
    adjacency[:rows, rows:] = matrix
    adjacency[rows:, :rows] = matrix.T
    count, __ = connected_components(csr_matrix(adjacency), directed=False)
    return count == 1


def markov_trace(inclusion):
    """
    The unique Markov trace of a connected inclusion.

    Returns the Perron-Frobenius vector of Lambda^t Lambda normalized so that
    sum_j dim_j t_j = 1 (the induced state is unital), the modulus
    ||Lambda||^2, the induced trace vector Lambda t / modulus on big and the
    relative residual of the eigen-equation.
    """
    if not isinstance(inclusion, InclusionData):
        inclusion = InclusionData(inclusion)
    lam = inclusion.inclusion_matrix.astype(float)
    if not is_connected(lam):
        raise DisconnectedInclusion(
            "inclusion matrix %s is not connected; its Markov trace is not unique"
            % lam.astype(int).tolist()
        )
    values, vectors = np.linalg.eigh(lam.T @ lam)
    modulus = float(values[-1])
    t = np.abs(vectors[:, -1])
    t = t / float(np.dot(inclusion.small_dimensions, t))
    residual = float(np.linalg.norm(lam.T @ lam @ t - modulus * t) / np.linalg.norm(t))
    log.debug("Markov trace %s with modulus %.12g", t, modulus)
    return MarkovTrace(
        trace_vector=t,
        modulus=modulus,
        big_trace_vector=lam @ t / modulus,
        residual=residual,
    )


def inclusion_data(small, big, seed=None, tol=None):
    """
    Inclusion matrix, small-summand sizes and the ambient trace vector of an
    actual inclusion of subalgebras.
    """
    tol = settings.TOLERANCE if tol is None else tol
    big_summands = big.simple_summands(seed=seed, tol=tol)
    small_summands = small.simple_summands(seed=seed, tol=tol)
    matrix = np.zeros((len(big_summands), len(small_summands)), dtype=np.int64)
    for i, (z, __, big_multiplicity) in enumerate(big_summands):
        for j, (w, size, __) in enumerate(small_summands):
            rank = int(round(np.trace(z @ w).real))
            matrix[i, j] = rank // (size * big_multiplicity)
    dimensions = np.array([size for __, size, __ in small_summands], dtype=np.int64)
    trace_vector = np.array(
        [np.trace(w).real / small.ambient_dim / size for w, size, __ in small_summands]
    )
    return InclusionData(
        inclusion_matrix=matrix,
        trace_vector=trace_vector,
        modulus=spectral_norm_squared(matrix),
        small_dimensions=dimensions,
    )


def is_markov(small, big, construction=None, tol=None):
    """
    Check the two equivalent Markov conditions for the ambient trace:
    the eigen-equation on the trace vector of small, and, when a basic
    construction is supplied, E_big(e_1) = modulus^-1 1.
    """
    tol = settings.TOLERANCE if tol is None else tol
    data = inclusion_data(small, big, tol=tol)
    residuals = {"eigen_equation": data.markov_residual()}
    if construction is not None:
        expected = identity(construction.hilbert_dim) / data.modulus
        residuals["jones_expectation"] = norm(
            construction.expectation_onto_big(construction.jones_projection) - expected
        )
    return residual_report(
        "markov",
        residuals,
        tol,
        inclusion_matrix=data.inclusion_matrix.tolist(),
        modulus=data.modulus,
        trace_vector=[float(v) for v in data.trace_vector],
    )
