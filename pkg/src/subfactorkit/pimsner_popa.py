"""
Pimsner-Popa bases for finite-dimensional inclusions N c M.

A finite family {l_j} in M is a (right) basis when x = sum_j l_j E(l_j* x)
for every x in M, orthonormal when E(l_i* l_j) = delta_ij 1, two-sided when
the adjoints form a basis as well, and unitary when every l_j is a unitary.
All flags are measured, never taken from the caller.
"""
import logging
from dataclasses import dataclass

import numpy as np

from subfactorkit.algebra.matrices import adjoint
from subfactorkit.algebra.matrices import as_matrix
from subfactorkit.algebra.matrices import identity
from subfactorkit.algebra.matrices import norm
from subfactorkit.algebra.matrices import projection_residual
from subfactorkit.algebra.matrices import root_of_unity
from subfactorkit.algebra.matrices import unitary_residual
from subfactorkit.algebra.subalgebras import diagonal_algebra
from subfactorkit.algebra.subalgebras import full_algebra
from subfactorkit.algebra.subalgebras import relative_commutant
from subfactorkit.algebra.subalgebras import scalars
from subfactorkit.conf import settings
from subfactorkit.core.exceptions import NotContained
from subfactorkit.core.exceptions import OutOfScope
from subfactorkit.core.exceptions import PreconditionFailed
from subfactorkit.core.reports import FlagReport
from subfactorkit.core.reports import residual_report

log = logging.getLogger(__name__)

FLAGS = ("right", "left", "orthonormal", "two_sided", "unitary")


@dataclass(frozen=True, eq=False)
class BasisCandidate:
    """
    Candidate basis of ``ambient`` over ``sub``. ``expectation`` overrides
    the trace-preserving conditional expectation onto ``sub`` (used for the
    Markov trace of C c A when it differs from the ambient trace).
    """

    elements: list
    sub: object
    ambient: object
    expectation: object = None

    def __post_init__(self):
        dim = self.ambient.ambient_dim
        object.__setattr__(self, "elements", [as_matrix(e, dim) for e in self.elements])

    def __len__(self):
        return len(self.elements)

    def expect(self, x):
        if self.expectation is not None:
            return self.expectation(x)
        return self.sub.conditional_expectation(x)


def _max_with_label(pairs):
    worst, label = 0.0, None
    for value, where in pairs:
        if label is None or value > worst:
            worst, label = value, where
    return worst, label


def verify_basis(b, tol=None):
    """Residual and flag for each of right, left, orthonormal, two_sided, unitary."""
    tol = settings.TOLERANCE if tol is None else tol
    for index, element in enumerate(b.elements):
        residual = b.ambient.containment_residual_of(element)
        if residual >= tol:
            raise NotContained(
                "basis element %d is outside the ambient algebra (residual %.3e)"
                % (index, residual)
            )
    eye = identity(b.ambient.ambient_dim)
    lams = b.elements
    stars = [adjoint(lam) for lam in lams]

    right = _max_with_label(
        (
            norm(x - sum(lam @ b.expect(star @ x) for lam, star in zip(lams, stars))),
            "x[%d]" % k,
        )
        for k, x in enumerate(b.ambient.basis)
    )
    left = _max_with_label(
        (
            norm(x - sum(b.expect(x @ lam) @ star for lam, star in zip(lams, stars))),
            "x[%d]" % k,
        )
        for k, x in enumerate(b.ambient.basis)
    )
    orthonormal = _max_with_label(
        (norm(b.expect(stars[i] @ lams[j]) - (i == j) * eye), "(%d,%d)" % (i, j))
        for i in range(len(lams))
        for j in range(len(lams))
    )
    adjoint_orthonormal = _max_with_label(
        (norm(b.expect(lams[i] @ stars[j]) - (i == j) * eye), "(%d,%d)*" % (i, j))
        for i in range(len(lams))
        for j in range(len(lams))
    )
    unitary = _max_with_label(
        (unitary_residual(lam), "l[%d]" % k) for k, lam in enumerate(lams)
    )
    two_sided = max(
        (right, left, orthonormal, adjoint_orthonormal), key=lambda item: item[0]
    )
    measured = {
        "right": right,
        "left": left,
        "orthonormal": orthonormal,
        "two_sided": two_sided,
        "unitary": unitary,
    }
    return FlagReport(
        check="pimsner_popa_basis",
        residuals={name: value for name, (value, __) in measured.items()},
        tolerance=tol,
        worst={name: where for name, (__, where) in measured.items()},
    )


def shift_basis(n):
    """{1, S, ..., S^(n-1)} for Delta_n c M_n: two-sided, unitary, orthonormal."""
    from subfactorkit.algebra.matrices import shift_matrix

    s = shift_matrix(n)
    elements = [np.linalg.matrix_power(s, k) for k in range(n)]
    return BasisCandidate(elements=elements, sub=diagonal_algebra(n), ambient=full_algebra(n))


def weyl_unitaries(n):
    """{X^a Z^b : 0 <= a, b < n}, a unitary orthonormal basis of M_n over C."""
    from subfactorkit.algebra.matrices import clock_matrix
    from subfactorkit.algebra.matrices import shift_matrix

    x, z = shift_matrix(n), clock_matrix(n)
    return [
        np.linalg.matrix_power(x, a) @ np.linalg.matrix_power(z, b)
        for a in range(n)
        for b in range(n)
    ]


def mu_unitaries(b, construction, tol=None):
    """
    mu_j = sum_k omega^(jk) l_k e_1 l_k*, omega = exp(2 pi i / n), n = |b|.

    Requires a two-sided orthonormal basis of M over N and the basic
    construction of N c M. Returns the unitaries together with a report on
    unitarity, E_N-orthonormality in the tower, sum_k l_k e_1 l_k* = 1 and
    the identity mu_s* mu_t = sum_u omega^((t-s)u) l_u e_1 l_u* per pair.
    """
    tol = settings.TOLERANCE if tol is None else tol
    flags = verify_basis(b, tol=tol)
    if not flags.holds("two_sided", "orthonormal"):
        raise PreconditionFailed(
            "mu construction needs a two-sided orthonormal basis (residuals %s)"
            % flags.residuals
        )
    n = len(b)
    omega = root_of_unity(n)
    e1 = construction.jones_projection
    dim = construction.hilbert_dim
    eye = identity(dim)
    lifted = [construction.represent(lam) for lam in b.elements]
    pieces = [lam @ e1 @ adjoint(lam) for lam in lifted]

    completeness = norm(sum(pieces) - eye)
    if completeness >= tol:
        raise PreconditionFailed(
            "sum_k l_k e_1 l_k* differs from 1 by %.3e; not a basis" % completeness
        )
    mus = [sum(omega ** (j * k) * pieces[k] for k in range(n)) for j in range(n)]

    unitarity = max(unitary_residual(mu) for mu in mus)
    orthonormality, identity_residual = 0.0, 0.0
    for s in range(n):
        for t in range(n):
            product = adjoint(mus[s]) @ mus[t]
            expected = (s == t) * eye
            orthonormality = max(
                orthonormality,
                norm(construction.expectation_onto_small(product) - expected),
            )
            proof = sum(omega ** ((t - s) * u) * pieces[u] for u in range(n))
            identity_residual = max(identity_residual, norm(product - proof))
    tower_membership = max(construction.tower.containment_residual_of(mu) for mu in mus)
    report = residual_report(
        "mu_unitaries",
        {
            "completeness": completeness,
            "unitary": unitarity,
            "orthonormal": orthonormality,
            "product_identity": identity_residual,
            "tower_membership": tower_membership,
        },
        tol,
        size=n,
    )
    log.info("mu construction for %d elements: %s", n, report.passed)
    return mus, report


def partial_sum_projections(b, construction, tol=None):
    """
    q_m = sum_{i<=m} l_i e_1 l_i* for m = 1..n.

    Each q_m is a projection. For a unitary orthonormal basis E_M(q_m) is
    (m/n) 1; for a two-sided orthonormal basis E_N(q_m) is (m/n) 1. Both
    expectation residuals are reported; the one that does not apply to the
    basis is informational.
    """
    tol = settings.TOLERANCE if tol is None else tol
    n = len(b)
    e1 = construction.jones_projection
    eye = identity(construction.hilbert_dim)
    lifted = [construction.represent(lam) for lam in b.elements]
    rows = []
    q = np.zeros_like(e1)
    worst_projection, worst_big, worst_small = 0.0, 0.0, 0.0
    for m, lam in enumerate(lifted, start=1):
        q = q + lam @ e1 @ adjoint(lam)
        projection = projection_residual(q)
        big = norm(construction.expectation_onto_big(q) - (m / n) * eye)
        small = norm(construction.expectation_onto_small(q) - (m / n) * eye)
        worst_projection = max(worst_projection, projection)
        worst_big = max(worst_big, big)
        worst_small = max(worst_small, small)
        rows.append(
            {
                "m": m,
                "projection": projection,
                "E_M": big,
                "E_N": small,
            }
        )
    return residual_report(
        "partial_sums",
        {"projection": worst_projection, "E_M": worst_big, "E_N": worst_small},
        tol,
        rows=rows,
    )


def _summand_data(algebra, seed=None, tol=None):
    summands = algebra.simple_summands(seed=seed, tol=tol)
    weights = sum(size * size for __, size, __ in summands)
    return summands, weights


def markov_expectation(small, commutant, seed=None, tol=None):
    """
    Conditional expectation onto ``small`` that restricts to the Markov state
    phi = sum_i t_i Tr_i on the summands of ``commutant`` (t_i = n_i / sum n_j^2).
    """
    summands, weights = _summand_data(commutant, seed=seed, tol=tol)
    ambient_trace = commutant.trace

    def expectation(x):
        result = 0
        for z, size, __ in summands:
            factor = (size / weights) * size / ambient_trace(z).real
            result = result + factor * small.conditional_expectation(z @ x)
        return result

    return expectation


def _unitary_onb_of(algebra, seed=None, tol=None):
    """Weyl unitaries from matrix units (simple) or characters (abelian)."""
    if algebra.is_simple(tol=tol):
        units = algebra.matrix_units(seed=seed, tol=tol)
        m = len(units)
        omega = root_of_unity(m)
        x = sum(units[(j + 1) % m][j] for j in range(m))
        z = sum(omega ** j * units[j][j] for j in range(m))
        return [
            np.linalg.matrix_power(x, a) @ np.linalg.matrix_power(z, c)
            for a in range(m)
            for c in range(m)
        ]
    if algebra.is_abelian(tol=tol):
        projections = algebra.central_projections(seed=seed, tol=tol)
        m = len(projections)
        omega = root_of_unity(m)
        return [sum(omega ** (j * k) * projections[k] for k in range(m)) for j in range(m)]
    raise OutOfScope(
        "%s is neither simple nor abelian; unitary bases are only constructed "
        "for those" % (algebra.label or "algebra")
    )


def unitary_onb_scalar_inclusion(A, seed=None, tol=None):
    """
    A unitary orthonormal basis for C c A with respect to the Markov trace,
    for simple or abelian A.
    """
    elements = _unitary_onb_of(A, seed=seed, tol=tol)
    small = scalars(A.ambient_dim)
    return BasisCandidate(
        elements=elements,
        sub=small,
        ambient=A,
        expectation=markov_expectation(small, A, seed=seed, tol=tol),
    )


def unitary_onb_simple_bottom(B, A, seed=None, tol=None):
    """
    For simple B c A, A is B (x) (B' n A); a unitary orthonormal basis of
    C c B' n A is a unitary orthonormal basis of A over B.
    """
    if not B.is_simple(tol=tol):
        raise PreconditionFailed("%s is not simple" % (B.label or "bottom algebra"))
    commutant = relative_commutant(B, A, tol=tol)
    elements = _unitary_onb_of(commutant, seed=seed, tol=tol)
    return BasisCandidate(
        elements=elements,
        sub=B,
        ambient=A,
        expectation=markov_expectation(B, commutant, seed=seed, tol=tol),
    )


def d_ob_value(b, tol=None):
    """||sum_j m_j* m_j|| for a right orthonormal basis: an upper witness for d_ob."""
    flags = verify_basis(b, tol=tol)
    if not flags.holds("right", "orthonormal"):
        raise PreconditionFailed(
            "d_ob needs a right orthonormal basis (residuals %s)" % flags.residuals
        )
    total = sum(adjoint(m) @ m for m in b.elements)
    return float(np.linalg.norm(total, 2))
