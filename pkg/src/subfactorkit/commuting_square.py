"""
Commuting squares

    P  c  M
    u     u
    N  c  Q

of subalgebras of one ambient M_D with its normalized trace.
"""
import logging

import numpy as np

from subfactorkit.algebra.matrices import norm
from subfactorkit.algebra.matrices import TraceForm
from subfactorkit.conf import settings
from subfactorkit.core.exceptions import DimensionMismatch
from subfactorkit.core.exceptions import NotContained
from subfactorkit.core.reports import CheckReport
from subfactorkit.core.reports import residual_report

log = logging.getLogger(__name__)

CONTAINMENTS = (("N", "P"), ("N", "Q"), ("P", "M"), ("Q", "M"))


class QuadrupleOfAlgebras:
    """(N c P, Q c M) with a shared ambient trace. Containments are checked."""

    def __init__(self, N, P, Q, M, tol=None):
        tol = settings.TOLERANCE if tol is None else tol
        self.N, self.P, self.Q, self.M = N, P, Q, M
        dims = {sub.ambient_dim for sub in (N, P, Q, M)}
        if len(dims) != 1:
            raise DimensionMismatch("quadruple spans ambient dimensions %s" % sorted(dims))
        self.trace = TraceForm(M.ambient_dim)
        for small, big in CONTAINMENTS:
            residual = getattr(self, big).containment_residual(getattr(self, small))
            if residual >= tol:
                raise NotContained(
                    "%s is not contained in %s (residual %.3e)" % (small, big, residual)
                )

    @property
    def ambient_dim(self):
        return self.M.ambient_dim

    def as_dict(self):
        from subfactorkit.core.serialization import quadruple_to_dict

        return quadruple_to_dict(self)


def is_commuting_square(q, tol=None):
    """
    E_P E_Q = E_Q E_P = E_N, evaluated on every basis element of M. The
    report names the basis element with the largest residual.
    """
    tol = settings.TOLERANCE if tol is None else tol
    worst = {"pq": (0.0, None), "qp": (0.0, None)}
    for index, x in enumerate(q.M.basis):
        target = q.N.conditional_expectation(x)
        pq = q.P.conditional_expectation(q.Q.conditional_expectation(x))
        qp = q.Q.conditional_expectation(q.P.conditional_expectation(x))
        for key, value in (("pq", norm(pq - target)), ("qp", norm(qp - target))):
            if value > worst[key][0] or worst[key][1] is None:
                worst[key] = (value, index)
    residuals = {"E_P E_Q - E_N": worst["pq"][0], "E_Q E_P - E_N": worst["qp"][0]}
    label_index = max(worst.values(), key=lambda item: item[0])[1]
    return residual_report(
        "commuting_square",
        residuals,
        tol,
        worst="M[%s]" % label_index,
    )


def is_nondegenerate(q, tol=None):
    """span{p q : p in P, q in Q} = M, compared as vector-space dimensions."""
    tol = settings.TOLERANCE if tol is None else tol
    products = np.einsum("aij,bjk->abik", q.P.basis, q.Q.basis).reshape(
        q.P.dim * q.Q.dim, -1
    )
    singular = np.linalg.svd(products, compute_uv=False)
    span = int(np.sum(singular > tol * q.ambient_dim * np.sqrt(q.ambient_dim)))
    return CheckReport(
        check="nondegenerate",
        passed=span == q.M.dim,
        residuals={"dimension_gap": float(q.M.dim - span)},
        tolerance=tol,
        details={"span_dimension": span, "ambient_dimension": q.M.dim},
    )


def basis_transfer_check(q, b, tol=None):
    """
    Given an orthonormal basis b of P over N in a commuting square, check that
    b is an orthonormal basis of M over Q. Precondition failures are reported
    under ``precondition`` and never counted as a transfer failure.
    """
    from subfactorkit.pimsner_popa import BasisCandidate
    from subfactorkit.pimsner_popa import verify_basis

    tol = settings.TOLERANCE if tol is None else tol
    square = is_commuting_square(q, tol=tol)
    try:
        source = verify_basis(BasisCandidate(elements=b, sub=q.N, ambient=q.P), tol=tol)
    except NotContained as e:
        source = None
        reason = str(e)
    else:
        reason = None
    failures = []
    if not square:
        failures.append("not a commuting square")
    if source is None:
        failures.append(reason)
    elif not source.holds("right", "orthonormal"):
        failures.append("not an orthonormal basis of P over N")
    if failures:
        return CheckReport(
            check="basis_transfer",
            passed=False,
            residuals=dict(square.residuals),
            tolerance=tol,
            details={"precondition": "; ".join(failures)},
        )
    target = verify_basis(BasisCandidate(elements=b, sub=q.Q, ambient=q.M), tol=tol)
    return residual_report(
        "basis_transfer",
        {
            "right": target.residuals["right"],
            "orthonormal": target.residuals["orthonormal"],
        },
        tol,
        precondition="ok",
    )
