"""
Numerical search for r projections of fixed ranks summing to beta 1_N.

Each restart alternates between the affine constraint sum p_i = beta 1 and
the manifolds of rank-k_i projections (spectral truncation). Once the sum
residual is small the configuration is polished by Gauss-Newton steps over
unitary conjugations p_i -> e^{iH_i} p_i e^{-iH_i}, which keep every p_i an
exact projection.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import expm

from subfactorkit.algebra.matrices import adjoint
from subfactorkit.algebra.matrices import check_cap
from subfactorkit.algebra.matrices import identity
from subfactorkit.algebra.matrices import norm
from subfactorkit.conf import settings
from subfactorkit.core.exceptions import Infeasible
from subfactorkit.core.exceptions import NotFound
from subfactorkit.core.exceptions import ParameterOutOfRange

from .feasibility import feasibility
from .types import enumerate_profiles
from .types import ProjectionTuple

log = logging.getLogger(__name__)


@dataclass
class RestartOutcome:
    restart: int
    ranks: tuple
    projections: list
    alternating_residual: float
    residual: float
    iterations: int


def _rank_truncation(x, rank):
    """Nearest rank-``rank`` projection to the Hermitian part of ``x``."""
    if rank == 0:
        return np.zeros_like(x)
    values, vectors = np.linalg.eigh((x + adjoint(x)) / 2)
    top = vectors[:, -rank:]
    return top @ adjoint(top)


def _random_projection(rng, dim, rank):
    if rank == 0:
        return np.zeros((dim, dim), dtype=np.complex128)
    z = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    q, __ = np.linalg.qr(z)
    return q @ adjoint(q)


def _sum_residual(projections, target):
    return norm(np.sum(projections, axis=0) - target)


def _hermitian_basis(dim):
    """Real basis of the Hermitian dim x dim matrices, flattened row-major."""
    basis = []
    for a in range(dim):
        h = np.zeros((dim, dim), dtype=np.complex128)
        h[a, a] = 1.0
        basis.append(h.ravel())
        for b in range(a + 1, dim):
            h = np.zeros((dim, dim), dtype=np.complex128)
            h[a, b] = h[b, a] = 1.0
            basis.append(h.ravel())
            h = np.zeros((dim, dim), dtype=np.complex128)
            h[a, b], h[b, a] = 1j, -1j
            basis.append(h.ravel())
    return np.array(basis).T


def polish(projections, target, steps=None, tol=None):
    """
    Gauss-Newton on the conjugation parameters. Returns the polished list and
    its residual; stops early once the residual stops improving.
    """
    steps = settings.POLISH_STEPS if steps is None else steps
    tol = settings.TOLERANCE if tol is None else tol
    dim = target.shape[0]
    basis = _hermitian_basis(dim)
    eye = identity(dim)
    current = list(projections)
    residual = _sum_residual(current, target)
    for step in range(steps):
        if residual < tol / 100:
            break
        defect = (np.sum(current, axis=0) - target).ravel()
        # d/dt e^{itH} p e^{-itH} = i (H p - p H); row-major vec(H p) = (1 (x) p^T) vec(H)
        blocks = [
            1j * (np.kron(eye, p.T) - np.kron(p, eye)) @ basis for p in current
        ]
        jacobian = np.hstack(blocks)
        system = np.vstack([jacobian.real, jacobian.imag])
        rhs = -np.concatenate([defect.real, defect.imag])
        coefficients = np.linalg.lstsq(system, rhs, rcond=None)[0]
        size = basis.shape[1]
        candidate = []
        for index, p in enumerate(current):
            h = (basis @ coefficients[index * size : (index + 1) * size]).reshape(dim, dim)
            u = expm(1j * h)
            candidate.append(u @ p @ adjoint(u))
        new_residual = _sum_residual(candidate, target)
        log.debug("polish step %d: residual %.3e", step, new_residual)
        if new_residual >= residual:
            break
        current, residual = candidate, new_residual
    return current, residual


def _restart(restart, seed_sequence, profile, beta, tol, max_iterations):
    rng = np.random.default_rng(seed_sequence)
    dim = profile.dim
    r = profile.r
    target = float(beta) * identity(dim)
    projections = [_random_projection(rng, dim, k) for k in profile.ranks]
    residual = _sum_residual(projections, target)
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        correction = (np.sum(projections, axis=0) - target) / r
        projections = [
            _rank_truncation(p - correction, k) for p, k in zip(projections, profile.ranks)
        ]
        residual = _sum_residual(projections, target)
        if residual < settings.POLISH_THRESHOLD:
            break
    alternating = residual
    if residual < settings.POLISH_THRESHOLD:
        projections, residual = polish(projections, target, tol=tol)
    log.debug(
        "restart %d ranks %s: %d sweeps, residual %.3e -> %.3e",
        restart,
        profile.ranks,
        iterations,
        alternating,
        residual,
    )
    return RestartOutcome(
        restart=restart,
        ranks=profile.ranks,
        projections=projections,
        alternating_residual=alternating,
        residual=residual,
        iterations=iterations,
    )


def solve_sum(
    r,
    beta,
    dim,
    profile=None,
    seed=None,
    tol=None,
    restarts=None,
    max_iterations=None,
    workers=None,
    cap=None,
):
    """
    Search for a ProjectionTuple with sum residual below ``tol`` (the solver
    tolerance by default).

    Restart j runs profile j mod (number of profiles) from the j-th child of
    ``SeedSequence(seed)``. Restarts run in batches of ``workers`` threads and
    the lowest converged restart index wins, so the result does not depend on
    the number of workers. Raises ``Infeasible`` for infeasible inputs and
    ``NotFound`` once the restart budget is spent.
    """
    seed = settings.SEED if seed is None else seed
    tol = settings.SOLVER_TOLERANCE if tol is None else tol
    restarts = settings.SOLVER_RESTARTS if restarts is None else restarts
    max_iterations = (
        settings.SOLVER_MAX_ITERATIONS if max_iterations is None else max_iterations
    )
    workers = settings.SOLVER_WORKERS if workers is None else workers
    if restarts < 1:
        raise ParameterOutOfRange("the restart budget must be >= 1, got %d" % restarts)
    verdict = feasibility(r, beta, dim)
    if not verdict:
        raise Infeasible(verdict.reason)
    check_cap(dim, cap)
    beta = Fraction(beta)
    if profile is not None:
        if profile.r != r or profile.dim != dim or profile.beta != beta:
            raise ParameterOutOfRange(
                "profile %s does not match the request" % (profile.as_dict(),)
            )
        profiles = [profile]
    else:
        profiles = enumerate_profiles(r, beta, dim)[: settings.SOLVER_PROFILES]
    children = np.random.SeedSequence(seed).spawn(restarts)
    best = None
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        for start in range(0, restarts, max(1, workers)):
            batch = range(start, min(start + max(1, workers), restarts))
            outcomes = list(
                executor.map(
                    lambda j: _restart(
                        j, children[j], profiles[j % len(profiles)], beta, tol, max_iterations
                    ),
                    batch,
                )
            )
            for outcome in outcomes:
                if best is None or outcome.residual < best.residual:
                    best = outcome
                if outcome.residual < tol:
                    log.info(
                        "r=%d beta=%s dim=%d solved at restart %d (residual %.3e)",
                        r,
                        beta,
                        dim,
                        outcome.restart,
                        outcome.residual,
                    )
                    return ProjectionTuple(
                        outcome.projections,
                        beta,
                        info={
                            "construction": "solver",
                            "seed": seed,
                            "restart": outcome.restart,
                            "ranks": list(outcome.ranks),
                            "alternating_residual": outcome.alternating_residual,
                            "polished_residual": outcome.residual,
                            "iterations": outcome.iterations,
                        },
                    )
    log.warning(
        "r=%d beta=%s dim=%d: no solution after %d restarts (best %.3e)",
        r,
        beta,
        dim,
        restarts,
        best.residual,
    )
    raise NotFound(
        "no solution within %d restarts (best residual %.3e)" % (restarts, best.residual),
        best_residual=best.residual,
    )
