"""
An independent decision of "beta 1_N is a sum of r projections" for N <= 3.

In dimension N <= 3 every projection has rank 0, 1, N - 1 or N, so a tuple is
described by how many projections of each rank it has. What remains is
whether the rank-one parts can balance:

* N = 1: projections are 0 or 1.
* N = 2: a rank-one projection is (1 + n.sigma)/2 for a unit vector n, so c
  rank-one projections sum to a scalar iff c unit vectors sum to zero,
  which happens iff c != 1.
* N = 3: with a identities, b rank-two projections 1 - q'_k and c rank-one
  projections q_j, the frame operators A = sum q_j and B = sum q'_k must
  satisfy A - B = gamma 1 with gamma = (c - b)/3. A positive operator is the
  frame operator of c unit vectors iff its trace is c and its rank is at
  most c (Schur-Horn). For gamma > 0 the operator A has full rank, which
  needs c >= 3; gamma < 0 symmetrically needs b >= 3; gamma = 0 always works
  with A = B.
"""
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

import numpy as np

from subfactorkit.algebra.matrices import identity
from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.core.utils import format_rational

from .feasibility import check_arguments
from .types import ProjectionTuple

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
)


@dataclass(frozen=True)
class OracleVerdict:
    feasible: bool
    r: int
    beta: Fraction
    dim: int
    reason: str
    configuration: dict = field(default_factory=dict)
    witness: ProjectionTuple = None

    def __bool__(self):
        return self.feasible

    def as_dict(self):
        data = {
            "feasible": self.feasible,
            "r": self.r,
            "beta": format_rational(self.beta),
            "dim": self.dim,
            "reason": self.reason,
            "configuration": dict(self.configuration),
        }
        if self.witness is not None:
            data["witness"] = self.witness.as_dict()
        return data


def bloch_projection(angle):
    """(1 + cos(angle) sigma_1 + sin(angle) sigma_2)/2."""
    return (identity(2) + np.cos(angle) * PAULI[0] + np.sin(angle) * PAULI[1]) / 2


def _witness(r, beta, dim, configuration):
    eye = identity(dim)
    zero = np.zeros_like(eye)
    full = configuration["rank_%d" % dim]
    projections = [eye] * full
    if dim == 2:
        c = configuration["rank_1"]
        projections += [bloch_projection(2 * np.pi * j / c) for j in range(c)]
    projections += [zero] * (r - len(projections))
    return ProjectionTuple(projections, beta, info={"construction": "oracle"})


def _search_small(r, beta, dim):
    """N = 1 and N = 2: a full-rank projections and c rank-one ones."""
    for a in range(r + 1):
        if dim == 1:
            if a == beta:
                return {"rank_1": a}
            continue
        for c in range(r - a + 1):
            if c != 1 and a + Fraction(c, 2) == beta:
                return {"rank_2": a, "rank_1": c}
    return None


def _search_three(r, beta):
    for a in range(r + 1):
        for b in range(r - a + 1):
            for c in range(r - a - b + 1):
                if a + Fraction(2 * b + c, 3) != beta:
                    continue
                if c == b or (c > b and c >= 3) or (b > c and b >= 3):
                    return {"rank_3": a, "rank_2": b, "rank_1": c}
    return None


def brute_force_oracle(r, beta, dim):
    """Exact case analysis for dim <= 3; a witness tuple is attached for dim <= 2."""
    beta = check_arguments(r, beta, dim)
    if dim > 3:
        raise ParameterOutOfRange("the oracle covers dimensions <= 3, got %d" % dim)
    if (dim * beta).denominator != 1 or beta > r:
        return OracleVerdict(
            feasible=False,
            r=r,
            beta=beta,
            dim=dim,
            reason="trace: %d * %s is not an integer in 0..%d"
            % (dim, format_rational(beta), r * dim),
        )
    if dim == 3:
        configuration = _search_three(r, beta)
    else:
        configuration = _search_small(r, beta, dim)
    if configuration is None:
        return OracleVerdict(
            feasible=False,
            r=r,
            beta=beta,
            dim=dim,
            reason="no rank configuration balances its rank-one parts",
        )
    witness = _witness(r, beta, dim, configuration) if dim <= 2 else None
    return OracleVerdict(
        feasible=True,
        r=r,
        beta=beta,
        dim=dim,
        reason="rank configuration %s" % configuration,
        configuration=configuration,
        witness=witness,
    )
