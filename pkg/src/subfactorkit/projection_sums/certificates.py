"""
Certificates for relative dimensions of grid stages.

A base tuple p_1, ..., p_4 of projections in M_{4^k} with sum 4 alpha 1 is
lifted to q_j = 1 (x) p_j in dimension (2n)^{2k} and padded to

    q~_i = (q_1, q_2, q_3, q_4, 1, ..., 1, 0, ..., 0)   (i identities)

in Delta_{2n} (x) M_{(2n)^{2k}}. The expectation onto M_{(2n)^{2k}} averages
the blocks, so E(q~_i) = ((4 alpha + i)/(2n)) 1. Blocks are kept
symbolically: the identity factor 1_{n^{2k}} never materializes.
"""
import logging
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

import numpy as np

from subfactorkit.algebra.matrices import identity
from subfactorkit.algebra.matrices import norm
from subfactorkit.conf import settings
from subfactorkit.core.exceptions import DimensionMismatch
from subfactorkit.core.exceptions import MalformedInput
from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.core.exceptions import PreconditionFailed
from subfactorkit.core.utils import format_rational
from subfactorkit.core.utils import parse_rational
from subfactorkit.lambda_sets.bands import band_contains

log = logging.getLogger(__name__)

PROVENANCE = "padded grid projections"
MODELS = ("spin", "vertex")


@dataclass(frozen=True)
class LambdaCertificate:
    """
    alpha' = (beta + i)/(2n) is a relative dimension of stage ``stage`` of
    the model, witnessed by ``projections``. ``blocks`` lists the 2n blocks
    of q~_i as tags.
    """

    model: str
    n: int
    stage: int
    i: int
    alpha: Fraction
    projections: object
    blocks: tuple
    residuals: dict
    tolerance: float
    bands: dict = field(default_factory=dict)
    provenance: str = PROVENANCE

    @property
    def index(self):
        return Fraction(2 * self.n) if self.model.startswith("spin") else Fraction(2 * self.n) ** 2

    @property
    def in_band(self):
        return self.bands[self.index]

    @property
    def passed(self):
        return all(value < self.tolerance for value in self.residuals.values())

    def __bool__(self):
        return self.passed

    def to_dict(self):
        from subfactorkit.core.serialization import projection_tuple_to_dict

        return {
            "model": self.model,
            "stage": self.stage,
            "i": self.i,
            "alpha": format_rational(self.alpha),
            "in_band": self.in_band,
            "bands": {format_rational(k): v for k, v in sorted(self.bands.items())},
            "blocks": list(self.blocks),
            "residuals": {key: float(value) for key, value in self.residuals.items()},
            "tolerance": self.tolerance,
            "pass": self.passed,
            "provenance": self.provenance,
            "base": projection_tuple_to_dict(self.projections),
        }

    as_dict = to_dict

    @classmethod
    def from_dict(cls, data):
        """Rebuild a certificate by recomputing it from the stored base tuple."""
        from subfactorkit.core.serialization import projection_tuple_from_dict

        try:
            slug, __, order = data["model"].partition(":")
            base = projection_tuple_from_dict(data["base"])
            certificate = certify_lambda_element(
                int(order) // 2,
                int(data["stage"]),
                base,
                int(data["i"]),
                model=slug,
                tol=float(data.get("tolerance", settings.SOLVER_TOLERANCE)),
            )
            claimed = parse_rational(data["alpha"])
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInput("malformed certificate: %s" % e)
        if claimed != certificate.alpha:
            raise MalformedInput(
                "certificate claims alpha %s but its tuple gives %s"
                % (data["alpha"], format_rational(certificate.alpha))
            )
        return certificate

    def revalidate(self):
        """Recompute from the embedded tuple; True iff alpha and the pass flag agree."""
        again = certify_lambda_element(
            self.n,
            self.stage,
            self.projections,
            self.i,
            model=self.model.partition(":")[0],
            tol=self.tolerance,
        )
        return again.alpha == self.alpha and again.passed and self.passed


def block_tags(n, i):
    return ("q1", "q2", "q3", "q4") + ("1",) * i + ("0",) * (2 * n - 4 - i)


def certify_lambda_element(n, k, base, i, model="spin", tol=None):
    """
    Lift ``base`` (4 projections in dimension 4^k) to stage k of the spin
    model of index 2n or the vertex model of index (2n)^2 and check
    E(q~_i) = alpha' 1 blockwise.
    """
    tol = settings.SOLVER_TOLERANCE if tol is None else tol
    if model not in MODELS:
        raise ParameterOutOfRange("certificates exist for %s models, got %r" % (MODELS, model))
    if n < 3:
        raise ParameterOutOfRange("need n >= 3, got %d" % n)
    if k < 1:
        raise ParameterOutOfRange("the stage must be >= 1, got %d" % k)
    if not 0 <= i <= 2 * n - 4:
        raise ParameterOutOfRange(
            "i = %d is outside the padded range 0..%d" % (i, 2 * n - 4)
        )
    if base.r != 4:
        raise ParameterOutOfRange("the base tuple needs 4 projections, got %d" % base.r)
    if base.dim != 4 ** k:
        raise DimensionMismatch(
            "stage %d needs base dimension %d, got %d" % (k, 4 ** k, base.dim)
        )
    base_residuals = base.residuals
    if max(base_residuals.values()) >= tol:
        raise PreconditionFailed(
            "base tuple residuals %s exceed %.1e" % (base_residuals, tol)
        )
    d = base.dim
    eye = identity(d)
    blocks = list(base.projections) + [eye] * i + [np.zeros_like(eye)] * (2 * n - 4 - i)
    alpha = (base.beta + i) / (2 * n)
    # 1_{n^{2k}} (x) x has the norm of x, so every residual lives on the 4^k factor.
    expectation = np.sum(blocks, axis=0) / (2 * n)
    residuals = {
        "expectation": norm(expectation - float(alpha) * eye),
        "idempotency": base_residuals["idempotency"],
        "hermiticity": base_residuals["hermiticity"],
        "sum": base_residuals["sum"],
    }
    bands = {
        Fraction(2 * n): band_contains(2 * n, alpha),
        Fraction(2 * n) ** 2: band_contains((2 * n) ** 2, alpha),
    }
    order = 2 * n
    certificate = LambdaCertificate(
        model="%s:%d" % (model, order),
        n=n,
        stage=k,
        i=i,
        alpha=alpha,
        projections=base,
        blocks=block_tags(n, i),
        residuals=residuals,
        tolerance=tol,
        bands=bands,
    )
    log.info(
        "%s stage %d i=%d: alpha' = %s, expectation residual %.3e",
        certificate.model,
        k,
        i,
        alpha,
        residuals["expectation"],
    )
    return certificate
