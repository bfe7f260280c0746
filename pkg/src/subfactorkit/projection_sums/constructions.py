"""
Closed-form sums of projections.

Building blocks: harmonic frames (r' rank-one projections onto the rows of a
truncated Fourier matrix sum to (r'/d) 1_d), padding with zeros and
identities, tensoring with an identity, direct sums and the complement move
p -> 1 - p. Whatever these cannot reach is left to the numerical solver.
"""
import logging
from fractions import Fraction
from functools import lru_cache

import numpy as np

from subfactorkit.algebra.matrices import identity
from subfactorkit.core.exceptions import Infeasible

from .feasibility import feasibility
from .types import ProjectionTuple

log = logging.getLogger(__name__)


def harmonic_frame(count, d):
    """``count`` rank-one projections in C^d summing to (count/d) 1_d; needs d <= count."""
    omega = np.exp(2j * np.pi / count)
    projections = []
    for j in range(count):
        v = omega ** (j * np.arange(d)) / np.sqrt(d)
        projections.append(np.outer(v, v.conj()))
    return projections


def _block_recipes(r, beta):
    """
    (d, identities, frame size) triples with beta = identities + size/d and
    identities + size <= r; d is the block dimension.
    """
    recipes = []
    for identities in range(int(beta) + 1):
        rest = beta - identities
        if rest == 0:
            recipes.append((1, identities, 0))
            continue
        for size in range(1, r - identities + 1):
            d = Fraction(size) / rest
            if d.denominator == 1 and 1 <= d <= size:
                recipes.append((int(d), identities, size))
    return sorted(recipes)


def _build_block(r, beta, recipe):
    d, identities, size = recipe
    eye = identity(d)
    frame = harmonic_frame(size, d) if size else []
    zeros = [np.zeros_like(eye)] * (r - identities - size)
    return ProjectionTuple(frame + [eye] * identities + zeros, beta)


def _construct_direct(r, beta, dim):
    recipes = _block_recipes(r, beta)
    if not recipes:
        return None

    @lru_cache(maxsize=None)
    def split(remaining):
        # Largest blocks first; each block may be tensored with an identity.
        if remaining == 0:
            return ()
        for recipe in reversed(recipes):
            d = recipe[0]
            if d <= remaining and remaining % d == 0:
                return ((recipe, remaining // d),)
        for recipe in reversed(recipes):
            d = recipe[0]
            if d < remaining:
                rest = split(remaining - d)
                if rest is not None:
                    return ((recipe, 1),) + rest
        return None

    plan = split(dim)
    if plan is None:
        return None
    result = None
    for recipe, multiplicity in plan:
        block = _build_block(r, beta, recipe)
        if multiplicity > 1:
            block = block.tensor_identity(multiplicity)
        result = block if result is None else result.direct_sum(block)
    result.info = {"construction": "exact", "plan": [[list(rec), m] for rec, m in plan]}
    return result


def exact_construct(r, beta, dim):
    """
    A closed-form ProjectionTuple for beta 1_dim as a sum of r projections, or
    None when the building blocks do not reach it. Raises ``Infeasible`` when
    no tuple exists at all.
    """
    verdict = feasibility(r, beta, dim)
    if not verdict:
        raise Infeasible(verdict.reason)
    beta = verdict.beta
    result = _construct_direct(r, beta, dim)
    if result is None and beta > Fraction(r, 2):
        complement = _construct_direct(r, r - beta, dim)
        if complement is not None:
            result = complement.complement()
            result.info = dict(complement.info, complement=True)
    if result is None:
        log.debug("no closed form for r=%d beta=%s dim=%d", r, beta, dim)
    return result
