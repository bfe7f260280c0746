"""
Enumeration of the explicit Lambda families of a grid model.
"""
import logging
from fractions import Fraction

from subfactorkit.conf import settings
from subfactorkit.core.exceptions import MalformedInput
from subfactorkit.core.grids.registry import get_grid

from .elements import LambdaFamilyElement
from .orbits import popa_orbit
from .orbits import zeta_matrix

log = logging.getLogger(__name__)

#: Families computed from other families, in emission order.
DERIVED_FAMILIES = ("popa_orbit", "zeta", "complement")


def _resolve(model):
    if isinstance(model, str):
        return get_grid(model)
    return model


def _selected(grid, families):
    available = tuple(grid.families) + DERIVED_FAMILIES
    if families in (None, "all"):
        return available
    if isinstance(families, str):
        families = [name.strip() for name in families.split(",") if name.strip()]
    unknown = [name for name in families if name not in available]
    if unknown:
        raise MalformedInput(
            "unknown families for %s: %s (available: %s)"
            % (grid.label, ", ".join(unknown), ", ".join(available))
        )
    return tuple(name for name in available if name in families)


def seeded_orbits(model, steps=None, seeds=None):
    """
    Even Popa iterates g^2(x), ..., g^(2 steps)(x) of every seed t < x < 1/2.
    Seeds default to the grid's reciprocal family.
    """
    grid = _resolve(model)
    steps = settings.ORBIT_STEPS if steps is None else steps
    if grid.index <= 4:
        return []
    if seeds is None:
        seeds = grid.orbit_seeds(
            [e for name in grid.families for e in grid.build(name)]
        )
    elements = []
    for seed in seeds:
        if not (seed.value < Fraction(1, 2) and seed.in_band):
            continue
        for term in popa_orbit(grid.index, seed.value, 2 * steps)[2::2]:
            elements.append(
                LambdaFamilyElement(
                    value=term.value,
                    family="popa_orbit",
                    index=grid.index,
                    provenance="even iterates of the recursive orbit",
                    params=(("seed", seed.tag), ("step", term.step)),
                    covered=seed.covered,
                )
            )
    return elements


def _zeta_elements(grid, gammas):
    """
    Columns k >= 1 of the zeta matrix over every gamma row of a spin grid.
    The two-step map (2n - 1/(1 - x))^-1 belongs to index 2n, so vertex grids
    get no zeta columns.
    """
    half = grid.n // 2
    if not gammas or grid.index != 2 * half:
        return []
    ms = sorted({dict(e.params)["m"] for e in gammas})
    ks = range(1, settings.ORBIT_STEPS + 1)
    elements = []
    for i in sorted({dict(e.params)["i"] for e in gammas}):
        matrix = zeta_matrix(half, i, ms, ks)
        for m, row in matrix.rows.items():
            for k, value in zip(ks, row):
                elements.append(
                    LambdaFamilyElement(
                        value=value,
                        family="zeta",
                        index=grid.index,
                        provenance="two-step orbit of the padded grid family",
                        params=(("m", m), ("i", i), ("k", k)),
                        extra_indices=((2 * half) ** 2,),
                    )
                )
    return elements


def known_families(model, families="all"):
    """
    Every explicit family of ``model`` (a grid instance or a string such as
    ``spin:6``) with exact band flags, closed under alpha -> 1 - alpha.

    Elements outside the range their construction is proved for are emitted
    with ``covered`` False.
    """
    grid = _resolve(model)
    names = _selected(grid, families)
    elements = []
    built = {}
    for name in grid.families:
        built[name] = grid.build(name)
        if name in names:
            elements.extend(built[name])
    if "popa_orbit" in names:
        seeds = grid.orbit_seeds([e for name in grid.families for e in built[name]])
        elements.extend(seeded_orbits(grid, seeds=seeds))
    if "zeta" in names:
        elements.extend(_zeta_elements(grid, built.get("gamma", [])))
    if "complement" in names:
        values = {e.value for e in elements}
        for element in list(elements):
            if 1 - element.value not in values:
                elements.append(element.complement())
                values.add(1 - element.value)
    log.debug("%s: %d family elements", grid.label, len(elements))
    return elements
