"""
JSON codecs for the file formats read and written by the command line.

    matrix       {"dim": n, "entries": [[re, im], ...]}   (row-major)
    subalgebra   {"ambient_dim": n, "basis": [matrix, ...]}
    quadruple    {"N": subalgebra, "P": ..., "Q": ..., "M": ...}
    basis        {"elements": [matrix, ...], "sub": subalgebra,
                  "ambient": subalgebra, "claims": ["right", ...]}
    projections  {"beta": "p/q", "projections": [matrix, ...]}

Rationals always travel as "p/q" strings.
"""
from fractions import Fraction

import numpy as np

from .exceptions import MalformedInput
from .utils import format_rational
from .utils import parse_rational


def matrix_to_dict(m):
    m = np.asarray(m, dtype=np.complex128)
    return {
        "dim": int(m.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in m.ravel()],
    }


def matrix_from_dict(data):
    try:
        dim = int(data["dim"])
        entries = data["entries"]
    except (KeyError, TypeError, ValueError):
        raise MalformedInput("a matrix needs integer 'dim' and an 'entries' list")
    if dim < 1 or len(entries) != dim * dim:
        raise MalformedInput(
            "matrix of dim %d needs %d entries, got %d" % (dim, dim * dim, len(entries))
        )
    values = []
    for entry in entries:
        if isinstance(entry, (int, float)):
            values.append(complex(entry))
        elif isinstance(entry, (list, tuple)) and len(entry) == 2:
            values.append(complex(float(entry[0]), float(entry[1])))
        else:
            raise MalformedInput("matrix entries are [re, im] pairs, got %r" % (entry,))
    return np.array(values, dtype=np.complex128).reshape(dim, dim)


def subalgebra_to_dict(sub):
    return {
        "ambient_dim": sub.ambient_dim,
        "basis": [matrix_to_dict(b) for b in sub.basis],
    }


def subalgebra_from_dict(data, label=""):
    from subfactorkit.algebra.subalgebras import StarSubalgebra

    try:
        ambient_dim = int(data["ambient_dim"])
        basis = [matrix_from_dict(b) for b in data["basis"]]
    except (KeyError, TypeError, ValueError):
        raise MalformedInput("a subalgebra needs 'ambient_dim' and a 'basis' list")
    return StarSubalgebra.from_spanning_set(basis, ambient_dim, label=label)


def quadruple_from_dict(data):
    from subfactorkit.commuting_square import QuadrupleOfAlgebras

    try:
        parts = {key: subalgebra_from_dict(data[key], label=key) for key in "NPQM"}
    except (KeyError, TypeError):
        raise MalformedInput("a quadruple needs subalgebras 'N', 'P', 'Q' and 'M'")
    return QuadrupleOfAlgebras(**parts)


def quadruple_to_dict(quadruple):
    return {
        key: subalgebra_to_dict(getattr(quadruple, key)) for key in "NPQM"
    }


def basis_from_dict(data):
    from subfactorkit.pimsner_popa import BasisCandidate

    try:
        elements = [matrix_from_dict(m) for m in data["elements"]]
        sub = subalgebra_from_dict(data["sub"], label="N")
        ambient = subalgebra_from_dict(data["ambient"], label="M")
    except (KeyError, TypeError):
        raise MalformedInput("a basis needs 'elements', 'sub' and 'ambient'")
    claims = tuple(data.get("claims", ("right", "orthonormal")))
    return BasisCandidate(elements=elements, sub=sub, ambient=ambient), claims


def basis_to_dict(candidate, claims=("right", "orthonormal")):
    return {
        "elements": [matrix_to_dict(m) for m in candidate.elements],
        "sub": subalgebra_to_dict(candidate.sub),
        "ambient": subalgebra_to_dict(candidate.ambient),
        "claims": list(claims),
    }


def projection_tuple_to_dict(projection_tuple):
    return {
        "beta": format_rational(projection_tuple.beta),
        "projections": [matrix_to_dict(p) for p in projection_tuple.projections],
    }


def projection_tuple_from_dict(data):
    from subfactorkit.projection_sums.types import ProjectionTuple

    try:
        beta = parse_rational(data["beta"])
        projections = [matrix_from_dict(p) for p in data["projections"]]
    except (KeyError, TypeError):
        raise MalformedInput("a projection tuple needs 'beta' and 'projections'")
    if not projections:
        raise MalformedInput("a projection tuple needs at least one projection")
    return ProjectionTuple(projections=projections, beta=Fraction(beta))
