class SubfactorkitError(Exception):
    pass


# Shapes that do not fit together, e.g. an element of M_3 handed to a
# subalgebra of M_4.


class DimensionMismatch(SubfactorkitError):
    pass


# A stored basis is no longer trace-orthonormal.


class DegenerateBasis(SubfactorkitError):
    pass


class RankDeficiency(SubfactorkitError):
    """Singular values fell between "clearly zero" and "clearly nonzero"."""

    def __init__(self, message, effective_dimension):
        super().__init__(message)
        self.effective_dimension = effective_dimension


class NotContained(SubfactorkitError):
    pass


class NotFaithful(SubfactorkitError):
    pass


# No unique Markov trace exists for a disconnected inclusion matrix.


class DisconnectedInclusion(SubfactorkitError):
    pass


class DimensionCapExceeded(SubfactorkitError):
    def __init__(self, dimension, cap):
        super().__init__(
            "dimension %d exceeds the configured cap %d" % (dimension, cap)
        )
        self.dimension = dimension
        self.cap = cap


class InvalidHadamard(SubfactorkitError):
    pass


class InvalidBiUnitary(SubfactorkitError):
    pass


class PreconditionFailed(SubfactorkitError):
    pass


# Only simple and abelian algebras get a constructed unitary basis.


class OutOfScope(SubfactorkitError):
    pass


# The band (t, 1 - t) is empty or degenerate for index <= 4.


class BandUndefined(SubfactorkitError):
    pass


class ParameterOutOfRange(SubfactorkitError):
    pass


class Infeasible(SubfactorkitError):
    pass


# The solver spent its restart budget. This never means infeasible.


class NotFound(SubfactorkitError):
    def __init__(self, message, best_residual=None):
        super().__init__(message)
        self.best_residual = best_residual


class MalformedInput(SubfactorkitError):
    pass
