"""Domain-specific exceptions."""


class GFCohomologyError(Exception):
    """Base class for all gf-cohomology errors."""


class ComplexError(GFCohomologyError):
    """A chain complex has inconsistent shapes or d∘d ≠ 0."""


class AlgebraError(GFCohomologyError):
    """Invalid graded-commutative algebra data (generators, bound, differential)."""


class LieAlgebraError(GFCohomologyError):
    """Structure constants violate antisymmetry/Jacobi, or a subalgebra is not closed."""


class WeightWindowError(LieAlgebraError):
    """The weight window of a graded Lie algebra slice is too small for the degree asked."""


class DecompositionError(GFCohomologyError):
    """Representation data is inconsistent (dimensions, group order, closure)."""


class QuaternionicFactorError(DecompositionError):
    """A quaternionic-type real irreducible; the invariant model needs cyclic or complex-type data."""


class InfeasibleError(GFCohomologyError):
    """Requested computation exceeds a documented size bound."""


class ModeError(GFCohomologyError):
    """Relativity mode does not fit the field or the operation."""


class OracleMismatch(GFCohomologyError):
    """The weight-zero pipeline and the truncated-Weil pipeline disagree."""
