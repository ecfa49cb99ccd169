"""Exception types shared across the package."""


class LieIdealsError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(LieIdealsError, ValueError):
    """Operands live in different ambient spaces."""


class FieldMismatchError(LieIdealsError, ValueError):
    """Operands are defined over different prime fields."""


class AlgebraMismatchError(LieIdealsError, ValueError):
    """Elements belong to different algebras."""


class AssociativityError(LieIdealsError, ValueError):
    """A structure-constant table fails associativity on a basis triple."""

    def __init__(self, triple, message=None):
        self.triple = triple
        super().__init__(message or f"associativity fails on basis triple {triple}")


class InvalidDefinitionError(LieIdealsError, ValueError):
    """Malformed algebra definition (JSON file or builtin specifier)."""


class BudgetExceededError(LieIdealsError, RuntimeError):
    """An exhaustive scan or enumeration exceeds its configured budget."""


class UnsupportedAlgebraError(LieIdealsError, ValueError):
    """Operation requires a structural property (simple, unital, ...)
    the given algebra does not have."""


class NotLieIdealError(LieIdealsError, ValueError):
    """A subspace claimed to be a Lie ideal is not one.

    Carries a witness pair (element of the subspace, basis element of the
    algebra) whose bracket escapes the subspace.
    """

    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"not a Lie ideal: bracket witness {witness}")


class TheoremViolationError(LieIdealsError, AssertionError):
    """A verified theorem failed on a concrete instance.

    This must surface as a counterexample, never as a silent result.
    """

    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"theorem violated, witness: {witness}")
