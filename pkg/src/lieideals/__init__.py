"""Exact Lie-ideal computations for finite-dimensional associative
algebras over prime fields GF(p).

The package enumerates Lie ideals and two-sided ideals exactly, classifies
Lie ideals of simple unital algebras (central / plane / containing the
commutators), and runs exhaustive theorem suites with serialized failure
witnesses.  See ``lieideals.cli`` for the command-line surface.
"""

from .algebra import (
    Algebra,
    Element,
    direct_sum,
    field_algebra,
    load_algebra,
    matrix_algebra,
    tensor_product,
    triangular_algebra,
    unitization,
)
from .classify import (
    CENTRAL,
    CONTAINS_COMMUTATORS,
    PLANE,
    LieIdealClass,
    classify_lie_ideal,
    is_exceptional,
    is_prime,
    is_semiprime,
    is_simple,
)
from .enumeration import all_ideals, all_lie_ideals, all_subspaces, contains_nonzero_ideal
from .errors import (
    AssociativityError,
    BudgetExceededError,
    LieIdealsError,
    NotLieIdealError,
    TheoremViolationError,
    UnsupportedAlgebraError,
)
from .finite_linalg import GF, Subspace, span
from .kernels import BACKEND
from .report import CheckReport
from .verify import VerifyConfig, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Element",
    "GF",
    "Subspace",
    "span",
    "matrix_algebra",
    "triangular_algebra",
    "field_algebra",
    "tensor_product",
    "direct_sum",
    "unitization",
    "load_algebra",
    "all_lie_ideals",
    "all_ideals",
    "all_subspaces",
    "contains_nonzero_ideal",
    "classify_lie_ideal",
    "LieIdealClass",
    "CENTRAL",
    "PLANE",
    "CONTAINS_COMMUTATORS",
    "is_simple",
    "is_prime",
    "is_semiprime",
    "is_exceptional",
    "run_all",
    "run_suite",
    "VerifyConfig",
    "CheckReport",
    "BACKEND",
    "LieIdealsError",
    "AssociativityError",
    "NotLieIdealError",
    "TheoremViolationError",
    "UnsupportedAlgebraError",
    "BudgetExceededError",
    "__version__",
]
