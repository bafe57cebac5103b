"""quadcheck: numerical verification of kernel integral identities.

The library evaluates both sides of a family of definite-integral
identities built on the kernel ``cosh x / (1 + 2 a^2 cosh 2x + a^4)``:
the left side by adaptive complex quadrature over unbounded or contour
domains, the right side in closed form, for built-in worked cases and for
user-supplied transforms written in a small expression language.
"""

from .catalog import CaseDefinition, list_cases, run_case
from .errors import (
    DivergenceError,
    DomainError,
    EvaluationError,
    IntegrandError,
    NonConvergenceError,
    ParameterError,
    ParseError,
    PoleError,
    QuadcheckError,
    UnknownCaseError,
)
from .expr import evaluate, parse, to_string
from .kernel import (
    DEFAULT_TOLERANCE,
    KernelParams,
    TransformFunction,
    VerificationReport,
    detect_schwarz_symmetry,
    kernel_weight,
    master_lhs,
    master_rhs,
    seed_lhs,
    seed_rhs,
    verify_master,
    verify_seed,
)
from .numerics import (
    AccuracyWarning,
    POLE_GUARD_RADIUS,
    PRINCIPAL_BRANCH,
    cpow,
    gamma,
    reciprocal_gamma,
    zeta,
)
from .quadrature import (
    QuadratureOptions,
    QuadratureResult,
    integrate_finite,
    integrate_half_line,
    integrate_real_line,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyWarning",
    "CaseDefinition",
    "DEFAULT_TOLERANCE",
    "DivergenceError",
    "DomainError",
    "EvaluationError",
    "IntegrandError",
    "KernelParams",
    "NonConvergenceError",
    "POLE_GUARD_RADIUS",
    "PRINCIPAL_BRANCH",
    "ParameterError",
    "ParseError",
    "PoleError",
    "QuadcheckError",
    "QuadratureOptions",
    "QuadratureResult",
    "TransformFunction",
    "UnknownCaseError",
    "VerificationReport",
    "cpow",
    "detect_schwarz_symmetry",
    "evaluate",
    "gamma",
    "integrate_finite",
    "integrate_half_line",
    "integrate_real_line",
    "kernel_weight",
    "list_cases",
    "master_lhs",
    "master_rhs",
    "parse",
    "seed_lhs",
    "seed_rhs",
    "reciprocal_gamma",
    "run_case",
    "to_string",
    "verify_master",
    "verify_seed",
    "zeta",
]
