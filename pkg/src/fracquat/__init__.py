"""Exact symbolic engine for local fractional vector calculus on
Cantor-type coordinate systems, over complex quaternions.

The package parses a small expression DSL, normalizes to a unique
canonical form with exact rational coefficients, differentiates
symbolically, and mechanically verifies the operator identities of the
calculus (Laplacian, Bitsadze and Helmholtz factorizations) as exact
canonical-form equalities.  A numeric layer evaluates the fractal
exponential and trigonometric series.
"""

from .coefficients import CRat, Poly
from .expr import (
    EvaluationDomainError,
    ExpressionError,
    NonInvertibleDivisionError,
    ParseError,
    SingularDivisionError,
    UnboundSymbolError,
    VARIABLES,
)
from .parser import parse
from .canonical import (
    CanonicalExpr,
    Monomial,
    canon,
    equal,
    eval_canonical,
    normalize,
    render_canonical,
)
from .derivative import (
    DerivativeMode,
    ModeViolationError,
    d_alpha,
    d_alpha_gamma,
    differentiate,
    nth_d_alpha,
)
from .series import (
    GammaRangeError,
    JSeries,
    LimitReport,
    SeriesConvergenceError,
    cos_alpha,
    cos_alpha_jseries,
    gamma_one_plus,
    limit_definition_derivative_at_zero,
    ml_exp,
    ml_exp_jseries,
    series_shift_derivative,
    sin_alpha,
    sin_alpha_jseries,
)
from .quaternion import ComplexQuaternion, cross, dot, qmul, sc, vec
from .frames import (
    CARTESIAN,
    CYLINDRICAL,
    FRAMES,
    Frame,
    QuaternionField,
    SPHERICAL,
    abstract_field,
    field,
    frame_by_name,
    scalar_field,
    vector_field,
    zero_field,
)
from .vectorops import curl_alpha, div_alpha, grad_alpha
from .quatops import (
    IDENTITY_NAMES,
    IdentityReport,
    VERIFICATION_MATRIX,
    bitsadze,
    delta0,
    helmholtz_component_system,
    helmholtz_residual,
    laplacian,
    mt_apply,
    perturbed_mt,
    verify_all,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
