"""Built-in verification cases.

Each case packages one worked instance of the kernel identities exactly as
printed in its source normalization (half-line forms carry the 4a(1+a^2)
factor, full-line forms 2a(1+a^2)), together with its closed form, parameter
constraints, and the reference check value where one exists.  Cross-links to
the master identity live in the test suite, not here.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Mapping

from . import numerics
from .errors import NonConvergenceError, ParameterError, UnknownCaseError
from .kernel import (
    DEFAULT_TOLERANCE,
    KernelParams,
    VerificationReport,
    kernel_weight,
)
from .numerics import AccuracyWarning
from .quadrature import (
    Integrand,
    QuadratureOptions,
    QuadratureResult,
    integrate_finite,
    integrate_half_line,
    integrate_real_line,
    with_truncation,
)

__all__ = ["CaseDefinition", "list_cases", "get_case", "run_case", "CATALOG_ORDER"]

Params = Mapping[str, complex]

#: First ordinates of nontrivial zeta zeros; the contour case warns when its
#: argument parabola passes close to one of them (denominator accuracy).
_ZETA_ZERO_ORDINATES = (
    14.134725141734693,
    21.022039638771555,
    25.010857580145688,
    30.424876125859513,
    32.935061587739190,
)
_ZETA_ZERO_WARN_DISTANCE = 0.05


@dataclass(frozen=True)
class CaseDefinition:
    """A runnable verification case.

    ``make_integrand`` builds the left-side integrand from validated
    parameters; ``closed_form`` the right side.  ``validate`` normalizes a
    raw parameter map and raises ParameterError on constraint violations.
    ``run_lhs`` overrides the generic domain dispatch for cases that manage
    their own truncation (the contour case).
    """

    case_id: str
    domain: str  # "half-line" | "real-line" | "imaginary-axis"
    param_names: tuple[str, ...]
    defaults: Mapping[str, complex]
    constraints: str
    notes: str
    reference_check: tuple[Mapping[str, complex], complex] | None
    make_integrand: Callable[[Params], Integrand]
    closed_form: Callable[[Params], complex]
    validate: Callable[[dict[str, complex]], dict[str, complex]]
    is_experimental: Callable[[Params], bool]
    run_lhs: Callable[[Params, QuadratureOptions], QuadratureResult] | None = None


def _as_complex(value) -> complex:
    v = complex(value)
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise ParameterError("parameter values must be finite")
    return v


def _require_real(params: dict, name: str) -> float:
    v = _as_complex(params[name])
    if v.imag != 0.0:
        raise ParameterError(f"parameter {name!r} must be real, got {v!r}")
    params[name] = complex(v.real)
    return v.real


def _require_real_positive(params: dict, name: str) -> float:
    v = _require_real(params, name)
    if not v > 0:
        raise ParameterError(f"parameter {name!r} must be positive, got {v!r}")
    return v


def _require_nonzero(params: dict, name: str) -> complex:
    v = _as_complex(params[name])
    if v == 0:
        raise ParameterError(f"parameter {name!r} must be nonzero")
    params[name] = v
    return v


def _complex_a_experimental(params: Params) -> bool:
    a = complex(params["a"])
    return not (a.imag == 0.0 and a.real > 0.0)


def _ln_sq(a: complex) -> complex:
    ln_a = cmath.log(a)
    return ln_a * ln_a


_QUARTER_PI_SQ = math.pi * math.pi / 4.0


# --- rational: transform 1/(k+b) ------------------------------------------

def _rational_validate(params: dict) -> dict:
    _require_nonzero(params, "a")
    # the b -> 0 limit differs from b = 0, so zero and negative b are refused
    _require_real_positive(params, "b")
    return params


def _rational_integrand(params: Params) -> Integrand:
    kp = KernelParams(params["a"])
    b = params["b"].real
    c1 = 2.0 * b + math.pi * math.pi

    def f(x: float) -> complex:
        x2 = x * x
        return (x2 + b) / (x2 * x2 + c1 * x2 + b * b) * kernel_weight(kp, x)

    return f


def _rational_closed_form(params: Params) -> complex:
    a = complex(params["a"])
    b = params["b"].real
    return math.pi / (4.0 * a * (1.0 + a * a) * (b + _QUARTER_PI_SQ + _ln_sq(a)))


# --- bessel: transform 1/sqrt(1+k^2) --------------------------------------

def _bessel_validate(params: dict) -> dict:
    _require_nonzero(params, "a")
    return params


def _bessel_integrand(params: Params) -> Integrand:
    kp = KernelParams(params["a"])

    def f(x: float) -> complex:
        k = complex(x * x, math.pi * x)
        return kernel_weight(kp, x) / cmath.sqrt(1.0 + k * k)

    return f


def _bessel_closed_form(params: Params) -> complex:
    a = complex(params["a"])
    s = _QUARTER_PI_SQ + _ln_sq(a)
    return math.pi / (2.0 * a * (1.0 + a * a) * cmath.sqrt(1.0 + s * s))


# --- gaussian: transform exp(-b k^2) ---------------------------------------

def _gaussian_validate(params: dict) -> dict:
    _require_nonzero(params, "a")
    _require_real_positive(params, "b")
    return params


def _gaussian_integrand(params: Params) -> Integrand:
    kp = KernelParams(params["a"])
    b = params["b"].real
    pi2 = math.pi * math.pi

    def f(x: float) -> complex:
        x2 = x * x
        return (
            math.exp(-b * x2 * (x2 - pi2))
            * math.cos(2.0 * b * math.pi * x2 * x)
            * kernel_weight(kp, x)
        )

    return f


def _gaussian_closed_form(params: Params) -> complex:
    a = complex(params["a"])
    b = params["b"].real
    s = _QUARTER_PI_SQ + _ln_sq(a)
    return cmath.exp(-b * s * s) * math.pi / (4.0 * a * (1.0 + a * a))


# --- cosine: transform cos(alpha k) ----------------------------------------

def _cosine_validate(params: dict) -> dict:
    _require_nonzero(params, "a")
    _require_real(params, "alpha")
    # alpha*pi > 1 is deliberately NOT rejected here: the integrand then
    # grows like exp((alpha*pi - 1)|x|) and the divergence detector must
    # report it, rather than a constraint check hiding the behavior.
    return params


def _cosine_integrand(params: Params) -> Integrand:
    kp = KernelParams(params["a"])
    alpha = params["alpha"].real

    def f(x: float) -> complex:
        return (
            math.cos(alpha * x * x)
            * math.cosh(alpha * math.pi * x)
            * kernel_weight(kp, x)
        )

    return f


def _cosine_closed_form(params: Params) -> complex:
    a = complex(params["a"])
    alpha = params["alpha"].real
    return (
        math.pi
        * cmath.cos(alpha * (_QUARTER_PI_SQ + _ln_sq(a)))
        / (4.0 * a * (1.0 + a * a))
    )


# --- gamma: transform 1/gamma(4 a k / pi^2 + b) at the sech specialization --

def _gamma_validate(params: dict) -> dict:
    a = _require_real(params, "a")
    if a < 0:
        # the argument parabola would head into the left half plane, where
        # 1/gamma grows super-exponentially and the integral diverges
        raise ParameterError(f"parameter 'a' must be >= 0, got {a!r}")
    _require_real(params, "b")
    return params


def _gamma_integrand(params: Params) -> Integrand:
    a = params["a"].real
    b = params["b"].real

    def f(x: float) -> complex:
        z = complex(4.0 * a * x * x + b, 4.0 * a * x)
        return numerics.reciprocal_gamma(z) / math.cosh(math.pi * x)

    return f


def _gamma_closed_form(params: Params) -> complex:
    return numerics.reciprocal_gamma(complex(params["a"].real + params["b"].real))


# --- zeta: contour integral on the imaginary axis --------------------------

def _zeta_validate(params: dict) -> dict:
    n = _require_real(params, "n")
    if n != int(n) or not (0 <= n <= 4):
        raise ParameterError(f"parameter 'n' must be an integer in 0..4, got {n!r}")
    params["n"] = complex(int(n))
    x = _require_real(params, "x")
    if not (0.0 < x < 1.0):
        raise ParameterError(f"parameter 'x' must satisfy 0 < x < 1, got {x!r}")
    _require_real_positive(params, "a")
    return params


def _zeta_truncation(x: float, abs_tol: float) -> float:
    """Smallest half-width T with x^(T^2)/cosh(pi T) below abs_tol/100.

    Decay is super-Gaussian, so T stays below 8 for x <= 0.9.
    """
    ln_x = math.log(x)
    threshold = math.log(abs_tol) + math.log(1e-2)
    t = 1.0
    while t < 40.0:
        if t * t * ln_x - (math.pi * t - math.log(2.0)) <= threshold:
            return t
        t += 0.5
    return 40.0


def _zeta_integrand(params: Params) -> Integrand:
    n = int(params["n"].real)
    x = params["x"].real
    a = params["a"].real
    ln_x = math.log(x)
    two_pi = 2.0 * math.pi

    def f(t: float) -> complex:
        # x^(t^2 + i t) with real ln x; no branch ambiguity for 0 < x < 1
        num = cmath.exp(complex(t * t * ln_x, t * ln_x))
        den = math.cosh(math.pi * t) * two_pi
        if n:
            den = den * numerics.zeta(complex(4.0 * a * t * t, 4.0 * a * t)) ** n
        return num / den

    return f


def _zeta_closed_form(params: Params) -> complex:
    n = int(params["n"].real)
    x = params["x"].real
    a = params["a"].real
    base = x**0.25 / (2.0 * math.pi)
    if n == 0:
        return complex(base)
    if abs(a - 1.0) < numerics.POLE_GUARD_RADIUS:
        # the zeta factor in the denominator diverges at a = 1, so the
        # closed form collapses to 0; the contour side stays regular
        return 0j
    return base / numerics.zeta(complex(a)) ** n


def _zeta_warn_near_zero(a: float, T: float) -> None:
    """Warn when the argument parabola w(t) = 4a(t^2 + i t) comes within
    ``_ZETA_ZERO_WARN_DISTANCE`` of a nontrivial zeta zero.

    The squared distance to a zero 1/2 + i g is minimized where
    8 a t^3 + (4a - 1) t - g = 0; Newton from t = g/(4a) converges in a
    few steps since the cubic is increasing there.
    """
    closest = math.inf
    for g in _ZETA_ZERO_ORDINATES:
        t = g / (4.0 * a)
        for _ in range(50):
            deriv = 24.0 * a * t * t + 4.0 * a - 1.0
            if deriv <= 0:
                break
            step = (8.0 * a * t**3 + (4.0 * a - 1.0) * t - g) / deriv
            t -= step
            if abs(step) < 1e-14 * max(1.0, abs(t)):
                break
        if not 0.0 <= t <= T:
            continue  # the close approach lies outside the truncation window
        w = complex(4.0 * a * t * t, 4.0 * a * t)
        closest = min(closest, abs(w - complex(0.5, g)))
    if closest < _ZETA_ZERO_WARN_DISTANCE:
        warnings.warn(
            f"contour argument passes within {closest:.3g} of a nontrivial "
            "zeta zero; the denominator loses accuracy there",
            AccuracyWarning,
            stacklevel=3,
        )


def _zeta_run_lhs(params: Params, opts: QuadratureOptions) -> QuadratureResult:
    T = _zeta_truncation(params["x"].real, opts.abs_tol)
    if int(params["n"].real) > 0:
        _zeta_warn_near_zero(params["a"].real, T)
    result = integrate_finite(_zeta_integrand(params), -T, T, opts)
    return with_truncation(result, T)


# --- catalog ----------------------------------------------------------------

_CASES: dict[str, CaseDefinition] = {}


def _register(case: CaseDefinition) -> None:
    _CASES[case.case_id] = case


_register(
    CaseDefinition(
        case_id="rational",
        domain="half-line",
        param_names=("a", "b"),
        defaults={"a": complex(0.7), "b": complex(2.0)},
        constraints="a nonzero (real a > 0 canonical); b real > 0",
        notes=(
            "Transform 1/(k+b).  b <= 0 is rejected: the b -> 0 limit of the "
            "integral differs from its value at b = 0."
        ),
        reference_check=({"a": complex(0.7), "b": complex(2.0)}, complex(0.163891)),
        make_integrand=_rational_integrand,
        closed_form=_rational_closed_form,
        validate=_rational_validate,
        is_experimental=_complex_a_experimental,
    )
)

_register(
    CaseDefinition(
        case_id="bessel",
        domain="real-line",
        param_names=("a",),
        defaults={"a": complex(7.0)},
        constraints="a nonzero (real a > 0 canonical)",
        notes=(
            "Transform 1/sqrt(1+k^2) (principal square root).  The reference "
            "check value 0.000708622 matches a=7, not the printed a=0.7: at "
            "a=0.7 the closed form evaluates to about 0.5416121940."
        ),
        reference_check=({"a": complex(7.0)}, complex(0.000708622)),
        make_integrand=_bessel_integrand,
        closed_form=_bessel_closed_form,
        validate=_bessel_validate,
        is_experimental=_complex_a_experimental,
    )
)

_register(
    CaseDefinition(
        case_id="gaussian",
        domain="half-line",
        param_names=("a", "b"),
        defaults={"a": complex(0.3), "b": complex(0.3)},
        constraints="a nonzero (real a > 0 canonical); b real > 0",
        notes="Transform exp(-b k^2).",
        reference_check=(
            {"a": complex(0.3), "b": complex(0.3)},
            complex(0.0240764),
        ),
        make_integrand=_gaussian_integrand,
        closed_form=_gaussian_closed_form,
        validate=_gaussian_validate,
        is_experimental=_complex_a_experimental,
    )
)

_register(
    CaseDefinition(
        case_id="cosine",
        domain="half-line",
        param_names=("alpha", "a"),
        defaults={"alpha": complex(0.1), "a": complex(1.0, 2.0)},
        constraints=(
            "alpha real with alpha*pi <= 1 for convergence; a nonzero "
            "(complex a experimental)"
        ),
        notes=(
            "Transform cos(alpha k).  For alpha*pi > 1 the integrand grows "
            "like exp((alpha*pi-1)x) and the run ends with a divergence "
            "error instead of a number."
        ),
        reference_check=(
            {"alpha": complex(0.1), "a": complex(1.0, 2.0)},
            complex(-0.0783703, 0.00264214),
        ),
        make_integrand=_cosine_integrand,
        closed_form=_cosine_closed_form,
        validate=_cosine_validate,
        is_experimental=_complex_a_experimental,
    )
)

_register(
    CaseDefinition(
        case_id="gamma",
        domain="real-line",
        param_names=("a", "b"),
        defaults={"a": complex(0.5), "b": complex(1.0)},
        constraints="a real >= 0; b real",
        notes=(
            "Transform 1/gamma(4 a k / pi^2 + b) at the sech specialization, "
            "rescaled x -> x/pi; the closed form is 1/gamma(a+b)."
        ),
        reference_check=None,
        make_integrand=_gamma_integrand,
        closed_form=_gamma_closed_form,
        validate=_gamma_validate,
        is_experimental=lambda params: False,
    )
)

_register(
    CaseDefinition(
        case_id="zeta",
        domain="imaginary-axis",
        param_names=("n", "x", "a"),
        defaults={"n": complex(1.0), "x": complex(0.5), "a": complex(2.0)},
        constraints="n integer in 0..4; 0 < x < 1 real; a real > 0",
        notes=(
            "Contour integral over the imaginary axis, parametrized s = i t. "
            "n is restricted to 0..4.  At a = 1 the closed form is 0 because "
            "the zeta factor in its denominator diverges while the contour "
            "side stays regular."
        ),
        reference_check=None,
        make_integrand=_zeta_integrand,
        closed_form=_zeta_closed_form,
        validate=_zeta_validate,
        is_experimental=lambda params: False,
        run_lhs=_zeta_run_lhs,
    )
)

CATALOG_ORDER = ("rational", "bessel", "gaussian", "cosine", "gamma", "zeta")


def list_cases() -> list[CaseDefinition]:
    """The built-in cases, in stable catalog order."""
    return [_CASES[cid] for cid in CATALOG_ORDER]


def get_case(case_id: str) -> CaseDefinition:
    try:
        return _CASES[case_id]
    except KeyError:
        known = ", ".join(CATALOG_ORDER)
        raise UnknownCaseError(f"unknown case {case_id!r}; known cases: {known}") from None


def run_case(
    case_id: str,
    params: Mapping[str, complex] | None = None,
    opts: QuadratureOptions | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    """Evaluate both sides of a built-in case and compare.

    Missing parameters fall back to the case defaults; unknown parameter
    names raise ParameterError.
    """
    case = get_case(case_id)
    opts = opts or QuadratureOptions()
    merged = {k: _as_complex(v) for k, v in case.defaults.items()}
    if params:
        for name, value in params.items():
            if name not in case.param_names:
                raise ParameterError(
                    f"case {case_id!r} has no parameter {name!r} "
                    f"(expected one of {', '.join(case.param_names)})"
                )
            merged[name] = _as_complex(value)
    clean = case.validate(merged)

    if case.run_lhs is not None:
        lhs_result = case.run_lhs(clean, opts)
    elif case.domain == "half-line":
        lhs_result = integrate_half_line(case.make_integrand(clean), opts)
    else:
        lhs_result = integrate_real_line(case.make_integrand(clean), opts)
    if not lhs_result.converged:
        raise NonConvergenceError(
            f"case {case_id!r} did not converge (error estimate "
            f"{lhs_result.error_estimate:.3e} after {lhs_result.evaluations} "
            "evaluations)",
            result=lhs_result,
        )

    rhs = case.closed_form(clean)
    return VerificationReport.from_sides(
        case_name=case_id,
        params=clean,
        lhs=lhs_result.value,
        rhs=rhs,
        tolerance=tolerance,
        diagnostics=lhs_result,
        experimental=case.is_experimental(clean),
        notes=case.notes,
    )
