"""Kernel weight and the seed/master identities.

Frozen reference numbers were computed with mpmath at 40 decimal digits
from the closed forms; identity checks compare the quadrature side against
the closed-form side directly.
"""

import cmath
import math
import random

import pytest

from quadcheck import (
    DivergenceError,
    DomainError,
    KernelParams,
    NonConvergenceError,
    QuadratureOptions,
    TransformFunction,
    detect_schwarz_symmetry,
    kernel_weight,
    master_lhs,
    master_rhs,
    seed_lhs,
    seed_rhs,
    verify_master,
    verify_seed,
)
from quadcheck.kernel import REL_DIFF_FLOOR, VerificationReport


def _direct_kernel(a: complex, x: float) -> complex:
    # textbook form, safe only for moderate |x|
    return math.cosh(x) / (1.0 + 2.0 * a * a * math.cosh(2.0 * x) + a**4)


def test_kernel_params_validation():
    with pytest.raises(DomainError):
        KernelParams(0.0)
    with pytest.raises(DomainError):
        KernelParams(complex(math.inf, 0))
    assert KernelParams(0.7).is_real_positive
    assert not KernelParams(-1.0).is_real_positive
    assert not KernelParams(1 + 2j).is_real_positive


def test_kernel_weight_at_origin():
    assert abs(kernel_weight(KernelParams(1.0), 0.0) - 0.25) < 1e-15


def test_kernel_weight_collapses_to_sech_at_a_one():
    kp = KernelParams(1.0)
    rng = random.Random(1)
    for _ in range(200):
        x = rng.uniform(-30.0, 30.0)
        expected = 1.0 / (4.0 * math.cosh(x))
        got = kernel_weight(kp, x)
        assert abs(got - expected) <= 1e-14 * abs(expected)


def test_kernel_weight_spot_value():
    # high-precision evaluation of the closed form at a=0.7, x=1
    expected = 0.31318539048776919315
    assert abs(kernel_weight(KernelParams(0.7), 1.0) - expected) < 1e-14


def test_kernel_factorization_identity():
    rng = random.Random(2)
    for _ in range(500):
        a = rng.uniform(0.1, 10.0)
        x = rng.uniform(-20.0, 20.0)
        direct = 1.0 + 2.0 * a * a * math.cosh(2.0 * x) + a**4
        factored = (a * a + math.exp(2.0 * x)) * (a * a + math.exp(-2.0 * x))
        assert factored > 0  # denominator never vanishes for real a > 0
        assert abs(direct - factored) <= 1e-12 * abs(factored)
        # and the weight built on it matches the textbook form
        got = kernel_weight(KernelParams(a), x)
        assert abs(got - _direct_kernel(a, x)) <= 1e-12 * abs(got)


def test_kernel_weight_even_exactly():
    rng = random.Random(3)
    for _ in range(200):
        a = complex(rng.uniform(0.2, 5.0), rng.uniform(-1.0, 1.0))
        x = rng.uniform(0.0, 50.0)
        kp = KernelParams(a)
        assert kernel_weight(kp, -x) == kernel_weight(kp, x)


def test_kernel_weight_no_overflow_far_out():
    kp = KernelParams(0.5)
    v = kernel_weight(kp, 300.0)
    assert abs(v) < 1e-120
    assert math.isfinite(v.real)


def test_kernel_inversion_covariance():
    rng = random.Random(4)
    for _ in range(200):
        a = rng.uniform(0.1, 10.0)
        x = rng.uniform(-15.0, 15.0)
        w_inv = kernel_weight(KernelParams(1.0 / a), x)
        w = kernel_weight(KernelParams(a), x)
        assert abs(w_inv - a**4 * w) <= 1e-12 * abs(w_inv)


# ---------------------------------------------------------------------------
# seed identity
# ---------------------------------------------------------------------------

def test_seed_rhs_values():
    # pi exp(-pi^2/4)/8, computed at 40 digits
    assert abs(seed_rhs(KernelParams(1.0), 1.0) - 0.033302834812891962106) < 1e-16
    # a = e makes ln a = 1
    assert abs(seed_rhs(KernelParams(math.e), 1.0) - 0.0010745067213364733351) < 1e-16
    assert abs(seed_rhs(KernelParams(0.7), 2.0) - 0.0041990293686598214479) < 1e-16


def test_seed_rhs_inversion_ratio():
    # RHS(1/a) = a^4 RHS(a) for real a, so RHS(2,t)/RHS(0.5,t) = 1/16
    for t in (0.3, 1.0, 1.7):
        ratio = seed_rhs(KernelParams(2.0), t) / seed_rhs(KernelParams(0.5), t)
        assert abs(ratio - 1.0 / 16.0) < 1e-14


def test_seed_rhs_rejects_bad_arguments():
    with pytest.raises(DomainError):
        seed_rhs(KernelParams(1.0), 0.0)
    with pytest.raises(DomainError):
        seed_rhs(KernelParams(1.0), -1.0)
    with pytest.raises(DomainError):
        seed_rhs(KernelParams(1j), 1.0)  # a(1+a^2) = 0


def test_seed_lhs_matches_rhs():
    for a, t in ((1.0, 1.0), (0.7, 2.0), (3.0, 0.5)):
        lhs = seed_lhs(KernelParams(a), t)
        assert lhs.converged
        rhs = seed_rhs(KernelParams(a), t)
        assert abs(lhs.value - rhs) <= 1e-9 * abs(rhs), (a, t)


def test_seed_lhs_requires_real_positive_a():
    with pytest.raises(DomainError):
        seed_lhs(KernelParams(1 + 2j), 1.0)
    with pytest.raises(DomainError):
        seed_lhs(KernelParams(1.0), -2.0)


def test_verify_seed_report():
    rep = verify_seed(1.0, 1.0, tolerance=1e-9)
    assert rep.passed
    assert rep.case_name == "kernel"
    assert rep.abs_diff == abs(rep.lhs - rep.rhs)
    assert rep.rel_diff == rep.abs_diff / max(abs(rep.rhs), REL_DIFF_FLOOR)
    assert not rep.experimental


# ---------------------------------------------------------------------------
# master identity
# ---------------------------------------------------------------------------

def test_master_rhs_constant_transform():
    F = TransformFunction(lambda k: 1.0, schwarz_symmetric=True)
    assert abs(master_rhs(F, KernelParams(1.0)) - math.pi / 4.0) < 1e-15


def test_master_rhs_rational_transform():
    F = TransformFunction(lambda k: 1.0 / (k + 2.0), schwarz_symmetric=True)
    # twice the half-line value 0.16389139518185587498
    assert abs(master_rhs(F, KernelParams(0.7)) - 0.32778279036371174996) < 1e-15


def test_master_rhs_cosine_transform_complex_a():
    # full-line normalization: twice the half-line closed form at the same
    # parameters, mpmath value at 40 digits
    F = TransformFunction(lambda k: cmath.cos(0.1 * k), schwarz_symmetric=True)
    expected = -0.15674068050524915783 + 0.0052842858141707488243j
    assert abs(master_rhs(F, KernelParams(1 + 2j)) - expected) < 1e-15


def test_master_lhs_rational():
    F = TransformFunction(lambda k: 1.0 / (k + 2.0), schwarz_symmetric=True)
    r = master_lhs(F, KernelParams(0.7))
    assert r.converged
    assert abs(r.value - 0.32778279036371174996) < 1e-10


def test_master_lhs_gaussian_transform():
    F = TransformFunction(lambda k: cmath.exp(-0.3 * k * k), schwarz_symmetric=True)
    r = master_lhs(F, KernelParams(0.3))
    # twice the half-line value 0.024076419758804602045
    assert abs(r.value - 0.04815283951760920409) < 5e-11


def test_master_lhs_schwarz_implies_real():
    F = TransformFunction(lambda k: 1.0 / (k + 1.5), schwarz_symmetric=True)
    r = master_lhs(F, KernelParams(0.9))
    assert abs(r.value.imag) <= r.error_estimate


def test_master_lhs_divergence_for_growing_transform():
    F = TransformFunction(lambda k: cmath.exp(k), schwarz_symmetric=True)
    with pytest.raises(DivergenceError):
        master_lhs(F, KernelParams(1.0))


def test_master_lhs_nonconvergence_raises():
    F = TransformFunction(lambda k: 1.0 / (k + 2.0), schwarz_symmetric=True)
    opts = QuadratureOptions(abs_tol=1e-15, rel_tol=1e-15, max_subdivisions=2)
    with pytest.raises(NonConvergenceError) as err:
        master_lhs(F, KernelParams(0.7), opts)
    assert err.value.result is not None


def test_verify_master_simple_pole_at_a_one():
    # F(k) = 1/(k+1) at a=1: both sides equal pi/(4 + pi^2)
    F = TransformFunction(lambda k: 1.0 / (k + 1.0), schwarz_symmetric=True)
    rep = verify_master(F, KernelParams(1.0))
    expected = math.pi / (4.0 + math.pi * math.pi)
    assert rep.passed
    assert abs(rep.rhs - expected) < 1e-15
    assert abs(rep.lhs - expected) <= 1e-10
    assert not rep.experimental


def test_verify_master_rational_family():
    for b in (0.5, 1.0, 2.0, 5.0):
        for a in (0.3, 0.7, 1.0, 2.0, 5.0):
            F = TransformFunction(lambda k, b=b: 1.0 / (k + b), schwarz_symmetric=True)
            rep = verify_master(F, KernelParams(a), tolerance=1e-8)
            assert rep.passed, (a, b, rep.rel_diff)


def test_verify_master_divergence_means_no_report():
    F = TransformFunction(lambda k: cmath.exp(k), schwarz_symmetric=True)
    with pytest.raises(DivergenceError):
        verify_master(F, KernelParams(1.0))


def test_verify_master_experimental_flags():
    F = TransformFunction(lambda k: 1.0 / (k + 2.0), schwarz_symmetric=True)
    assert not verify_master(F, KernelParams(0.7)).experimental
    assert verify_master(F, KernelParams(1 + 2j)).experimental
    F2 = TransformFunction(lambda k: 1.0 / (k + 2.0), schwarz_symmetric=False)
    assert verify_master(F2, KernelParams(0.7)).experimental


def test_master_rhs_inversion_covariance():
    F = TransformFunction(lambda k: 1.0 / (k + 3.0), schwarz_symmetric=True)
    for a in (0.3, 0.8, 2.5):
        lhs = master_rhs(F, KernelParams(1.0 / a))
        rhs = a**4 * master_rhs(F, KernelParams(a))
        assert abs(lhs - rhs) <= 1e-12 * abs(lhs)


def test_detect_schwarz_symmetry():
    assert detect_schwarz_symmetry(lambda k: 1.0 / (k + 2.0))
    assert detect_schwarz_symmetry(lambda k: cmath.exp(-0.3 * k * k))
    assert not detect_schwarz_symmetry(lambda k: k + 1j)
    assert not detect_schwarz_symmetry(lambda k: cmath.exp(1j * k))

    def broken(k):
        raise ValueError("nope")

    assert not detect_schwarz_symmetry(broken)


def test_transform_function_schwarz_invariant_holds_when_flagged():
    F = TransformFunction(lambda k: 1.0 / (k + 2.0), schwarz_symmetric=True)
    rng = random.Random(8)
    for _ in range(100):
        k = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        lhs = F(k.conjugate())
        rhs = F(k).conjugate()
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_report_pass_uses_or_of_relative_and_absolute():
    diag = seed_lhs(KernelParams(1.0), 1.0)
    # rhs exactly zero: relative diff saturates, absolute criterion decides
    rep = VerificationReport.from_sides(
        "synthetic", {}, lhs=1e-12 + 0j, rhs=0j, tolerance=1e-8, diagnostics=diag
    )
    assert rep.passed
    assert rep.rel_diff > 1.0
    rep2 = VerificationReport.from_sides(
        "synthetic", {}, lhs=1.0 + 0j, rhs=0j, tolerance=1e-8, diagnostics=diag
    )
    assert not rep2.passed
