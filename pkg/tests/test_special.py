import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import reference_values as ref
from xispec.config import QuadratureConfig
from xispec.errors import ConvergenceError, DomainError, RangeError
from xispec.special import (bessel_K, big_Z, jacobi_psi, jacobi_theta, phi,
                            polya_fake_xi, prefactor_f, scaling_S, xi_fourier,
                            xi_zeta)

TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------- psi / theta

def test_psi_spot_values():
    assert abs(jacobi_psi(1.0) - ref.PSI_1) < 1e-14
    assert abs(jacobi_psi(4.0) - ref.PSI_4) < 1e-16


def test_psi_domain_error():
    with pytest.raises(DomainError):
        jacobi_psi(0.0)
    with pytest.raises(DomainError):
        jacobi_psi(-1.0)


@pytest.mark.parametrize("v", [0.25, 0.5, 1.0, 2.0, 4.0])
def test_theta_functional_equation(v):
    lhs = v**0.25 * jacobi_theta(v)
    rhs = v**-0.25 * jacobi_theta(1.0 / v)
    assert abs(lhs - rhs) < 1e-12


def test_theta_equation_pair_quarter():
    # 0.25^{1/4} (1 + 2 psi(1/4)) = 4^{1/4} (1 + 2 psi(4))
    lhs = 0.25**0.25 * (1 + 2 * jacobi_psi(0.25))
    rhs = 4.0**0.25 * (1 + 2 * jacobi_psi(4.0))
    assert abs(lhs - rhs) < 1e-12


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.2, max_value=5.0))
def test_theta_functional_equation_property(v):
    assert abs(v**0.25 * jacobi_theta(v) - v**-0.25 * jacobi_theta(1.0 / v)) < 1e-11


# ----------------------------------------------------------------------- phi

def test_phi_even_and_spot():
    assert phi(3.0) == phi(-3.0)
    assert phi(0.7) == phi(-0.7)
    assert abs(phi(0.0) - ref.PHI_0) < 1e-14
    assert abs(phi(0.5) - ref.PHI_HALF) < 1e-13
    assert abs(phi(1.0) - ref.PHI_1) < 1e-18


def test_phi_overflow_guard():
    with pytest.raises(RangeError) as exc:
        phi(400.0)
    assert exc.value.largest_safe == pytest.approx(354.9, abs=0.5)


def _phi_from_theta_fd(t, h=5e-4):
    # Phi = (1/2)(d^2/dt^2 - 1/4) g with g(t) = e^{t/2} theta(e^{2t})
    def g(tt):
        return math.exp(tt / 2) * jacobi_theta(math.exp(2 * tt))

    d2 = (g(t + h) - 2 * g(t) + g(t - h)) / (h * h)
    return 0.5 * (d2 - 0.25 * g(t))


@pytest.mark.parametrize("t", [0.0, 0.3, 0.8, 1.4, 2.0])
def test_phi_consistent_with_theta_form(t):
    assert abs(phi(t) - _phi_from_theta_fd(t)) < 1e-6


# ------------------------------------------------------------------ xi routes

def test_xi_fourier_even_and_agrees_at_zero():
    cfg = QuadratureConfig()
    assert xi_fourier(10.0, cfg) == xi_fourier(-10.0, cfg)
    a = xi_fourier(0.0, cfg)
    b = xi_zeta(0.0)
    assert abs(a - b) < 1e-10 * abs(b)


def test_xi_fourier_vanishes_at_first_zero():
    val = xi_fourier(ref.Z_ZEROS_10[0])
    assert abs(val) < 1e-6 * abs(xi_fourier(14.0))


def test_xi_fourier_complex_argument():
    # off-axis evaluation goes through the cosine route; compare with the
    # independent Gamma*zeta product
    got = xi_fourier(1.0 + 0.5j)
    want = xi_zeta(1.0 + 0.5j)
    assert abs(got - want) < 1e-9 * abs(want)


def test_xi_fourier_truncation_guard():
    with pytest.raises(ConvergenceError):
        xi_fourier(40.0, QuadratureConfig(truncation_t=0.8))


def test_xi_zeta_spot_and_pole_limits():
    assert abs(xi_zeta(0.0).real - ref.XI_0) < 1e-12
    assert abs(xi_zeta(30.0).real - ref.XI_30) < 1e-11 * abs(ref.XI_30)
    # omega = i/2 (prefactor kills the Gamma(0) pole): classical xi(0) = 1/2
    assert abs(xi_zeta(0.5j) - 0.5) < 1e-12
    # omega = 2.5i sits on a trivial-zero cancellation
    assert np.isfinite(xi_zeta(2.5j).real)


def test_xi_zeta_even_on_imaginary_axis():
    a, b = xi_zeta(2j), xi_zeta(-2j)
    assert abs(a - b) < 1e-9 * abs(a)


def test_xi_is_minus_f_times_z():
    for om in (3.7, 17.3, 41.0):
        lhs = xi_zeta(om).real
        rhs = -prefactor_f(om) * big_Z(om)
        assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(lhs))


# -------------------------------------------------------------- f, Z, S

def test_scaling_S_at_zero():
    want = 2.0**1.5 / (math.pi**0.25 * 4.0**0.875)
    assert abs(scaling_S(0.0) - want) < 1e-14
    assert abs(want - 0.6316) < 1e-4


def test_S_times_f_limit():
    # with the exact definitions, S*f -> 2^{1/4} (S is proportional to 1/f
    # asymptotically, not equal); the limit value is part of the contract
    val = scaling_S(200.0) * prefactor_f(200.0)
    assert abs(val / 2.0**0.25 - 1.0) < 0.01


def test_big_Z_vanishes_at_zeta_zeros():
    assert abs(big_Z(ref.Z_ZEROS_10[0])) < 1e-6
    assert prefactor_f(ref.Z_ZEROS_10[0]) > 0


# -------------------------------------------------------------- bessel_K

def test_bessel_K_spot_values():
    assert abs(bessel_K(2.5j, TWO_PI).real - ref.K_25I_2PI) < 1e-14
    assert abs(bessel_K(3j, TWO_PI).real - ref.K_3I_2PI) < 1e-14
    assert abs(bessel_K(10.0, TWO_PI).real - ref.K_NU10_2PI) < 1e-12
    got = bessel_K(2.25 + 10j, TWO_PI)
    assert abs(got - ref.K_94_10I_2PI) < 1e-12 * abs(ref.K_94_10I_2PI)


def test_bessel_K_even_in_order():
    assert bessel_K(3.5j, TWO_PI) == bessel_K(-3.5j, TWO_PI)
    a = bessel_K(2.25 + 7j, TWO_PI)
    b = bessel_K(-2.25 - 7j, TWO_PI)
    assert abs(a - b) < 1e-13 * abs(a)


def test_bessel_K_real_for_imaginary_order():
    v = bessel_K(20j, TWO_PI)
    assert v.imag == 0.0


def test_bessel_K_domain_and_range():
    with pytest.raises(DomainError):
        bessel_K(1.0, -2.0)
    with pytest.raises(RangeError):
        bessel_K(400.0, 0.5)


# -------------------------------------------------------------- polya xi*

def test_polya_fake_xi_at_zero():
    want = 8 * math.pi**2 * ref.K_94_2PI
    assert abs(polya_fake_xi(0.0) - want) < 1e-12


def test_polya_fake_xi_real_and_orders():
    v1 = polya_fake_xi(20.0, 1)
    v2 = polya_fake_xi(20.0, 2)
    assert isinstance(v1, float) and isinstance(v2, float)
    assert v1 != v2
    with pytest.raises(DomainError):
        polya_fake_xi(1.0, 3)


def test_polya_zeros_pair_with_xi_zeros():
    from xispec.shooting import find_zeros

    sx = find_zeros(lambda o: big_Z(o), 1.0, 50.0, n_grid=400)
    sp = find_zeros(lambda o: polya_fake_xi(o), 1.0, 50.0, n_grid=400)
    assert len(sx) == 10
    for z in sx:
        assert np.min(np.abs(sp - z)) <= 0.5


# ------------------------------------------- negative-energy growth ladder

def test_negative_energy_asymptotics():
    # xi(-i nu) ~ (nu/2 pi e)^{nu/2} nu^{7/4} (pi/2)^{1/4}, and
    # K_{nu/2}(2 pi) ~ sqrt(pi/nu) (nu/2 pi e)^{nu/2}; their ratio grows
    # like nu^{9/4}
    xi_errs, k_errs, ratios = [], [], []
    for nu in (20.0, 40.0, 60.0):
        xi_val = xi_zeta(complex(0.0, -nu)).real
        xi_pred = (nu / (TWO_PI * math.e)) ** (nu / 2) * nu**1.75 * (math.pi / 2) ** 0.25
        xi_errs.append(abs(xi_val / xi_pred - 1.0))
        k_val = bessel_K(nu / 2, TWO_PI).real
        k_pred = math.sqrt(math.pi / nu) * (nu / (TWO_PI * math.e)) ** (nu / 2)
        k_errs.append(abs(k_val / k_pred - 1.0))
        ratios.append(xi_val / k_val)
    assert xi_errs[0] > xi_errs[1] > xi_errs[2]
    assert k_errs[0] > k_errs[1] > k_errs[2]
    growth = ratios[1] / ratios[0]
    assert abs(growth / 2.0**2.25 - 1.0) < 0.1
