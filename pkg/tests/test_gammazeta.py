import math

import numpy as np
import pytest

import reference_values as ref
from xispec.errors import DomainError, RangeError
from xispec.gammazeta import (digamma, log_gamma, zeta_critical, zeta_em,
                              zeta_prime_trivial)


def test_log_gamma_at_one_is_zero():
    assert abs(log_gamma(1.0)) < 1e-14


def test_gamma_quarter_matches_oracle():
    got = np.exp(log_gamma(0.25))
    assert abs(got - ref.GAMMA_QUARTER) < 1e-13 * ref.GAMMA_QUARTER


def test_log_gamma_complex_spot():
    got = log_gamma(0.25 + 30j)
    assert abs(got - ref.LOGGAMMA_QUARTER_30I) < 1e-10 * abs(ref.LOGGAMMA_QUARTER_30I)


def test_log_gamma_branch_continuity_on_critical_line():
    oms = np.arange(0.0, 100.0, 0.01)
    vals = np.array([log_gamma(0.25 + 0.5j * om).imag for om in oms])
    assert np.abs(np.diff(vals)).max() < 0.1


def test_log_gamma_reflection_region():
    # Gamma(-3/4) through the near-axis reflection path; exp removes the
    # on-cut branch ambiguity.  Recurrence oracle: Gamma(-3/4) = Gamma(1/4)/(-3/4).
    got = np.exp(log_gamma(-0.75))
    exact = ref.GAMMA_QUARTER / (-0.75)
    assert abs(got - exact) < 1e-12 * abs(exact)


def test_log_gamma_pole_raises():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-3.0)


def test_digamma_spot_and_asymptotic():
    got = digamma(0.25 + 5j)
    assert abs(got - ref.DIGAMMA_QUARTER_5I) < 1e-11 * abs(ref.DIGAMMA_QUARTER_5I)
    # large-argument form psi(z) ~ log z - 1/(2z) - 1/(12 z^2)
    z = 50.0
    approx = math.log(z) - 1 / (2 * z) - 1 / (12 * z * z)
    assert abs(digamma(z).real - approx) < 1e-6


def test_zeta_half_and_first_zero():
    assert abs(zeta_critical(0.0).real - ref.ZETA_HALF) < 1e-12
    assert abs(zeta_critical(ref.Z_ZEROS_10[0])) < 1e-6


def test_zeta_spot_complex():
    got = zeta_critical(25.0)
    assert abs(got - ref.ZETA_HALF_25I) < 1e-12


def test_zeta_schwarz_reflection():
    a = zeta_critical(1.0)
    b = zeta_critical(-1.0)
    assert abs(a - np.conj(b)) < 1e-13


def test_zeta_range_guard():
    with pytest.raises(RangeError) as exc:
        zeta_critical(1e4)
    assert exc.value.largest_safe is not None


def test_zeta_trivial_zero_derivative():
    # zeta'(-2) = -zeta(3)/(4 pi^2)
    zeta3 = zeta_em(complex(3.0)).real
    assert abs(zeta_prime_trivial(1) + zeta3 / (4 * math.pi**2)) < 1e-14


def test_zeta_continuation_negative_axis():
    assert abs(zeta_em(complex(-1.0)).real + 1.0 / 12.0) < 1e-12
    assert abs(zeta_em(complex(-2.0)).real) < 1e-11
