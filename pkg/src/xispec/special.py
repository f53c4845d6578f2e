"""Analytic building blocks: theta/psi/Phi, the Riemann xi function by two
independent routes, the Hardy-style factorisation, and modified Bessel
functions of complex order.

Conventions
-----------
xi is used in the frequency convention: xi(omega) equals the classical
completed zeta xi_cl(s) at s = 1/2 + i*omega.  It is entire, even, and real
on both the real and imaginary axes.  Xi(E) = xi(2*sqrt(E)) has order 1/2.

Two routes to xi are kept deliberately independent so they can cross-check
each other:

* ``xi_fourier``: the cosine transform of Polya's Phi.  On the real axis a
  direct real-t quadrature loses all relative accuracy beyond omega ~ 25
  (the answer is exp(-pi*omega/4)-small against an O(1) integrand), so the
  contour is shifted to Im t = pi/4 - delta, which factors the exponential
  smallness out analytically and keeps full relative precision in doubles.
* ``xi_zeta``: the Gamma * zeta product evaluated in log space.

Both support complex omega; the cross-check invariants live in the tests.
"""

from __future__ import annotations

import math

import numpy as np

from .config import QuadratureConfig
from .errors import (ConvergenceError, DomainError, RangeError,
                     require_finite)
from .gammazeta import log_gamma, zeta_critical, zeta_em, zeta_prime_trivial
from .quadrature import adaptive_panels

_DEFAULT_CFG = QuadratureConfig()

TWO_PI = 2.0 * np.pi


def _cfg(cfg):
    return _DEFAULT_CFG if cfg is None else cfg


# ----------------------------------------------------------------------
# theta / psi / Phi
# ----------------------------------------------------------------------

def jacobi_psi(x: float, cfg: QuadratureConfig | None = None) -> float:
    """psi(x) = sum_{n>=1} exp(-pi n^2 x) for x > 0.

    Terms are added until they drop below cfg.abs_tol; the doubly
    exponential decay makes the tail smaller than the last kept term.
    """
    cfg = _cfg(cfg)
    if not (x > 0):
        raise DomainError(f"jacobi_psi needs x > 0, got {x}")
    total = 0.0
    for n in range(1, cfg.series_cutoff + 1):
        e = -math.pi * n * n * x
        if e < -745.0:
            break
        term = math.exp(e)
        total += term
        if term < cfg.abs_tol:
            break
    return total


def jacobi_theta(x: float, cfg: QuadratureConfig | None = None) -> float:
    """theta(x) = 1 + 2 psi(x); satisfies x^{1/4} theta(x) = x^{-1/4} theta(1/x)."""
    return 1.0 + 2.0 * jacobi_psi(x, cfg)


_PHI_MAX_T = 0.5 * math.log(math.sqrt(np.finfo(float).max))  # e^{2t} overflow guard


def phi(t: float, cfg: QuadratureConfig | None = None) -> float:
    """Polya's Phi(t) = sum (4 pi^2 n^4 e^{9t/2} - 6 pi n^2 e^{5t/2}) e^{-pi n^2 e^{2t}}.

    Even in t; negative arguments are folded.  Underflow of the Gaussian
    factor truncates the series long before e^{9t/2} could overflow, so each
    term is assembled in log space.  Beyond t ~ 2.9 every term underflows and
    the value is exactly 0.0 in doubles.
    """
    cfg = _cfg(cfg)
    t = float(t)
    if not math.isfinite(t):
        raise DomainError("phi needs finite t")
    t = abs(t)
    if t > _PHI_MAX_T:
        raise RangeError(
            f"e^(2t) overflows for t > {_PHI_MAX_T:.3f}",
            largest_safe=_PHI_MAX_T,
        )
    e2t = math.exp(2.0 * t)
    total = 0.0
    for n in range(1, cfg.series_cutoff + 1):
        g = -math.pi * n * n * e2t
        e1 = math.log(4 * math.pi**2 * n**4) + 4.5 * t + g
        e2 = math.log(6 * math.pi * n**2) + 2.5 * t + g
        if e1 < -745.0 and e2 < -745.0:
            break
        term = (math.exp(e1) if e1 > -745.0 else 0.0) - (math.exp(e2) if e2 > -745.0 else 0.0)
        total += term
        if abs(term) < cfg.abs_tol * max(1.0, abs(total)) and n > 2:
            break
    return total


def _phi_complex(t: np.ndarray, n_max: int) -> np.ndarray:
    """Phi on an array of complex points with Re t >= 0, |Im t| < pi/4."""
    n = np.arange(1, n_max + 1)[:, None]
    e2t = np.exp(2.0 * t)[None, :]
    gauss = np.exp(-np.pi * n**2 * e2t)
    terms = (4 * np.pi**2 * n**4 * np.exp(4.5 * t)[None, :]
             - 6 * np.pi * n**2 * np.exp(2.5 * t)[None, :]) * gauss
    return terms.sum(axis=0)


# ----------------------------------------------------------------------
# xi by the Fourier route
# ----------------------------------------------------------------------

def xi_fourier(omega: complex, cfg: QuadratureConfig | None = None) -> complex:
    """xi(omega) = 2 * int_0^inf cos(omega t) Phi(t) dt.

    Real omega goes through the shifted contour Im t = pi/4 - delta (see the
    module docstring); complex omega uses the real-t cosine quadrature, whose
    relative accuracy degrades once exp(-pi|Re omega|/4) smallness sets in.
    Raises ConvergenceError (with the achieved estimate) if the adaptive
    quadrature stalls.
    """
    cfg = _cfg(cfg)
    om = complex(omega)
    if not (math.isfinite(om.real) and math.isfinite(om.imag)):
        raise DomainError("xi_fourier needs finite omega")
    if om.imag == 0.0:
        return complex(_xi_fourier_real(abs(om.real), cfg))
    return _xi_fourier_complex(om, cfg)


def _phi_series_cutoff(decay: float, cfg: QuadratureConfig) -> int:
    # choose n with pi n^2 decay >= 55 (relative tail ~ 1e-24)
    n = int(math.sqrt(55.0 / (math.pi * decay))) + 3
    return min(max(n, 8), cfg.series_cutoff)


def _xi_fourier_real(om: float, cfg: QuadratureConfig) -> float:
    delta = min(0.2, max(0.02, 2.5 / (om + 1.0)))
    b = np.pi / 4 - delta
    decay = math.sin(2 * delta)
    n_max = _phi_series_cutoff(decay, cfg)
    T = min(cfg.truncation_t, 0.5 * math.log(95.0 / (math.pi * decay)) + 0.6)
    tail = abs(_phi_complex(np.array([T + 1j * b]), n_max)[0])
    if tail > cfg.abs_tol:
        raise ConvergenceError(
            f"Phi tail {tail:.2e} at truncation_t = {T:g} exceeds abs_tol",
            achieved=tail,
        )

    def f(t):
        return np.exp(1j * om * t) * _phi_complex(t + 1j * b, n_max)

    panels = max(8, int(T * (om + 6.0) / TWO_PI * 4))
    val, _ = adaptive_panels(f, 0.0, T, cfg.abs_tol, cfg.rel_tol,
                             initial_panels=panels)
    return math.exp(-om * b) * 2.0 * val.real


def _xi_fourier_complex(om: complex, cfg: QuadratureConfig) -> complex:
    T = cfg.truncation_t
    n_max = _phi_series_cutoff(1.0, cfg)
    growth = abs(om.imag) * T
    if growth - math.pi * math.exp(2 * T) > -50.0:
        raise RangeError("Im omega too large for the configured truncation_t")

    def f(t):
        return np.cos(om * t) * _phi_complex(t.astype(complex), n_max)

    panels = max(8, int(T * (abs(om) + 6.0) / TWO_PI * 4))
    val, _ = adaptive_panels(f, 0.0, T, cfg.abs_tol, cfg.rel_tol,
                             initial_panels=panels)
    return 2.0 * complex(val)


# ----------------------------------------------------------------------
# xi by the zeta route
# ----------------------------------------------------------------------

def xi_zeta(omega: complex) -> complex:
    """xi(omega) = -1/2 (omega^2 + 1/4) Gamma(1/4 + i omega/2) pi^(-1/4 - i omega/2) zeta(1/2 + i omega).

    Assembled in log space so the Gamma decay never underflows first.  At a
    Gamma pole (1/4 + i omega/2 a non-positive integer) the matching trivial
    zero of zeta cancels it; that limit is filled in with the residue times
    the numerically differentiated zeta.
    """
    om = complex(omega)
    z = 0.25 + 0.5j * om
    s = 0.5 + 1j * om
    pref = -0.5 * (om * om + 0.25)
    m = -round(z.real)
    if abs(z.imag) < 1e-8 and m >= 0 and abs(z.real + m) < 1e-8:
        pi_fac = np.exp(-(0.25 + 0.5j * om) * np.log(np.pi))
        if m == 0:
            # at omega = i/2 the (omega^2 + 1/4) prefactor kills the
            # Gamma(0) pole: pref * Gamma(z) -> -1
            return complex(-pi_fac * zeta_em(complex(0.0)))
        # Gamma(z) ~ (-1)^m / (m! (z + m)), zeta(s) ~ zeta'(-2m)(s + 2m),
        # and s + 2m = 2(z + m): the product has a finite limit.
        resid = (-1.0) ** m / math.factorial(m)
        gz = 2.0 * resid * zeta_prime_trivial(m)
        return complex(pref * gz * pi_fac)
    logval = log_gamma(z) - (0.25 + 0.5j * om) * np.log(np.pi)
    val = pref * np.exp(logval) * zeta_critical(om)
    if om.imag == 0.0:
        val = complex(val.real, 0.0)
    return require_finite(complex(val), "xi_zeta")


def xi(omega: complex) -> complex:
    """Default xi evaluation (the zeta route, which is cheap and accurate)."""
    return xi_zeta(omega)


# ----------------------------------------------------------------------
# scaling functions f, Z, S
# ----------------------------------------------------------------------

def prefactor_f(omega: float) -> float:
    """f(omega) = (1/2) pi^(-1/4) (omega^2 + 1/4) |Gamma(1/4 + i omega/2)|; positive, even."""
    om = float(omega)
    lg = log_gamma(0.25 + 0.5j * om)
    return 0.5 * math.pi ** (-0.25) * (om * om + 0.25) * math.exp(lg.real)


def big_Z(omega: float) -> float:
    """Z(omega) = e^{i theta(omega)} zeta(1/2 + i omega); real and even, xi = -f Z."""
    om = float(omega)
    lg = log_gamma(0.25 + 0.5j * om)
    phase = lg.imag - 0.5 * om * math.log(math.pi)
    val = np.exp(1j * phase) * zeta_critical(om)
    return float(val.real)


def scaling_S(omega: float) -> float:
    """S(omega) = 2^{3/2} cosh(pi omega/4) / (pi^{1/4} (omega^2 + 4)^{7/8}).

    Asymptotically 1/f but smooth at omega = 0; the plot scaling of choice.
    Evaluated via log cosh so it survives large omega.
    """
    om = abs(float(omega))
    logcosh = om * math.pi / 4 - math.log(2.0) + math.log1p(math.exp(-om * math.pi / 2))
    logval = 1.5 * math.log(2.0) + logcosh - 0.25 * math.log(math.pi) \
        - 0.875 * math.log(om * om + 4.0)
    return math.exp(logval)


# ----------------------------------------------------------------------
# modified Bessel K of complex order
# ----------------------------------------------------------------------

def bessel_K(nu: complex, z: float, cfg: QuadratureConfig | None = None) -> complex:
    """K_nu(z) from the integral K_nu(z) = int_0^inf cosh(nu t) e^{-z cosh t} dt.

    Even in nu; real for real or purely imaginary order.  For strongly
    oscillatory orders (|Im nu| > z) the contour is shifted to
    Im t = pi/2 - delta, which turns the e^{-pi |Im nu| / 2} smallness of the
    answer into an explicit prefactor instead of quadrature cancellation.
    """
    cfg = _cfg(cfg)
    if not z > 0:
        raise DomainError(f"bessel_K needs z > 0, got {z}")
    nu = complex(nu)
    a, mu = abs(nu.real), abs(nu.imag)
    # peak of |integrand| is exp(a*asinh(a/z) - sqrt(a^2 + z^2)); overflow guard
    peak = a * math.asinh(a / z) - math.hypot(a, z) if a > 0 else -z
    if peak > 600.0:
        raise RangeError("order too large for the integral representation",
                         largest_safe=600.0)
    if mu <= max(4.0, 0.75 * z):
        val = _bessel_K_direct(nu, z, cfg)
    else:
        val = _bessel_K_shifted(nu, z, cfg)
    if nu.real == 0.0 or nu.imag == 0.0:
        val = complex(val.real, 0.0)
    return require_finite(val, "bessel_K")


def _bessel_K_direct(nu: complex, z: float, cfg: QuadratureConfig) -> complex:
    T = math.asinh((720.0 + abs(nu.real) * 6.0) / z) + 0.5

    def f(t):
        return np.cosh(nu * t) * np.exp(-z * np.cosh(t))

    panels = max(8, int(T * (abs(nu.imag) + 4.0) / TWO_PI * 4))
    val, _ = adaptive_panels(f, 0.0, T, cfg.abs_tol, cfg.rel_tol,
                             initial_panels=panels)
    return complex(val)


def _bessel_K_shifted(nu: complex, z: float, cfg: QuadratureConfig) -> complex:
    """K_nu(z) = (1/2) e^{i nu c} int_R e^{nu t} e^{-z cosh(t + i c)} dt, c < pi/2."""
    mu = abs(nu.imag)
    nu_eff = complex(nu.real, mu)          # evenness: work with Im nu >= 0
    delta = min(0.3, max(0.02, 2.5 / mu))
    c = np.pi / 2 - delta
    sd = math.sin(delta)
    # modulus decays like exp(-z cosh(t) sin(delta) +- Re(nu) t)
    T = math.asinh((45.0 + 3.0 * abs(nu.real)) / (z * sd)) + 1.0

    def f(t):
        return np.exp(nu_eff * t - z * np.cosh(t + 1j * c))

    freq = mu + z * math.cosh(T) * sd
    panels = max(16, int(2 * T * freq / TWO_PI * 4))
    val, _ = adaptive_panels(f, -T, T, cfg.abs_tol, cfg.rel_tol,
                             initial_panels=panels)
    out = 0.5 * np.exp(1j * nu_eff * c) * val
    if nu.imag < 0:
        out = np.conj(out)
    return complex(out)


def polya_fake_xi(omega: float, order: int = 1,
                  cfg: QuadratureConfig | None = None) -> float:
    """Polya's fake xi: 4 pi^2 (K_{i w/2 + 9/4}(2pi) + K_{i w/2 - 9/4}(2pi)).

    order 2 subtracts the 6 pi (K_{i w/2 + 5/4} + K_{i w/2 - 5/4})(2pi)
    correction.  The two K's in each pair are conjugates, so the result is
    real for real omega.
    """
    if order not in (1, 2):
        raise DomainError("order must be 1 or 2")
    om = float(omega)
    val = 4 * math.pi**2 * 2.0 * bessel_K(2.25 + 0.5j * om, TWO_PI, cfg).real
    if order == 2:
        val -= 6 * math.pi * 2.0 * bessel_K(1.25 + 0.5j * om, TWO_PI, cfg).real
    return val
