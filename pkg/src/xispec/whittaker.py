"""The Whittaker function W_{kappa,mu}(z) for real or purely imaginary mu.

Whittaker's equation in self-adjoint form reads

    u''(z) = q(z) u(z),   q(z) = 1/4 - kappa/z + (mu^2 - 1/4)/z^2,

and W is its recessive solution, W ~ e^{-z/2} z^kappa as z -> +infinity.
Evaluation integrates inward from a far seed point z0 where the divergent
asymptotic series

    W ~ e^{-z/2} z^kappa  sum_k c_k z^{-k},
    c_0 = 1,  c_k = c_{k-1} (mu^2 - (kappa - k + 1/2)^2) / k

is truncated at its smallest term.  Both occurring cases (mu real, mu = i
omega/2) have real mu^2, so the whole computation is real arithmetic and
the returned value is exactly real; evenness in mu is automatic.

The direct t-integral representation is useless here: for kappa = 9/4 with
imaginary mu its endpoint exponent is on the wrong side of convergence.
"""

from __future__ import annotations

import math

import numpy as np

from ._ode import integrate_inward
from .config import WhittakerConfig
from .errors import ConvergenceError, DomainError

_DEFAULT = WhittakerConfig()


def _mu_squared(mu: complex) -> float:
    mu = complex(mu)
    if abs(mu.real) > 1e-13 and abs(mu.imag) > 1e-13:
        raise DomainError("mu must be real or purely imaginary")
    return mu.real * mu.real - mu.imag * mu.imag


def _seed(kappa: float, mu2: float, z0: float, nterms: int, tol: float):
    """Log-magnitude and log-derivative of the asymptotic series seed at z0."""
    c = [1.0]
    for k in range(1, nterms + 1):
        c.append(c[-1] * (mu2 - (kappa - k + 0.5) ** 2) / k)
    powers = z0 ** (-np.arange(nterms + 1, dtype=float))
    terms = np.asarray(c) * powers
    series = terms.sum()
    min_term = np.abs(terms[1:]).min() if nterms else 0.0
    if not series > 0 or min_term > tol * abs(series):
        raise ConvergenceError(
            f"asymptotic seed not converged at z0 = {z0:g} "
            f"(smallest term {min_term:.2e}); increase z0_factor",
            achieved=min_term,
        )
    dseries = -(np.arange(nterms + 1) * terms).sum() / z0
    log0 = -0.5 * z0 + kappa * math.log(z0) + math.log(series)
    L0 = -0.5 + kappa / z0 + dseries / series
    return log0, L0


def _turning_point(kappa: float, mu2: float) -> float | None:
    """Largest root of z^2/4 - kappa z + mu^2 - 1/4 = 0, if any."""
    disc = 4 * kappa * kappa + 1.0 - 4.0 * mu2
    if disc <= 0:
        return None
    zt = 2 * kappa + math.sqrt(disc)
    return zt if zt > 0 else None


def whittaker_W(kappa: float, mu: complex, z: float,
                cfg: WhittakerConfig | None = None) -> float:
    """W_{kappa,mu}(z) for z > 0 and mu real or purely imaginary.

    Even in mu.  For kappa = 0 it reduces to sqrt(z/pi) K_mu(z/2), which the
    tests use as a cross-identity against the independent Bessel quadrature.
    """
    state = whittaker_W_state(kappa, mu, z, cfg)
    return state.value


def whittaker_W_log(kappa: float, mu: complex, z: float,
                    cfg: WhittakerConfig | None = None):
    """(sign, log|W|) for magnitudes outside floating range."""
    state = whittaker_W_state(kappa, mu, z, cfg)
    if state.u == 0.0:
        return 0.0, -math.inf
    return math.copysign(1.0, state.u), math.log(abs(state.u)) + state.log_scale


def whittaker_W_state(kappa: float, mu: complex, z: float,
                      cfg: WhittakerConfig | None = None):
    cfg = cfg or _DEFAULT
    if not z > 0:
        raise DomainError(f"whittaker_W needs z > 0, got {z}")
    mu2 = _mu_squared(mu)
    z0 = max(cfg.z0_min, cfg.z0_factor * abs(mu2), 1.5 * z)
    zt = _turning_point(kappa, mu2)
    if zt is not None:
        z0 = max(z0, zt + 5.0)
    log0, L0 = _seed(kappa, mu2, z0, cfg.series_terms, cfg.seed_tol)

    def q(zz):
        return 0.25 - kappa / zz + (mu2 - 0.25) / (zz * zz)

    return integrate_inward(q, z0, L0, log0, z, zt, rtol=cfg.ode_rtol)


def whittaker_W_grid(kappa: float, mu: complex, z_grid,
                     cfg: WhittakerConfig | None = None) -> np.ndarray:
    """W on an ascending grid of z values from a single inward sweep."""
    cfg = cfg or _DEFAULT
    z_grid = np.asarray(z_grid, dtype=float)
    if z_grid.ndim != 1 or not np.all(np.diff(z_grid) > 0):
        raise DomainError("z_grid must be strictly ascending 1D")
    if not z_grid[0] > 0:
        raise DomainError("z_grid must be positive")
    mu2 = _mu_squared(mu)
    z_end = z_grid[0]
    z0 = max(cfg.z0_min, cfg.z0_factor * abs(mu2), 1.5 * z_grid[-1])
    zt = _turning_point(kappa, mu2)
    if zt is not None:
        z0 = max(z0, zt + 5.0)
    log0, L0 = _seed(kappa, mu2, z0, cfg.series_terms, cfg.seed_tol)

    def q(zz):
        return 0.25 - kappa / zz + (mu2 - 0.25) / (zz * zz)

    state, vals = integrate_inward(q, z0, L0, log0, z_end, zt,
                                   rtol=cfg.ode_rtol, dense_z=z_grid)
    return vals * math.exp(state.log_scale)


def whittaker_asymptotic(kappa: float, omega: float, Y: float,
                         parts: bool = False):
    """Large-omega approximation of W_{kappa, i omega/2}(Y):

        e^{-pi omega/4} (omega/2)^{kappa - 1/2} sqrt(2 Y)
            * cos((omega/2) log(2 omega/(Y e)) + (kappa - 1/2) pi/2)

    With parts=True returns (amplitude, phase) separately so callers can
    test amplitude exponents and predicted zero locations on their own.
    """
    if omega <= 0 or Y <= 0:
        raise DomainError("whittaker_asymptotic needs omega > 0 and Y > 0")
    amp = math.exp(-math.pi * omega / 4) * (omega / 2.0) ** (kappa - 0.5) \
        * math.sqrt(2.0 * Y)
    phase = 0.5 * omega * math.log(2.0 * omega / (Y * math.e)) \
        + (kappa - 0.5) * math.pi / 2
    if parts:
        return amp, phase
    return amp * math.cos(phase)


def whittaker_ode_residual(kappa: float, mu: complex, z_grid,
                           values=None, cfg: WhittakerConfig | None = None) -> float:
    """Max relative residual of Whittaker's ODE on a grid, by 4th-order
    finite differences of the tabulated (or supplied) solution."""
    z = np.asarray(z_grid, dtype=float)
    W = whittaker_W_grid(kappa, mu, z, cfg) if values is None else np.asarray(values)
    mu2 = _mu_squared(mu)
    h = z[1] - z[0]
    if not np.allclose(np.diff(z), h, rtol=1e-10):
        raise DomainError("residual check needs a uniform grid")
    d2 = (-W[:-4] + 16 * W[1:-3] - 30 * W[2:-2] + 16 * W[3:-1] - W[4:]) / (12 * h * h)
    zi = z[2:-2]
    q = 0.25 - kappa / zi + (mu2 - 0.25) / (zi * zi)
    resid = d2 - q * W[2:-2]
    scale = np.abs(W[2:-2]).max()
    return float(np.abs(resid).max() / max(scale, 1e-300))
