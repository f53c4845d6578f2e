"""Inward integration of u'' = q(z) u along the recessive direction.

The decaying-at-infinity solution of a Schroedinger-type equation spans
hundreds of orders of magnitude between a far seed point and the matching
point, and is hopeless to follow naively.  Two standard devices make it
routine:

* In the classically forbidden region (q > 0) the solution has no zeros,
  so its log-derivative L = u'/u obeys the smooth Riccati equation
  L' = q - L^2 and the log-magnitude is the integral of L.  The recessive
  branch L ~ -sqrt(q) is attracting in the inward direction, which also
  forgives small seed errors.
* Past the turning point the linear system (u, u') is integrated directly;
  amplitudes there are tame.

Everything is returned as (mantissa, log_scale) pairs: value = u * e^s.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import solve_ivp

from .errors import IntegrationError


class DecayedState:
    """Recessive solution at the endpoint: value = u * exp(log_scale)."""

    __slots__ = ("z", "u", "du", "log_scale")

    def __init__(self, z, u, du, log_scale):
        self.z = z
        self.u = u
        self.du = du
        self.log_scale = log_scale

    @property
    def value(self):
        return self.u * math.exp(self.log_scale)

    @property
    def dvalue(self):
        return self.du * math.exp(self.log_scale)

    def __repr__(self):
        return (f"DecayedState(z={self.z:g}, u={self.u:.6g}, du={self.du:.6g}, "
                f"log_scale={self.log_scale:.6g})")


def _solve(fun, span, y0, rtol, dense=False, method="DOP853", jac=None):
    kwargs = {"jac": jac} if jac is not None else {}
    sol = solve_ivp(fun, span, y0, method=method, rtol=rtol, atol=1e-14,
                    dense_output=dense, **kwargs)
    if not sol.success:
        raise IntegrationError(f"ODE solver failed on {span}: {sol.message}")
    return sol


def integrate_inward(q, z0: float, L0: float, log0: float, z_end: float,
                     zt: float | None, rtol: float = 1e-12,
                     dense_z: np.ndarray | None = None):
    """Follow the recessive solution of u'' = q u from z0 down to z_end.

    q        callable, scalar -> scalar
    L0       log-derivative of the seed at z0
    log0     log-magnitude of the seed at z0 (seed mantissa is +1)
    zt       turning point (q(zt) = 0) in (z_end, z0), or None
    dense_z  optional ascending grid in [z_end, z0]

    Returns DecayedState, and additionally the mantissa values on dense_z
    (value(z_i) = vals[i] * exp(state.log_scale)) when dense_z is given.
    """
    if z_end >= z0:
        raise IntegrationError("integrate_inward needs z_end < z0")
    want_dense = dense_z is not None

    if zt is None or zt <= z_end:
        z_switch = z_end
    else:
        # hand over to the linear phase a little above the turning point,
        # on the Airy length scale
        dq = abs(q(zt + 1e-6) - q(zt - 1e-6)) / 2e-6
        margin = max(0.25, dq ** (-1.0 / 3.0)) if dq > 0 else 0.5
        z_switch = min(0.5 * (zt + z0), zt + margin)

    def riccati(z, y):
        return (q(z) - y[0] * y[0], y[0])

    def riccati_jac(z, y):
        # the -2L contraction makes the transient stiff for explicit steppers
        return ((-2.0 * y[0], 0.0), (1.0, 0.0))

    L_switch, log_scale = L0, log0
    upper_vals = np.empty(0)
    if z_switch < z0:
        # Radau takes smoothness-sized steps despite the stiff transient;
        # 1e-10 keeps the accumulated log-magnitude good to ~1e-11 absolute
        sol = _solve(riccati, (z0, z_switch), [L0, 0.0], max(rtol, 1e-10),
                     dense=want_dense, method="Radau", jac=riccati_jac)
        L_switch = sol.y[0, -1]
        log_scale = log0 + sol.y[1, -1]
        if want_dense:
            sel = dense_z[(dense_z >= z_switch) & (dense_z <= z0)]
            if sel.size:
                upper_vals = np.exp(log0 + sol.sol(sel)[1] - log_scale)

    if z_switch <= z_end + 1e-14:
        state = DecayedState(z_end, 1.0, L_switch, log_scale)
        return (state, upper_vals) if want_dense else state

    def linear(z, y):
        return (y[1], q(z) * y[0])

    sol = _solve(linear, (z_switch, z_end), [1.0, L_switch], rtol, dense=want_dense)
    state = DecayedState(z_end, sol.y[0, -1], sol.y[1, -1], log_scale)
    if want_dense:
        sel = dense_z[dense_z < z_switch]
        lower_vals = sol.sol(sel)[0] if sel.size else np.empty(0)
        return state, np.concatenate([lower_vals, upper_vals])
    return state


def integrate_linear_rescaled(q, x0: float, y0, log0: float, x_end: float,
                              rtol: float = 1e-12, threshold: float = 1e120,
                              segments: int = 40):
    """(u, u') integration with periodic rescaling; supports complex state.

    Fallback for cases where the Riccati phase is unsafe (complex energy):
    integrates in segments and divides out the magnitude whenever it passes
    the threshold, accumulating the logs.  Returns (u, du, log_scale).
    """
    xs = np.linspace(x0, x_end, segments + 1)
    u, du = complex(y0[0]), complex(y0[1])
    log_scale = log0
    is_complex = abs(u.imag) > 0 or abs(du.imag) > 0

    def linear_c(t, w):
        uu = w[0] + 1j * w[1]
        qq = q(t)
        return ((w[2], w[3]) + ((qq * uu).real, (qq * uu).imag))

    def linear_r(t, w):
        return (w[1], q(t) * w[0])

    for a, b in zip(xs[:-1], xs[1:]):
        if is_complex:
            sol = _solve(linear_c, (a, b), [u.real, u.imag, du.real, du.imag], rtol)
            u = complex(sol.y[0, -1], sol.y[1, -1])
            du = complex(sol.y[2, -1], sol.y[3, -1])
        else:
            sol = _solve(linear_r, (a, b), [u.real, du.real], rtol)
            u, du = complex(sol.y[0, -1]), complex(sol.y[1, -1])
        mag = max(abs(u), abs(du))
        if mag > threshold or 0 < mag < 1.0 / threshold:
            u /= mag
            du /= mag
            log_scale += math.log(mag)
    if is_complex:
        return u, du, log_scale
    return u.real, du.real, log_scale
