"""Inverse-spectral machinery built on the width function of a potential.

The width w(v) of a confining 1D potential is the measure of {x : V(x) <= v}.
Everything semiclassical here is a Stieltjes integral against dw:

* the phase-space action  W(E) = 2 int sqrt(E - v) dw(v), whose 1/(2 pi)
  multiple counts eigenvalues to leading order,
* the Abel inversion recovering w from W,
* the imaginary tunnelling time  T(E) = (1/2) int dw / sqrt(v - E)  for E
  below the potential, which controls the negative-energy asymptotics of
  shooting characteristic functions.

The closed-form family v(w) = 4 pi^2 e^{2w} - beta e^w + gamma (beta <=
8 pi^2 keeps v monotone) reproduces the log-width of the eigenvalue count
of the Riemann Xi function to leading order; matching the next orders of
T(E) forces beta = 4 pi kappa and, one order deeper in the shooting
asymptotics, gamma = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import DomainError, ValidationError
from .quadrature import adaptive_panels, tanh_sinh

FOUR_PI_SQ = 4.0 * math.pi ** 2


# ----------------------------------------------------------------------
# width and counting representations
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class WidthFunction:
    """Monotone width map, either the closed exponential family or a table.

    Closed form: v(w) = 4 pi^2 e^{2w} - beta e^w + gamma for w >= 0, with
    w(v) = 0 below v(0).  Table: sampled (v_i, w_i), nondecreasing w,
    interpolated piecewise-linearly; equal consecutive v with a w jump
    encodes a plateau of the potential.
    """

    beta: float = 0.0
    gamma: float = 0.0
    table: tuple | None = None  # (v_array, w_array)

    def __post_init__(self):
        if self.table is not None:
            v, w = (np.asarray(a, dtype=float) for a in self.table)
            if v.ndim != 1 or v.shape != w.shape or v.size < 2:
                raise ValidationError("width table needs matching 1D arrays")
            if np.any(np.diff(v) < 0) or np.any(np.diff(w) < 0):
                raise ValidationError("width table must be nondecreasing in v and w")
            object.__setattr__(self, "table", (v, w))
        elif self.beta > 2.0 * FOUR_PI_SQ:
            raise ValidationError("beta above 8 pi^2 breaks monotonicity of v(w)")

    @property
    def v0(self) -> float:
        """Infimum of the closed-form family: v(0)."""
        if self.table is not None:
            return float(self.table[0][0])
        return FOUR_PI_SQ - self.beta + self.gamma

    def v_of_w(self, w):
        if self.table is not None:
            v_t, w_t = self.table
            return np.interp(w, w_t, v_t)
        ew = np.exp(np.asarray(w, dtype=float))
        return FOUR_PI_SQ * ew * ew - self.beta * ew + self.gamma

    def w_of_v(self, v):
        v = np.asarray(v, dtype=float)
        if self.table is not None:
            v_t, w_t = self.table
            return np.interp(v, v_t, w_t)
        # invert the quadratic in e^w, clamping below v(0)
        disc = self.beta ** 2 - 4.0 * FOUR_PI_SQ * (self.gamma - v)
        ew = (self.beta + np.sqrt(np.maximum(disc, 0.0))) / (2.0 * FOUR_PI_SQ)
        return np.where(v <= self.v0, 0.0, np.log(np.maximum(ew, 1.0)))


def log_width(v):
    """The pure leading-order width log(sqrt(v)/(2 pi))."""
    return np.log(np.sqrt(np.asarray(v, dtype=float)) / (2.0 * math.pi))


@dataclass(frozen=True)
class CountingFunction:
    """Cumulative action W(E): the leading closed form or a sampled table.

    leading form: W(E) = 2 sqrt(E) log(sqrt(E)/(pi e)) for E > 0, else 0.
    """

    kind: str = "leading"               # "leading" | "table"
    table: tuple | None = None          # (E_array, W_array), nondecreasing

    def __post_init__(self):
        if self.kind not in ("leading", "table"):
            raise ValidationError(f"unknown counting kind {self.kind!r}")
        if self.kind == "table":
            if self.table is None:
                raise ValidationError("table counting function needs samples")
            e, wv = (np.asarray(a, dtype=float) for a in self.table)
            if e.ndim != 1 or e.shape != wv.shape or e.size < 4:
                raise ValidationError("counting table needs matching 1D arrays, >= 4 points")
            if np.any(np.diff(e) <= 0):
                raise ValidationError("counting table energies must increase")
            if np.any(np.diff(wv) < -1e-12 * max(1.0, np.abs(wv).max())):
                raise ValidationError("counting table must be nondecreasing")
            object.__setattr__(self, "table", (e, wv))
            object.__setattr__(self, "_interp", PchipInterpolator(e, wv))

    def value(self, E):
        E = np.atleast_1d(np.asarray(E, dtype=float))
        if self.kind == "leading":
            out = np.zeros_like(E)
            pos = E > 0
            out[pos] = 2.0 * np.sqrt(E[pos]) * np.log(np.sqrt(E[pos]) / (math.pi * math.e))
        else:
            out = self._interp(np.clip(E, self.table[0][0], self.table[0][-1]))
        return out if out.size > 1 else float(out[0])

    def derivative(self, E):
        E = np.atleast_1d(np.asarray(E, dtype=float))
        if self.kind == "leading":
            out = np.zeros_like(E)
            pos = E > 0
            out[pos] = np.log(np.sqrt(E[pos]) / math.pi) / np.sqrt(E[pos])
        else:
            der = self._interp.derivative()(np.clip(E, self.table[0][0], self.table[0][-1]))
            out = np.where(E < self.table[0][0], 0.0, np.maximum(der, 0.0))
        return out if out.size > 1 else float(out[0])

    @property
    def support_min(self) -> float:
        """Largest energy below which no dW mass is represented."""
        if self.kind == "leading":
            return 0.0
        e, wv = self.table
        flat = np.flatnonzero(wv <= 1e-14 * max(1.0, abs(wv[-1])))
        return float(e[flat[-1]]) if flat.size else float(e[0])


# ----------------------------------------------------------------------
# forward action and Abel inversion
# ----------------------------------------------------------------------

def weyl_action(width: WidthFunction, E: float) -> float:
    """W(E) = 2 int sqrt(E - v) dw(v) over {v <= E}.

    Closed-form widths integrate in w with tanh-sinh (square-root endpoint);
    tables use the exact per-segment antiderivative of the piecewise-linear
    interpolant, which also handles jumps (plateaux) correctly.
    """
    E = float(E)
    if not math.isfinite(E):
        raise DomainError("weyl_action needs finite E")
    if E <= width.v0:
        return 0.0
    if width.table is None:
        w_top = float(width.w_of_v(E))
        if w_top <= 0.0:
            return 0.0

        def f(w):
            return np.sqrt(np.maximum(E - width.v_of_w(w), 0.0))

        return 2.0 * float(tanh_sinh(f, 0.0, w_top, abs_tol=1e-13))

    v_t, w_t = width.table
    v1, v2 = v_t[:-1], v_t[1:]
    dw = np.diff(w_t)
    dv = v2 - v1
    live = (v1 < E) & (dw > 0)
    jump = live & (dv == 0)
    total = float(np.sum(np.sqrt(E - v1[jump]) * dw[jump]))
    seg = live & (dv > 0)
    hi = np.minimum(v2[seg], E)
    slope = dw[seg] / dv[seg]
    # int sqrt(E - v) dv = -(2/3)(E - v)^{3/2} per linear segment
    total += float(np.sum(slope * (2.0 / 3.0)
                          * ((E - v1[seg]) ** 1.5 - (E - hi) ** 1.5)))
    return 2.0 * total


def abel_invert(counting: CountingFunction, v: float) -> float:
    """w(v) = (1/pi) int_0^v dW(E)/sqrt(v - E).

    The substitution E = v sin^2(theta) removes the endpoint singularity
    exactly; the remaining theta-integral has at worst a logarithmic end
    and goes to tanh-sinh.
    """
    v = float(v)
    if v <= counting.support_min:
        raise DomainError(f"v = {v:g} at or below the support of dW")

    if counting.kind == "leading":
        # W' ~ log(E)/sqrt(E) leaves a log sin(theta) end: tanh-sinh territory
        def f(theta):
            s = np.sin(theta)
            return counting.derivative(v * s * s) * s

        val = tanh_sinh(f, 0.0, math.pi / 2, abs_tol=1e-13)
        return float(2.0 * math.sqrt(v) / math.pi * val)
    return _abel_table(counting, v)


def _abel_table(counting: CountingFunction, v: float) -> float:
    """Exact Abel transform of the piecewise-cubic interpolant.

    With u = sqrt(v - E) each derivative piece (a quadratic in E - E_j)
    integrates in closed form, so the only error left is the interpolation
    itself; no quadrature node ever sits on the 1/sqrt(v - E) endpoint.
    """
    der = counting._interp.derivative()
    x = der.x
    j_max = int(np.searchsorted(x, v)) - 1
    if j_max < 0:
        return 0.0
    lo = x[:j_max + 1]
    hi = np.minimum(x[1:j_max + 2], v)
    c2, c1, c0 = der.c[0, :j_max + 1], der.c[1, :j_max + 1], der.c[2, :j_max + 1]
    a = v - lo
    u1 = np.sqrt(np.maximum(a, 0.0))
    u2 = np.sqrt(np.maximum(v - hi, 0.0))

    def F(u):
        # int (c0 + c1 (a - u^2) + c2 (a - u^2)^2) du, times 2 overall later
        return (c0 * u
                + c1 * (a * u - u ** 3 / 3.0)
                + c2 * (a * a * u - 2.0 * a * u ** 3 / 3.0 + u ** 5 / 5.0))

    total = 2.0 * float(np.sum(F(u1) - F(u2)))
    return total / math.pi


def width_from_counting(counting: CountingFunction, v_grid) -> WidthFunction:
    """Tabulated width from Abel inversion of a counting function."""
    v_grid = np.asarray(v_grid, dtype=float)
    w = np.array([abel_invert(counting, v) for v in v_grid])
    w = np.maximum.accumulate(w)      # enforce monotonicity against noise
    return WidthFunction(table=(v_grid, w))


# ----------------------------------------------------------------------
# imaginary time
# ----------------------------------------------------------------------

def imaginary_time(width: WidthFunction, E: float) -> float:
    """T(E) = (1/2) int_0^inf dw / sqrt(v(w) - E) for E below the potential.

    Closed-form family: the substitution u = e^{-w} gives
    T = (1/2) int_0^1 du / sqrt(4 pi^2 - beta u + (gamma - E) u^2),
    a smooth integrand.  The matching closed form

        T(E) = log[(2 sqrt(g) sqrt(g + 4 pi^2 - beta) + 2 g - beta)
                   / (4 pi sqrt(g) - beta)] / (2 sqrt(g)),   g = gamma - E,

    is available as `imaginary_time_closed`; both agree where both apply.
    """
    E = float(E)
    if E >= width.v0:
        raise DomainError(f"imaginary_time needs E < inf V = {width.v0:g}")
    if width.table is None:
        beta, gamma = width.beta, width.gamma

        def f(u):
            return 1.0 / np.sqrt(FOUR_PI_SQ - beta * u + (gamma - E) * u * u)

        val, _ = adaptive_panels(f, 0.0, 1.0, 1e-14, 1e-12)
        return 0.5 * float(val)

    v_t, w_t = width.table
    v1, v2 = v_t[:-1], v_t[1:]
    dw = np.diff(w_t)
    dv = v2 - v1
    jump = (dw > 0) & (dv == 0)
    total = float(np.sum(dw[jump] / np.sqrt(v1[jump] - E)))
    seg = (dw > 0) & (dv > 0)
    slope = dw[seg] / dv[seg]
    # int dv / sqrt(v - E) = 2 sqrt(v - E) per linear segment
    total += float(np.sum(slope * 2.0 * (np.sqrt(v2[seg] - E) - np.sqrt(v1[seg] - E))))
    return 0.5 * total


def imaginary_time_closed(width: WidthFunction, E: float) -> float:
    """Closed form of T(E) for the exponential-quadratic width family."""
    if width.table is not None:
        raise DomainError("closed form applies to the closed-form family only")
    E = float(E)
    if E >= width.v0:
        raise DomainError(f"imaginary_time needs E < inf V = {width.v0:g}")
    beta, gamma = width.beta, width.gamma
    if beta > 2.0 * FOUR_PI_SQ:
        raise ValidationError("beta above 8 pi^2 breaks monotonicity")
    g = gamma - E
    sg = math.sqrt(g)
    num = 2.0 * sg * math.sqrt(g + FOUR_PI_SQ - beta) + 2.0 * g - beta
    den = 4.0 * math.pi * sg - beta
    if den == 0.0 or num / den <= 0.0:
        # removable 0/0 at beta = 4 pi sqrt(g); the quadrature is exact there
        return imaginary_time(width, E)
    if abs(den) < 1e-9 * (abs(num) + 1.0):
        return imaginary_time(width, E)
    return math.log(num / den) / (2.0 * sg)


def imaginary_time_expansion(E: float, kappa: float) -> float:
    """Two-term large-(-E) form: log(sqrt(-E)/pi)/(2 sqrt(-E)) - kappa/(2E)."""
    if E >= 0:
        raise DomainError("expansion defined for E < 0")
    s = math.sqrt(-E)
    return math.log(s / math.pi) / (2.0 * s) - kappa / (2.0 * E)


def fit_beta(target_kappa: float, verify_at: float = -1e6, tol: float = 0.05) -> float:
    """beta = 4 pi kappa, the unique family member whose T(E) matches the
    two-term expansion to order 1/E; verified numerically before returning.
    """
    if target_kappa < 0:
        raise ValidationError("kappa must be nonnegative")
    beta = 4.0 * math.pi * target_kappa
    if beta > 2.0 * FOUR_PI_SQ:
        raise ValidationError("4 pi kappa exceeds the monotonicity bound 8 pi^2")
    width = WidthFunction(beta=beta, gamma=0.0)
    resid = imaginary_time_closed(width, verify_at) \
        - imaginary_time_expansion(verify_at, target_kappa)
    if abs(resid * verify_at) > tol:
        raise ValidationError(
            f"beta = 4 pi kappa failed its own expansion check: "
            f"|E * resid| = {abs(resid * verify_at):.3g}")
    return beta


# ----------------------------------------------------------------------
# counting asymptotics and log-derivative expansions
# ----------------------------------------------------------------------

def riemann_count(Omega: float, smoothed: bool = False) -> float:
    """Leading zero count (Omega/2pi) log(Omega/(2 pi e)), plus 7/8 if smoothed."""
    if Omega <= 0:
        raise DomainError("riemann_count needs Omega > 0")
    val = Omega / (2.0 * math.pi) * math.log(Omega / (2.0 * math.pi * math.e))
    return val + 0.875 if smoothed else val


def xi_logderiv_asymptotic(E: float) -> float:
    """d/dE log Xi(E) for large negative E:
    -log(sqrt(-E)/pi)/(2 sqrt(-E)) + 7/(8E)."""
    if E >= 0:
        raise DomainError("asymptotic form defined for E < 0")
    s = math.sqrt(-E)
    return -math.log(s / math.pi) / (2.0 * s) + 7.0 / (8.0 * E)


def whittaker_logderiv_asymptotic(E: float, gamma: float) -> float:
    """d/dE log P(E) for the Morse shooting function, three terms:
    the Xi form plus gamma log(sqrt(-E)/(pi e)) / (4 (-E)^{3/2})."""
    if E >= 0:
        raise DomainError("asymptotic form defined for E < 0")
    s = math.sqrt(-E)
    return xi_logderiv_asymptotic(E) \
        + gamma / (4.0 * s ** 3) * math.log(s / (math.pi * math.e))
