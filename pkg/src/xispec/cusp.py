"""Mode-sum model on a constant-curvature cusp with magnetic coupling 9/4.

On the upper half-plane with the gauge A = -(9/4) dx/y the magnetic
Laplacian is

    D = -y^2 (d_yy + d_xx) + i (9/2) y d_x + 81/16,

and the solutions of (D - 85/16) psi = (omega^2/4) psi that are periodic in
x -> x + 1 and decay as y -> infinity are spanned by the modes

    W_{+9/4, i omega/2}(4 pi n y) e^{-2 pi i n x}        (n > 0)
    W_{-9/4, i omega/2}(4 pi |n| y) e^{+2 pi i |n| x}    (n < 0).

A Dirichlet condition at the point x = 0, y = 1 turns a coefficient choice
(a_n) into the candidate characteristic function

    P(E) = sum_{n>0} a_n W_{9/4, i omega/2}(4 pi n)
         + sum_{n<0} a_n W_{-9/4, i omega/2}(4 pi |n|).

Coefficient policies are data, not code; the only omega-dependence an
order-1/2 entire P(E) tolerates is the (A + B omega^2 + C omega^4) factor
on the negative modes, and the validator rejects anything else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .config import WhittakerConfig
from .errors import DomainError, ResolutionError, ValidationError
from .whittaker import whittaker_W, whittaker_W_grid

TWO_PI = 2.0 * math.pi


# ----------------------------------------------------------------------
# coefficient policies and the Dirichlet-point sum
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientPolicy:
    """Mode coefficients a_n for n in Z \\ {0}.

    rule "square_only": a_n = N^{-3/2} for n = N^2 (positive squares), else 0.
    rule "table": explicit {n: a_n} with finite real values.
    negative_aug maps n < 0 to (A, B, C) for the admissible augmentation
    (A + B omega^2 + C omega^4) multiplying that mode's coefficient.
    """

    rule: str = "square_only"
    table: dict = field(default_factory=dict)
    negative_aug: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.rule not in ("square_only", "table"):
            raise ValidationError(f"unknown policy rule {self.rule!r}")
        for n, a in self.table.items():
            if n == 0:
                raise ValidationError("mode n = 0 does not exist in the expansion")
            if not math.isfinite(a):
                raise ValidationError("coefficients must be finite")
        for n, abc in self.negative_aug.items():
            if n >= 0:
                raise ValidationError(
                    "omega-dependent augmentation is admissible for n < 0 only")
            if len(abc) != 3 or not all(math.isfinite(c) for c in abc):
                raise ValidationError("augmentation must be a finite (A, B, C) triple")

    def value(self, n: int, omega: float = 0.0) -> float:
        if n == 0:
            raise DomainError("mode n = 0 does not exist")
        if self.rule == "square_only":
            if n <= 0:
                return 0.0
            root = math.isqrt(n)
            return float(root) ** -1.5 if root * root == n else 0.0
        a = float(self.table.get(n, 0.0))
        if n < 0 and n in self.negative_aug:
            A, B, C = self.negative_aug[n]
            a *= A + B * omega ** 2 + C * omega ** 4
        return a


def characteristic_sum(policy: CoefficientPolicy, omega: float, n_max: int,
                       cfg: WhittakerConfig | None = None) -> float:
    """The Dirichlet-point mode sum, truncated at |n| <= n_max.

    W_{kappa, i omega/2}(4 pi n) is exponentially negligible once
    4 pi n >> omega, so any polynomially bounded policy converges and the
    truncation error is dominated by the first omitted mode.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    om = float(omega)
    total = 0.0
    for n in range(1, n_max + 1):
        a = policy.value(n, om)
        if a != 0.0:
            total += a * whittaker_W(2.25, 0.5j * om, 2.0 * TWO_PI * n, cfg)
        a = policy.value(-n, om)
        if a != 0.0:
            total += a * whittaker_W(-2.25, 0.5j * om, 2.0 * TWO_PI * n, cfg)
    return total


def dirichlet_point_factor(z: complex) -> complex:
    """Multiplier M(z) in the flux-string symmetry psi(-1/z) = M(z) psi(z),
    M(z) = -(-z/conj(z))^{9/4}.

    At the fixed point z = i the relation reads psi(i) = M(i) psi(i) with
    M(i) = -1, forcing psi(i) = 0: the Dirichlet condition emerges from the
    strength-pi flux string rather than a nail.
    """
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("z must lie in the upper half plane")
    base = -z / z.conjugate()
    return -np.exp(2.25 * np.log(base))


# ----------------------------------------------------------------------
# flux arithmetic
# ----------------------------------------------------------------------

def flux_check(field_strength: float, area: float, strings=()) -> float:
    """field*area - sum(strings), reduced mod 2 pi into (-pi, pi].

    A nonzero residue means the configuration violates flux quantisation
    and needs another string.
    """
    if area <= 0:
        raise DomainError("area must be positive")
    total = field_strength * area - sum(strings)
    r = math.fmod(total, 2.0 * math.pi)
    if r > math.pi:
        r -= 2.0 * math.pi
    elif r <= -math.pi:
        r += 2.0 * math.pi
    return r


def flux_shifted_expansion(phase_per_period: float, n: int) -> float:
    """Mode index under a cusp flux string.

    A string through the cusp twists the periodicity to
    psi(z + 1) = e^{i phase} psi(z); the x-dependence of mode n becomes
    e^{2 pi i (n - phase/(2 pi)) x}, so the effective index is
    n - phase/(2 pi).  The candidate configuration has phase = -pi/4,
    giving indices n + 1/8 that no longer fit the Riemann-Siegel
    frequencies; a 2 pi twist relabels the modes by an integer and is
    physically equivalent.
    """
    return n - phase_per_period / (2.0 * math.pi)


# ----------------------------------------------------------------------
# cusp embedding
# ----------------------------------------------------------------------

def cusp_embedding(x: float, y: float) -> tuple[float, float, float]:
    """Isometric embedding of the cusp {y >= 1/(2 pi), x mod 1} into R^3:

    ( sin(2 pi x)/(2 pi y), cos(2 pi x)/(2 pi y),
      log(2 pi y + sqrt(4 pi^2 y^2 - 1)) - sqrt(1 - (2 pi y)^{-2}) ).

    The boundary circle y = 1/(2 pi) sits at height 0 with radius 1.
    """
    A = TWO_PI * y
    if A < 1.0:
        raise DomainError("embedding needs y >= 1/(2 pi)")
    radial = 1.0 / A
    height = math.log(A + math.sqrt(A * A - 1.0)) - math.sqrt(1.0 - A ** -2)
    return (radial * math.sin(TWO_PI * x), radial * math.cos(TWO_PI * x), height)


def embedding_metric_residual(x: float, y: float, h: float = 1e-5) -> float:
    """Max deviation of the embedded first fundamental form from
    (dx^2 + dy^2)/y^2, by central differences at (x, y)."""
    def r(xx, yy):
        return np.array(cusp_embedding(xx, yy))

    rx = (r(x + h, y) - r(x - h, y)) / (2 * h)
    ry = (r(x, y + h) - r(x, y - h)) / (2 * h)
    g = np.array([[rx @ rx, rx @ ry], [rx @ ry, ry @ ry]])
    target = np.array([[1.0 / y ** 2, 0.0], [0.0, 1.0 / y ** 2]])
    return float(np.abs(g - target).max())


# ----------------------------------------------------------------------
# finite-difference residual probe for the magnetic Laplacian
# ----------------------------------------------------------------------

def mode_on_grid(n: int, omega: float, x: np.ndarray, y: np.ndarray,
                 cfg: WhittakerConfig | None = None) -> np.ndarray:
    """The single cusp mode on a tensor grid, shape (len(y), len(x)).

    The pairing kappa = sign(n) * 9/4 with angular factor e^{2 pi i n x}
    solves (D - 85/16 - omega^2/4) psi = 0 exactly for the operator D as
    displayed above (the x = 0 restriction entering the Dirichlet sum is
    insensitive to the phase convention).
    """
    if n == 0:
        raise DomainError("mode n = 0 does not exist")
    kappa = 2.25 if n > 0 else -2.25
    radial = whittaker_W_grid(kappa, 0.5j * omega, 2.0 * TWO_PI * abs(n) * y, cfg)
    angular = np.exp(2j * math.pi * n * x)
    return radial[:, None] * angular[None, :]


def magnetic_laplacian_residual(psi: np.ndarray, omega: float,
                                x: np.ndarray, y: np.ndarray) -> float:
    """Relative residual of (D - 85/16 - omega^2/4) psi on the grid.

    Fourth-order central differences; the grid must resolve the
    oscillation (several points per wavelength in both directions) or the
    probe refuses.  This is a correctness check for mode construction, not
    a solver: no boundary conditions are imposed.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if psi.shape != (y.size, x.size):
        raise ValidationError("psi must be shaped (len(y), len(x))")
    hx = x[1] - x[0]
    hy = y[1] - y[0]
    if not (np.allclose(np.diff(x), hx) and np.allclose(np.diff(y), hy)):
        raise ValidationError("grids must be uniform")
    # oscillation scales: e^{2 pi i n x} horizontally, local wavenumber
    # below omega/y vertically
    if hx > 0.05 or hy > float(np.min(y)) / max(omega, 1.0) * 2.0:
        raise ResolutionError("grid too coarse for the requested omega")

    def d2(f, h, axis):
        return (-np.roll(f, 2, axis) + 16 * np.roll(f, 1, axis) - 30 * f
                + 16 * np.roll(f, -1, axis) - np.roll(f, -2, axis)) / (12 * h * h)

    def d1(f, h, axis):
        return (np.roll(f, 2, axis) - 8 * np.roll(f, 1, axis)
                + 8 * np.roll(f, -1, axis) - np.roll(f, -2, axis)) / (12 * h)

    yy = y[:, None]
    lap = -yy ** 2 * (d2(psi, hy, 0) + d2(psi, hx, 1)) \
        + 4.5j * yy * d1(psi, hx, 1) + (81.0 / 16.0) * psi
    resid = lap - (85.0 / 16.0 + omega ** 2 / 4.0) * psi
    inner = resid[2:-2, 2:-2]
    scale = np.abs(psi[2:-2, 2:-2]).max()
    return float(np.abs(inner).max() / max(scale, 1e-300))