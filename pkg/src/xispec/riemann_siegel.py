"""Riemann-Siegel main sum and its comparison against the scaled xi function.

The truncated main sum approximates minus the Hardy-style Z function:

    -Z(omega) ~ 2 sum_{1 <= N < sqrt(omega/2 pi)} N^{-1/2}
                  cos(arg Gamma(1/4 + i omega/2) - (omega/2) log(pi N^2) + pi)

with an O(omega^{-1/4}) remainder that is omitted here; the comparison
tolerances account for it.  The term count jumps exactly at omega = 2 pi N^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .gammazeta import log_gamma
from .shooting import find_zeros
from .special import big_Z, scaling_S, xi_zeta

TWO_PI = 2.0 * math.pi


def rs_phase(omega: float) -> float:
    """Continuous branch of arg Gamma(1/4 + i omega/2)."""
    if omega < 0:
        raise DomainError("rs_phase defined for omega >= 0")
    return log_gamma(0.25 + 0.5j * omega).imag


def rs_term_count(omega: float) -> int:
    """Number of main-sum terms: integers N with 1 <= N < sqrt(omega/2 pi)."""
    if omega <= TWO_PI:
        return 0
    root = math.sqrt(omega / TWO_PI)
    # the bound is strict: at omega = 2 pi N^2 the N-th term is not yet included
    return max(int(math.ceil(root)) - 1, 0)


def rs_main_sum(omega: float, correction: bool = True) -> float:
    """The truncated Riemann-Siegel approximation of -Z(omega).

    Empty (0.0) below omega = 2 pi; jump discontinuities of size
    2 N^{-1/2} |cos(...)| appear as omega passes 2 pi N^2.

    With correction=True (default) the first remainder term
    (-1)^{n-1} (omega/2 pi)^{-1/4} Psi(p),  Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p),
    p the fractional part of sqrt(omega/2 pi), is included; the bare main
    sum alone displaces low-lying zeros by up to ~0.4, far more than its
    formal O(omega^{-1/4}) size suggests, because the lowest zeros sit near
    Gram points where the main term is small.
    """
    n = rs_term_count(omega)
    if n == 0:
        return 0.0
    phase = rs_phase(omega)
    N = np.arange(1, n + 1, dtype=float)
    args = phase - 0.5 * omega * np.log(math.pi * N ** 2) + math.pi
    total = float(2.0 * np.sum(N ** -0.5 * np.cos(args)))
    if correction:
        root = math.sqrt(omega / TWO_PI)
        p = root - n
        psi = math.cos(2 * math.pi * (p * p - p - 1.0 / 16)) / math.cos(2 * math.pi * p)
        total -= (-1.0) ** (n - 1) * root ** -0.5 * psi
    return total


def match_zeros(reference: np.ndarray, candidate: np.ndarray, cap: float = 0.5):
    """Nearest-neighbour pairing of zero lists with a displacement cap.

    Returns (pairs, unmatched_reference): pairs is a list of
    (ref_zero, cand_zero, displacement); reference zeros with no candidate
    within the cap are reported, never silently dropped.
    """
    pairs = []
    unmatched = []
    for r in np.asarray(reference, dtype=float):
        if len(candidate) == 0:
            unmatched.append(r)
            continue
        j = int(np.argmin(np.abs(candidate - r)))
        d = abs(candidate[j] - r)
        if d <= cap:
            pairs.append((float(r), float(candidate[j]), float(d)))
        else:
            unmatched.append(float(r))
    return pairs, unmatched


@dataclass(frozen=True)
class RSComparison:
    """Paired series and matched zero lists for the RS figure."""

    omegas: np.ndarray
    s_xi: np.ndarray
    rs: np.ndarray
    xi_zeros: np.ndarray
    rs_zeros: np.ndarray
    pairs: list
    unmatched: list

    @property
    def max_displacement(self) -> float:
        return max((p[2] for p in self.pairs), default=math.nan)


def rs_compare(omegas, zero_lo: float = 15.0, zero_hi: float = 100.0,
               cap: float = 0.5) -> RSComparison:
    """Evaluate S*xi and the RS main sum on a grid and match their zeros.

    The grid must start at or above 2 pi (the sum is empty below).  Zeros
    are located on [zero_lo, zero_hi] with a density that comfortably
    separates consecutive zeta zeros in that window.
    """
    om = np.asarray(omegas, dtype=float)
    if om.ndim != 1 or om.size < 2 or om[0] < TWO_PI - 1e-12:
        raise DomainError("grid must be 1D and start at or above 2 pi")
    s_xi = np.array([scaling_S(o) * xi_zeta(o).real for o in om])
    rs = np.array([rs_main_sum(o) for o in om])
    n_grid = max(200, int((zero_hi - zero_lo) * 8))
    xi_zeros = find_zeros(lambda o: big_Z(o), zero_lo, zero_hi, n_grid=n_grid)
    rs_zeros = find_zeros(rs_main_sum, zero_lo, zero_hi, n_grid=n_grid)
    pairs, unmatched = match_zeros(xi_zeros, rs_zeros, cap=cap)
    return RSComparison(omegas=om, s_xi=s_xi, rs=rs, xi_zeros=xi_zeros,
                        rs_zeros=rs_zeros, pairs=pairs, unmatched=unmatched)
