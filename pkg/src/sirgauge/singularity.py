"""Singularity location via zeros of the truncated reciprocal series.

The zeros of 1/V(x), computed as roots of the truncated reciprocal
polynomial, approximate the singularities of V; the conjugate pair
closest to the origin gives the radius of convergence in that domain.
A closed-form map carries singularities between the T and y domains.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import series
from .series import PowerSeries

COMPANION_MAX_DEGREE = 400
_ABERTH_TOL = 1e-12
_ABERTH_MAX_SWEEPS = 200


def _aberth(coeffs: np.ndarray) -> np.ndarray:
    """Aberth-Ehrlich simultaneous iteration for all roots.

    coeffs are ascending; degree is len - 1.  Initial guesses sit on a
    circle of the root-magnitude bound, slightly de-symmetrized.
    """
    n = len(coeffs) - 1
    monic = coeffs / coeffs[-1]
    # start on a circle at the geometric-mean root radius |c0|^(1/n)
    r0 = abs(monic[0]) ** (1.0 / n) if monic[0] != 0 else 1.0
    angles = 2.0 * np.pi * (np.arange(n) + 0.25) / n + 0.3
    z = r0 * np.exp(1j * angles)
    dcoeffs = monic[1:] * np.arange(1, n + 1)
    for _ in range(_ABERTH_MAX_SWEEPS):
        p = np.polynomial.polynomial.polyval(z, monic)
        dp = np.polynomial.polynomial.polyval(z, dcoeffs)
        newton = p / dp
        pairwise = z[:, None] - z[None, :]
        np.fill_diagonal(pairwise, np.inf)
        repulsion = np.sum(1.0 / pairwise, axis=1)
        step = newton / (1.0 - newton * repulsion)
        z = z - step
        if np.max(np.abs(step)) < _ABERTH_TOL * max(1.0, np.max(np.abs(z))):
            break
    return z


def poly_roots(coeffs: PowerSeries) -> np.ndarray:
    """All complex roots of the truncated polynomial.

    Companion-matrix eigenvalues (with LAPACK balancing) up to degree
    400, Aberth-Ehrlich iteration above; trailing zero coefficients are
    trimmed first.
    """
    c = np.trim_zeros(coeffs.coeffs, "b")
    if c.size == 0:
        raise ValueError("degenerate polynomial: all coefficients are zero")
    if c.size < 2:
        raise ValueError("polynomial degree must be >= 1")
    degree = c.size - 1
    if degree <= COMPANION_MAX_DEGREE:
        roots = np.roots(c[::-1])
    else:
        roots = _aberth(c)
    return roots[np.argsort(np.abs(roots))]


@dataclass(frozen=True)
class SingularityReport:
    """Roots of the truncated reciprocal polynomial, nearest pair first.

    nearest_pair is a conjugate pair (or a doubled real root when the
    closest root is real); radius is its modulus.  ambiguous flags a tie
    between pairs whose moduli agree to 1e-9.
    """

    domain_tag: str
    n_used: int
    roots: np.ndarray
    nearest_pair: tuple[complex, complex]
    radius: float
    ambiguous: bool = False

    def __post_init__(self):
        self.roots.flags.writeable = False


def nearest_singularities(v_series: PowerSeries, n: int) -> SingularityReport:
    """Locate the singularities of a series truncated at order n.

    Builds the reciprocal series to order n and finds its roots; the
    minimum-modulus conjugate pair estimates the radius of convergence.
    """
    if n > v_series.order:
        raise ValueError(f"order {n} exceeds series order {v_series.order}")
    truncated = PowerSeries(v_series.domain_tag, v_series.coeffs[:n + 1])
    rec = series.reciprocal_series(truncated)
    roots = poly_roots(rec)
    nearest = roots[0]
    if abs(nearest.imag) <= 1e-9 * max(1.0, abs(nearest)):
        pair = (complex(nearest.real, 0.0), complex(nearest.real, 0.0))
    else:
        pair = (complex(nearest.real, abs(nearest.imag)),
                complex(nearest.real, -abs(nearest.imag)))
    radius = abs(nearest)
    # tie between distinct pairs: two non-conjugate roots at the same modulus
    others = roots[np.abs(np.abs(roots) - radius) <= 1e-9]
    ambiguous = any(abs(r - pair[0]) > 1e-6 and abs(r - pair[1]) > 1e-6
                    for r in others)
    return SingularityReport(domain_tag=v_series.domain_tag, n_used=n,
                             roots=roots, nearest_pair=pair, radius=radius,
                             ambiguous=ambiguous)


def map_t_to_y(t_singularity: complex, lam: float) -> tuple[complex, float]:
    """Map a T-domain singularity to the y domain: y = 1 - e^(lambda T).

    Also returns the modulus sqrt(1 + e^(2 lam tau) - 2 e^(lam tau) cos(lam omega)).
    """
    if lam >= 0:
        raise ValueError("map requires lambda < 0")
    y = 1.0 - cmath.exp(lam * t_singularity)
    tau, omega = t_singularity.real, t_singularity.imag
    radius = math.sqrt(1.0 + math.exp(2.0 * lam * tau)
                       - 2.0 * math.exp(lam * tau) * math.cos(lam * omega))
    return y, radius


def map_y_to_t(y_singularity: complex, lam: float) -> tuple[complex, float]:
    """Map a y-domain singularity back to T = ln(1 - y)/lambda (principal branch)."""
    if lam >= 0:
        raise ValueError("map requires lambda < 0")
    if y_singularity == 1.0:
        raise ValueError("y = 1 maps to T = infinity")
    t = cmath.log(1.0 - y_singularity) / lam
    return t, abs(t)
