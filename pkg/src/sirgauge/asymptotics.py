"""Asymptotic components of the solution in limiting parameter regimes.

Three expansions are covered: powers of small i0_tilde (the H
components), the s0_tilde = 1 special case (the J components, which are
polynomials in ln(1 - y)), and powers of small s0_tilde (the P
components, the first of which needs a quadrature).  The toy
coefficient model -- a fixed pole at y = 1 plus one conjugate
singularity pair -- reproduces the oscillation-then-tail shape of the
gauge-series coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import lambertw
from .errors import QuadratureError
from .series import PowerSeries

_S0_ONE_TOL = 1e-10


@dataclass(frozen=True)
class SmallI0Expansion:
    """Constants of the small-i0_tilde expansion about a base s0_tilde.

    theta = (s0_tilde - 1)/lambda_tilde is exactly 1 for s0_tilde < 1
    and negative for s0_tilde > 1 (where the expansion breaks down at
    y = 1).
    """

    s0_tilde: float
    l_tilde: float
    lambda_tilde: float
    theta: float


def small_i0_expansion(s0_tilde: float) -> SmallI0Expansion:
    if s0_tilde <= 0:
        raise ValueError("s0_tilde must be positive")
    if abs(s0_tilde - 1.0) <= _S0_ONE_TOL:
        raise ValueError("s0_tilde = 1 is excluded; use the log-power components")
    l_tilde = s0_tilde * math.exp(-s0_tilde)
    lam = -lambertw.w0(-l_tilde) - 1.0
    return SmallI0Expansion(
        s0_tilde=s0_tilde,
        l_tilde=l_tilde,
        lambda_tilde=lam,
        theta=(s0_tilde - 1.0) / lam,
    )


def h1(y: float, exp: SmallI0Expansion) -> float:
    """First-order component (s0 - (1-y)^theta)/(s0 - 1); h1(0) = 1.

    For s0_tilde < 1 this is the straight line 1 + y/(s0_tilde - 1); for
    s0_tilde > 1 it diverges as y -> 1 (theta < 0).
    """
    _check_y(y, exp)
    s0 = exp.s0_tilde
    return (s0 - (1.0 - y) ** exp.theta) / (s0 - 1.0)


def h2(y: float, exp: SmallI0Expansion) -> float:
    """Second-order component of the small-i0_tilde expansion; h2(0) = 0."""
    _check_y(y, exp)
    s0, lam, th = exp.s0_tilde, exp.lambda_tilde, exp.theta
    one_my = 1.0 - y
    log_coef = (lam + 1.0) / lam ** 3 - s0 / (lam * (s0 - 1.0) ** 2)
    if y == 1.0 and th > 0:
        log_term = 0.0  # (1-y)^theta ln(1-y) -> 0
    else:
        log_term = log_coef * one_my ** th * math.log(one_my)
    return log_term - s0 / (2.0 * (s0 - 1.0) ** 3) * (1.0 - one_my ** (2.0 * th))


def _check_y(y: float, exp: SmallI0Expansion) -> None:
    if not 0.0 <= y <= 1.0:
        raise ValueError("y must lie in [0, 1]")
    if y == 1.0 and exp.theta < 0:
        raise ValueError("component diverges at y = 1 for s0_tilde > 1")


def boundary_estimates(s0_tilde: float) -> tuple[float, float]:
    """Root-test style estimates of the maximum i0_tilde for 0 < s0_tilde < 1.

    Returns (|h1(1)|^-1, |h2(1)|^(-1/2)) = (1/s0 - 1,
    sqrt(2) (1-s0)^(3/2) s0^(-1/2)); both blow up as s0_tilde -> 0,
    matching the vertical asymptote of the convergence boundary.
    """
    if not 0.0 < s0_tilde < 1.0:
        raise ValueError("boundary estimates require 0 < s0_tilde < 1")
    order1 = 1.0 / s0_tilde - 1.0
    order2 = math.sqrt(2.0) * (1.0 - s0_tilde) ** 1.5 / math.sqrt(s0_tilde)
    return order1, order2


def j_components(y: float) -> tuple[float, float, float, float]:
    """Log-power components for the s0_tilde = 1 case.

    Returns (J11, J23, J34, J35) = (-u, u^3/6, -u^4/24, -u^5/30) with
    u = ln(1 - y); each diverges as y -> 1.
    """
    if not 0.0 <= y < 1.0:
        raise ValueError("y must lie in [0, 1)")
    u = math.log1p(-y)
    return -u, u ** 3 / 6.0, -u ** 4 / 24.0, -u ** 5 / 30.0


def p_components(y: float, i0_tilde: float) -> tuple[float, float]:
    """Small-s0_tilde components (P0, P1) at one point.

    P0 = i0_tilde (1 - y).  P1 carries an integral with a (1-Y)^-2
    blow-up at Y = 1; the y = 1 endpoint uses the analytic limit
    P1(1) = e^(-i0_tilde) instead of quadrature.
    """
    if not 0.0 <= y <= 1.0:
        raise ValueError("y must lie in [0, 1]")
    if i0_tilde <= 0:
        raise ValueError("i0_tilde must be positive")
    p0 = i0_tilde * (1.0 - y)
    if y == 1.0:
        return p0, math.exp(-i0_tilde)
    one_my = 1.0 - y
    integral, err = integrate.quad(
        lambda Y: math.exp(-i0_tilde * Y) / (1.0 - Y) ** 2,
        0.0, y, epsabs=1e-12, epsrel=1e-12, limit=200)
    if err > 1e-10:
        raise QuadratureError(f"quadrature error estimate {err:g} exceeds 1e-10")
    p1 = one_my + i0_tilde * math.exp(-i0_tilde) * one_my * math.log(one_my) \
        + one_my * integral
    return p0, p1


@dataclass(frozen=True)
class ToyModelParams:
    """Two-singularity surrogate: a pole of strength m at y = 1 plus a
    conjugate pair of strength n_amp at modulus rho and phase phi."""

    m: float
    n_amp: float
    rho: float
    phi: float

    def __post_init__(self):
        if not (self.n_amp > self.m > 0):
            raise ValueError("need n_amp > m > 0")
        if self.rho <= 0:
            raise ValueError("rho must be positive")
        if not 0.0 < self.phi < math.pi:
            raise ValueError("phi must lie in (0, pi)")


def toy_coefficients(params: ToyModelParams, n_max: int) -> PowerSeries:
    """Coefficients A_n = m + n_amp sin((n+1) phi)/(rho^(n+2) sin(phi)).

    For rho > 1 the oscillating part dies out and the coefficients
    flatten onto the constant tail m; for rho < 1 they grow like
    rho^-n.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    n = np.arange(n_max + 1)
    osc = params.n_amp * np.sin((n + 1) * params.phi) \
        / (params.rho ** (n + 2.0) * math.sin(params.phi))
    return PowerSeries("y", params.m + osc)
