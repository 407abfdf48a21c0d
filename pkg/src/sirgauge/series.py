"""Coefficient recursions and truncated-series algebra.

Three series families live here:

* the direct time series V(T) = sum A_n T^n with companion C_n
  coefficients for S~ = L xi,
* the shifted exponential-gauge series V(y) = sum A_n y^n in
  y = 1 - e^(lambda T), whose recursion divides by lambda,
* the straight exponential-gauge series V(g) = sum a_n g^n in
  g = e^(lambda T), where a_1 has to be recovered by root finding from
  the boundary condition at g = 1.

The xi coefficients B_n = C_n / L carry a factor xi0 which can be
numerically large, so they are materialized only on request; all the
recursions run on the A/C pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import AmbiguousRootError, GaugeDegenerateError, NoRealRootError
from .nondim import GAUGE_EPS, NondimState

DOMAIN_TAGS = ("T", "g", "y")


@dataclass(frozen=True)
class PowerSeries:
    """Truncated real power series tagged with its expansion variable."""

    domain_tag: str
    coeffs: np.ndarray

    def __post_init__(self):
        if self.domain_tag not in DOMAIN_TAGS:
            raise ValueError(f"unknown domain tag {self.domain_tag!r}")
        c = np.asarray(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d array")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class SeriesTriple:
    """The V, xi, and S~ series sharing one expansion variable.

    b (the xi series) is None when it was not materialized; use
    with_b() to add it.  When both exist, c = L * b term by term.
    """

    a: PowerSeries
    b: Optional[PowerSeries]
    c: PowerSeries
    state: NondimState

    def with_b(self) -> "SeriesTriple":
        if self.b is not None:
            return self
        if self.state.L == 0.0:
            raise ValueError("B series undefined for L = 0 (s0_tilde = 0)")
        b = PowerSeries(self.a.domain_tag, self.c.coeffs / self.state.L)
        return SeriesTriple(self.a, b, self.c, self.state)


def _convolve_step(a: np.ndarray, other: np.ndarray, n: int) -> float:
    """One Cauchy-product step: (1/(n+1)) sum_{j=0..n} (j+1) a[j+1] other[n-j]."""
    return float(np.dot(np.arange(1, n + 2) * a[1:n + 2], other[n::-1])) / (n + 1)


def time_series(state: NondimState, n_terms: int) -> SeriesTriple:
    """Direct time-series coefficients A_0..A_N and C_0..C_N.

    A_{n+1} = (C_n - A_n)/(n+1); C advances by the Cauchy product of the
    derivative of A with C.  Valid for every state, including on-axis
    ones.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    N = n_terms
    a = np.zeros(N + 1)
    c = np.zeros(N + 1)
    a[0] = state.v0
    c[0] = state.s0_tilde
    for n in range(N):
        a[n + 1] = (c[n] - a[n]) / (n + 1)
        c[n + 1] = _convolve_step(a, c, n)
    return SeriesTriple(PowerSeries("T", a), None, PowerSeries("T", c), state)


def shifted_series(state: NondimState, n_terms: int) -> SeriesTriple:
    """Shifted exponential-gauge coefficients in y = 1 - e^(lambda T).

    A_{n+1} = ((n lambda + 1) A_n - C_n) / ((n+1) lambda).  Refuses
    gauge-degenerate states (lambda = 0), whose solution is the constant
    V = V0.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    if abs(state.lam) <= GAUGE_EPS:
        raise GaugeDegenerateError(
            "lambda is numerically zero; the scenario has the constant "
            "solution V = V0 and no gauge series")
    N = n_terms
    lam = state.lam
    a = np.zeros(N + 1)
    c = np.zeros(N + 1)
    a[0] = state.v0
    c[0] = state.s0_tilde
    for n in range(N):
        a[n + 1] = ((n * lam + 1.0) * a[n] - c[n]) / ((n + 1) * lam)
        c[n + 1] = _convolve_step(a, c, n)
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(c))):
        raise OverflowError("shifted-gauge coefficients overflowed")
    return SeriesTriple(PowerSeries("y", a), None, PowerSeries("y", c), state)


@dataclass(frozen=True)
class StraightGaugeTable:
    """Normalized straight-gauge coefficients and the solved a_1.

    E_n = a_n / a_1^n and F_n = b_n / a_1^n; a_1 comes from root-finding
    the truncated boundary condition sum E_n a_1^n = ln(S0~/Sinf~).
    real_roots lists every real root of that polynomial for inspection.
    """

    E: np.ndarray
    F: np.ndarray
    a1: float
    real_roots: tuple

    def __post_init__(self):
        self.E.flags.writeable = False
        self.F.flags.writeable = False

    def v_series(self) -> PowerSeries:
        """The de-normalized a_n = E_n a_1^n series for V(g)."""
        n = np.arange(len(self.E), dtype=float)
        return PowerSeries("g", self.E * self.a1 ** n)


def straight_gauge(state: NondimState, n_terms: int,
                   root_tol: float = 1e-9) -> StraightGaugeTable:
    """Straight exponential-gauge table with a_1 solved by root finding.

    The E/F recursion is parameter-only; a_1 is the smallest-magnitude
    real root of the truncated boundary-condition polynomial whose
    residual is below root_tol.
    """
    if n_terms < 2:
        raise ValueError("n_terms must be >= 2")
    if abs(state.lam) <= GAUGE_EPS:
        raise GaugeDegenerateError("lambda is numerically zero")
    N = n_terms
    lam = state.lam
    s_inf = state.s_inf_tilde
    E = np.zeros(N + 1)
    F = np.zeros(N + 1)
    # E_0 is a_0/a_1^0 = V_inf but never enters the recursion; keep the
    # normalized convention E_0 = V_inf for completeness.
    E[0] = state.v_inf
    F[0] = s_inf
    E[1] = 1.0
    F[1] = s_inf
    for n in range(1, N):
        E[n + 1] = float(np.dot(np.arange(1, n + 1) * E[1:n + 1], F[n:0:-1])) \
            / (n * (n + 1) * lam)
        F[n + 1] = ((n + 1) * lam + 1.0) * E[n + 1]

    # boundary condition at g = 1: x + E_2 x^2 + ... + E_N x^N = rhs
    rhs = math.log(state.s0_tilde / s_inf)
    poly = np.concatenate(([-rhs], [1.0], E[2:]))
    roots = np.polynomial.polynomial.polyroots(poly)
    real = sorted((float(r.real) for r in roots if abs(r.imag) <= 1e-9 * max(1.0, abs(r))),
                  key=abs)
    scale = float(np.sum(np.abs(poly)))
    ok = [r for r in real
          if abs(np.polynomial.polynomial.polyval(r, poly)) <= root_tol * scale]
    if not ok:
        raise NoRealRootError(
            f"no real root with residual below {root_tol!r} (real roots: {real})")
    close = [r for r in ok if abs(abs(r) - abs(ok[0])) <= 0.2 * abs(ok[0])]
    if len(close) > 1:
        raise AmbiguousRootError(close)
    return StraightGaugeTable(E=E, F=F, a1=ok[0], real_roots=tuple(real))


def exp_series(a: PowerSeries) -> PowerSeries:
    """Series of exp(a(x)), same truncation order as the input."""
    ac = a.coeffs
    n_max = len(ac)
    b = np.zeros(n_max)
    b0 = math.exp(ac[0])  # raises OverflowError if e^{a_0} overflows
    b[0] = b0
    for n in range(n_max - 1):
        b[n + 1] = _convolve_step(ac, b, n)
    return PowerSeries(a.domain_tag, b)


def reciprocal_series(b: PowerSeries) -> PowerSeries:
    """Series of 1/b(x); requires b_0 != 0."""
    bc = b.coeffs
    if bc[0] == 0.0:
        raise ValueError("reciprocal requires a nonzero leading coefficient")
    n_max = len(bc)
    c = np.zeros(n_max)
    c[0] = 1.0 / bc[0]
    for n in range(1, n_max):
        c[n] = -float(np.dot(bc[1:n + 1], c[n - 1::-1])) / bc[0]
    return PowerSeries(b.domain_tag, c)


def eval_series(s: PowerSeries, x):
    """Evaluate the truncated series at x (scalar or array) by Horner."""
    if np.isscalar(x) and not math.isfinite(x):
        raise ValueError(f"non-finite evaluation point {x!r}")
    return np.polynomial.polynomial.polyval(x, s.coeffs)


def gauge_forward(t, lam: float):
    """Map nondimensional time to the shifted gauge variable y = 1 - e^(lambda T)."""
    if lam >= 0:
        raise ValueError("gauge map requires lambda < 0")
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValueError("gauge map requires T >= 0")
    y = -np.expm1(lam * t)
    return float(y) if y.ndim == 0 else y


def gauge_inverse(y, lam: float):
    """Inverse gauge map T = ln(1 - y)/lambda; y = 1 maps to +inf."""
    if lam >= 0:
        raise ValueError("gauge map requires lambda < 0")
    y = np.asarray(y, dtype=float)
    if np.any((y < 0) | (y > 1)):
        raise ValueError("inverse gauge map requires 0 <= y <= 1")
    with np.errstate(divide="ignore"):
        t = np.where(y == 1.0, np.inf, np.log1p(-y) / lam)
    return float(t) if t.ndim == 0 else t
