"""Fixed-step RK4 reference solution of dV/dT = L e^V - V and error scans.

The integrator is deliberately plain: classic fourth-order Runge-Kutta
in the T domain with a fixed step, so that a scan is reproducible
bit-for-bit from (t_max, dt).  Series predictions are compared against
it at the RK4 grid points only, with no interpolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import series
from .nondim import NondimState, Trajectory
from .series import PowerSeries


def integrate_v(state: NondimState, t_max: float, dt: float = 1e-4) -> Trajectory:
    """Integrate the V equation with classic RK4 and reconstruct (S~, I~, R~).

    Samples at every step, including T = 0.  V decreases monotonically
    for valid states, so e^V cannot overflow; a guard raises anyway.
    """
    if not (t_max > 0 and 0 < dt <= t_max):
        raise ValueError("need t_max > 0 and 0 < dt <= t_max")
    L = state.L
    n_steps = int(round(t_max / dt))
    v = np.empty(n_steps + 1)
    v[0] = state.v0
    exp = math.exp
    w = state.v0
    for k in range(n_steps):
        k1 = L * exp(w) - w
        u = w + 0.5 * dt * k1
        k2 = L * exp(u) - u
        u = w + 0.5 * dt * k2
        k3 = L * exp(u) - u
        u = w + dt * k3
        k4 = L * exp(u) - u
        w = w + dt * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
        if not math.isfinite(w):
            raise OverflowError(f"RK4 state overflowed at step {k}")
        v[k + 1] = w
    t = np.arange(n_steps + 1) * dt
    s = L * np.exp(v)
    return Trajectory(t=t, v=v, s=s, i=v - s, r=state.v0 - v)


@dataclass(frozen=True)
class ErrorScan:
    """Maximum |V_RK4 - V_series| over a scan window and where it occurs."""

    n_terms: int
    max_abs_error: float
    argmax_t: float
    samples: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.samples is not None:
            self.samples.flags.writeable = False


def error_scan(state: NondimState, v_series: PowerSeries, n_terms: int,
               t_max: float = 20.0, dt: float = 1e-4,
               trajectory: Optional[Trajectory] = None,
               keep_samples: bool = False) -> ErrorScan:
    """Compare a shifted-gauge series for V against the RK4 reference.

    The series is evaluated at y = 1 - e^(lambda T) on the RK4 grid.  A
    precomputed trajectory may be passed to amortize the RK4 cost across
    several truncation orders.  Divergent series produce huge but finite
    errors; a genuine evaluation overflow is reported as +inf max error.
    """
    if v_series.domain_tag != "y":
        raise ValueError("error_scan expects a series in the y domain")
    if state.lam >= 0:
        raise ValueError("error_scan requires lambda < 0")
    if trajectory is None:
        trajectory = integrate_v(state, t_max=t_max, dt=dt)
    truncated = PowerSeries("y", v_series.coeffs[:n_terms + 1])
    y = series.gauge_forward(trajectory.t, state.lam)
    with np.errstate(over="ignore", invalid="ignore"):
        pred = series.eval_series(truncated, y)
        err = np.abs(trajectory.v - pred)
    err = np.where(np.isnan(err), np.inf, err)
    k = int(np.argmax(err))
    return ErrorScan(
        n_terms=n_terms,
        max_abs_error=float(err[k]),
        argmax_t=float(trajectory.t[k]),
        samples=err if keep_samples else None,
    )
