"""Radius-of-convergence estimates and parameter-space surveys.

The root test rho_N = |A_N|^(-1/N) applied to the shifted-gauge series
is the workhorse; the survey sweeps it (or the RK4 max-error metric)
over a rectangular (s0_tilde, i0_tilde) grid to produce the data behind
the Hershey-Kiss region: the set of initial conditions whose series
converges on the whole physical domain (rho >= 1).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import nondim, oracle, series
from .errors import GaugeDegenerateError
from .series import PowerSeries


@dataclass(frozen=True)
class ConvergenceEstimate:
    """Root-test radius at one truncation order, with its drift.

    drift is |rho_N - rho_{N+1}|, a cheap uncertainty measure;
    None when the series is too short to form rho_{N+1}.
    """

    n_used: int
    rho_root: float
    rho_ratio: Optional[float]
    drift: Optional[float]


def _rho_at(coeffs: np.ndarray, n: int) -> float:
    return abs(coeffs[n]) ** (-1.0 / n)


def root_test(s: PowerSeries, n: int) -> ConvergenceEstimate:
    """Root-test estimate |A_n|^(-1/n) at order n.

    If A_n is exactly zero the nearest nonzero order is used instead and
    reported through n_used.  Raises when every coefficient past order 0
    vanishes (the constant solution has no radius estimate).
    """
    c = s.coeffs
    if not (1 <= n < len(c)):
        raise ValueError(f"order {n} outside series of length {len(c)}")
    if c[n] == 0.0:
        nonzero = np.nonzero(c[1:])[0] + 1
        if nonzero.size == 0:
            raise ValueError("all coefficients beyond order 0 are zero")
        n = int(nonzero[np.argmin(np.abs(nonzero - n))])
    rho = _rho_at(c, n)
    drift = None
    if n + 1 < len(c) and c[n + 1] != 0.0:
        drift = abs(rho - _rho_at(c, n + 1))
    ratio = None
    if n + 1 < len(c) and c[n + 1] != 0.0:
        ratio = abs(c[n] / c[n + 1])
    return ConvergenceEstimate(n_used=n, rho_root=rho, rho_ratio=ratio, drift=drift)


def ratio_test(s: PowerSeries, n: int) -> float:
    """|A_n / A_{n+1}|; raises on a zero denominator."""
    c = s.coeffs
    if not (0 <= n < len(c) - 1):
        raise ValueError(f"order {n} outside series of length {len(c)}")
    if c[n + 1] == 0.0:
        raise ValueError(f"A_{n + 1} is zero; ratio test undefined")
    return abs(c[n] / c[n + 1])


def classify_hk(state: nondim.NondimState, n: int) -> str:
    """Classify a state as convergent / divergent / borderline at order n.

    The borderline band is one root-test drift wide on either side of
    rho = 1; the verdict is explicitly n-dependent (delayed divergence
    can flip it at larger n).
    """
    if n < 100:
        raise ValueError("classification below N = 100 is meaningless")
    triple = series.shifted_series(state, n + 2)
    est = root_test(triple.a, n)
    drift = est.drift or 0.0
    if est.rho_root >= 1.0 + drift:
        return "convergent"
    if est.rho_root <= 1.0 - drift:
        return "divergent"
    return "borderline"


@dataclass(frozen=True)
class SurveyGrid:
    """Rectangular (s0_tilde, i0_tilde) grid of per-cell scalars.

    values[i, j] belongs to (s0_axis[j], i0_axis[i]); cells that could
    not be evaluated (gauge-degenerate or overflowed) are NaN.
    """

    s0_axis: np.ndarray
    i0_axis: np.ndarray
    values: np.ndarray
    metric_tag: str
    n_terms: int

    def __post_init__(self):
        if self.values.shape != (len(self.i0_axis), len(self.s0_axis)):
            raise ValueError("value matrix does not match axes")
        for arr in (self.s0_axis, self.i0_axis, self.values):
            arr.flags.writeable = False


def _radius_cell(s0: float, i0: float, n: int) -> float:
    try:
        state = nondim.from_collapsed(s0, i0)
        triple = series.shifted_series(state, n + 1)
        return math.log10(root_test(triple.a, n).rho_root)
    except (GaugeDegenerateError, OverflowError, ValueError):
        return math.nan


def _error_cell(s0: float, i0: float, n: int, t_max: float, dt: float) -> float:
    try:
        state = nondim.from_collapsed(s0, i0)
        triple = series.shifted_series(state, n)
        scan = oracle.error_scan(state, triple.a, n, t_max=t_max, dt=dt)
        return math.log10(scan.max_abs_error) if scan.max_abs_error > 0 else -math.inf
    except (GaugeDegenerateError, OverflowError, ValueError):
        return math.nan


def survey(s0_range: tuple[float, float], i0_range: tuple[float, float],
           resolution: tuple[int, int], n: int, metric: str = "radius",
           t_max: float = 20.0, dt: float = 1e-4,
           threads: Optional[int] = None) -> SurveyGrid:
    """Sweep the grid and return one scalar per cell.

    metric "radius" stores log10 of the shifted-series root-test radius;
    metric "max_error" stores log10 of the max |V_RK4 - V_series| over
    the scan window.  Cell order never affects results, so the sweep may
    run on a thread pool (SIR_GAUGE_THREADS caps it).
    """
    if metric not in ("radius", "max_error"):
        raise ValueError(f"unknown metric {metric!r}")
    ns, ni = resolution
    if ns < 2 or ni < 2:
        raise ValueError("resolution must be >= 2 in each direction")
    if n < 100:
        raise ValueError("survey requires N >= 100")
    if min(s0_range) <= 0 or min(i0_range) <= 0:
        raise ValueError("grid must exclude the axes (positive ranges only)")
    s0_axis = np.linspace(s0_range[0], s0_range[1], ns)
    i0_axis = np.linspace(i0_range[0], i0_range[1], ni)

    if metric == "radius":
        def cell(s0, i0):
            return _radius_cell(s0, i0, n)
    else:
        def cell(s0, i0):
            return _error_cell(s0, i0, n, t_max, dt)

    points = [(s0, i0) for i0 in i0_axis for s0 in s0_axis]
    if threads is None:
        threads = int(os.environ.get("SIR_GAUGE_THREADS", "1"))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            flat = list(pool.map(lambda p: cell(*p), points))
    else:
        flat = [cell(*p) for p in points]
    values = np.array(flat).reshape(ni, ns)
    return SurveyGrid(s0_axis=s0_axis, i0_axis=i0_axis, values=values,
                      metric_tag=metric, n_terms=n)
