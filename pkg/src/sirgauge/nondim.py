"""Parameter collapse for the SIR model and trajectory reconstruction.

The four dimensional inputs (r, alpha, S0, I0) collapse to the pair
(s0_tilde, i0_tilde); everything else the solvers need -- the combined
constant L, the gauge decay rate lambda, and the fixed-point values --
is derived here once and carried around immutably.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import lambertw

# lambda values closer to zero than this are treated as exactly zero:
# the gauge-series recursions divide by lambda and the scenario has the
# exact constant solution anyway.
GAUGE_EPS = 1e-14


@dataclass(frozen=True)
class EpidemicParams:
    """Dimensional SIR inputs: contact rate r, recovery rate alpha, and
    initial susceptible/infected populations."""

    r: float
    alpha: float
    S0: float
    I0: float

    def __post_init__(self):
        vals = (self.r, self.alpha, self.S0, self.I0)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"non-finite parameter in {self!r}")
        if self.r <= 0 or self.alpha <= 0:
            raise ValueError("rates r and alpha must be positive")
        if self.S0 < 0 or self.I0 < 0:
            raise ValueError("initial populations must be nonnegative")
        if self.S0 + self.I0 == 0:
            raise ValueError("degenerate scenario: S0 = I0 = 0")


@dataclass(frozen=True)
class NondimState:
    """Collapsed nondimensional parameters and derived constants.

    beta is retained purely as a consistency hook: L computed from
    (r/alpha) e^(beta/alpha) must agree with s0_tilde e^(-v0).  It is
    None when the state was built directly from (s0_tilde, i0_tilde).
    """

    s0_tilde: float
    i0_tilde: float
    beta: Optional[float]
    xi0: float
    v0: float
    L: float
    lam: float
    xi_inf: float
    v_inf: float
    s_inf_tilde: float
    degenerate: bool  # on-axis scenario (i0_tilde = 0 or s0_tilde = 0)

    @property
    def gauge_degenerate(self) -> bool:
        """True when lambda is numerically zero (constant solution)."""
        return abs(self.lam) <= GAUGE_EPS


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution in nondimensional time.

    Parallel arrays of T, V, and the reconstructed populations.  The sum
    s + i + r is constant and equal to s0_tilde + i0_tilde.
    """

    t: np.ndarray
    v: np.ndarray
    s: np.ndarray
    i: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        for arr in (self.t, self.v, self.s, self.i, self.r):
            arr.flags.writeable = False

    def __len__(self) -> int:
        return len(self.t)


def from_collapsed(s0_tilde: float, i0_tilde: float,
                   beta: Optional[float] = None) -> NondimState:
    """Build the full derived-constant set from (s0_tilde, i0_tilde)."""
    if not (math.isfinite(s0_tilde) and math.isfinite(i0_tilde)):
        raise ValueError("non-finite collapsed parameters")
    if s0_tilde < 0 or i0_tilde < 0:
        raise ValueError("collapsed parameters must be nonnegative")
    if s0_tilde + i0_tilde == 0:
        raise ValueError("degenerate scenario: s0_tilde = i0_tilde = 0")

    v0 = s0_tilde + i0_tilde
    xi0 = math.exp(v0)
    L = s0_tilde * math.exp(-v0)
    if L == 0.0:
        # S0 = 0 special case: xi' = -xi ln(xi), stable point xi = 1
        lam, xi_inf = -1.0, 1.0
    else:
        w = lambertw.w0(-L)
        lam = -w - 1.0
        xi_inf = -w / L
    if abs(lam) <= GAUGE_EPS:
        lam = 0.0
    return NondimState(
        s0_tilde=s0_tilde,
        i0_tilde=i0_tilde,
        beta=beta,
        xi0=xi0,
        v0=v0,
        L=L,
        lam=lam,
        xi_inf=xi_inf,
        v_inf=math.log(xi_inf),
        s_inf_tilde=L * xi_inf,
        degenerate=(i0_tilde == 0.0 or s0_tilde == 0.0),
    )


def nondimensionalize(p: EpidemicParams) -> NondimState:
    """Collapse dimensional SIR parameters to the nondimensional state."""
    s0t = p.r * p.S0 / p.alpha
    i0t = p.r * p.I0 / p.alpha
    beta = None
    if p.S0 > 0:
        beta = p.alpha * math.log(p.S0) - p.r * (p.S0 + p.I0)
    return from_collapsed(s0t, i0t, beta=beta)


def reconstruct(v: float, state: NondimState) -> tuple[float, float, float]:
    """Recover (S~, I~, R~) from a value of V = S~ + I~.

    S~ = L e^V, I~ = V - S~, R~ = V0 - V; the total S~ + I~ + R~ is the
    conserved sum s0_tilde + i0_tilde.
    """
    if not math.isfinite(v):
        raise ValueError(f"non-finite V value {v!r}")
    s = state.L * math.exp(v)
    return s, v - s, state.v0 - v


def initial_xi_rate(state: NondimState) -> float:
    """d(xi)/dT at T = 0, evaluated as L xi0^2 - xi0 ln(xi0).

    Always equals -i0_tilde * xi0, so xi is monotone decreasing.
    """
    return state.L * state.xi0 ** 2 - state.xi0 * math.log(state.xi0)


def load_scenario(path: str) -> NondimState:
    """Load a scenario JSON file.

    The object must contain either the dimensional keys
    {"r", "alpha", "S0", "I0"} or the collapsed keys
    {"s0_tilde", "i0_tilde"}, not both.
    """
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: scenario file must hold a JSON object")
    dim_keys = {"r", "alpha", "S0", "I0"}
    col_keys = {"s0_tilde", "i0_tilde"}
    has_dim = dim_keys & data.keys()
    has_col = col_keys & data.keys()
    if has_dim and has_col:
        raise ValueError(f"{path}: dimensional and collapsed keys are mutually exclusive")
    if has_dim:
        missing = dim_keys - data.keys()
        if missing:
            raise ValueError(f"{path}: missing keys {sorted(missing)}")
        return nondimensionalize(EpidemicParams(
            r=float(data["r"]), alpha=float(data["alpha"]),
            S0=float(data["S0"]), I0=float(data["I0"])))
    if has_col:
        missing = col_keys - data.keys()
        if missing:
            raise ValueError(f"{path}: missing keys {sorted(missing)}")
        return from_collapsed(float(data["s0_tilde"]), float(data["i0_tilde"]))
    raise ValueError(f"{path}: expected dimensional or collapsed parameter keys")
