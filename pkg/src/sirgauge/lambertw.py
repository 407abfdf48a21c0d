"""Real-branch Lambert W on [-1/e, 0] and fixed-point classification.

Only the two real branches W0 and W-1 restricted to the interval
[-1/e, 0] are needed here; both are computed with Halley iteration
seeded from a branch-point series near -1/e and a log-based seed
elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

BRANCH_POINT = -1.0 / math.e
_CLAMP = 1e-15
_MAX_ITER = 50
_STEP_TOL = 1e-15


def _halley(w: float, x: float) -> float:
    """Halley iteration on f(w) = w e^w - x from the seed w."""
    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        if f == 0.0:
            return w
        wp1 = w + 1.0
        # Halley step; denominator uses f' = e^w (1+w), f'' = e^w (2+w)
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        step = f / denom
        w -= step
        if abs(step) < _STEP_TOL:
            break
    return w


def _branch_point_seed(x: float, sign: float) -> float:
    # series about x = -1/e in p = +/- sqrt(2(e x + 1))
    p = sign * math.sqrt(max(2.0 * (math.e * x + 1.0), 0.0))
    return -1.0 + p - p * p / 3.0 + 11.0 * p ** 3 / 72.0


def w0(x: float) -> float:
    """Principal branch W0 for x in [-1/e, 0]; result lies in [-1, 0]."""
    if not math.isfinite(x):
        raise ValueError(f"non-finite argument {x!r}")
    if x > 0.0 or x < BRANCH_POINT - _CLAMP:
        raise ValueError(f"w0 requires -1/e <= x <= 0, got {x!r}")
    x = max(x, BRANCH_POINT)
    if x == 0.0:
        return 0.0
    if x == BRANCH_POINT:
        return -1.0
    if x > -0.25:
        seed = x * math.exp(-x)  # fixed-point style seed, good away from -1/e
    else:
        seed = _branch_point_seed(x, +1.0)
    w = _halley(seed, x)
    return min(0.0, max(-1.0, w))


def wm1(x: float) -> float:
    """Lower branch W-1 for x in [-1/e, 0); result is <= -1."""
    if not math.isfinite(x):
        raise ValueError(f"non-finite argument {x!r}")
    if x >= 0.0 or x < BRANCH_POINT - _CLAMP:
        raise ValueError(f"wm1 requires -1/e <= x < 0, got {x!r}")
    if abs(x) < 1e-300:
        raise OverflowError("wm1 diverges to -inf as x -> 0-")
    x = max(x, BRANCH_POINT)
    if x == BRANCH_POINT:
        return -1.0
    if x > -0.25:
        # asymptotic seed from w ~ ln(-x) - ln(-ln(-x))
        l1 = math.log(-x)
        seed = l1 - math.log(-l1)
    else:
        seed = _branch_point_seed(x, -1.0)
    w = _halley(seed, x)
    return min(-1.0, w)


@dataclass(frozen=True)
class FixedPointReport:
    """Fixed points of d(xi)/dT = L xi^2 - xi ln(xi) and their stability."""

    xi_zero: float
    xi_stable: float
    xi_unstable: float
    derivative_at_stable: float
    derivative_at_unstable: float


def classify_fixed_points(L: float) -> FixedPointReport:
    """Classify the three fixed points of the xi equation for 0 < L <= 1/e.

    The nontrivial fixed points are -W0(-L)/L (stable) and -W-1(-L)/L
    (unstable); the derivative of the flow at each is -W(-L) - 1.
    """
    if not (0.0 < L <= 1.0 / math.e + _CLAMP):
        raise ValueError(f"classify_fixed_points requires 0 < L <= 1/e, got {L!r}")
    L = min(L, 1.0 / math.e)
    ws = w0(-L)
    wu = wm1(-L)
    return FixedPointReport(
        xi_zero=0.0,
        xi_stable=-ws / L,
        xi_unstable=-wu / L,
        derivative_at_stable=-ws - 1.0,
        derivative_at_unstable=-wu - 1.0,
    )
