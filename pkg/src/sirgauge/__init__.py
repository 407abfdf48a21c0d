"""Convergent power-series solutions of the SIR model in the shifted
exponential gauge, with convergence diagnostics."""

from .nondim import (EpidemicParams, NondimState, Trajectory, from_collapsed,
                     load_scenario, nondimensionalize, reconstruct)
from .series import (PowerSeries, SeriesTriple, StraightGaugeTable, eval_series,
                     exp_series, gauge_forward, gauge_inverse, reciprocal_series,
                     shifted_series, straight_gauge, time_series)

__version__ = "0.1.0"

__all__ = [
    "EpidemicParams", "NondimState", "Trajectory", "PowerSeries",
    "SeriesTriple", "StraightGaugeTable", "from_collapsed", "load_scenario",
    "nondimensionalize", "reconstruct", "time_series", "shifted_series",
    "straight_gauge", "exp_series", "reciprocal_series", "eval_series",
    "gauge_forward", "gauge_inverse", "__version__",
]
