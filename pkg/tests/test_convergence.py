import math

import numpy as np
import pytest

from sirgauge import convergence, nondim, series
from sirgauge.series import PowerSeries


def geometric(rho, n_max):
    return PowerSeries("y", rho ** -np.arange(n_max + 1, dtype=float))


def test_root_test_geometric():
    s = geometric(1.3, 200)
    est = convergence.root_test(s, 150)
    assert est.n_used == 150
    assert est.rho_root == pytest.approx(1.3, rel=1e-12)
    assert est.rho_ratio == pytest.approx(1.3, rel=1e-12)
    assert est.drift == pytest.approx(0.0, abs=1e-12)


def test_root_test_skips_zero_coefficient():
    c = np.zeros(11)
    c[0] = 1.0
    c[1:10:2] = 2.0 ** -np.arange(1, 10, 2)  # odd orders only
    est = convergence.root_test(PowerSeries("y", c), 4)
    assert est.n_used in (3, 5)
    assert est.rho_root == pytest.approx(2.0, rel=1e-12)


def test_ratio_test():
    s = geometric(0.7, 50)
    assert convergence.ratio_test(s, 20) == pytest.approx(0.7, rel=1e-12)
    with pytest.raises(ValueError):
        convergence.ratio_test(s, 50)
    flat = PowerSeries("y", np.array([1.0, 0.0, 0.0]))
    with pytest.raises(ValueError):
        convergence.ratio_test(flat, 0)


def test_classify_known_regions():
    inside = nondim.from_collapsed(1.9, 0.1)
    assert convergence.classify_hk(inside, 500) == "convergent"
    outside = nondim.from_collapsed(7.5, 0.004)
    assert convergence.classify_hk(outside, 500) == "divergent"
    with pytest.raises(ValueError):
        convergence.classify_hk(inside, 50)


def test_survey_shape_and_values():
    grid = convergence.survey((1.5, 2.2), (0.05, 0.5), (4, 3), 150)
    assert grid.values.shape == (3, 4)
    assert grid.metric_tag == "radius"
    # the whole block sits inside the convergent region: log10 rho > 0
    assert np.all(grid.values > 0)
    # spot-check one cell against a direct computation
    state = nondim.from_collapsed(grid.s0_axis[1], grid.i0_axis[2])
    triple = series.shifted_series(state, 151)
    rho = convergence.root_test(triple.a, 150).rho_root
    assert grid.values[2, 1] == pytest.approx(math.log10(rho), rel=1e-12)


def test_survey_max_error_metric():
    grid = convergence.survey((1.8, 2.0), (0.1, 0.2), (2, 2), 120,
                              metric="max_error", t_max=2.0, dt=0.01)
    assert grid.metric_tag == "max_error"
    assert np.all(np.isfinite(grid.values))
    assert np.all(grid.values < -6)  # converged series, tiny errors


def test_survey_thread_determinism():
    args = ((1.5, 2.5), (0.1, 0.6), (3, 3), 120)
    serial = convergence.survey(*args, threads=1)
    threaded = convergence.survey(*args, threads=4)
    np.testing.assert_array_equal(serial.values, threaded.values)


def test_survey_validation():
    with pytest.raises(ValueError):
        convergence.survey((0.0, 1.0), (0.1, 0.5), (3, 3), 150)
    with pytest.raises(ValueError):
        convergence.survey((0.5, 1.0), (0.1, 0.5), (1, 3), 150)
    with pytest.raises(ValueError):
        convergence.survey((0.5, 1.0), (0.1, 0.5), (3, 3), 150,
                           metric="banana")
