import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sirgauge import asymptotics


def test_theta_below_one_is_unity():
    # for s0 < 1 the Lambert branch gives lambda = s0 - 1 exactly
    exp = asymptotics.small_i0_expansion(0.5)
    assert exp.lambda_tilde == pytest.approx(-0.5, abs=1e-12)
    assert exp.theta == pytest.approx(1.0, rel=1e-12)


def test_h1_endpoints():
    lo = asymptotics.small_i0_expansion(0.5)
    assert asymptotics.h1(0.0, lo) == pytest.approx(1.0)
    # theta = 1 makes H1 a straight line hitting (s0-1)/(s0-1) ... at y=1
    assert asymptotics.h1(1.0, lo) == pytest.approx(
        (0.5 - 0.0) / (0.5 - 1.0), rel=1e-12)
    hi = asymptotics.small_i0_expansion(2.0)
    assert hi.theta < 0
    with pytest.raises(ValueError):
        asymptotics.h1(1.0, hi)


def test_h2_boundary_values():
    exp = asymptotics.small_i0_expansion(0.5)
    assert asymptotics.h2(0.0, exp) == pytest.approx(0.0, abs=1e-12)
    assert all(math.isfinite(asymptotics.h2(y, exp))
               for y in np.linspace(0.0, 1.0, 21))
    # theta = 1 kills the log term at y = 1, leaving -s0/(2 (s0-1)^3)
    assert asymptotics.h2(1.0, exp) == pytest.approx(2.0, rel=1e-12)


def test_boundary_estimates_frozen_value():
    order1, order2 = asymptotics.boundary_estimates(0.5)
    assert order1 == pytest.approx(1.0, rel=1e-15)
    # sqrt(2) (1/2)^(3/2) / sqrt(1/2) = 1/sqrt(2)
    assert order2 == pytest.approx(0.7071067811865476, rel=1e-15)
    with pytest.raises(ValueError):
        asymptotics.boundary_estimates(1.5)


@given(st.floats(min_value=0.02, max_value=0.98))
def test_boundary_estimates_positive_and_diverge_at_zero(s0):
    order1, order2 = asymptotics.boundary_estimates(s0)
    assert order1 > 0 and order2 > 0


def test_j_components_values():
    vals = asymptotics.j_components(0.0)
    assert vals == (0.0, 0.0, 0.0, 0.0)
    y = 1.0 - math.exp(-2.0)  # u = -2
    j11, j23, j34, j35 = asymptotics.j_components(y)
    assert j11 == pytest.approx(2.0, rel=1e-12)
    assert j23 == pytest.approx(-8.0 / 6.0, rel=1e-12)
    assert j34 == pytest.approx(-16.0 / 24.0, rel=1e-12)
    assert j35 == pytest.approx(32.0 / 30.0, rel=1e-12)


def test_p_components_limits():
    p0, p1 = asymptotics.p_components(0.0, 0.3)
    assert p0 == pytest.approx(0.3)
    assert p1 == pytest.approx(1.0)
    p0, p1 = asymptotics.p_components(1.0, 0.3)
    assert p0 == 0.0
    assert p1 == pytest.approx(math.exp(-0.3), rel=1e-14)
    # continuity: quadrature values just below y=1 approach the limit
    _, p1_a = asymptotics.p_components(0.99, 0.3)
    _, p1_b = asymptotics.p_components(0.9999, 0.3)
    limit = math.exp(-0.3)
    assert abs(p1_b - limit) < abs(p1_a - limit)
    assert p1_b == pytest.approx(limit, abs=1e-4)


def test_toy_model_validation():
    with pytest.raises(ValueError):
        asymptotics.ToyModelParams(m=2.0, n_amp=1.0, rho=1.1, phi=0.1)
    with pytest.raises(ValueError):
        asymptotics.ToyModelParams(m=1.0, n_amp=5.0, rho=1.1, phi=4.0)


def test_toy_model_first_coefficient():
    p = asymptotics.ToyModelParams(m=1.0, n_amp=10.0, rho=1.5, phi=0.3)
    ps = asymptotics.toy_coefficients(p, 5)
    assert len(ps) == 6
    a0 = 1.0 + 10.0 * math.sin(0.3) / (1.5 ** 2 * math.sin(0.3))
    assert ps.coeffs[0] == pytest.approx(a0, rel=1e-14)
