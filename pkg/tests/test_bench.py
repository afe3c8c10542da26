import numpy as np
import pytest

from ephcurve.bench import (BreakpointResult, RhoConfig, default_omega_grid,
                            find_omega_bar, rho, time_methods)
from ephcurve.evaluators import EvalMethod

FAST = RhoConfig(d=3, m=1, n_curves=8, grid_points=101,
                 omega_grid=np.linspace(0.01, 0.6, 40), seed=11)


def test_default_grid():
    g = default_omega_grid()
    assert len(g) == 500
    assert g[0] == pytest.approx(0.004)
    assert g[-1] == pytest.approx(2.0)
    assert np.all(np.diff(g) > 0)


def test_config_validation():
    with pytest.raises(ValueError):
        RhoConfig(d=4)
    with pytest.raises(ValueError):
        RhoConfig(n_curves=0)
    with pytest.raises(ValueError):
        RhoConfig(omega_grid=np.array([0.0, 1.0]))


def test_rho_deterministic_given_seed():
    a = rho(FAST, EvalMethod.NEW)
    b = rho(FAST, EvalMethod.NEW)
    assert np.array_equal(a, b)
    other = RhoConfig(d=3, m=1, n_curves=8, grid_points=101,
                      omega_grid=np.linspace(0.01, 0.6, 40), seed=12)
    c = rho(other, EvalMethod.NEW)
    assert not np.array_equal(a, c)


def test_rho_shape_and_positivity():
    series = rho(FAST, EvalMethod.WOZNY_CHUDY)
    assert series.shape == (40, 2)
    assert np.all(series[:, 1] >= 0.0)
    assert np.array_equal(series[:, 0], FAST.omega_grid)


def test_rho_direct_dips_then_rises():
    # the direct baseline error decreases with omega down to its
    # accuracy breakpoint and grows again below it
    series = rho(FAST, EvalMethod.DIRECT)
    vals = series[:, 1]
    k = int(np.argmin(vals))
    assert 0 < k < len(vals) - 1
    assert vals[0] > 10 * vals[k]
    assert vals[-1] > 10 * vals[k]


def test_rho_methods_agree_where_truncation_dominates():
    # at the top of the sweep every correct evaluator is exact to far
    # below the series truncation, so the metric is method-independent
    grid = np.array([2.0])
    cfg = RhoConfig(d=3, m=1, n_curves=8, grid_points=101,
                    omega_grid=grid, seed=5)
    values = [rho(cfg, m)[0, 1] for m in (EvalMethod.DIRECT, EvalMethod.NEW,
                                          EvalMethod.WOZNY_CHUDY,
                                          EvalMethod.DECASTELJAU)]
    base = values[0]
    assert all(abs(v - base) / base < 0.1 for v in values)


def test_find_omega_bar_returns_grid_point():
    bp = find_omega_bar(FAST, EvalMethod.NEW)
    assert isinstance(bp, BreakpointResult)
    assert bp.omega_bar in FAST.omega_grid
    assert bp.rho_at_min >= 0.0


def test_timing_rows():
    rows = time_methods(3, 1, [0.5, 4.0], n_curves=3, grid_points=51,
                        repetitions=2, seed=1)
    assert len(rows) == 6
    for row in rows:
        assert row.median_seconds > 0.0
        assert np.isfinite(row.median_seconds)
