"""Grid invariants of the bases: positivity, partition of unity,
symmetry, derivative and antiderivative relations, mode agreement."""

import numpy as np
import pytest
from scipy.integrate import quad

from conftest import rel_inf
from ephcurve import basis
from ephcurve.basis import EvalMode

GRID = np.linspace(0.0, 1.0, 1001)

# the closed forms carry the band below 20, the rewrites above
OMEGAS = [0.5, 1.0, 5.0, 20.0, 100.0, 1000.0]


def _grid_mode(w):
    return EvalMode.NAIVE if w < 20.0 else EvalMode.STABLE_LARGE_OMEGA


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("w", OMEGAS)
def test_partition_of_unity_and_positivity(m, w):
    b = basis.curve_basis(m, w, GRID, _grid_mode(w))
    assert np.min(b) >= -1e-12
    assert np.max(np.abs(b.sum(axis=-1) - 1.0)) < 1e-11
    h = basis.hodograph_basis(m, w, GRID)
    assert np.min(h) >= -1e-12
    assert np.max(np.abs(h.sum(axis=-1) - 1.0)) < 1e-11


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("w", OMEGAS)
def test_mirror_symmetry(m, w):
    b = basis.curve_basis(m, w, GRID, _grid_mode(w))
    mirrored = basis.curve_basis(m, w, 1.0 - GRID, _grid_mode(w))[..., ::-1]
    assert np.max(np.abs(b - mirrored)) < 1e-12


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("w", OMEGAS)
def test_derivative_relations(m, w):
    # d/dt of curve-basis function i is the normalized difference of
    # hodograph-basis functions i-1 and i
    h = 1e-6
    ts = np.linspace(2 * h, 1.0 - 2 * h, 401)
    mode = _grid_mode(w)
    fd = (basis.curve_basis(m, w, ts + h, mode)
          - basis.curve_basis(m, w, ts - h, mode)) / (2.0 * h)
    c = basis.constants(m, w)
    if m == 1:
        ints = np.array([c.c2, c.c3_over_c1, c.c2])
    else:
        ints = np.array([c.q2, c.q3, c.q4_over_q1, c.q3, c.q2])
    hb = basis.hodograph_basis(m, w, ts) / ints
    expected = np.empty_like(fd)
    expected[..., 0] = -hb[..., 0]
    expected[..., 1:-1] = hb[..., :-1] - hb[..., 1:]
    expected[..., -1] = hb[..., -1]
    assert np.max(np.abs(fd - expected)) < 1e-5 * max(1.0, np.max(np.abs(hb)))


def test_mode_agreement_naive_vs_stable_m1():
    ts = np.linspace(0.0, 1.0, 501)
    for w in (0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 35.0, 50.0):
        a = basis.curve_basis(1, w, ts, EvalMode.NAIVE)
        b = basis.curve_basis(1, w, ts, EvalMode.STABLE_LARGE_OMEGA)
        assert rel_inf(a, b) < 1e-10


def test_mode_agreement_naive_vs_stable_m2_common_range():
    # the m=2 regimes overlap more narrowly: the closed forms lose
    # exp(2 omega) * eps absolutely, the rewrites bottom out near 3e-9
    # below omega ~ 1 (both effects oracle-verified in test_basis)
    ts = np.linspace(0.0, 1.0, 501)
    for w in (1.5, 2.0, 3.0, 5.0, 8.0):
        a = basis.curve_basis(2, w, ts, EvalMode.NAIVE)
        b = basis.curve_basis(2, w, ts, EvalMode.STABLE_LARGE_OMEGA)
        assert rel_inf(a, b) < 1e-10


def test_mode_agreement_taylor_vs_naive_small_omega():
    ts = np.linspace(0.0, 1.0, 501)
    for m in (1, 2):
        for w in (0.04, 0.045, 0.05):
            a = basis.curve_basis(m, w, ts, EvalMode.TAYLOR5)
            b = basis.curve_basis(m, w, ts, EvalMode.NAIVE)
            assert rel_inf(a, b) < 1e-8


@pytest.mark.parametrize("m", [1, 2])
def test_antiderivative_relations(m):
    # int_0^t of hodograph-basis function i equals its weight times a
    # tail sum of the curve basis
    w = 1.7
    c = basis.constants(m, w)
    if m == 1:
        weights = [c.c2, c.c3 / c.c1, c.c2]
    else:
        weights = [c.q2, c.q3, c.q4 / c.q1, c.q3, c.q2]
    for i, wt in enumerate(weights):
        for t in (0.3, 0.85):
            val, _ = quad(lambda x: basis.hodograph_basis(m, w, x)[i],
                          0.0, t, epsabs=1e-10, epsrel=1e-10)
            tail = np.sum(basis.curve_basis(m, w, t, EvalMode.NAIVE)[i + 1:])
            assert val == pytest.approx(wt * tail, abs=1e-8)


def test_corner_weights_endpoint_limits_match_bernstein_reduction(rng):
    # at omega -> 0 the corner weights approach 1-t (the plain
    # de Casteljau first level); sanity for the series mode too
    ts = rng.uniform(0.05, 0.95, 9)
    for m in (1, 2):
        tau = basis.corner_weights(m, 1e-5, ts, EvalMode.TAYLOR5)
        assert np.max(np.abs(tau - (1.0 - ts)[:, None])) < 1e-6
