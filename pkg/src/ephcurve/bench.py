"""Stability and timing studies of the evaluation algorithms.

The stability metric compares each evaluator against the fifth-order
series basis on a sweep of small shape parameters: for every omega the
largest relative deviation (infinity norm over a parameter grid) across
a batch of random control polygons is recorded.  Exact evaluation makes
the metric shrink with omega (series truncation only); where an
evaluator's arithmetic breaks down the metric turns back up, and the
location of the minimum is that evaluator's accuracy breakpoint.

The timing harness measures wall-clock medians of repeated whole-grid
evaluations, recomputing every auxiliary function per curve just as a
caller evaluating one curve at a time would.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .basis import EvalMode, taylor_curve_basis
from .curve import EphCurve
from .evaluators import EvalMethod, evaluate

__all__ = [
    "RhoConfig",
    "BreakpointResult",
    "TimingRow",
    "default_omega_grid",
    "rho",
    "find_omega_bar",
    "time_methods",
]


def default_omega_grid(n: int = 500, upper: float = 2.0) -> np.ndarray:
    """n equispaced omega values in (0, upper]."""
    return upper * np.arange(1, n + 1) / n


@dataclass(frozen=True)
class RhoConfig:
    """Configuration of the stability sweep."""

    d: int = 3
    m: int = 1
    n_curves: int = 100
    grid_points: int = 501
    omega_grid: np.ndarray = field(default_factory=default_omega_grid)
    seed: int = 0

    def __post_init__(self):
        if self.d not in (2, 3) or self.m not in (1, 2):
            raise ValueError("d must be in {2,3} and m in {1,2}")
        if self.n_curves < 1 or self.grid_points < 2:
            raise ValueError("need at least one curve and two grid points")
        grid = np.asarray(self.omega_grid, dtype=float)
        if np.any(grid <= 0.0):
            raise ValueError("all omega values must be positive")
        grid.setflags(write=False)
        object.__setattr__(self, "omega_grid", grid)

    def draw_polygons(self) -> np.ndarray:
        """The fixed batch of random control polygons, coordinates in (0,1)."""
        rng = np.random.default_rng(self.seed)
        n = 2 * self.m + 2
        pts = rng.uniform(0.0, 1.0, size=(self.n_curves, n, self.d))
        # open interval: redraw exact zeros (probability ~0, but the
        # denominator positivity argument relies on it)
        while np.any(pts == 0.0):
            pts[pts == 0.0] = rng.uniform(0.0, 1.0, size=int(np.sum(pts == 0.0)))
        return pts


@dataclass(frozen=True)
class BreakpointResult:
    """argmin of the stability metric over the configured omega grid."""

    method: EvalMethod
    omega_bar: float
    rho_at_min: float


@dataclass(frozen=True)
class TimingRow:
    method: EvalMethod
    omega: float
    median_seconds: float


def _rho_mode(method: EvalMethod) -> EvalMode:
    # The sweep probes each algorithm's own production arithmetic: the
    # large-omega-stable forms for the three algorithms, the plain
    # hyperbolic forms for the direct baseline.  (AUTO would hand the
    # small-omega range to the series basis, which is the metric's
    # reference, and the sweep would measure nothing.)
    if method is EvalMethod.DIRECT:
        return EvalMode.NAIVE
    return EvalMode.STABLE_LARGE_OMEGA


def rho(config: RhoConfig, method: EvalMethod) -> np.ndarray:
    """Stability metric over the omega grid; returns (omega, rho) rows."""
    ts = np.linspace(0.0, 1.0, config.grid_points)
    polygons = config.draw_polygons()
    mode = _rho_mode(method)
    out = np.empty((len(config.omega_grid), 2))
    for i, w in enumerate(config.omega_grid):
        tmat = taylor_curve_basis(config.m, w, ts)
        worst = 0.0
        for cp in polygons:
            ref = tmat @ cp
            curve = EphCurve(m=config.m, omega=float(w), dim=config.d,
                             control_points=cp)
            with np.errstate(all="ignore"):
                val = evaluate(curve, ts, method, mode)
            num = float(np.max(np.abs(val - ref)))
            den = float(np.max(np.abs(ref)))
            # an evaluator that produces non-finite output has failed
            # outright at this omega
            worst = max(worst, num / den if np.isfinite(num) else np.inf)
        out[i] = (w, worst)
    return out


def find_omega_bar(config: RhoConfig, method: EvalMethod) -> BreakpointResult:
    """Location and value of the minimum of the stability metric."""
    series = rho(config, method)
    k = int(np.argmin(series[:, 1]))
    return BreakpointResult(method=method, omega_bar=float(series[k, 0]),
                            rho_at_min=float(series[k, 1]))


def time_methods(d: int, m: int, omega_list, n_curves: int = 1000,
                 grid_points: int = 501, repetitions: int = 5,
                 seed: int = 0,
                 methods: tuple = (EvalMethod.DECASTELJAU,
                                   EvalMethod.WOZNY_CHUDY,
                                   EvalMethod.NEW)) -> list:
    """Median wall time per (method, omega) for whole-grid evaluations.

    Strictly serial; every curve evaluation rebuilds its auxiliary
    functions, so the cost of basis/weight construction is part of the
    measurement.  All methods run their large-omega-stable arithmetic
    across the whole sweep (one shared policy, mirroring the stability
    study); the exponentials underflowing at very large omega are what
    makes those cells cheaper.  Absolute numbers are machine-bound;
    only the ordering between methods is meaningful.
    """
    rng = np.random.default_rng(seed)
    ts = np.linspace(0.0, 1.0, grid_points)
    n = 2 * m + 2
    curves = [EphCurve(m=m, omega=1.0, dim=d,
                       control_points=rng.uniform(0.0, 1.0, size=(n, d)))
              for _ in range(n_curves)]
    rows = []
    for method in methods:
        for w in omega_list:
            batch = [EphCurve(m=m, omega=float(w), dim=d,
                              control_points=c.control_points) for c in curves]
            times = []
            for _ in range(repetitions):
                t0 = time.perf_counter()
                for curve in batch:
                    evaluate(curve, ts, method, EvalMode.STABLE_LARGE_OMEGA)
                times.append(time.perf_counter() - t0)
            rows.append(TimingRow(method=method, omega=float(w),
                                  median_seconds=float(np.median(times))))
    return rows
