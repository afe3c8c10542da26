"""B-bases, normalized B-bases and corner-cut weights of the curve spaces.

Three nested families are evaluated, for order parameter ``m`` in {1, 2}
and shape parameter ``omega > 0``:

* ``preimage_basis``   -- B-basis of the (m+1)-dimensional space the
  quaternion preimage coefficients live in,
* ``hodograph_basis``  -- normalized B-basis of the (2m+1)-dimensional
  derivative space,
* ``curve_basis``      -- normalized B-basis of the (2m+2)-dimensional
  curve space,

plus ``corner_weights``, the weights of the single corner-cutting pass
that converts a curve-space control polygon into a degree-2m Bernstein
polygon with the same value at the evaluation point.

The curve basis and the corner weights exist in three arithmetic modes:
the textbook hyperbolic closed forms (``NAIVE``), rewrites using only
non-positive exponents that never overflow and stay accurate for large
``omega`` (``STABLE_LARGE_OMEGA``), and fifth-order series in ``omega``
around 0 (``TAYLOR5``).  ``AUTO`` picks the series below the per-m
breakpoint, the closed forms in the middle band and the rewrites from
``AUTO_STABLE_SWITCH`` upward.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OverflowHazardError

__all__ = [
    "EvalMode",
    "DEFAULT_AUTO_THRESHOLDS",
    "AUTO_STABLE_SWITCH",
    "NAIVE_OMEGA_LIMIT",
    "BasisConstantsM1",
    "BasisConstantsM2",
    "constants",
    "preimage_basis",
    "hodograph_basis",
    "curve_basis",
    "taylor_curve_basis",
    "corner_weights",
    "resolve_mode",
]


class EvalMode(enum.Enum):
    """Arithmetic path used for curve-basis / corner-weight evaluation."""

    NAIVE = "naive"
    STABLE_LARGE_OMEGA = "stable"
    TAYLOR5 = "taylor5"
    AUTO = "auto"


# Measured accuracy breakpoints of the stable forms: below these the
# series mode is the more accurate choice.
DEFAULT_AUTO_THRESHOLDS = {1: 0.096, 2: 0.184}

# AUTO hands the middle band to the plain closed forms: for m=2 the
# large-omega rewrites bottom out near 3e-9 absolute around omega=0.5
# (tiny true numerators against order-30 terms), while the closed forms
# are still at the 1e-12 level there.  Above this switch the closed
# forms start losing absolute accuracy (like exp(2*omega)*eps for m=2)
# and the rewrites are at their rounding floor.
AUTO_STABLE_SWITCH = 2.0

# Largest omega whose naive hyperbolic forms stay inside double range.
# The m=2 forms contain products reaching exp(5*omega/2).
NAIVE_OMEGA_LIMIT = {1: 700.0, 2: 280.0}


def resolve_mode(mode: EvalMode, m: int, omega: float,
                 auto_threshold: float | None = None) -> EvalMode:
    """Collapse AUTO to a concrete mode and police the naive overflow limit."""
    if mode is EvalMode.AUTO:
        thr = DEFAULT_AUTO_THRESHOLDS[m] if auto_threshold is None else auto_threshold
        if omega < thr:
            return EvalMode.TAYLOR5
        if omega < AUTO_STABLE_SWITCH:
            return EvalMode.NAIVE
        return EvalMode.STABLE_LARGE_OMEGA
    if mode is EvalMode.NAIVE and omega > NAIVE_OMEGA_LIMIT[m]:
        raise OverflowHazardError(
            "naive hyperbolic forms overflow for omega=%g (limit %g for m=%d)"
            % (omega, NAIVE_OMEGA_LIMIT[m], m))
    return mode


def _check_m(m: int) -> None:
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2, got %r" % (m,))


def _check_omega(omega: float) -> float:
    omega = float(omega)
    if not (omega > 0.0) or not math.isfinite(omega):
        raise ValueError("omega must be a positive finite real, got %r" % (omega,))
    return omega


def _check_t(t, open_interval: bool = False) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if open_interval:
        if np.any(t <= 0.0) or np.any(t >= 1.0):
            raise DomainError("t must lie strictly inside (0, 1)")
    else:
        if np.any(t < 0.0) or np.any(t > 1.0):
            raise DomainError("t must lie in [0, 1]")
    return t


# ---------------------------------------------------------------------------
# scalar constants
# ---------------------------------------------------------------------------

# Series coefficients of the cancellation-prone numerators, as functions of
# omega (odd series; k is the index of omega**(2k+1)).
_KMAX = 13
_C_SINH_MINUS = [1.0 / math.factorial(2 * k + 1) for k in range(1, _KMAX)]       # sinh(w)-w, from w^3
_C_XCOSH_MSINH = [2.0 * k / math.factorial(2 * k + 1) for k in range(1, _KMAX)]  # x cosh x - sinh x, from x^3
_C_G0 = [(4.0 ** k - 4.0) / math.factorial(2 * k + 1) for k in range(2, _KMAX)]  # from w^5
_C_Q3NUM = [(5.0 + 4.0 ** k) / math.factorial(2 * k + 1) - 3.0 / math.factorial(2 * k)
            for k in range(2, _KMAX)]                                            # from w^5
_C_Q4NUM = [1.0 / math.factorial(2 * k) - 3.0 / math.factorial(2 * k + 1)
            for k in range(2, _KMAX)]                                            # from w^5
_C_VTHIRD = [3.0 / math.factorial(2 * k + 1) - 1.0 / math.factorial(2 * k)
             for k in range(2, _KMAX)]                                           # (3 sinh w - w cosh w - 2w), from w^5
# sinh(w/2)*(cosh w + 5) - 3 w cosh(w/2), from w^5 (denominator of the
# second normalization constant of the m=2 curve basis)
_C_U = [1.0 / 40, 11.0 / 6720, 17.0 / 322560, 461.0 / 425779200,
        8303.0 / 531372441600, 24911.0 / 148784283648000,
        168151.0 / 121407975456768000, 1513361.0 / 166086110424858624000,
        7913.0 / 162105833268707328000,
        98065811.0 / 451796738399884221087744000,
        2206480753.0 / 2710780430399305326526464000000]

_SERIES_OMEGA = 1.0   # below this, use the series for the cancelling numerators
_LITERAL_OMEGA = 300.0  # above this, literal hyperbolics of the g's overflow soon


def _odd_series(x: float, coef, lead_power: int) -> float:
    """sum(coef[k] * x**(lead_power + 2k)) via Horner in x**2."""
    x2 = x * x
    acc = 0.0
    for c in reversed(coef):
        acc = acc * x2 + c
    return acc * x ** lead_power


@dataclass(frozen=True)
class BasisConstantsM1:
    """Scalar constants of the m=1 spaces at a fixed omega.

    ``c2`` and ``c3/c1`` are the antiderivative weights of the hodograph
    basis; ``c1`` links the preimage-basis products to the hodograph basis.
    """

    omega: float
    c1: float
    c2: float
    c3: float
    c3_over_c1: float


@dataclass(frozen=True)
class BasisConstantsM2:
    """Scalar constants of the m=2 spaces at a fixed omega.

    ``q2``, ``q3`` and ``q4/q1`` are antiderivative weights; ``q0``, ``q1``
    link preimage-basis products to the hodograph basis; ``g0``-``g2``
    normalize the curve basis (``g0``, ``g1`` leave double range for very
    large omega, while every q-combination below stays finite).
    """

    omega: float
    q0: float
    q1: float
    q2: float
    q3: float
    q4: float
    g0: float
    g1: float
    g2: float
    q0_over_q1: float
    q4_over_q1: float
    q4_q0_over_q1: float


def _constants_m1(w: float) -> BasisConstantsM1:
    x = 0.5 * w
    ex = math.exp(-x)
    ex2 = math.exp(-2.0 * x)
    ew = math.exp(-w)
    c1 = 2.0 * ex / (1.0 + ex2)
    if w < _SERIES_OMEGA:
        sh = math.sinh(x)
        c2 = _odd_series(w, _C_SINH_MINUS, 3) / (2.0 * w * sh * sh)
        num3 = _odd_series(x, _C_XCOSH_MSINH, 3)
        c3 = num3 / (x * sh * sh)
        c3_over_c1 = c3 * math.cosh(x)
    else:
        c2 = (1.0 - ew * ew - 2.0 * w * ew) / (w * (1.0 - ew) ** 2)
        c3 = 2.0 * ex * (x - 1.0 + (x + 1.0) * ex2) / (x * (1.0 - ex2) ** 2)
        c3_over_c1 = (x - 1.0 + (x + 1.0) * ex2) * (1.0 + ex2) / (x * (1.0 - ex2) ** 2)
    return BasisConstantsM1(w, c1, c2, c3, c3_over_c1)


def _constants_m2(w: float) -> BasisConstantsM2:
    ew = math.exp(-w)
    ew2 = ew * ew
    ew3 = ew2 * ew
    ew4 = ew2 * ew2
    den_q = 1.0 + 4.0 * ew + ew2
    q0 = (1.0 + 2.0 * ew + ew2) / den_q
    q1 = 2.0 * ew / den_q
    if ew > 0.0:
        q0_over_q1 = (1.0 + 2.0 * ew + ew2) / (2.0 * ew)
    else:
        q0_over_q1 = math.inf
    if w < _SERIES_OMEGA:
        sh4 = math.sinh(0.5 * w) ** 4
        g0 = _odd_series(w, _C_G0, 5)
        q2 = g0 / (8.0 * w * sh4)
        q3 = _odd_series(w, _C_Q3NUM, 5) / (4.0 * w * sh4)
        q4 = _odd_series(w, _C_Q4NUM, 5) / (4.0 * w * sh4)
        q4_over_q1 = q4 / q1
        q4_q0_over_q1 = q4 * q0_over_q1
        g1 = 4.0 / _odd_series(w, _C_U, 5)
        g2 = math.sinh(0.5 * w) / (3.0 * _odd_series(w, _C_VTHIRD, 5))
    else:
        den4 = (1.0 - ew) ** 4
        q2 = (1.0 - 8.0 * ew + 12.0 * w * ew2 + 8.0 * ew3 - ew4) / (2.0 * w * den4)
        q3 = (1.0 - (6.0 * w - 10.0) * ew - 12.0 * w * ew2
              - (6.0 * w + 10.0) * ew3 - ew4) / (w * den4)
        q4 = ((2.0 * w - 6.0) * ew + 8.0 * w * ew2 + (2.0 * w + 6.0) * ew3) / (w * den4)
        q4_over_q1 = (((2.0 * w - 6.0) + 8.0 * w * ew + (2.0 * w + 6.0) * ew2)
                      * den_q) / (2.0 * w * den4)
        q4_q0_over_q1 = (((2.0 * w - 6.0) + 8.0 * w * ew + (2.0 * w + 6.0) * ew2)
                         * (1.0 + 2.0 * ew + ew2)) / (2.0 * w * den4)
        if w < _LITERAL_OMEGA:
            g0 = 3.0 * w + math.sinh(w) * (math.cosh(w) - 4.0)
            g1 = 4.0 / (math.sinh(0.5 * w)
                        * (math.cosh(w) - 3.0 * w / math.tanh(0.5 * w) + 5.0))
            g2 = math.sinh(0.5 * w) / (3.0 * (3.0 * math.sinh(w)
                                              - w * (math.cosh(w) + 2.0)))
        else:
            with np.errstate(over="ignore"):
                g0 = float(np.exp(2.0 * w) / 4.0
                           * (1.0 - 8.0 * ew + 12.0 * w * ew2 + 8.0 * ew3 - ew4))
            g1 = 16.0 * math.exp(-1.5 * w) / (1.0 + (9.0 - 6.0 * w) * ew
                                              - (9.0 + 6.0 * w) * ew2 - ew3)
            g2 = ((1.0 - ew) * math.exp(-0.5 * w)
                  / (3.0 * ((3.0 - w) - 4.0 * w * ew - (3.0 + w) * ew2)))
    return BasisConstantsM2(w, q0, q1, q2, q3, q4, g0, g1, g2,
                            q0_over_q1, q4_over_q1, q4_q0_over_q1)


def constants(m: int, omega: float):
    """Scalar constants of the order-m spaces, safe for any omega > 0.

    Cancelling numerators switch to their series below omega = 1, so
    values stay accurate down to omega ~ 1e-8 (the polynomial limits
    1/3, 2, 1/5, 1/15 are recovered smoothly).
    """
    _check_m(m)
    omega = _check_omega(omega)
    return _constants_m1(omega) if m == 1 else _constants_m2(omega)


# ---------------------------------------------------------------------------
# B-basis of the preimage space and normalized B-basis of the hodograph space
# ---------------------------------------------------------------------------

def preimage_basis(m: int, omega: float, t) -> np.ndarray:
    """B-basis of the space holding the preimage coefficient functions.

    For m=1 these are the two sinh ratios; for m=2 the three functions
    coincide with the m=1 hodograph basis.  Values are stacked along the
    last axis; the forms used only ever exponentiate non-positive
    arguments, so any omega is safe.
    """
    _check_m(m)
    omega = _check_omega(omega)
    t = _check_t(t)
    if m == 2:
        return hodograph_basis(1, omega, t)
    w = omega
    den = -math.expm1(-w)
    p0 = np.exp(-0.5 * w * t) * (-np.expm1(-w * (1.0 - t))) / den
    p1 = np.exp(-0.5 * w * (1.0 - t)) * (-np.expm1(-w * t)) / den
    return np.stack([p0, p1], axis=-1)


def hodograph_basis(m: int, omega: float, t) -> np.ndarray:
    """Normalized B-basis of the derivative (hodograph) space.

    The m=1 end functions are squares of the preimage basis; the middle
    one is their partition-of-unity complement.  The m=2 functions are
    the standard quadratic-form products of the m=1 triple.
    """
    _check_m(m)
    omega = _check_omega(omega)
    t = _check_t(t)
    psi = preimage_basis(1, omega, t)
    v0 = psi[..., 0] ** 2
    v2 = psi[..., 1] ** 2
    v1 = 1.0 - v0 - v2
    if m == 1:
        return np.stack([v0, v1, v2], axis=-1)
    return np.stack([
        v0 * v0,
        2.0 * v0 * v1,
        v1 * v1 + 2.0 * v0 * v2,
        2.0 * v1 * v2,
        v2 * v2,
    ], axis=-1)


# ---------------------------------------------------------------------------
# normalized B-basis of the curve space: naive / stable / series forms
# ---------------------------------------------------------------------------

def _curve_basis_naive_m1(w: float, t: np.ndarray) -> np.ndarray:
    sh, ch = np.sinh, np.cosh
    shw = math.sinh(w)
    chw = math.cosh(w)
    den_end = shw - w
    den_mid = (w / math.tanh(0.5 * w) - 2.0) * (w - shw)
    u = 1.0 - t
    p0 = (sh(w * u) - w * u) / den_end
    p3 = (sh(w * t) - w * t) / den_end
    p1 = (-w * t - w * u * chw + w * ch(w * u) + shw - sh(w * t) - sh(w * u)) / den_mid
    p2 = (-w * u - w * t * chw + w * ch(w * t) + shw - sh(w * u) - sh(w * t)) / den_mid
    return np.stack([p0, p1, p2, p3], axis=-1)


def _g0_naive(a):
    """3a + sinh(a)(cosh(a) - 4); series below |a| = 1 (the closed form
    cancels to a**5/10 there and would cost eight digits at a ~ 0.05)."""
    a = np.asarray(a, dtype=float)
    a2 = a * a
    acc = np.zeros_like(a)
    for c in reversed(_C_G0):
        acc = acc * a2 + c
    series = acc * a2 * a2 * a
    with np.errstate(over="ignore", invalid="ignore"):
        literal = 3.0 * a + np.sinh(a) * (np.cosh(a) - 4.0)
    return np.where(np.abs(a) < _SERIES_OMEGA, series, literal)


def _curve_basis_naive_m2(w: float, t: np.ndarray) -> np.ndarray:
    sh = np.sinh
    g0w = float(_g0_naive(w))
    if w < _SERIES_OMEGA:
        g1w = 4.0 / _odd_series(w, _C_U, 5)
        g2w = math.sinh(0.5 * w) / (3.0 * _odd_series(w, _C_VTHIRD, 5))
    else:
        g1w = 4.0 / (math.sinh(0.5 * w)
                     * (math.cosh(w) - 3.0 * w / math.tanh(0.5 * w) + 5.0))
        g2w = math.sinh(0.5 * w) / (3.0 * (3.0 * math.sinh(w)
                                           - w * (math.cosh(w) + 2.0)))
    sh4w = math.sinh(0.5 * w) ** 4
    u = 1.0 - t
    g0u = _g0_naive(w * u)
    g0t = _g0_naive(w * t)
    shu = sh(0.5 * w * u)
    sht = sh(0.5 * w * t)
    p0 = g0u / g0w
    p5 = g0t / g0w
    p1 = g1w * math.sinh(0.5 * w) * (shu ** 4 - sh4w * g0u / g0w)
    p4 = g1w * math.sinh(0.5 * w) * (sht ** 4 - sh4w * g0t / g0w)
    p2 = g2w * (-16.0 * shu ** 3 * sht + g1w * g0w * shu ** 4 - g1w * sh4w * g0u)
    p3 = g2w * (-16.0 * sht ** 3 * shu + g1w * g0w * sht ** 4 - g1w * sh4w * g0t)
    return np.stack([p0, p1, p2, p3, p4, p5], axis=-1)


def _stable_end_m1(w: float, t: np.ndarray) -> np.ndarray:
    """Last m=1 curve-basis function; only non-positive exponents."""
    den = math.fsum([math.exp(-2.0 * w), 2.0 * w * math.exp(-w), -1.0])
    num = _sum_terms([np.exp(-2.0 * w * t), 2.0 * w * t * np.exp(-w * t),
                      -np.ones_like(t)])
    return num / den * np.exp(w * (t - 1.0))


def _stable_mid_m1(w: float, t: np.ndarray) -> np.ndarray:
    """Third m=1 curve-basis function (index 2); non-positive exponents."""
    iw = 1.0 / w
    ew = math.exp(-w)
    e2w = ew * ew
    e3w = e2w * ew
    et = np.exp(-w * t)                 # e^{-wt}
    emt1 = et * ew                      # e^{-w(t+1)}
    emt2 = et * e2w                     # e^{-w(t+2)}
    ep1 = np.exp(w * (t - 1.0))         # e^{w(t-1)}
    ep2 = ep1 * ew                      # e^{w(t-2)}
    ep3 = ep1 * e2w                     # e^{w(t-3)}
    num = _sum_terms([
        (iw + t) * e3w,
        -iw * ep3,
        -(iw + 1.0) * emt2,
        -(iw + 3.0 * t - 2.0) * e2w,
        (2.0 * iw - 1.0) * ep2,
        (2.0 * iw + 1.0) * emt1,
        -(iw - 3.0 * t + 2.0) * ew,
        -(iw - 1.0) * ep1,
        -iw * et,
        (iw - t) * np.ones_like(t),
    ])
    den = math.fsum([(2.0 * iw + 1.0) * e3w,
                     -(2.0 * iw - 5.0 - 2.0 * w) * e2w,
                     -(2.0 * iw + 5.0 - 2.0 * w) * ew,
                     2.0 * iw - 1.0])
    return num / den


def _curve_basis_stable_m1(w: float, t: np.ndarray) -> np.ndarray:
    u = 1.0 - t
    return np.stack([
        _stable_end_m1(w, u),
        _stable_mid_m1(w, u),
        _stable_mid_m1(w, t),
        _stable_end_m1(w, t),
    ], axis=-1)


def _sum_terms(terms) -> np.ndarray:
    """Pairwise-summed total of same-shaped term arrays.

    The stable numerators cancel heavily for omega below ~1; pairwise
    summation keeps the roundoff near the per-term rounding floor.
    """
    return np.sum(np.stack(terms, axis=-1), axis=-1)


def _stable_p5_m2(w: float, t: np.ndarray) -> np.ndarray:
    den = math.fsum([math.exp(-4.0 * w), -8.0 * math.exp(-3.0 * w),
                     -12.0 * w * math.exp(-2.0 * w), 8.0 * math.exp(-w), -1.0])
    et = np.exp(-w * t)
    et2 = et * et
    num = _sum_terms([et2 * et2, -8.0 * et2 * et, -12.0 * w * t * et2,
                      8.0 * et, -np.ones_like(t)])
    return num / den * np.exp(2.0 * w * (t - 1.0))


def _stable_p3_m2(w: float, t: np.ndarray) -> np.ndarray:
    iw = 1.0 / w
    ew = math.exp(-w)
    e2 = ew * ew
    e3 = e2 * ew
    e4 = e2 * e2
    e5 = e4 * ew
    et = np.exp(-w * t)            # e^{-wt}
    ep1 = np.exp(w * (t - 1.0))
    ep2 = ep1 * ew
    ep3 = ep1 * e2
    ep4 = ep1 * e3
    ep5 = ep1 * e4
    et2 = et * et
    dp1 = ep1 * ep1                # e^{2w(t-1)}
    num = _sum_terms([
        (3.0 * iw + 2.0 * t) * e5,
        -4.0 * iw * ep5,
        iw * (dp1 * e3),                                # e^{w(2t-5)}
        -4.0 * (2.0 * iw + 1.0) * (et * e4),            # e^{-w(t+4)}
        (9.0 * iw - 2.0 * (5.0 * t - 6.0)) * e4,
        -4.0 * (iw + 3.0) * ep4,
        (3.0 * iw + 4.0) * (dp1 * e2),                  # e^{2w(t-2)}
        (5.0 * iw + 2.0) * (et2 * e3),                  # e^{-w(2t+3)}
        4.0 * (iw - 1.0) * (et * e3),                   # e^{-w(t+3)}
        -4.0 * (3.0 * iw - 5.0 * t) * e3,
        4.0 * (3.0 * iw + 1.0) * ep3,
        -(9.0 * iw + 2.0) * (dp1 * ew),                 # e^{w(2t-3)}
        -(9.0 * iw - 2.0) * (et2 * e2),                 # e^{-2w(t+1)}
        4.0 * (3.0 * iw - 1.0) * (et * e2),             # e^{-w(t+2)}
        -4.0 * (3.0 * iw + 5.0 * t) * e2,
        4.0 * (iw + 1.0) * ep2,
        (5.0 * iw - 2.0) * dp1,                         # e^{2w(t-1)}
        (3.0 * iw - 4.0) * (et2 * ew),                  # e^{-w(2t+1)}
        -4.0 * (iw - 3.0) * (et * ew),                  # e^{-w(t+1)}
        (9.0 * iw + 2.0 * (5.0 * t - 6.0)) * ew,
        -4.0 * (2.0 * iw - 1.0) * ep1,
        iw * et2,
        -4.0 * iw * et,
        (3.0 * iw - 2.0 * t) * np.ones_like(t),
    ])
    den = 2.0 * math.fsum([(3.0 * iw + 1.0) * e5,
                           (27.0 * iw + 31.0 + 6.0 * w) * e4,
                           -2.0 * (15.0 * iw - 23.0 - 15.0 * w) * e3,
                           -2.0 * (15.0 * iw + 23.0 - 15.0 * w) * e2,
                           (27.0 * iw - 31.0 + 6.0 * w) * ew,
                           3.0 * iw - 1.0])
    return num / den


def _stable_p4_m2(w: float, t: np.ndarray) -> np.ndarray:
    ew = math.exp(-w)
    e2 = ew * ew
    e3 = e2 * ew
    e4 = e2 * e2
    e5 = e4 * ew
    e6 = e3 * e3
    e7 = e4 * e3
    et = np.exp(-w * t)
    et2 = et * et
    et3 = et2 * et
    ep1 = np.exp(w * (t - 1.0))
    wt = w * t
    num = _sum_terms([
        2.0 * (et2 * e5),                       # e^{-w(2t+5)}
        3.0 * (1.0 + 2.0 * wt) * (et * e5),     # e^{-w(t+5)}
        -6.0 * e5 * np.ones_like(t),
        ep1 * e4,                               # e^{w(t-5)}
        -2.0 * (et3 * e4),                      # e^{-w(3t+4)}
        -2.0 * (et2 * e4),                      # e^{-2w(t+2)}
        -3.0 * (9.0 + 10.0 * wt) * (et * e4),   # e^{-w(t+4)}
        38.0 * e4 * np.ones_like(t),
        -7.0 * (ep1 * e3),                      # e^{w(t-4)}
        -(1.0 + 6.0 * w) * (et3 * e3),          # e^{-3w(t+1)}
        24.0 * (1.0 + w) * (et2 * e3),          # e^{-w(2t+3)}
        12.0 * (2.0 + w * (5.0 * t - 3.0)) * (et * e3),
        -8.0 * (7.0 - 3.0 * w) * e3 * np.ones_like(t),
        3.0 * (3.0 - 2.0 * w) * (ep1 * e2),     # e^{w(t-3)}
        3.0 * (3.0 + 2.0 * w) * (et3 * e2),     # e^{-w(3t+2)}
        -8.0 * (7.0 + 3.0 * w) * (et2 * e2),    # e^{-2w(t+1)}
        12.0 * (2.0 - w * (5.0 * t - 3.0)) * (et * e2),
        24.0 * (1.0 - w) * e2 * np.ones_like(t),
        -(1.0 - 6.0 * w) * (ep1 * ew),          # e^{w(t-2)}
        -7.0 * (et3 * ew),                      # e^{-w(3t+1)}
        38.0 * (et2 * ew),                      # e^{-w(2t+1)}
        -3.0 * (9.0 - 10.0 * wt) * (et * ew),   # e^{-w(t+1)}
        -2.0 * ew * np.ones_like(t),
        -2.0 * ep1,
        et3,
        -6.0 * et2,
        3.0 * (1.0 - 2.0 * wt) * et,
        2.0 * np.ones_like(t),
    ])
    den = math.fsum([e7, (1.0 + 6.0 * w) * e6, -27.0 * (3.0 + 2.0 * w) * e5,
                     (79.0 - 156.0 * w - 72.0 * w * w) * e4,
                     (79.0 + 156.0 * w - 72.0 * w * w) * e3,
                     -27.0 * (3.0 - 2.0 * w) * e2,
                     (1.0 - 6.0 * w) * ew, 1.0])
    return num / den * ep1


def _curve_basis_stable_m2(w: float, t: np.ndarray) -> np.ndarray:
    u = 1.0 - t
    return np.stack([
        _stable_p5_m2(w, u),
        _stable_p4_m2(w, u),
        _stable_p3_m2(w, u),
        _stable_p3_m2(w, t),
        _stable_p4_m2(w, t),
        _stable_p5_m2(w, t),
    ], axis=-1)


def _taylor_m1(w: float, t: np.ndarray) -> np.ndarray:
    W = w * w

    def t3(t):
        a = ((10.0 * t * t - 21.0) * t * t + 11.0)
        return t ** 3 * ((a * W + 420.0 * (t * t - 1.0)) * W + 8400.0) / 8400.0

    def t2(t):
        a = (((30.0 * t - 40.0) * t + 23.0) * t - 12.0) * t - 3.0
        b = (3.0 * t - 2.0) * t + 1.0
        return 3.0 * t * t * (1.0 - t) * ((a * W + 420.0 * b) * W + 25200.0) / 25200.0

    u = 1.0 - t
    return np.stack([t3(u), t2(u), t2(t), t3(t)], axis=-1)


def _taylor_m2(w: float, t: np.ndarray) -> np.ndarray:
    W = w * w

    def t5(t):
        a = (49.0 * t * t - 100.0) * t * t + 51.0
        return t ** 5 * ((a * W + 840.0 * (t * t - 1.0)) * W + 7056.0) / 7056.0

    def t4(t):
        a = (((245.0 * t - 196.0) * t - 96.0) * t + 44.0) * t - 1.0
        b = (5.0 * t - 2.0) * t - 1.0
        return 5.0 * t ** 4 * (1.0 - t) * ((a * W + 840.0 * b) * W + 35280.0) / 35280.0

    def t3(t):
        a = (((245.0 * t - 392.0) * t + 253.0) * t - 82.0) * t + 3.0
        b = (10.0 * t - 8.0) * t + 3.0
        return (10.0 * t ** 3 * (1.0 - t) ** 2
                * ((a * W + 420.0 * b) * W + 35280.0) / 35280.0)

    u = 1.0 - t
    return np.stack([t5(u), t4(u), t3(u), t3(t), t4(t), t5(t)], axis=-1)


def taylor_curve_basis(m: int, omega: float, t) -> np.ndarray:
    """Fifth-order series (in omega, around 0) of the curve basis.

    Exact Bernstein polynomials at omega = 0; omega = 0 is accepted here
    even though the curve spaces themselves require omega > 0.
    """
    _check_m(m)
    if not (float(omega) >= 0.0):
        raise ValueError("omega must be >= 0 for the series basis")
    t = _check_t(t)
    return _taylor_m1(float(omega), t) if m == 1 else _taylor_m2(float(omega), t)


def curve_basis(m: int, omega: float, t, mode: EvalMode = EvalMode.AUTO,
                auto_threshold: float | None = None) -> np.ndarray:
    """Normalized B-basis of the curve space, stacked along the last axis.

    Nonnegative, sums to 1, mirror-symmetric under t -> 1-t, and
    interpolating at the endpoints.
    """
    _check_m(m)
    omega = _check_omega(omega)
    t = _check_t(t)
    mode = resolve_mode(mode, m, omega, auto_threshold)
    if mode is EvalMode.TAYLOR5:
        return _taylor_m1(omega, t) if m == 1 else _taylor_m2(omega, t)
    if mode is EvalMode.NAIVE:
        return _curve_basis_naive_m1(omega, t) if m == 1 else _curve_basis_naive_m2(omega, t)
    return _curve_basis_stable_m1(omega, t) if m == 1 else _curve_basis_stable_m2(omega, t)


# ---------------------------------------------------------------------------
# corner-cut weights
# ---------------------------------------------------------------------------

def _tau_from_curve_basis(m: int, t: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Corner weights from curve-basis values via the defining ratios."""
    u = 1.0 - t
    if m == 1:
        tau0 = p[..., 0] / u ** 2
        tau1 = (p[..., 0] + p[..., 1] - u ** 2) / (2.0 * t * u)
        tau2 = 1.0 - p[..., 3] / t ** 2
        return np.stack([tau0, tau1, tau2], axis=-1)
    tau0 = p[..., 0] / u ** 4
    tau1 = (p[..., 0] + p[..., 1] - u ** 4) / (4.0 * t * u ** 3)
    tau2 = ((p[..., 0] + p[..., 1] + p[..., 2] - u ** 4 - 4.0 * t * u ** 3)
            / (6.0 * t ** 2 * u ** 2))
    tau3 = 1.0 - (p[..., 4] + p[..., 5] - t ** 4) / (4.0 * t ** 3 * u)
    tau4 = 1.0 - p[..., 5] / t ** 4
    return np.stack([tau0, tau1, tau2, tau3, tau4], axis=-1)


def _tau_stable_m1(w: float, t: np.ndarray) -> np.ndarray:
    # each numerator collected by its distinct array exponential, with
    # the scalar factors folded up front
    iw = 1.0 / w
    s1 = math.exp(-w)
    s2 = s1 * s1
    E = np.exp(-w * t)               # e^{-wt}
    P = np.exp(w * (t - 1.0))        # e^{w(t-1)}
    u = t - 1.0
    tu = t * u
    den_end = math.fsum([s2, 2.0 * w * s1, -1.0])
    n0 = (-2.0 * w * s1) * u - E + s1 * P
    tau0 = n0 / ((u * u) * den_end)
    qa = 2.0 * iw + 1.0
    qb = 4.0 * iw + 1.0
    p0 = ((qa * s2 - qa + 2.0) * t - (qb * s2 - qb + 2.0)) * t \
        + iw * (s2 - 1.0) + 2.0 * s1 * tu
    n1 = p0 + (iw * (1.0 + s1)) * E - (iw * (1.0 + s1)) * P
    d1 = (2.0 * (s1 + 1.0) * (qa * s1 - 2.0 * iw + 1.0)) * tu
    tau1 = n1 / d1
    n2 = (s2 - 1.0) * (t * t) + (2.0 * w * s1) * tu - s1 * E + P
    tau2 = n2 / ((t * t) * den_end)
    return np.stack([tau0, tau1, tau2], axis=-1)


def _tau_stable_m2(w: float, t: np.ndarray) -> np.ndarray:
    # each numerator collected by its distinct array exponentials
    # {1, E, E^2, P, P^2} with the scalar factors folded up front
    iw = 1.0 / w
    s1 = math.exp(-w)
    s2 = s1 * s1
    s3 = s2 * s1
    s4 = s2 * s2
    E = np.exp(-w * t)               # e^{-wt}
    E2 = E * E
    P = np.exp(w * (t - 1.0))        # e^{w(t-1)}
    D = P * P
    u = t - 1.0
    t2 = t * t
    t3 = t2 * t
    t4 = t2 * t2
    u2 = u * u
    u4 = u2 * u2
    den_end = math.fsum([-s4, 8.0 * s3, 12.0 * w * s2, -8.0 * s1, 1.0])
    den_mid = math.fsum([s3, 3.0 * (2.0 * w + 3.0) * s2,
                         3.0 * (2.0 * w - 3.0) * s1, -1.0])

    n0 = (-12.0 * w * s2) * u - (8.0 * s1) * E + E2 + (8.0 * s2) * P - s2 * D
    tau0 = n0 / ((u4) * den_end)

    poly1 = ((3.0 * t - 12.0) * t + 18.0) * t2 - 12.0 * t + 2.0
    poly1w = (2.0 * w) * t * (((t - 4.0) * t + 6.0) * t - 3.0)
    p0 = ((s3 - 1.0) * u4 + (3.0 * (s2 - s1)) * poly1
          + (3.0 * (s2 + s1)) * poly1w)
    n1 = p0 + (6.0 * s1 + 2.0) * E - E2 - (2.0 * s2 + 6.0 * s1) * P + s1 * D
    tau1 = n1 / ((4.0 * den_mid) * (t * u * u2))

    # The e^{-2w} bracket of this numerator carries a plus sign; the
    # printed source has a spurious minus there (it contradicts the
    # defining ratio of the weight, cf. the transcription tests).
    poly2a = (3.0 * iw) * (((6.0 * t - 16.0) * t + 12.0) * t2 - 1.0)
    poly2b = 2.0 * t * (((3.0 * t - 8.0) * t + 6.0) * t - 1.0)
    p0 = (s2 - 1.0) * poly2a + (s2 + 1.0 + 4.0 * s1) * poly2b
    n2 = p0 - (4.0 * iw * (s1 + 1.0)) * E + iw * E2 \
        + (4.0 * iw * (s1 + 1.0)) * P - iw * D
    d2 = (12.0 * math.fsum([(3.0 * iw + 1.0) * s2, 4.0 * s1, -3.0 * iw, 1.0])) \
        * (t2 * u2)
    tau2 = n2 / d2

    poly3 = t3 * (3.0 * t - 4.0)
    poly3a = (2.0 * w) * t * (((3.0 * t - 4.0) * t2) + 1.0)
    poly3b = (9.0 * t - 12.0) * t3 + 1.0
    p0 = (s3 - 1.0) * poly3 + (3.0 * (s2 + s1)) * poly3a + (3.0 * (s2 - s1)) * poly3b
    n3 = p0 + (2.0 * s2 + 6.0 * s1) * E - s1 * E2 - (6.0 * s1 + 2.0) * P + D
    tau3 = n3 / ((4.0 * den_mid) * (t3 * u))

    p0 = math.fsum([-s4, 8.0 * s3, -8.0 * s1, 1.0]) * t4 \
        + (12.0 * w * s2) * (t * (t3 - 1.0))
    n4 = p0 - (8.0 * s2) * E + s2 * E2 + (8.0 * s1) * P - D
    tau4 = n4 / (t4 * den_end)

    return np.stack([tau0, tau1, tau2, tau3, tau4], axis=-1)


def corner_weights(m: int, omega: float, t, mode: EvalMode = EvalMode.AUTO,
                   auto_threshold: float | None = None) -> np.ndarray:
    """Weights of the corner-cutting pass onto a degree-2m Bernstein polygon.

    Only defined strictly inside (0, 1): the defining ratios have
    removable discontinuities at the endpoints, which evaluation
    algorithms must short-circuit.  Values of t extremely close to the
    endpoints (around 1e-80) fall outside the reliable range of the
    stable forms; no series fallback is applied there.
    """
    _check_m(m)
    omega = _check_omega(omega)
    t = _check_t(t, open_interval=True)
    mode = resolve_mode(mode, m, omega, auto_threshold)
    if mode is EvalMode.STABLE_LARGE_OMEGA:
        return _tau_stable_m1(omega, t) if m == 1 else _tau_stable_m2(omega, t)
    if mode is EvalMode.TAYLOR5:
        p = taylor_curve_basis(m, omega, t)
    else:
        p = curve_basis(m, omega, t, mode)
    return _tau_from_curve_basis(m, t, p)
