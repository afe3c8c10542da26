"""Point-evaluation algorithms for the Bezier-like curves.

Four evaluators agree on regular input:

* ``eval_direct``       -- dot product with the curve basis (baseline),
* ``eval_decasteljau``  -- corner cutting through a chain of nested
  spaces, one convex combination level per basis dimension,
* ``eval_wozny_chudy``  -- linear-time sequential convex combinations
  weighted by partial sums of the curve basis,
* ``eval_new``          -- one corner-cut pass onto a degree-2m
  Bernstein polygon followed by the linear-time polynomial recursion.

``dynamic_eval_m1`` implements the lifted-matrix recursion that samples
the curve at equispaced parameters; it is accurate for small omega and
(deliberately) demonstrates exponential error growth for large omega.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import basis
from .basis import EvalMode
from .curve import EphCurve, eval_direct
from .errors import DomainError, SingularControlBlockError

__all__ = [
    "EvalMethod",
    "eval_direct",
    "eval_decasteljau",
    "eval_wozny_chudy",
    "eval_new",
    "evaluate",
    "DynamicEvalReport",
    "dynamic_eval_m1",
]


class EvalMethod(enum.Enum):
    DIRECT = "direct"
    DECASTELJAU = "decasteljau"
    WOZNY_CHUDY = "woznychudy"
    NEW = "new"


# ---------------------------------------------------------------------------
# corner-cutting chain for the de Casteljau-like algorithm
# ---------------------------------------------------------------------------

def _two_space_basis(omega: float, t: np.ndarray) -> np.ndarray:
    """Normalized B-basis of span{1, sinh(omega t)} on [0, 1]."""
    n1 = np.exp(omega * (t - 1.0)) * np.expm1(-2.0 * omega * t) / math.expm1(-2.0 * omega)
    return np.stack([1.0 - n1, n1], axis=-1)


def _four_space_functions(omega: float, t: np.ndarray, order: int) -> np.ndarray:
    """Values (order=0) or scaled derivatives of the spanning set of the
    4-dimensional intermediate space span{1, e^{-wt}, e^{w(t-1)}, cosh(2wt)}.

    Derivatives are divided by omega**order to keep the collocation
    matrices well scaled.  The last function is normalized by cosh(2w).
    """
    w = omega
    e_down = np.exp(-w * t)
    e_up = np.exp(w * (t - 1.0))
    den = 1.0 + math.exp(-4.0 * w)
    c_even = np.exp(2.0 * w * (t - 1.0)) * (1.0 + np.exp(-4.0 * w * t)) / den
    c_odd = np.exp(2.0 * w * (t - 1.0)) * (-np.expm1(-4.0 * w * t)) / den
    ones = np.ones_like(t)
    if order == 0:
        return np.stack([ones, e_down, e_up, c_even], axis=-1)
    sign = (-1.0) ** order
    ch = c_even if order % 2 == 0 else c_odd
    return np.stack([0.0 * ones, sign * e_down, e_up, 2.0 ** order * ch], axis=-1)


def _four_space_basis(omega: float, t: np.ndarray) -> np.ndarray:
    """Normalized B-basis of the 4-dimensional intermediate space.

    Each basis function is pinned down (up to scale) by its endpoint
    zero multiplicities; scales come from reproducing the constant 1.
    """
    ends = np.array([0.0, 1.0])
    rows = {order: _four_space_functions(omega, ends, order) for order in (0, 1, 2)}
    coeff = np.empty((4, 4))
    mid = _four_space_functions(omega, np.array([0.5]), 0)[0]
    for i in range(4):
        cond = []
        for order in range(i):            # zero of multiplicity i at t=0
            cond.append(rows[order][0])
        for order in range(3 - i):        # zero of multiplicity 3-i at t=1
            cond.append(rows[order][1])
        M = np.array(cond)
        _, _, vh = np.linalg.svd(M)
        v = vh[-1]
        if float(v @ mid) < 0.0:
            v = -v
        coeff[:, i] = v
    alpha = np.linalg.solve(coeff, np.array([1.0, 0.0, 0.0, 0.0]))
    vals = _four_space_functions(omega, t, 0)
    return vals @ (coeff * alpha[None, :])


def _corner_chain(m: int, omega: float, t: np.ndarray,
                  mode: EvalMode) -> list:
    """Bases of the nested chain, from 1 function up to the curve basis."""
    chain = [np.ones(t.shape + (1,))]
    chain.append(_two_space_basis(omega, t))
    chain.append(basis.hodograph_basis(1, omega, t))
    if m == 2:
        chain.append(_four_space_basis(omega, t))
        chain.append(basis.hodograph_basis(2, omega, t))
    chain.append(basis.curve_basis(m, omega, t, mode))
    return chain


def _decasteljau_weights(m: int, omega: float, t: np.ndarray,
                         mode: EvalMode) -> list:
    """Per-level convex-combination weights lambda[p], p = 0..2m.

    Level p connects the chain bases with p+1 and p+2 functions: basis
    function j of the larger space splits as
    ``B_{p+1,j} = lam[j-1] B_{p,j-1} + (1 - lam[j]) B_{p,j}``, solved by
    forward substitution in j.  The true weights are convex for the
    nested chain, so the solution is clipped to [0, 1]: where a basis
    value underflows the raw quotient is pure noise, and that node
    carries no mass anyway.
    """
    chain = _corner_chain(m, omega, t, mode)
    weights = []
    for p in range(2 * m + 1):
        bp = chain[p]
        bp1 = chain[p + 1]
        lam = np.empty(t.shape + (p + 1,))
        carried = np.zeros_like(t)            # lam[j-1] * B_{p,j-1}
        with np.errstate(divide="ignore", invalid="ignore"):
            for j in range(p + 1):
                raw = 1.0 - (bp1[..., j] - carried) / bp[..., j]
                raw = np.where(bp[..., j] > 0.0, raw, 0.0)
                np.clip(raw, 0.0, 1.0, out=raw)
                lam[..., j] = raw
                carried = raw * bp[..., j]
        weights.append(lam)
    return weights


def _endpoint_split(curve: EphCurve, t):
    """Masks and output buffer shared by the corner-cutting evaluators."""
    t = np.asarray(t, dtype=float)
    if np.any(t < 0.0) or np.any(t > 1.0):
        raise DomainError("t must lie in [0, 1]")
    scalar = t.ndim == 0
    tv = np.atleast_1d(t)
    out = np.empty(tv.shape + (curve.dim,))
    at0 = tv == 0.0
    at1 = tv == 1.0
    interior = ~(at0 | at1)
    out[at0] = curve.control_points[0]
    out[at1] = curve.control_points[-1]
    return tv, out, interior, scalar


def eval_decasteljau(curve: EphCurve, t, mode: EvalMode = EvalMode.AUTO) -> np.ndarray:
    """Corner-cutting evaluation: 2m+1 levels of convex combinations."""
    tv, out, interior, scalar = _endpoint_split(curve, t)
    ti = tv[interior]
    if ti.size:
        lam = _decasteljau_weights(curve.m, curve.omega, ti, mode)
        pts = np.broadcast_to(curve.control_points,
                              ti.shape + curve.control_points.shape).copy()
        n = 2 * curve.m + 1
        for k in range(1, n + 1):
            p = n - k
            lv = lam[p][..., :, None]
            pts = (1.0 - lv) * pts[..., :p + 1, :] + lv * pts[..., 1:p + 2, :]
        out[interior] = pts[..., 0, :]
    return out[0] if scalar else out


def eval_wozny_chudy(curve: EphCurve, t, mode: EvalMode = EvalMode.AUTO) -> np.ndarray:
    """Linear-time evaluation via partial-sum ratios of the curve basis."""
    tv, out, interior, scalar = _endpoint_split(curve, t)
    ti = tv[interior]
    if ti.size:
        b = basis.curve_basis(curve.m, curve.omega, ti, mode)
        s = np.cumsum(b, axis=-1)
        q = np.broadcast_to(curve.control_points[0], ti.shape + (curve.dim,)).copy()
        for k in range(1, 2 * curve.m + 2):
            with np.errstate(divide="ignore", invalid="ignore"):
                h = np.where(s[..., k] > 0.0, b[..., k] / s[..., k], 0.0)
            h = h[..., None]
            q = (1.0 - h) * q + h * curve.control_points[k]
        out[interior] = q
    return out[0] if scalar else out


def _bernstein_wc(r1: np.ndarray, t: np.ndarray, m: int, upper: bool) -> np.ndarray:
    """Linear-time polynomial recursion on the reduced Bernstein polygon.

    ``upper`` selects the branch for t in [0.5, 1); the other branch
    walks the polygon backwards with the reciprocal ratio.
    """
    n = 2 * m
    if upper:
        q = r1[..., 0, :].copy()
        ratio = (1.0 - t) / t
        pick = lambda k: r1[..., k, :]
    else:
        q = r1[..., n, :].copy()
        ratio = t / (1.0 - t)
        pick = lambda k: r1[..., n - k, :]
    h = np.ones_like(t)
    for k in range(1, n + 1):
        h = 1.0 / (1.0 + (k / (n + 1.0 - k)) * ratio / h)
        q += h[..., None] * (pick(k) - q)
    return q


def _eval_new_interior(curve: EphCurve, ti: np.ndarray, mode: EvalMode,
                       out: np.ndarray) -> None:
    """Fill ``out`` with the two-branch evaluation of interior points."""
    tau = basis.corner_weights(curve.m, curve.omega, ti, mode)[..., :, None]
    cp = curve.control_points
    r1 = cp[1:] + tau * (cp[:-1] - cp[1:])
    hi = ti >= 0.5
    if hi.all():
        out[...] = _bernstein_wc(r1, ti, curve.m, upper=True)
    elif not hi.any():
        out[...] = _bernstein_wc(r1, ti, curve.m, upper=False)
    else:
        lo = ~hi
        out[hi] = _bernstein_wc(r1[hi], ti[hi], curve.m, upper=True)
        out[lo] = _bernstein_wc(r1[lo], ti[lo], curve.m, upper=False)


def eval_new(curve: EphCurve, t, mode: EvalMode = EvalMode.AUTO) -> np.ndarray:
    """Corner-cut onto a Bernstein polygon, then the polynomial recursion."""
    tv = np.asarray(t, dtype=float)
    if np.any(tv < 0.0) or np.any(tv > 1.0):
        raise DomainError("t must lie in [0, 1]")
    scalar = tv.ndim == 0
    tv = np.atleast_1d(tv)
    out = np.empty(tv.shape + (curve.dim,))
    if tv.ndim == 1 and (tv.size < 2 or np.all(tv[1:] >= tv[:-1])):
        # sorted grid (the common case): contiguous slices, no masks
        a = int(np.searchsorted(tv, 0.0, side="right"))
        b = int(np.searchsorted(tv, 1.0, side="left"))
        c = int(np.searchsorted(tv, 0.5, side="left"))
        out[:a] = curve.control_points[0]
        out[b:] = curve.control_points[-1]
        if a < c:
            _eval_new_interior(curve, tv[a:c], mode, out[a:c])
        if c < b:
            _eval_new_interior(curve, tv[c:b], mode, out[c:b])
    else:
        at0 = tv == 0.0
        at1 = tv == 1.0
        interior = ~(at0 | at1)
        out[at0] = curve.control_points[0]
        out[at1] = curve.control_points[-1]
        ti = tv[interior]
        if ti.size:
            res = np.empty(ti.shape + (curve.dim,))
            _eval_new_interior(curve, ti, mode, res)
            out[interior] = res
    return out[0] if scalar else out


_EVALUATORS = {
    EvalMethod.DIRECT: eval_direct,
    EvalMethod.DECASTELJAU: eval_decasteljau,
    EvalMethod.WOZNY_CHUDY: eval_wozny_chudy,
    EvalMethod.NEW: eval_new,
}


def evaluate(curve: EphCurve, t, method: EvalMethod = EvalMethod.DIRECT,
             mode: EvalMode = EvalMode.AUTO) -> np.ndarray:
    """Dispatch to one of the four evaluators."""
    return _EVALUATORS[method](curve, t, mode)


# ---------------------------------------------------------------------------
# dynamic (matrix-recursion) evaluation, m=1, d=3
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DynamicEvalReport:
    """Samples produced by the lifted recursion and their accuracy."""

    k: int
    samples: np.ndarray
    max_rel_error: float


def _shift_matrix(omega: float, c2: float, h: float) -> np.ndarray:
    """Matrix mapping curve-basis values at t to values at t+h (m=1)."""
    ew = math.exp(omega)
    B = np.array([
        [1.0, 1.0, 1.0, 1.0],
        [0.0, c2, 1.0 - c2, 1.0],
        [1.0, 1.0 + omega * c2, ew * (1.0 - omega * c2), ew],
        [1.0, 1.0 - omega * c2, (1.0 + omega * c2) / ew, 1.0 / ew],
    ])
    Chat = np.diag([1.0, 1.0, math.exp(omega * h), math.exp(-omega * h)])
    Chat[1, 0] = h
    return np.linalg.solve(B, Chat @ B)


def dynamic_eval_m1(curve: EphCurve, k: int) -> DynamicEvalReport:
    """Sample the curve at k equispaced parameters by matrix recursion.

    The control points are lifted to dimension 4 (appending a unit row
    to make the lifted polygon invertible), the one-step shift matrix of
    the basis is conjugated into that frame, and repeated multiplication
    yields the samples.  The shift matrix has an entry growing like
    exp(omega*h), so the recursion loses all accuracy once omega
    reaches a few tens; the report records the error against the direct
    evaluator.
    """
    if curve.m != 1 or curve.dim != 3:
        raise ValueError("dynamic evaluation is implemented for m=1, dim=3")
    if k < 2:
        raise ValueError("k must be at least 2")
    cp = curve.control_points
    r2 = cp[1:].T                       # trailing 3x3 block
    scale = float(np.max(np.abs(r2)))
    if scale == 0.0 or abs(np.linalg.det(r2)) < 1e-12 * scale ** 3:
        raise SingularControlBlockError(
            "trailing 3x3 control-point block is (near) singular")
    R = np.zeros((4, 4))
    R[:3, 0] = cp[0]
    R[:3, 1:] = r2
    R[3, 0] = 1.0
    h = 1.0 / (k - 1)
    c2 = basis.constants(1, curve.omega).c2
    C = _shift_matrix(curve.omega, c2, h)
    M = R @ C @ np.linalg.inv(R)
    z = R[:, 0].copy()
    samples = np.empty((k, 3))
    samples[0] = z[:3]
    for i in range(1, k):
        z = M @ z
        samples[i] = z[:3]
    ts = np.linspace(0.0, 1.0, k)
    ref = eval_direct(curve, ts)
    denom = float(np.max(np.abs(ref)))
    err = float(np.max(np.abs(samples - ref))) / denom if denom > 0 else math.inf
    return DynamicEvalReport(k=k, samples=samples, max_rel_error=err)
