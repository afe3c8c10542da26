"""Bezier-like curves over the curve spaces and their PH construction.

A curve of order m is a combination of 2m+2 control points with the
normalized curve basis.  PH curves arise from a quaternion preimage:
the hodograph is the pure-vector product ``A(t) i A*(t)``, the control
points follow from closed-form recurrences in the scalar constants, and
the parametric speed and arc length have exact coefficient expansions
over the hodograph and curve bases respectively.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import basis
from .basis import EvalMode
from .quat import Quaternion, dot, sym_sandwich_i

__all__ = [
    "EphCurve",
    "Preimage",
    "SpeedCoefficients",
    "ArcLengthCoefficients",
    "eval_direct",
    "derivative",
    "curve_from_preimage",
    "hodograph",
    "parametric_speed_coeffs",
    "arc_length_coeffs",
    "parametric_speed",
    "arc_length",
    "is_regular",
]

REGULARITY_GRID = 2001
REGULARITY_RTOL = 1e-12


def _frozen_points(points, n_expected: int, dim_expected: int | None = None) -> np.ndarray:
    pts = np.array(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] != n_expected:
        raise ValueError("expected %d control points, got array of shape %s"
                         % (n_expected, pts.shape))
    if pts.shape[1] not in (2, 3):
        raise ValueError("control points must be 2- or 3-dimensional")
    if dim_expected is not None and pts.shape[1] != dim_expected:
        raise ValueError("control points are %dD but dim=%d declared"
                         % (pts.shape[1], dim_expected))
    if not np.all(np.isfinite(pts)):
        raise ValueError("control points must be finite")
    pts.setflags(write=False)
    return pts


@dataclass(frozen=True)
class EphCurve:
    """Immutable Bezier-like curve: order m, shape omega, 2m+2 control points."""

    m: int
    omega: float
    dim: int
    control_points: np.ndarray

    def __post_init__(self):
        if self.m not in (1, 2):
            raise ValueError("m must be 1 or 2")
        if self.dim not in (2, 3):
            raise ValueError("dim must be 2 or 3")
        if not (float(self.omega) > 0.0):
            raise ValueError("omega must be positive")
        pts = _frozen_points(self.control_points, 2 * self.m + 2, self.dim)
        object.__setattr__(self, "control_points", pts)
        object.__setattr__(self, "omega", float(self.omega))

    @property
    def n_points(self) -> int:
        return 2 * self.m + 2

    def to_dict(self) -> dict:
        return {"m": self.m, "omega": self.omega, "dim": self.dim,
                "control_points": self.control_points.tolist()}

    @classmethod
    def from_dict(cls, doc: dict) -> "EphCurve":
        return cls(m=int(doc["m"]), omega=float(doc["omega"]),
                   dim=int(doc["dim"]), control_points=doc["control_points"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "EphCurve":
        return cls.from_dict(json.loads(text))


def _as_quaternion(c) -> Quaternion:
    if isinstance(c, Quaternion):
        return c
    w, x, y, z = (float(v) for v in c)
    return Quaternion(w, x, y, z)


@dataclass(frozen=True)
class Preimage:
    """Quaternion coefficients of the preimage over the preimage basis.

    The curve built from it is regular iff the four coefficient
    functions have no common root; see :func:`is_regular` for the
    numerical proxy.  An all-zero preimage is accepted (it yields the
    degenerate point curve with zero speed and length).
    """

    m: int
    omega: float
    coeffs: tuple

    def __post_init__(self):
        if self.m not in (1, 2):
            raise ValueError("m must be 1 or 2")
        if not (float(self.omega) > 0.0):
            raise ValueError("omega must be positive")
        cs = tuple(_as_quaternion(c) for c in self.coeffs)
        if len(cs) != self.m + 1:
            raise ValueError("preimage of order m=%d needs %d quaternion "
                             "coefficients, got %d" % (self.m, self.m + 1, len(cs)))
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "omega", float(self.omega))

    def coeff_array(self) -> np.ndarray:
        return np.array([c.components() for c in self.coeffs], dtype=float)

    def to_dict(self) -> dict:
        return {"m": self.m, "omega": self.omega,
                "coeffs": [list(c.components()) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, doc: dict) -> "Preimage":
        return cls(m=int(doc["m"]), omega=float(doc["omega"]),
                   coeffs=tuple(doc["coeffs"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Preimage":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class SpeedCoefficients:
    """Parametric-speed coefficients over the hodograph basis."""

    sigma: np.ndarray


@dataclass(frozen=True)
class ArcLengthCoefficients:
    """Arc-length coefficients over the curve basis; s[0] = 0."""

    s: np.ndarray


def eval_direct(curve: EphCurve, t, mode: EvalMode = EvalMode.AUTO) -> np.ndarray:
    """Evaluate the curve by direct summation against the curve basis."""
    b = basis.curve_basis(curve.m, curve.omega, t, mode)
    return b @ curve.control_points


def _integral_weights(m: int, omega: float) -> np.ndarray:
    c = basis.constants(m, omega)
    if m == 1:
        return np.array([c.c2, c.c3_over_c1, c.c2])
    return np.array([c.q2, c.q3, c.q4_over_q1, c.q3, c.q2])


def derivative(curve: EphCurve, t) -> np.ndarray:
    """Derivative of the curve: hodograph-basis combination of the
    forward differences scaled by the basis integrals."""
    w = _integral_weights(curve.m, curve.omega)
    diffs = np.diff(curve.control_points, axis=0) / w[:, None]
    b = basis.hodograph_basis(curve.m, curve.omega, t)
    return b @ diffs


def curve_from_preimage(preimage: Preimage, r0) -> EphCurve:
    """Control points of the PH curve with hodograph ``A(t) i A*(t)``.

    ``r0`` is the free integration constant.  The result is always a
    spatial (3D) curve; planar data should be embedded with the j/k
    mixing components set to zero and projected afterwards.
    """
    r0 = np.asarray(r0, dtype=float)
    if r0.shape != (3,):
        raise ValueError("r0 must be a 3-vector")
    a = preimage.coeffs
    c = basis.constants(preimage.m, preimage.omega)
    if preimage.m == 1:
        deltas = [
            c.c2 * np.array(sym_sandwich_i(a[0], a[0]).components()),
            c.c3 * np.array(sym_sandwich_i(a[0], a[1]).components()),
            c.c2 * np.array(sym_sandwich_i(a[1], a[1]).components()),
        ]
    else:
        deltas = [
            c.q2 * np.array(sym_sandwich_i(a[0], a[0]).components()),
            c.q3 * np.array(sym_sandwich_i(a[0], a[1]).components()),
            (c.q4 * np.array(sym_sandwich_i(a[0], a[2]).components())
             + c.q4_q0_over_q1 * np.array(sym_sandwich_i(a[1], a[1]).components())),
            c.q3 * np.array(sym_sandwich_i(a[1], a[2]).components()),
            c.q2 * np.array(sym_sandwich_i(a[2], a[2]).components()),
        ]
    pts = np.empty((2 * preimage.m + 2, 3))
    pts[0] = r0
    for i, d in enumerate(deltas):
        pts[i + 1] = pts[i] + d
    return EphCurve(m=preimage.m, omega=preimage.omega, dim=3, control_points=pts)


def hodograph(preimage: Preimage, t) -> np.ndarray:
    """Evaluate ``A(t) i A*(t)`` with A expanded over the preimage basis."""
    psi = basis.preimage_basis(preimage.m, preimage.omega, t)
    A = psi @ preimage.coeff_array()          # (..., 4) components w,x,y,z
    w, x, y, z = A[..., 0], A[..., 1], A[..., 2], A[..., 3]
    return np.stack([
        w * w + x * x - y * y - z * z,
        2.0 * (x * y + w * z),
        2.0 * (x * z - w * y),
    ], axis=-1)


def parametric_speed_coeffs(preimage: Preimage) -> SpeedCoefficients:
    """Coefficients of |r'(t)| over the hodograph basis.

    The quaternionic cross terms reduce to 4-component dot products, so
    all coefficients are plain reals.
    """
    a = preimage.coeffs
    c = basis.constants(preimage.m, preimage.omega)
    if preimage.m == 1:
        sigma = np.array([
            dot(a[0], a[0]),
            c.c1 * dot(a[0], a[1]),
            dot(a[1], a[1]),
        ])
    else:
        sigma = np.array([
            dot(a[0], a[0]),
            dot(a[0], a[1]),
            c.q0 * dot(a[1], a[1]) + c.q1 * dot(a[0], a[2]),
            dot(a[1], a[2]),
            dot(a[2], a[2]),
        ])
    return SpeedCoefficients(sigma)


def arc_length_coeffs(preimage: Preimage) -> ArcLengthCoefficients:
    """Cumulative arc-length coefficients over the curve basis."""
    a = preimage.coeffs
    c = basis.constants(preimage.m, preimage.omega)
    if preimage.m == 1:
        increments = [
            c.c2 * dot(a[0], a[0]),
            c.c3 * dot(a[0], a[1]),   # sigma_1 * c3/c1 with the c1 cancelled
            c.c2 * dot(a[1], a[1]),
        ]
    else:
        increments = [
            c.q2 * dot(a[0], a[0]),
            c.q3 * dot(a[0], a[1]),
            c.q4_q0_over_q1 * dot(a[1], a[1]) + c.q4 * dot(a[0], a[2]),
            c.q3 * dot(a[1], a[2]),
            c.q2 * dot(a[2], a[2]),
        ]
    s = np.concatenate([[0.0], np.cumsum(increments)])
    return ArcLengthCoefficients(s)


def parametric_speed(preimage: Preimage, t) -> np.ndarray:
    """|r'(t)| evaluated from the closed-form speed coefficients."""
    sigma = parametric_speed_coeffs(preimage).sigma
    return basis.hodograph_basis(preimage.m, preimage.omega, t) @ sigma


def arc_length(preimage: Preimage, t, mode: EvalMode = EvalMode.AUTO) -> np.ndarray:
    """Arc length from 0 to t evaluated from the closed-form coefficients."""
    s = arc_length_coeffs(preimage).s
    return basis.curve_basis(preimage.m, preimage.omega, t, mode) @ s


def is_regular(preimage: Preimage) -> bool:
    """Numerical proxy for regularity (speed bounded away from zero).

    Samples the parametric speed on a fixed uniform grid and requires
    the minimum to exceed a relative floor; this approximates the exact
    no-common-root condition on the preimage coefficient functions and
    can misclassify speeds vanishing only between grid nodes.
    """
    ts = np.linspace(0.0, 1.0, REGULARITY_GRID)
    sigma = parametric_speed(preimage, ts)
    top = float(np.max(sigma))
    if top <= 0.0:
        return False
    return float(np.min(sigma)) > REGULARITY_RTOL * top
