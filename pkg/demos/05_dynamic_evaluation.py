"""The matrix-recursion evaluator: fast equispaced sampling that decays
exponentially in accuracy as the shape parameter grows.

The one-step shift matrix of the order-1 curve basis has an entry of
size exp(omega*h); its powers amplify rounding until the recursion is
useless around omega of a few tens, while small omega stays accurate.
"""

import numpy as np

from ephcurve import EphCurve, dynamic_eval_m1

rng = np.random.default_rng(3)


def regular_curve(omega):
    while True:
        cp = rng.uniform(0, 1, (4, 3))
        if abs(np.linalg.det(cp[1:].T)) > 1e-2:
            return EphCurve(m=1, omega=omega, dim=3, control_points=cp)


print(f"{'omega':>8s} {'max rel error vs direct':>26s}")
for omega in (0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 35.0, 50.0):
    report = dynamic_eval_m1(regular_curve(omega), 101)
    marker = "  <- unusable" if report.max_rel_error > 1e-2 else ""
    print(f"{omega:8.2f} {report.max_rel_error:26.3e}{marker}")

print("\nk=2 degenerates to the two endpoints:")
curve = regular_curve(1.0)
report = dynamic_eval_m1(curve, 2)
print("first sample - r0:  ", np.abs(report.samples[0] - curve.control_points[0]))
print("second sample - r3: ", np.abs(report.samples[1] - curve.control_points[-1]))
