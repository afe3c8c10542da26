"""Tour of the three basis families and the evaluation modes.

Samples the preimage, hodograph and curve bases for a few shape
parameters, shows the partition-of-unity and symmetry identities
numerically, and compares the three arithmetic modes where their
ranges overlap.  Writes basis_gallery.csv next to this script.
"""

import os

import numpy as np

from ephcurve import EvalMode, constants, curve_basis, hodograph_basis, preimage_basis

HERE = os.path.dirname(os.path.abspath(__file__))

ts = np.linspace(0.0, 1.0, 9)

print("=== preimage basis, m=1 ===")
for w in (0.5, 5.0, 50.0):
    psi = preimage_basis(1, w, ts)
    print(f"omega={w:5.1f}  psi0: {np.array2string(psi[:, 0], precision=4)}")

print("\n=== curve basis: partition of unity and mirror symmetry ===")
for m in (1, 2):
    for w in (1.0, 100.0, 1000.0):
        b = curve_basis(m, w, ts)               # AUTO picks the right mode
        pu = np.max(np.abs(b.sum(axis=-1) - 1.0))
        sym = np.max(np.abs(b - curve_basis(m, w, 1.0 - ts)[..., ::-1]))
        print(f"m={m} omega={w:7.1f}  |sum-1| <= {pu:.2e}   mirror dev <= {sym:.2e}")

print("\n=== mode agreement where the regimes overlap (m=1) ===")
for w in (0.5, 5.0, 30.0):
    naive = curve_basis(1, w, ts, EvalMode.NAIVE)
    stable = curve_basis(1, w, ts, EvalMode.STABLE_LARGE_OMEGA)
    print(f"omega={w:5.1f}  max |naive - stable| = {np.max(np.abs(naive - stable)):.2e}")

print("\n=== scalar constants approach the polynomial weights as omega -> 0 ===")
for w in (2.0, 0.5, 1e-2, 1e-4):
    c = constants(1, w)
    q = constants(2, w)
    print(f"omega={w:8.1e}  c2={c.c2:.8f}  c3={c.c3:.8f}  "
          f"q2={q.q2:.8f}  q4={q.q4:.8f}  q0/q1={q.q0_over_q1:.6f}")
print("(limits: 1/3, 1/3, 1/5, 1/15, 2)")

dense = np.linspace(0.0, 1.0, 201)
vals = curve_basis(2, 10.0, dense)
path = os.path.join(HERE, "basis_gallery.csv")
with open(path, "w") as fh:
    fh.write("t," + ",".join(f"phi{i}" for i in range(6)) + "\n")
    for t, row in zip(dense, vals):
        fh.write(f"{t:.6f}," + ",".join(f"{v:.12g}" for v in row) + "\n")
print(f"\nwrote {path} (m=2, omega=10 curve basis on a 201-point grid)")

print("\n=== hodograph basis integrates to the antiderivative weights ===")
w = 2.5
c = constants(1, w)
mid = hodograph_basis(1, w, np.linspace(0, 1, 20001)).mean(axis=0)
print(f"trapezoid-free mean of each function vs (c2, c3/c1, c2): "
      f"{np.array2string(mid, precision=6)} vs "
      f"({c.c2:.6f}, {c.c3_over_c1:.6f}, {c.c2:.6f})")
