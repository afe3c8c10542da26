"""C1 Hermite interpolation: spatial families, the four planar sign
choices, and exact reproduction of a hyperbolic-cosine graph.

Writes hermite_family.svg (spatial family projected to xy) and
hermite_planar.svg next to this script.
"""

import math
import os

import numpy as np

from ephcurve import (AngleChoice, HermiteProblem, PlanarSolutionTag,
                      derivative, eval_direct, reproduce_hyperbolic,
                      solve_planar, solve_spatial)

HERE = os.path.dirname(os.path.abspath(__file__))


def residuals(curve, problem):
    return max(
        float(np.max(np.abs(eval_direct(curve, 0.0) - np.asarray(problem.r0, float)))),
        float(np.max(np.abs(eval_direct(curve, 1.0) - np.asarray(problem.r_end, float)))),
        float(np.max(np.abs(derivative(curve, 0.0) - np.asarray(problem.di, float)))),
        float(np.max(np.abs(derivative(curve, 1.0) - np.asarray(problem.df, float)))),
    )


def polylines_to_svg(path, curves, width=640, height=480):
    all_pts = np.vstack(curves)
    lo, hi = all_pts.min(axis=0), all_pts.max(axis=0)
    span = np.maximum(hi - lo, 1e-12)
    with open(path, "w") as fh:
        fh.write(f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">\n')
        for pts in curves:
            scaled = (pts - lo) / span * [width - 20, height - 20] + 10
            scaled[:, 1] = height - scaled[:, 1]
            joined = " ".join(f"{x:.2f},{y:.2f}" for x, y in scaled)
            fh.write(f'<polyline fill="none" stroke="black" stroke-width="1" '
                     f'points="{joined}"/>\n')
        fh.write("</svg>\n")


# one-parameter spatial family: same data, growing shape parameter
ts = np.linspace(0, 1, 301)
family = []
print("=== spatial family (bigger omega pulls the curve straighter) ===")
for w in (0.1, 3.0, 6.0, 12.0, 24.0):
    problem = HermiteProblem(r0=(0, 0, 0), r_end=(1, 1, 1),
                             di=(-0.8, 0.3, 1.2), df=(0.5, -1.3, -1.0), omega=w)
    angles = AngleChoice.from_mean_delta(eta_m=-math.pi / 10,
                                         delta_eta=math.pi / 3,
                                         eta1=-math.pi / 2)
    sol = solve_spatial(problem, angles)
    pts = eval_direct(sol.curve, ts)
    chord = np.sum(np.linalg.norm(np.diff(pts, axis=0), axis=1))
    print(f"omega={w:5.1f}  residual={residuals(sol.curve, problem):.2e}  "
          f"sampled length={chord:.4f}")
    family.append(pts[:, :2])
polylines_to_svg(os.path.join(HERE, "hermite_family.svg"), family)

# the four planar solutions for one data set
print("\n=== planar sign choices ===")
problem = HermiteProblem(r0=(0.1, -0.5), r_end=(0.4, 0.15),
                         di=(-3.5, 10.0), df=(6.5, 2.3), omega=5.0)
planar = []
for tag in PlanarSolutionTag:
    sol = solve_planar(problem, tag)
    pts = eval_direct(sol.curve, ts)
    print(f"solution {tag.value}: residual={residuals(sol.curve, problem):.2e}  "
          f"bbox x [{pts[:,0].min():+.3f}, {pts[:,0].max():+.3f}]")
    planar.append(pts)
polylines_to_svg(os.path.join(HERE, "hermite_planar.svg"), planar)

# hyperbolic reproduction: data sampled from cosh comes back exactly
print("\n=== cosh reproduction ===")
for w in (0.25, 0.5, 1.0):
    curve = reproduce_hyperbolic(w)
    pts = eval_direct(curve, np.linspace(0, 1, 1001))
    dev = np.max(np.abs(pts[:, 1] - np.cosh(2 * w * pts[:, 0]) / (2 * w)))
    print(f"omega={w:5.2f}  max deviation from the cosh graph: {dev:.2e}")

print(f"\nwrote {os.path.join(HERE, 'hermite_family.svg')} and hermite_planar.svg")
