"""Tour of the stationary-configuration solvers.

Walks the classical small cases: the two-vortex pair, the three equal
vortices (equilateral + collinear), a vorticity triple admitting
self-similar collapse, an equilibrium, and a rigidly translating pair.
"""

import numpy as np

from vortexcc import (
    VorticitySet,
    solve_central_multistart,
    solve_equilibria,
    solve_rigid_translation,
)


def show(report, label, limit=5):
    print(f"\n== {label} ==")
    if report.reason:
        print(f"  gated: {report.reason}")
        return
    print(f"  starts {report.starts_attempted}, converged {report.starts_converged}, "
          f"distinct {len(report.solutions)}")
    for sol in report.solutions[:limit]:
        sig = ", ".join(f"{np.asarray(s, dtype=float).ravel()}" if isinstance(s, tuple)
                        else f"{s:.6g}" for s in sol.signature)
        lam = "None" if sol.lam is None else f"{sol.lam:.6g}"
        print(f"  {sol.kind:22s} lambda={lam:24s} r2=[{sig}] residual={sol.residual_norm:.1e}")
    if len(report.solutions) > limit:
        print(f"  ... and {len(report.solutions) - limit} more")


# Two identical vortices: the unique normalized solution has lambda = 1 and
# squared separation 2 (lambda = 1/(2c^2) on the symmetric pair (-c, c)).
show(solve_central_multistart(VorticitySet((1.0, 1.0)), starts=200, seed=1),
     "two identical vortices")

# Three identical vortices: the equilateral triangle (all r2 = 3) and the
# collinear row (r2 = {3/2, 3/2, 6}) are the only shapes found.
show(solve_central_multistart(VorticitySet((1.0, 1.0, 1.0)), starts=1000, seed=0),
     "three identical vortices")

# L = 1 - 1/2 - 1/2 = 0 opens the collapse branch: nonreal rotation
# multipliers appear, and every such solution has S = I = L = 0.
report = solve_central_multistart(VorticitySet((1.0, 1.0, -0.5)), starts=500, seed=0)
show(report, "collapse-capable triple (1, 1, -1/2)", limit=3)
strongest = max((s for s in report.solutions if s.kind == "collapse"),
                key=lambda s: abs(s.lam.imag))
print(f"  strongest collapse: lambda = {strongest.lam:.6f}, "
      f"|S| = {abs(strongest.invariants.S):.1e}, |I| = {abs(strongest.invariants.I):.1e}")

# Equilibria require L = 0; for (1, 1, -1/2) the row (0, 1, 1/2) balances.
show(solve_equilibria(VorticitySet((1.0, 1.0, -0.5)), starts=100, seed=0),
     "equilibria of (1, 1, -1/2)")
show(solve_equilibria(VorticitySet((1.0, 1.0, 1.0)), starts=10, seed=0),
     "equilibria of (1, 1, 1)")

# Rigid translation requires total strength zero; the (1, -1) pair drifts
# with unit speed perpendicular to its axis.
show(solve_rigid_translation(VorticitySet((1.0, -1.0)), starts=50, seed=0),
     "rigid translation of (1, -1)")
show(solve_rigid_translation(VorticitySet((2.0, 2.0, 2.0, 2.0, -1.0)), starts=10, seed=0),
     "rigid translation of (2, 2, 2, 2, -1)")
