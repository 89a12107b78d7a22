"""
Hunting a non-real eigenvalue two ways
======================================

A generic extension of the interval model has discrete non-real spectrum.
The determinant route counts and polishes zeros with the argument
principle; the shooting route discretises the same eigenvalue problem
directly.  Both land on the same point.
"""
import math

from kreinext import (
    ExtensionParams,
    SearchBox,
    degenerate_sl,
    det_f,
    isolate_roots,
    nonreal_eigenvalues,
    shooting_determinant,
    shooting_residual,
    winding_number,
)

params = ExtensionParams.from_q(1 / math.sqrt(2), phi=1.0)
cd = degenerate_sl()

# a small box near the origin is empty...
small = SearchBox(0.5, 8.0, 0.5, 8.0)
print(f"winding over {small}: "
      f"{winding_number(lambda mu: det_f(params, cd, mu), small)}")

# ...the first non-real eigenvalue appears further out
box = SearchBox(15.0, 25.0, 0.5, 5.0)
report = nonreal_eigenvalues(params, cd, box)
print(f"\ndeterminant route: verdict={report.verdict.value}, "
      f"winding={report.winding_total}")
for eig in report.eigenvalues:
    print(f"  mu = {eig.mu:.12f}   residual {eig.residual:.1e}")

oracle = isolate_roots(lambda mu: shooting_determinant(params, mu), box, n0=16)
print(f"\nshooting route:   winding={oracle.winding_total}")
for root in oracle.roots:
    print(f"  mu = {root:.12f}")

gap = abs(report.eigenvalues[0].mu - oracle.roots[0])
print(f"\nroutes agree to {gap:.2e}")
print(f"shooting residual at the eigenvalue: "
      f"{shooting_residual(params, report.eigenvalues[0].mu):.2e}")
