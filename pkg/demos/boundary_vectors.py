"""
Boundary vectors and neutral planes
===================================

The four-dimensional boundary space carries two indefinite metrics.  This
walkthrough builds a few vectors, evaluates both products, and checks that
the two-parameter extension domains are neutral planes of maximal dimension.
"""
import numpy as np

from kreinext import (
    E_MM,
    E_PP,
    J,
    Z,
    BoundaryVector,
    ExtensionParams,
    extension_subspace,
    inner,
    is_hypermaximal_neutral,
    metric_jz,
    metric_z,
    random_extension,
)

print("boundary vectors")
print("=" * 40)

v = E_PP + 2.0 * E_MM
w = BoundaryVector((1.0, 1j, 0.0, -0.5))
print(f"v = {np.round(v.array, 3)}")
print(f"w = {np.round(w.array, 3)}")
print(f"<v, w>          = {inner(v, w):.3f}")
print(f"[v, w]  (J Z)   = {metric_jz(v, w):.3f}")
print(f"[v, w]  (Z)     = {metric_z(v, w):.3f}")

###############################################################################
# Extension domains
# -----------------
# Each unitary parameter point spans a plane on which the JZ-product
# vanishes identically; that neutrality is what makes the associated
# operator J-self-adjoint.

params = ExtensionParams.from_q(0.6, phi=0.4, gamma=1.2, xi=0.3)
plane = extension_subspace(params)
print(f"\nplane basis:\n{np.round(plane.matrix, 4)}")
print(f"hypermaximal neutral: {is_hypermaximal_neutral(plane)}")

rng = np.random.default_rng(7)
worst = 0.0
for _ in range(200):
    basis = extension_subspace(random_extension(rng)).matrix
    gram = basis.conj().T @ (J @ Z) @ basis
    worst = max(worst, float(np.max(np.abs(gram))))
print(f"max |JZ-gram| over 200 random domains: {worst:.2e}")
