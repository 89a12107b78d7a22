"""
Phase equivalence and the gauge it induces
==========================================

When the two characteristic entries agree up to a constant phase, the
classifier first fits that phase and then works in a rescaled basis.  The
fitted phase shows up in the result, and the distinguished classes move
along the parameter space accordingly.
"""
import cmath
import math

from kreinext import (
    CharacteristicData,
    ExtensionParams,
    classify,
    degenerate_sl,
    empty_resolvent_family,
    upsilon_u_member,
)

base = degenerate_sl()
alpha = 1.3
shifted = CharacteristicData(
    s_plus=base.s_plus,
    s_minus=lambda m: cmath.exp(-1j * alpha) * base.s_plus(m),
    label="shifted entries",
)

# the fitted phase relocates the empty-resolvent curve from phi = 0 to
# phi = alpha / 2
for cd, name in ((base, "aligned"), (shifted, "shifted")):
    fam = empty_resolvent_family(cd)
    print(f"{name:8} phi values: {tuple(round(p, 4) for p in fam.phi_values)}")

res = classify(ExtensionParams.from_q(1.0, phi=alpha / 2), shifted)
print(f"\nmember at phi = alpha/2: {res.extension_class.value}, "
      f"fitted phase {res.gauge_phase:.4f}")

# the hyperbolic certificate follows the same shift
res = classify(
    ExtensionParams.from_q(0.3, phi=0.2 + alpha / 2, gamma=1.0 + alpha / 2),
    shifted,
)
print(f"stable member: {res.extension_class.value}, "
      f"chi={res.csym.chi:.4f}, omega={res.csym.omega:.4f}")
expected_chi = -math.atanh(0.3 / math.cos(0.2))
print(f"expected chi:  {expected_chi:.4f}")

# one unitary family member keeps every symmetry of the data at once;
# its parameters are read off from the entries at a single point
member = upsilon_u_member(base, 2j)
print(f"\nall-symmetries member: phi={member.phi:.6f}, xi={member.xi:.6f}, "
      f"q={member.q}")
print(f"classified as: {classify(member, base).extension_class.value}")
