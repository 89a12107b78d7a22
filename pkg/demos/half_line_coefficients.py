"""
Half-line coefficients and their contractive transforms
=======================================================

Characteristic entries come from Titchmarsh--Weyl coefficients of two
half-line problems glued at the origin.  For the zero potential both
coefficients have closed forms, which makes the whole pipeline easy to
inspect: integrate, compare, transform, and watch the contraction bound.
"""
import numpy as np

from kreinext import (
    SturmLiouvilleModel,
    branch_sqrt,
    indefinite_sl,
    potential_zero,
    tw_mfunction,
)

model = SturmLiouvilleModel(potential=potential_zero(), label="zero potential")

print("m-functions vs closed forms")
print("-" * 50)
for mu in (1j, 2j, 1 + 1j, 0.5 + 2.5j):
    m_plus = tw_mfunction(model, "plus", mu)
    m_minus = tw_mfunction(model, "minus", mu)
    exact_plus = 1j / branch_sqrt(mu)
    exact_minus = -1j / branch_sqrt(-mu)
    print(f"mu={mu!s:12}  m+ err {abs(m_plus - exact_plus):.1e}   "
          f"m- err {abs(m_minus - exact_minus):.1e}")

# both coefficients are Herglotz: they map the upper half-plane to itself
rng = np.random.default_rng(3)
mus = [complex(rng.uniform(0.5, 4.0), rng.uniform(0.5, 4.0)) for _ in range(6)]
assert all(tw_mfunction(model, "plus", mu).imag > 0 for mu in mus)
assert all(tw_mfunction(model, "minus", mu).imag > 0 for mu in mus)
print("\nHerglotz check on 6 random points: ok")

# the Cayley transform turns them into strict contractions, the form the
# classifier consumes
cd = indefinite_sl(model)
print("\ncontractive entries")
print("-" * 50)
for mu in mus[:4]:
    sp, sm = cd.s_plus(mu), cd.s_minus(mu)
    print(f"mu={mu:.3f}   |s+|={abs(sp):.4f}  |s-|={abs(sm):.4f}")
