# %% [markdown]
# # Two parties: the star product, reduced and conditional states
# Local effects combine as  F_A (x) F_B + (tr F_A / tr S_A)(tr F_B / tr S_B) A_A (x) A_B.
# The antisymmetric correction is what makes the product of unit effects the global unit.

# %%
import numpy as np

from opflab.tensor import exchange_projectors
from opflab.toy import (canonical_measurement, conditional_state, convex_decomposition, joint_prob,
                        reduced_state, star, unit_effect, validate_effect)

singlet = np.array([0, 1, -1, 0]) / np.sqrt(2)
f = validate_effect(0.5 * np.diag([1.0, 0, 0, 0]).astype(complex))

# %% Joint statistics on the singlet
print("P(F, F | singlet) =", joint_prob(f, f, singlet), "(1/144 =", 1 / 144, ")")
unit = star(unit_effect(2), unit_effect(2))
print("u * u = S_AB:", np.allclose(unit.matrix, exchange_projectors(4)[0]))

# %% Alice's state is no longer a function of her density matrix alone
omega = reduced_state(singlet, 2, 2)
print("reduced state of the singlet is S/3:", np.allclose(omega.matrix, exchange_projectors(2)[0] / 3))
print("explicit ensemble with", len(convex_decomposition(omega)), "pure terms")

# %% No-signalling: Bob's outcomes average back to Alice's reduced state
total = sum(w * s.matrix for w, s in (conditional_state(singlet, e) for e in canonical_measurement(2).effects))
print("no-signalling residual:", np.linalg.norm(total - omega.matrix))
