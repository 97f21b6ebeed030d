# %% [markdown]
# # A mixed state with no purification
# omega* = (|00><00| + |11><11|) / 2 is a perfectly good local state (a two-term
# ensemble) but no bipartite pure state reduces to it.  Every reduction has the form
# S(rho (x) rho)S + c S~, and its weight on |Phi> = (|01>+|10>)/sqrt2 is
# (4/3) a (1 - a) + (2/3)|b|^2 > 0 unless rho is pure.

# %%
import numpy as np

from opflab.purification import is_reduced_state, reduced_distance_lower_bound
from opflab.tensor import projector
from opflab.toy import ToyState, convex_decomposition, doubled

e0, e1 = np.eye(2)
omega = ToyState(2, 0.5 * (projector(doubled(e0)) + projector(doubled(e1))))
ens = convex_decomposition(omega)
print("ensemble:", ens.probs, "\n", np.round(ens.vectors, 3))

# %% Numerical search over reductions, and a grid-certified lower bound on the distance
member, dist = is_reduced_state(omega, d_b=2)
print(f"reduction of a pure state? {member}; distance {dist:.5f} (1/sqrt6 = {1 / np.sqrt(6):.5f})")
print(f"certified lower bound {reduced_distance_lower_bound(omega):.4f}")
