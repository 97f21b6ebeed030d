# %% [markdown]
# # Tensor-product bookkeeping
# Everything in the toy theory lives on two copies of a Hilbert space.  This
# script shows the handful of helpers the rest of the package is built on.

# %%
import numpy as np

from opflab.tensor import exchange_projectors, partial_trace, permute_factors, projector, random_pure_state

# %% Symmetric and antisymmetric projectors on C^2 (x) C^2
s, a = exchange_projectors(2)
print("tr S =", np.trace(s).real, " tr A =", np.trace(a).real)
print("S |01> =", s @ np.array([0, 1, 0, 0]))

# %% Reordering factors: A1 B1 A2 B2  ->  A1 A2 B1 B2
psi = random_pure_state(6, seed=1)
doubled = np.kron(psi, psi)
reordered = permute_factors(doubled, (2, 3, 2, 3), (0, 2, 1, 3))
print("norm preserved:", np.isclose(np.linalg.norm(reordered), 1))

# %% Partial trace of a maximally entangled pair
phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
print("tr_B |Phi+><Phi+| =\n", partial_trace(projector(phi), (2, 2), keep=[0]).real)
