# %% [markdown]
# # Effects and the canonical measurement
# A toy effect is an operator F on the symmetric subspace with 0 <= F <= S,
# where both F and S - F are nonnegative mixtures of |phi><phi|^(x)2.
# Outcome probabilities are quadratic in the state: F(psi) = <psi psi|F|psi psi>.

# %%
import numpy as np

from opflab.tensor import projector, random_pure_state
from opflab.toy import NotAnEffect, canonical_measurement, doubled, validate_effect

# %% The canonical measurement: half-weighted MUB projectors sum to S
meas = canonical_measurement(3)
psi = random_pure_state(3, seed=0)
p = meas.probabilities(psi)
print(f"{len(meas.effects)} outcomes, probabilities sum to {p.sum():.12f}")

# %% A full projector |0><0|^(x)2 is not an effect: S minus it has no valid decomposition
try:
    validate_effect(projector(doubled(np.array([1, 0]))))
except NotAnEffect as exc:
    print("rejected:", exc.reason)

# %% Half of it is fine
f = validate_effect(0.5 * projector(doubled(np.array([1, 0]))))
print("F(|0>) =", f(np.array([1, 0])), " F(|1>) =", round(f(np.array([0, 1])), 12))
