# %% [markdown]
# # Randomized consistency checks
# C1 unitary covariance, C2 state separation, C3 unit normalization and product
# factorization, C4 conditional states are states, C5 ancilla-induced effects are
# effects, plus no-signalling.  The negative control drops the antisymmetric term.

# %%
import json

from opflab.consistency import corrupted_star, verify_constraints

for dims in [(2, 2), (2, 3), (3, 3)]:
    rep = verify_constraints(*dims, trials=50, seed=0)
    print(dims, "all pass:", rep.all_pass, f"max residual {rep.max_residual:.1e}")

# %%
neg = verify_constraints(2, 2, trials=10, seed=0, star_product=corrupted_star)
print(json.dumps(neg.to_json()["constraints"][2], indent=1))
