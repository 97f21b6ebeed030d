# %% [markdown]
# # How many parameters can a qubit state have?
# K is a sum of dim D_j over a set of degrees containing an odd j; for qubits
# dim D_j = 2j + 1, which leaves gaps such as 13.

# %%
from opflab.branching import enumerate_K_values
from opflab.partitions import dim_Dj

print("dim D_j for qubits:", [dim_Dj(j, 2) for j in range(1, 8)])
print("K_2 up to 30:", enumerate_K_values(2, 30))
print("K_3 up to 60 (experimental):", enumerate_K_values(3, 60))
