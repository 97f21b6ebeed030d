# %% [markdown]
# # Symmetric-group characters and Kronecker coefficients
# Characters come from the Murnaghan-Nakayama rule on bead masks, in exact integers.
# Kronecker coefficients are class sums; only the three needed rows are touched.

# %%
import time

from opflab.characters import character_table, kronecker, mn_character
from opflab.partitions import format_partition, partitions

table = character_table(4)
ps = partitions(4)
print("      " + " ".join(f"{format_partition(c):>8s}" for c in ps))
for lam in ps:
    print(f"{format_partition(lam):>6s}" + " ".join(f"{table[lam][c]:8d}" for c in ps))

# %%
print("chi_(6,3^7)(1^27) =", mn_character((6,) + (3,) * 7, (1,) * 27))

# %% The two SU(9) certificates and the quantum control
for lam, mu in [((4,) + (2,) * 7, (6, 6, 6)), ((6,) + (3,) * 7, (9, 9, 9)), ((2,) + (1,) * 7, (3, 3, 3))]:
    t0 = time.perf_counter()
    g = kronecker(lam, mu, mu)
    print(f"g({format_partition(lam)}, {format_partition(mu)}, {format_partition(mu)}) = {g}"
          f"  [{time.perf_counter() - t0:.2f} s]")
