# %% [markdown]
# # Branching to SU(m) x SU(n) and the local-tomography certificates
# If the degree-j representation of SU(d_A d_B) contains a trivial (x) trivial block,
# some global parameter is invisible to local measurements.  For j = 1 (quantum)
# there is none; for j = 2, 3 we compute it; larger j follow by adding D_2 diagrams.

# %%
from opflab.branching import QuantumCase, branch_decompose, certify_holistic
from opflab.partitions import format_partition, su_dim

for t in branch_decompose((2,), 2, 2):
    print(f"{format_partition(t.mu)} x {format_partition(t.nu)}: {t.multiplicity}"
          f"  (dims {su_dim(t.mu, 2)} x {su_dim(t.nu, 2)})")

# %%
try:
    certify_holistic(1, 3, 3)
except QuantumCase as exc:
    print(exc)
for j in range(2, 8):
    cert = certify_holistic(j, 3, 3)
    print(j, cert.method, "holistic" if cert.holistic else "?", cert.chain or cert.multiplicity)
