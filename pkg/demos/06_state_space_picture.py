# %% [markdown]
# # The qubit state space in two coordinates
# x = <Z (x) I + I (x) Z>/2 and y = <Phi|omega|Phi>.  Pure states trace the parabola
# y = (1 - x^2)/2, mixtures fill in underneath, and reductions of entangled states
# stay away from the bottom edge near x = 0.  Plotting is left to external tools.

# %%
from pathlib import Path

import numpy as np

from opflab.purification import figure_data, write_figure_csv

data = figure_data(samples=10_000, seed=0)
for kind, pts in data.items():
    print(f"{kind:8s} x in [{pts[:, 0].min():+.3f}, {pts[:, 0].max():+.3f}]  min y {pts[:, 1].min():.3f}")

near = np.abs(data["reduced"][:, 0]) <= 0.05
print("reduced, |x| <= 0.05: min y =", data["reduced"][near, 1].min().round(4))

out = Path("state_space.csv")
write_figure_csv(data, out)
print("wrote", out)
