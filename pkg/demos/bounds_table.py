"""Lower and upper bounds for the L^p norm of the Bergman projection.

Prints both bounds over 4/3 < p < 4 and checks the p <-> q symmetry.
Run with ``python3 demos/bounds_table.py``.
"""
# %%
import numpy as np

from hartogs.schur import bounds_table, lower_bound, upper_bound

# %% table on an even grid, p = 2 included
ps = np.round(np.linspace(1.5, 3.5, 9), 6)
print(f"{'p':>6} {'q':>8} {'lower':>12} {'upper':>12}")
for row in bounds_table(ps):
    print(f"{row.p:6.3f} {row.q:8.4f} {row.lower:12.6f} {row.upper:12.6f} {row.note}")

# %% conjugate exponents give the same bounds
for p in (1.5, 2.5, 3.0, 3.9):
    q = p / (p - 1)
    print(f"p={p:<4} lower {lower_bound(p) - lower_bound(q):+.1e}  upper {upper_bound(p) / upper_bound(q) - 1:+.1e}")
