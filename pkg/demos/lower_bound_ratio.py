"""Norm ratio ||P f_xi||_p / ||f_xi||_p for the extremal test functions.

The ratio grows as xi approaches the boundary and stays below the upper
bound; the approach to the lower bound is slow (logarithmic).
Run with ``python3 demos/lower_bound_ratio.py``.
"""
# %%
from hartogs.lowerbound import ratio_path
from hartogs.schur import lower_bound, upper_bound

# %%
p = 3.0
rep = ratio_path(p, 6)
print(f"p = {p}: lower {lower_bound(p):.6f}, upper {upper_bound(p):.6f}")
for k, r in zip(rep.details["levels"], rep.details["sequence"]):
    print(f"  depth {k}: ratio {r:.6f}")

# %% at p = 2 the projection fixes f_xi
rep2 = ratio_path(2.0, 4)
print("p = 2:", ", ".join(f"{r:.12f}" for r in rep2.details["sequence"]))
