"""Relative size of the eight remainder terms along the diagonal path.

Each ratio decreases with depth, so the main term dominates near the boundary.
Run with ``python3 demos/remainder_trend.py``.
"""
# %%
from hartogs.lowerbound import remainder_trend

# %%
depths = (3, 4, 5, 6, 7)
trend, reps = remainder_trend(3.0, depths)
print("term              " + "".join(f"{'k=' + str(k):>9}" for k in depths))
for name, seq in trend.details["sequences"].items():
    print(f"{name:<18}" + "".join(f"{v:9.4f}" for v in seq))
print("main-term identity:", max(abs(r.computed - 1) for r in reps))
