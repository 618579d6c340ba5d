"""The Schur integral T_t along a path to the boundary.

The values climb towards pi^2 / sin^2(pi t) without exceeding it.
Run with ``python3 demos/schur_supremum.py``.
"""
# %%
from hartogs.schur import schur_constant, schur_sup_estimate

# %%
for t in (0.6, 0.75, 0.9):
    rep = schur_sup_estimate(t, 10)
    d = rep.details
    print(f"t = {t}: constant {schur_constant(t):.6f}")
    for k, v in zip(d["levels"], d["sequence"]):
        print(f"  |z2| = |z1/z2| = 1 - 2^-{k:<2d}  T = {v:.6f}  ({(v / rep.reference - 1) * 100:+.2f}%)")
    print(f"  nondecreasing {d['monotone']}, bounded {d['bounded']}")
