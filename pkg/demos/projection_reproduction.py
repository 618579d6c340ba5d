"""The numerical Bergman projection reproduces holomorphic monomials.

Run with ``python3 demos/projection_reproduction.py``.
"""
# %%
import numpy as np

from hartogs.kernel import MonomialIndex, annihilation_check, project, reproduce_check
from hartogs.quadrature import HartogsPoint

# %%
for j, k in ((0, 0), (0, -1), (1, -1), (2, 1)):
    rep = reproduce_check(MonomialIndex(j, k))
    print(f"z1^{j} z2^{k}: max |P m - m| = {rep.computed:.2e}")
print(f"conj(w1): max |P f| = {annihilation_check().computed:.2e}")

# %% conj(w2) is not annihilated; it projects onto 1/(2 z2)
z = HartogsPoint.from_moduli(0.5, 0.4, 0.3, -1.0)
print("P conj(w2) at z:", project(lambda w1, w2: np.conj(w2), z), " 1/(2 z2):", 0.5 / z.z2)
