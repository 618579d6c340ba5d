"""Bergman kernel of the Hartogs triangle and the numeric projection.

In fibre coordinates w1 = u w2 the kernel reads

    K(z, w) = 1 / ((1 - z2 conj(w2))^2 * z2 conj(w2) * (1 - (z1/z2) conj(u))^2),

so after the |w2|^2 Jacobian of the fibration the projection integrand stays
bounded in w2 for monomials down to 1/w2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError
from .quadrature import DEFAULT_SPEC, HartogsPoint, QuadratureSpec, integrate_hartogs
from .report import VerificationReport, stopwatch

ArrayFn = Callable[[np.ndarray, np.ndarray], np.ndarray]

# projection budget for interior points; see reproduce_check
PROJECTION_SPEC = QuadratureSpec(radial_nodes=8, angular_nodes=64, panels=3)


@dataclass(frozen=True)
class MonomialIndex:
    """Exponents of z1^j z2^k; square integrable iff j >= 0 and j + k >= -1."""

    j: int
    k: int

    def __post_init__(self) -> None:
        if self.j < 0:
            raise DomainError("j must be nonnegative")
        if self.j + self.k < -1:
            raise DomainError(f"z1^{self.j} z2^{self.k} is not square integrable (j + k < -1)")

    def __call__(self, z1, z2):
        return z1**self.j * np.asarray(z2, dtype=complex) ** self.k


def bergman_kernel(z: HartogsPoint, w: HartogsPoint) -> complex:
    """K_H(z, w) = z2 w2* / ((1 - z2 w2*)^2 (z2 w2* - z1 w1*)^2)."""
    if not isinstance(z, HartogsPoint) or not isinstance(w, HartogsPoint):
        raise DomainError("bergman_kernel expects HartogsPoint arguments")
    return complex(kernel_values(z.z1, z.z2, w.z1, w.z2))


def kernel_values(z1, z2, w1, w2):
    """Vectorized kernel formula; no domain checks."""
    a = z2 * np.conj(w2)
    return a / ((1.0 - a) ** 2 * (a - z1 * np.conj(w1)) ** 2)


def monomial_norm_sq(m: MonomialIndex) -> float:
    """Closed form of the integral of |z1^j z2^k|^2 over H against mu."""
    if not isinstance(m, MonomialIndex):
        m = MonomialIndex(*m)
    return 1.0 / ((m.j + 1) * (m.j + m.k + 2))


def kernel_series_partial(z: HartogsPoint, w: HartogsPoint, J: int, Kmax: int) -> complex:
    """Orthonormal-expansion partial sum over j <= J, -j-1 <= k <= Kmax."""
    a2 = z.z2 * np.conj(w.z2)
    # a1^j a2^k = (a1/a2)^j a2^(j+k); both factors have modulus < 1
    lam = z.ratio * np.conj(w.ratio)
    total = 0j
    for j in range(J + 1):
        m = np.arange(-1, Kmax + j + 1)
        if m.size == 0:
            continue
        # 1/||z1^j z2^k||^2 = (j + 1)(j + k + 2) with m = j + k
        terms = (j + 1) * (m + 2) * a2 ** m.astype(float)
        total += lam**j * terms.sum()
    return complex(total)


def project(f: ArrayFn, z: HartogsPoint, spec: QuadratureSpec = PROJECTION_SPEC) -> complex:
    """(P f)(z) = integral of K(z, w) f(w) d mu(w), evaluated by quadrature.

    ``f`` takes arrays ``(w1, w2)`` and is only evaluated at quadrature nodes.
    K f may grow like 1/|w2|^2 (for f = 1/w2), which the |w2|^2 Jacobian
    cancels, so the z2 rule carries no weight at the origin.
    """
    z1, z2 = z.z1, z.z2
    return integrate_hartogs(
        lambda w1, w2: kernel_values(z1, z2, w1, w2) * f(w1, w2),
        spec,
        z2_exponents=(-1.0, 0.0),
    )


def default_grid() -> list[HartogsPoint]:
    """Five interior points with |z2| <= 0.7 and |z1/z2| <= 0.6."""
    return [
        HartogsPoint.from_moduli(0.5, 0.2, 0.0, 0.0),
        HartogsPoint.from_moduli(0.3, 0.5, 1.0, -0.4),
        HartogsPoint.from_moduli(0.7, 0.3, 2.5, 1.2),
        HartogsPoint.from_moduli(0.6, 0.6, -1.3, 2.9),
        HartogsPoint.from_moduli(0.4, 0.0, 0.0, 0.7),
    ]


def reproduce_check(
    m: MonomialIndex,
    grid: Sequence[HartogsPoint] | None = None,
    spec: QuadratureSpec = PROJECTION_SPEC,
    tol: float = 1e-6,
) -> VerificationReport:
    """Max over ``grid`` of |P(monomial)(z) - monomial(z)|."""
    if not isinstance(m, MonomialIndex):
        m = MonomialIndex(*m)
    grid = default_grid() if grid is None else list(grid)
    with stopwatch() as sw:
        errs = [abs(project(m, z, spec) - complex(m(z.z1, z.z2))) for z in grid]
    rep = VerificationReport(
        f"kernel.reproduce.j{m.j}_k{m.k}",
        {"j": m.j, "k": m.k, "points": len(grid)},
        computed=max(errs),
        reference=0.0,
        tolerance=tol,
        runtime_ms=sw["ms"],
    )
    rep.details["errors"] = errs
    return rep


def annihilation_check(
    grid: Sequence[HartogsPoint] | None = None,
    spec: QuadratureSpec = PROJECTION_SPEC,
    tol: float = 1e-6,
) -> VerificationReport:
    """P(conj(w1)) vanishes: conj(w1) is orthogonal to every holomorphic monomial."""
    grid = default_grid() if grid is None else list(grid)
    with stopwatch() as sw:
        vals = [abs(project(lambda w1, w2: np.conj(w1) + 0 * w2, z, spec)) for z in grid]
    return VerificationReport(
        "kernel.annihilate_conj_w1",
        {"points": len(grid)},
        computed=max(vals),
        reference=0.0,
        tolerance=tol,
        runtime_ms=sw["ms"],
    )


__all__ = [
    "DEFAULT_SPEC",
    "MonomialIndex",
    "PROJECTION_SPEC",
    "annihilation_check",
    "bergman_kernel",
    "default_grid",
    "kernel_series_partial",
    "kernel_values",
    "monomial_norm_sq",
    "project",
    "reproduce_check",
]
