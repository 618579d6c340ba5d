"""Grouped verification runs shared by the command line and the acceptance tests.

Each function returns a list of :class:`~hartogs.report.VerificationReport`.
"""

from __future__ import annotations

from typing import Sequence

from . import kernel, lowerbound, schur, specfun
from .errors import DomainError
from .quadrature import QuadratureSpec
from .report import VerificationReport

LEMMA_IDS = ("2.1", "2.2", "2.3", "2.4", "2.5")

TORUS_A = (0.5, 0.75, 1.0)
TORUS_R2 = (0.0, 0.25, 0.5, 0.81)
FORELLI_RUDIN_CASES = ((1.0, 0.0), (0.5, 0.5), (1.5, -0.5))
SUP_T = (0.6, 0.75, 0.9)
MONOTONE_T = (0.6, 0.8)
SUITE_P = (2.5, 3.0)
MONOMIALS = ((0, 0), (0, -1), (1, -1), (2, 1))

DEFAULT_DEPTH = {"2.2": 8, "2.3": 10, "lower": 6, "remainder": 7}


def identities(n_gamma: int = 200, seed: int = 0) -> list[VerificationReport]:
    return specfun.identity_suite(n_gamma=n_gamma, seed=seed)


def lemma21(a: float | None = None, r2: float | None = None) -> list[VerificationReport]:
    a_vals = TORUS_A if a is None else (a,)
    r_vals = TORUS_R2 if r2 is None else (r2,)
    return [schur.torus_identity_check(x, r) for x in a_vals for r in r_vals]


def lemma22(c: float | None = None, t: float | None = None, depth: int | None = None) -> list[VerificationReport]:
    depth = depth or DEFAULT_DEPTH["2.2"]
    if c is None and t is None:
        cases: Sequence[tuple[float, float]] = FORELLI_RUDIN_CASES
    elif c is None or t is None:
        raise DomainError("--id 2.2 needs both --c and --t")
    else:
        cases = ((c, t),)
    return [schur.forelli_rudin_sup(cc, tt, depth) for cc, tt in cases]


def lemma23(t: float | None = None, depth: int | None = None) -> list[VerificationReport]:
    depth = depth or DEFAULT_DEPTH["2.3"]
    if t is not None:
        return [schur.schur_sup_estimate(t, depth), schur.monotone_g_check(t)]
    out = [schur.I_grid_check()]
    out += [schur.schur_sup_estimate(tt, depth) for tt in SUP_T]
    out += [schur.monotone_g_check(tt) for tt in MONOTONE_T]
    return out


def lemma24() -> list[VerificationReport]:
    return [lowerbound.lemma24_check()]


def lemma25(p: float | None = None, K: int = 51) -> list[VerificationReport]:
    ps = SUITE_P if p is None else (p,)
    out = []
    for pp in ps:
        out.append(lowerbound.coefficient_identity_check(pp, K=K))
        out.append(lowerbound.lemma25_sup_check(pp))
    return out


def bounds() -> list[VerificationReport]:
    return schur.bounds_checks()


def lower_estimate(p: float = 3.0, depth: int | None = None) -> list[VerificationReport]:
    return [lowerbound.ratio_path(p, depth or DEFAULT_DEPTH["lower"])]


def remainder(p: float = 3.0, depth: int | None = None, trend: bool = True) -> list[VerificationReport]:
    """Remainder ratios at ``depth``; with ``trend`` the four depths ending there."""
    depth = depth or DEFAULT_DEPTH["remainder"]
    if not trend or depth < 4:
        xi = lowerbound.BoundaryPath(depth, start=depth).points[0]
        return [lowerbound.remainder_terms(xi, p)]
    rep, per_depth = lowerbound.remainder_trend(p, tuple(range(depth - 3, depth + 1)))
    return [rep, per_depth[-1]]


def projection(
    j: int | None = None, k: int | None = None, spec: QuadratureSpec = kernel.PROJECTION_SPEC
) -> list[VerificationReport]:
    if j is None and k is None:
        out = [kernel.reproduce_check(m, spec=spec) for m in MONOMIALS]
        return out + [kernel.annihilation_check(spec=spec)]
    return [kernel.reproduce_check(kernel.MonomialIndex(j or 0, k or 0), spec=spec)]


def premises(p: float | None = None) -> list[VerificationReport]:
    ps = SUITE_P if p is None else (p,)
    return [r for pp in ps for r in schur.schur_premise_check(pp)]


def lemma(lemma_id: str, **kw) -> list[VerificationReport]:
    dispatch = {
        "2.1": lambda: lemma21(kw.get("a"), kw.get("r2")),
        "2.2": lambda: lemma22(kw.get("c"), kw.get("t"), kw.get("depth")),
        "2.3": lambda: lemma23(kw.get("t"), kw.get("depth")),
        "2.4": lemma24,
        "2.5": lambda: lemma25(kw.get("p"), kw.get("K") or 51),
    }
    if lemma_id not in dispatch:
        raise ValueError(f"unknown lemma id {lemma_id!r}")
    return dispatch[lemma_id]()


def full(spec: QuadratureSpec = kernel.PROJECTION_SPEC, depth: int | None = None, K: int = 51) -> list[VerificationReport]:
    """Every check, including the boundary-path runs at p = 2 and p = 3."""
    out = identities()
    out += lemma21() + lemma22() + lemma23() + lemma24() + lemma25(K=K)
    out += bounds()
    out += lower_estimate(3.0, depth) + lower_estimate(2.0, depth)
    out += remainder(3.0)
    out += projection(spec=spec)
    out += premises()
    return out


def quick(spec: QuadratureSpec = kernel.PROJECTION_SPEC, K: int = 51) -> list[VerificationReport]:
    """The closed-form and low-dimensional checks only (no 4-D quadrature)."""
    return identities() + lemma21() + lemma22() + lemma23() + lemma24() + lemma25(K=K) + bounds()
