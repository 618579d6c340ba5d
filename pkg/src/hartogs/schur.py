"""Upper-bound machinery: the Schur test integral and the two-sided bounds.

With the weight ``h(z) = (|z2|^2 - |z1|^2)(1 - |z2|^2)`` and ``1/2 < t < 1``
the Schur integral is

    T_t(z) = h(z)^t * integral over H of |z2 w2| h(w)^-t
             / (|1 - z2 conj(w2)|^2 |z2 conj(w2) - z1 conj(w1)|^2) d mu(w).

Writing w1 = u w2 and lambda = z1 / z2, the integral splits exactly into a
product of two disk integrals,

    T_t(z) = A_t(lambda) * I_t(z2),
    A_t(lambda) = (1 - |lambda|^2)^t * int (1 - |u|^2)^-t |1 - lambda conj(u)|^-2 dnu(u),
    I_t(z2)     = (1 - |z2|^2)^t |z2|^(2t-1)
                  * int |w|^(1-2t) (1 - |w|^2)^-t |1 - z2 conj(w)|^-2 dnu(w),

with closed forms A_t = F(1-t, 1-t; 2-t; |lambda|^2) / (1 - t) and
I_t = C_I |z2|^(2t-1) F(3/2 - 2t, 1 - t; 5/2 - 2t; |z2|^2).  Both increase
toward the boundary and each tends to Gamma(1-t) Gamma(t), so their product
tends to the Schur constant.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, PoleError
from .quadrature import (
    BoundaryPath,
    HartogsPoint,
    QuadratureSpec,
    graded_rule,
    integrate_disk,
    integrate_hartogs,
    integrate_interval,
    integrate_torus,
)
from .report import VerificationReport, stopwatch
from .specfun import gamma, hyp2f1

P_MIN, P_MAX = 4.0 / 3.0, 4.0


# ------------------------------------------------------------------ parameter types


@dataclass(frozen=True)
class SchurParams:
    """Exponent ``t`` of the Schur integral and the pair ``(c, t2)`` of the
    Forelli-Rudin supremum.  Only the fields a caller supplies are checked."""

    t: float | None = None
    c: float | None = None
    t2: float | None = None

    def __post_init__(self) -> None:
        if self.t is not None:
            _require_t(self.t)
        if self.c is not None and not self.c > 0:
            raise DomainError("c must be positive")
        if self.t2 is not None and not self.t2 > -1:
            raise DomainError("t2 must exceed -1")


@dataclass(frozen=True)
class ExponentPair:
    """Lebesgue exponent ``p`` in (4/3, 4) and its conjugate ``q``."""

    p: float
    q: float = field(init=False)

    def __post_init__(self) -> None:
        p = float(self.p)
        if not P_MIN < p < P_MAX:
            raise DomainError(f"p = {p} is outside (4/3, 4)")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", p / (p - 1.0))

    @property
    def conjugate(self) -> "ExponentPair":
        return ExponentPair(self.q)


def _as_pair(e: ExponentPair | float) -> ExponentPair:
    return e if isinstance(e, ExponentPair) else ExponentPair(float(e))


def _require_t(t: float) -> None:
    if not 0.5 < t < 1.0:
        raise DomainError(f"t = {t} is outside (1/2, 1)")


# ------------------------------------------------------------------ weight and integral


def weight_h(z: HartogsPoint) -> float:
    """h(z) = (|z2|^2 - |z1|^2)(1 - |z2|^2), positive on the domain."""
    if not isinstance(z, HartogsPoint):
        z = HartogsPoint(*z)
    r2 = abs(z.z2) ** 2
    return (r2 - abs(z.z1) ** 2) * (1.0 - r2)


def _boundary_spec(*moduli: float) -> QuadratureSpec:
    return QuadratureSpec.for_boundary(max(1e-12, min(1.0 - m for m in moduli)))


def A_closed(x: float, t: float) -> float:
    """Closed form of the u-factor at |lambda|^2 = x."""
    return float(hyp2f1(1.0 - t, 1.0 - t, 2.0 - t, x)) / (1.0 - t)


def A_numeric(lam: complex, t: float, spec: QuadratureSpec | None = None) -> float:
    """The u-factor by disk quadrature, focused on arg(lambda)."""
    spec = spec or _boundary_spec(abs(lam))
    val = integrate_disk(
        lambda u: (1.0 - np.abs(u) ** 2) ** (-t) / np.abs(1.0 - lam * np.conj(u)) ** 2,
        spec,
        exponents=(0.0, -t),
        focus=cmath.phase(lam) if lam else None,
    )
    return (1.0 - abs(lam) ** 2) ** t * float(np.real(val))


def _I_constant(t: float) -> float:
    return 2.0 ** (2 * t - 1) * math.sqrt(math.pi) * gamma(2 - 2 * t) / gamma(2.5 - 2 * t)


def I_closed(r: float, t: float) -> float:
    """I_t(r) = C_I r^(2t-1) F(3/2 - 2t, 1 - t; 5/2 - 2t; r^2)."""
    _require_t(t)
    if not 0.0 < r < 1.0:
        raise DomainError("r must lie in (0, 1)")
    return _I_constant(t) * r ** (2 * t - 1) * float(hyp2f1(1.5 - 2 * t, 1.0 - t, 2.5 - 2 * t, r * r))


def I_numeric(r: float, t: float, spec: QuadratureSpec | None = None) -> float:
    """I_t(r) = 2 (1-r^2)^t r^(2t-1) int_0^1 s^(2-2t) (1-s^2)^-t / (1 - s^2 r^2) ds."""
    _require_t(t)
    if not 0.0 < r < 1.0:
        raise DomainError("r must lie in (0, 1)")
    spec = spec or _boundary_spec(r)
    rr = r * r

    def f(s, one_minus_s):
        return s ** (2 - 2 * t) * (one_minus_s * (1.0 + s)) ** (-t) / (1.0 - s * s * rr)

    val = integrate_interval(
        f, 0.0, 1.0,
        nodes=spec.radial_nodes, panels=spec.panels, grading=spec.grading,
        exponents=(2 - 2 * t, -t), complement=True,
    )
    return 2.0 * (1.0 - rr) ** t * r ** (2 * t - 1) * float(val)


def I_disk(z2: complex, t: float, spec: QuadratureSpec | None = None) -> float:
    """The w2-factor by 2-D disk quadrature (no use of the circle mean)."""
    spec = spec or _boundary_spec(abs(z2))
    r = abs(z2)
    val = integrate_disk(
        lambda w: np.abs(w) ** (1 - 2 * t) * (1.0 - np.abs(w) ** 2) ** (-t) / np.abs(1.0 - z2 * np.conj(w)) ** 2,
        spec,
        exponents=(0.5 - t, -t),
        focus=cmath.phase(z2),
    )
    return (1.0 - r * r) ** t * r ** (2 * t - 1) * float(np.real(val))


I_GRID_R = (0.1, 0.3, 0.5, 0.7, 0.9)
I_GRID_T = (0.55, 0.65, 0.75, 0.85, 0.95)


def I_grid_check(
    rs: Sequence[float] = I_GRID_R, ts: Sequence[float] = I_GRID_T, tol: float = 1e-7
) -> VerificationReport:
    """Worst relative gap between :func:`I_closed` and :func:`I_numeric` on a grid."""
    with stopwatch() as sw:
        gaps = [[abs(I_numeric(r, t) / I_closed(r, t) - 1.0) for r in rs] for t in ts]
    worst = max(max(row) for row in gaps)
    return VerificationReport(
        "lemma2.3.I_closed",
        {"r": list(rs), "t": list(ts)},
        computed=worst,
        reference=0.0,
        tolerance=tol,
        runtime_ms=sw["ms"],
        details={"relative_gaps": gaps},
    )


def schur_integral(
    z: HartogsPoint,
    t: float,
    spec: QuadratureSpec | None = None,
    method: str = "factorized",
) -> float:
    """T_t(z) by quadrature.

    ``method="factorized"`` multiplies the two disk integrals above (each
    graded toward its near-boundary peak); ``method="hartogs"`` integrates the
    full four-dimensional integrand with :func:`integrate_hartogs` and is
    meant for interior cross-checks.  ``spec`` defaults to a mesh resolving
    the distance of ``z2`` and ``z1/z2`` to the unit circle.
    """
    _require_t(t)
    if not isinstance(z, HartogsPoint):
        z = HartogsPoint(*z)
    lam = z.ratio
    spec = spec or _boundary_spec(abs(lam), abs(z.z2))
    if method == "factorized":
        return A_numeric(lam, t, spec) * I_disk(z.z2, t, spec)
    if method != "hartogs":
        raise ValueError(f"unknown method {method!r}")
    z1, z2 = z.z1, z.z2

    def f(w1, w2):
        a2 = np.abs(w2) ** 2
        hw = (a2 - np.abs(w1) ** 2) * (1.0 - a2)
        k = np.abs(z2 * np.conj(w2)) / (
            np.abs(1.0 - z2 * np.conj(w2)) ** 2 * np.abs(z2 * np.conj(w2) - z1 * np.conj(w1)) ** 2
        )
        return k * hw ** (-t)

    val = integrate_hartogs(
        f, spec,
        u_exponents=(0.0, -t),
        z2_exponents=(-0.5 - t, -t),
        u_focus=cmath.phase(lam) if lam else None,
        z2_focus=cmath.phase(z2),
    )
    return weight_h(z) ** t * float(np.real(val))


def schur_closed(z: HartogsPoint, t: float) -> float:
    """T_t(z) from the closed forms of both factors."""
    _require_t(t)
    return A_closed(abs(z.ratio) ** 2, t) * I_closed(abs(z.z2), t)


def schur_constant(t: float) -> float:
    """Gamma(1-t)^2 Gamma(t)^2, which equals pi^2 / sin^2(pi t)."""
    if not 0.0 < t < 1.0:
        raise DomainError(f"t = {t} is outside (0, 1)")
    a, b = sorted((t, 1.0 - t))
    return (gamma(a) * gamma(b)) ** 2


# ------------------------------------------------------------------ suprema along paths


def _path(path: BoundaryPath | int | None, default_depth: int = 6) -> BoundaryPath:
    if path is None:
        return BoundaryPath(default_depth)
    if isinstance(path, BoundaryPath):
        return path
    return BoundaryPath(int(path))


def schur_sup_estimate(
    t: float,
    path: BoundaryPath | int | None = None,
    spec: QuadratureSpec | None = None,
    tol: float = 0.05,
) -> VerificationReport:
    """Estimate sup T_t by its values along a boundary path.

    The reported value is the deepest path point; the check passes when it
    lies within ``tol`` (relative) of the Schur constant, the sequence is
    nondecreasing and no value exceeds the constant by more than 0.1%.
    """
    _require_t(t)
    bp = _path(path)
    const = schur_constant(t)
    with stopwatch() as sw:
        seq = [schur_integral(z, t, spec) for z in bp.points]
    closed = [schur_closed(z, t) for z in bp.points]
    monotone = all(b >= a for a, b in zip(seq, seq[1:]))
    bounded = all(v <= const * (1 + 1e-3) for v in seq)
    last = seq[-1]
    ok = abs(last - const) <= tol * const and monotone and bounded
    return VerificationReport(
        f"lemma2.3.sup.t{t:g}",
        {"t": t, "depth": bp.depth},
        computed=last,
        reference=const,
        tolerance=tol,
        passed=ok,
        runtime_ms=sw["ms"],
        details={
            "levels": bp.levels,
            "sequence": seq,
            "closed_form": closed,
            "monotone": monotone,
            "bounded": bounded,
            "relative_gap": (last - const) / const,
        },
    )


def forelli_rudin_closed(c: float, t2: float) -> float:
    """Gamma(t2 + 1) Gamma(c) / Gamma((2 + t2 + c)/2)^2."""
    SchurParams(c=c, t2=t2)
    return gamma(t2 + 1) * gamma(c) / gamma((2 + t2 + c) / 2) ** 2


def forelli_rudin_value(c: float, t2: float, r: float, spec: QuadratureSpec | None = None) -> float:
    """(1 - r^2)^c int (1 - |w|^2)^t2 |1 - r conj(w)|^-(2 + t2 + c) dnu(w) by quadrature."""
    SchurParams(c=c, t2=t2)
    spec = spec or _boundary_spec(r)
    e = 2.0 + t2 + c
    val = integrate_disk(
        lambda w: (1.0 - np.abs(w) ** 2) ** t2 / np.abs(1.0 - r * np.conj(w)) ** e,
        spec,
        exponents=(0.0, t2),
        focus=0.0,
    )
    return (1.0 - r * r) ** c * float(np.real(val))


def forelli_rudin_path_closed(c: float, t2: float, r: float) -> float:
    """Closed form of :func:`forelli_rudin_value` at |z| = r."""
    b = (2.0 + t2 - c) / 2.0
    return float(hyp2f1(b, b, t2 + 2.0, r * r)) / (t2 + 1.0)


def forelli_rudin_sup(
    c: float,
    t2: float,
    path: BoundaryPath | int | None = None,
    spec: QuadratureSpec | None = None,
    tol: float = 0.01,
) -> VerificationReport:
    """Numeric supremum along |z| = 1 - 2^-k against the closed form."""
    SchurParams(c=c, t2=t2)
    bp = _path(path, 8)
    radii = bp.radii
    with stopwatch() as sw:
        seq = [forelli_rudin_value(c, t2, r, spec) for r in radii]
    ref = forelli_rudin_closed(c, t2)
    sup = max(seq)
    return VerificationReport(
        f"lemma2.2.sup.c{c:g}_t{t2:g}",
        {"c": c, "t": t2, "depth": bp.depth},
        computed=sup,
        reference=ref,
        tolerance=tol,
        runtime_ms=sw["ms"],
        details={
            "levels": bp.levels,
            "sequence": seq,
            "closed_form": [forelli_rudin_path_closed(c, t2, r) for r in radii],
            "relative_gap": (sup - ref) / ref,
        },
    )


# ------------------------------------------------------------------ circle identity, monotonicity


def torus_identity_check(a: float, r2: float, angular_nodes: int = 512, tol: float = 1e-8) -> VerificationReport:
    """Circle mean of |1 - z conj(zeta)|^-2a against F(a, a; 1; |z|^2)."""
    if not 0.0 <= r2 < 1.0:
        raise DomainError("r2 must lie in [0, 1)")
    z = math.sqrt(r2)
    with stopwatch() as sw:
        lhs = float(np.real(integrate_torus(lambda zeta: np.abs(1.0 - z * np.conj(zeta)) ** (-2.0 * a), angular_nodes)))
    rhs = float(hyp2f1(a, a, 1.0, r2))
    details = {"lhs": lhs, "rhs": rhs}
    if a == 1.0:
        details["closed"] = 1.0 / (1.0 - r2)
    return VerificationReport(
        f"lemma2.1.a{a:g}_r2{r2:g}",
        {"a": a, "r2": r2, "angular_nodes": angular_nodes},
        computed=lhs,
        reference=rhs,
        tolerance=tol,
        runtime_ms=sw["ms"],
        details=details,
    )


DEFAULT_LAMBDA_GRID = tuple(np.round(np.linspace(0.05, 0.95, 19), 10)) + (0.99, 0.999)


def monotone_g_check(t: float, grid: Sequence[float] | None = None, terms: int = 100) -> VerificationReport:
    """Monotonicity of f(x) = x^(t - 1/2) F(3/2 - 2t, 1 - t; 5/2 - 2t; x) on [0, 1).

    For t >= 3/4 the derivative is x^(t - 3/2) g(x) with
    g(x) = (t - 1/2) F(3/2-2t, 1-t; 5/2-2t; x) + x F(5/2-2t, 2-t; 7/2-2t; x),
    and ``g`` is checked positive on the grid.  For t < 3/4 the first
    ``terms`` Taylor coefficients of the hypergeometric factor are checked
    positive.  In both cases sampled differences of ``f`` must be positive.
    """
    _require_t(t)
    xs = np.asarray(DEFAULT_LAMBDA_GRID if grid is None else grid, dtype=float)
    if np.any((xs <= 0) | (xs >= 1)):
        raise DomainError("grid points must lie in (0, 1)")
    xs = np.sort(xs)
    a, b, c = 1.5 - 2 * t, 1.0 - t, 2.5 - 2 * t
    with stopwatch() as sw:
        fvals = xs ** (t - 0.5) * hyp2f1(a, b, c, xs)
        increasing = bool(np.all(np.diff(fvals) > 0))
        details: dict = {"case": "g" if a <= 0 else "coefficients", "increasing": increasing}
        if a <= 0:
            g = (t - 0.5) * hyp2f1(a, b, c, xs) + xs * hyp2f1(a + 1, b + 1, c + 1, xs)
            g0 = t - 0.5
            details.update(g0=g0, g_min=float(g.min()))
            computed = float(min(g0, g.min()))
        else:
            coef = [1.0]
            for n in range(terms - 1):
                coef.append(coef[-1] * (a + n) * (b + n) / ((c + n) * (n + 1)))
            details["coef_min"] = float(min(coef))
            computed = float(min(coef))
    return VerificationReport(
        f"lemma2.3.monotone.t{t:g}",
        {"t": t, "points": int(xs.size)},
        computed=computed,
        passed=computed > 0 and increasing,
        runtime_ms=sw["ms"],
        details=details,
    )


# ------------------------------------------------------------------ bounds


def upper_bound(e: ExponentPair | float) -> float:
    """Gamma(1 - 2/p)^2 Gamma(2/p)^2, the Schur-test upper bound."""
    e = _as_pair(e)
    s = 2.0 / e.p
    if e.p == 2.0:
        raise PoleError("upper bound has a Gamma(0) pole at p = 2")
    return (gamma(1.0 - s) * gamma(s)) ** 2


def lower_bound(e: ExponentPair | float) -> float:
    """Gamma(2/p)^2 Gamma(2/q)^2, the test-function lower bound."""
    e = _as_pair(e)
    a, b = sorted((2.0 / e.p, 2.0 / e.q))
    return (gamma(a) * gamma(b)) ** 2


@dataclass(frozen=True)
class BoundsRow:
    p: float
    q: float
    lower: float
    upper: float
    note: str = ""


def bounds_table(p_grid: Iterable[float]) -> list[BoundsRow]:
    """Rows (p, q, lower, upper); at p = 2 the upper entry is +inf and the
    exact norm 1 is noted."""
    rows = []
    for p in p_grid:
        e = ExponentPair(float(p))
        lo = lower_bound(e)
        if e.p == 2.0:
            rows.append(BoundsRow(e.p, e.q, lo, math.inf, "exact norm 1 (orthogonal projection)"))
        else:
            rows.append(BoundsRow(e.p, e.q, lo, upper_bound(e)))
    return rows



def bounds_checks(n_samples: int = 100, seed: int = 0, tol: float = 1e-6) -> list[VerificationReport]:
    """Closed-form arithmetic of the two bounds.

    Values at p = 3 against 4 pi^2 / 27 and 4 pi^2 / 3, p <-> q symmetry,
    lower < upper on random p in (4/3, 4) and the p = 2 row.
    """
    reports = [
        VerificationReport("bounds.lower.p3", {"p": 3.0}, lower_bound(3.0), 4 * math.pi**2 / 27, tol),
        VerificationReport("bounds.upper.p3", {"p": 3.0}, upper_bound(3.0), 4 * math.pi**2 / 3, tol),
    ]
    rng = np.random.default_rng(seed)
    ps = rng.uniform(4.0 / 3.0, 4.0, n_samples)
    ps = ps[np.abs(ps - 2.0) > 1e-9]
    with stopwatch() as sw:
        asym = 0.0
        ordered = True
        for p in ps:
            e = ExponentPair(float(p))
            lo, up = lower_bound(e), upper_bound(e)
            # mixed rule as in VerificationReport; upper reaches ~5e3 near p = 4/3
            asym = max(asym, abs(lo - lower_bound(e.q)) / max(1.0, lo), abs(up - upper_bound(e.q)) / max(1.0, up))
            ordered = ordered and lo < up
    reports.append(VerificationReport(
        "bounds.symmetry", {"samples": len(ps), "seed": seed}, asym, 0.0, 1e-13, runtime_ms=sw["ms"]
    ))
    reports.append(VerificationReport(
        "bounds.ordered", {"samples": len(ps), "seed": seed}, float(ordered), passed=ordered, tolerance=0.0
    ))
    row = bounds_table([2.0])[0]
    p2_ok = row.lower == 1.0 and math.isinf(row.upper) and bool(row.note)
    reports.append(VerificationReport(
        "bounds.p2", {"p": 2.0}, row.lower, 1.0, 0.0, passed=p2_ok, details={"note": row.note}
    ))
    return reports

# ------------------------------------------------------------------ Schur test premises


def random_interior_points(n: int, seed: int = 0, rmax: float = 0.9) -> list[HartogsPoint]:
    """``n`` points with |z2| in [0.05, rmax], |z1/z2| in [0, rmax], random phases."""
    rng = np.random.default_rng(seed)
    r2 = rng.uniform(0.05, rmax, n)
    rho = rng.uniform(0.0, rmax, n)
    th = rng.uniform(0.0, 2 * math.pi, (n, 2))
    return [HartogsPoint.from_moduli(a, b, c, d) for a, b, (c, d) in zip(r2, rho, th)]


def _truncated_factor(weight_fn, smax: float, delta: float, angular_nodes: int, levels: int) -> float:
    """int over |w|^2 <= smax of weight_fn(w, 1 - |w|^2) dnu(w); 1 - smax = delta."""
    x, c, w = graded_rule(12, levels + 4, 2.0, inner_panels=6)
    s = smax * x
    one_minus_s = delta + smax * c
    theta = 2 * math.pi * np.arange(angular_nodes) / angular_nodes
    pts = np.sqrt(s)[:, None] * np.exp(1j * theta)[None, :]
    vals = weight_fn(pts, one_minus_s[:, None])
    rows = vals.mean(axis=1)
    return smax * math.fsum(w * rows)


def truncated_schur_integral(z: HartogsPoint, t: float, delta: float, angular_nodes: int = 128) -> float:
    """T_t(z) with both fibres cut off at |u|^2, |w2|^2 <= 1 - delta.

    Unlike :func:`schur_integral` any ``t > 0`` is allowed; for ``t >= 1`` the
    full integral diverges and the truncations grow without bound as
    ``delta -> 0``.  Being an integral of a positive function over a subset,
    the truncation is a lower bound for the full integral.
    """
    if not t > 0:
        raise DomainError("t must be positive")
    lam, z2 = z.ratio, z.z2
    r = abs(z2)
    levels = max(1, math.ceil(-math.log2(delta)))
    smax = 1.0 - delta
    au = _truncated_factor(
        lambda u, om: om ** (-t) / np.abs(1.0 - lam * np.conj(u)) ** 2, smax, delta, angular_nodes, levels
    )
    aw = _truncated_factor(
        lambda w, om: np.abs(w) ** (1 - 2 * t) * om ** (-t) / np.abs(1.0 - z2 * np.conj(w)) ** 2,
        smax, delta, angular_nodes, levels,
    )
    return (1.0 - abs(lam) ** 2) ** t * aw * au * (1.0 - r * r) ** t * r ** (2 * t - 1)


DEFAULT_DELTAS = (2.0**-4, 2.0**-8, 2.0**-16)


def schur_premise_check(
    p: float,
    n_points: int = 20,
    seed: int = 0,
    deltas: Sequence[float] = DEFAULT_DELTAS,
    slack: float = 0.02,
) -> list[VerificationReport]:
    """Both Schur-test inequalities with h_pq = h^(-2/(pq)) and constant
    schur_constant(2/p) (1 + slack) at random interior points.

    The first reduces to T_{2/p}(z) <= C.  The second, by symmetry of |K|,
    reduces to T_{2/q}(w) <= C; for p > 2 its exponent 2/q exceeds 1 and it
    is evaluated through truncations, each of which bounds the full
    integral from below.
    """
    e = ExponentPair(p)
    t1, t2 = 2.0 / e.p, 2.0 / e.q
    const = schur_constant(t1)
    pts = random_interior_points(n_points, seed)
    reports = []
    with stopwatch() as sw:
        r1 = [schur_integral(z, t1) / const for z in pts]
    reports.append(VerificationReport(
        f"schur.premise1.p{p:g}",
        {"p": p, "t": t1, "points": n_points, "seed": seed},
        computed=max(r1),
        passed=max(r1) <= 1.0 + slack,
        tolerance=slack,
        runtime_ms=sw["ms"],
        details={"ratios": r1},
    ))
    with stopwatch() as sw:
        if 0.5 < t2 < 1.0:
            per_delta = {"full": [schur_integral(z, t2) / const for z in pts]}
            worst = max(per_delta["full"])
        else:
            per_delta = {f"{d:g}": [truncated_schur_integral(z, t2, d) / const for z in pts] for d in deltas}
            worst = max(max(v) for v in per_delta.values())
    reports.append(VerificationReport(
        f"schur.premise2.p{p:g}",
        {"p": p, "t": t2, "points": n_points, "seed": seed},
        computed=worst,
        passed=worst <= 1.0 + slack,
        tolerance=slack,
        runtime_ms=sw["ms"],
        details={"max_ratio_by_cutoff": {k: max(v) for k, v in per_delta.items()}, "divergent": t2 >= 1.0},
    ))
    return reports


__all__ = [
    "I_GRID_R",
    "I_GRID_T",
    "I_grid_check",
    "bounds_checks",
    "A_closed",
    "A_numeric",
    "BoundsRow",
    "ExponentPair",
    "I_closed",
    "I_disk",
    "I_numeric",
    "SchurParams",
    "bounds_table",
    "forelli_rudin_closed",
    "forelli_rudin_path_closed",
    "forelli_rudin_sup",
    "forelli_rudin_value",
    "lower_bound",
    "monotone_g_check",
    "random_interior_points",
    "schur_closed",
    "schur_constant",
    "schur_integral",
    "schur_premise_check",
    "schur_sup_estimate",
    "torus_identity_check",
    "truncated_schur_integral",
    "upper_bound",
    "weight_h",
]
