"""Quadrature on the circle, the unit disk, the punctured disk and the Hartogs triangle.

All disk measures are normalized: ``nu`` has unit mass on the disk and
``mu = dV / pi^2`` has mass 1/2 on the Hartogs triangle.  The radial variable
is ``s = |z|^2`` so that ``d nu = ds dtheta / (2 pi)``.  In ``s`` the rule is
composite Gauss-Legendre on a geometric mesh graded toward both ends; the two
end panels switch to Gauss-Jacobi when the caller supplies the integrand's
power behaviour ``s^a0`` near 0 and ``(1 - s)^a1`` near 1.

The angular rule is the equal-weight trapezoid rule unless
``QuadratureSpec.focus_panels`` is positive, in which case a composite
Gauss-Legendre rule graded toward a focus angle is used.  That is needed for
integrands peaked at ``arg(xi)`` with ``|xi|`` close to 1.

Integrands are vectorized callables: ``f(z)`` on arrays of complex points for
the disk, ``f(z1, z2)`` on broadcastable arrays for the Hartogs triangle.
Partial sums are reduced per radial row and the rows are combined with
``math.fsum`` in a fixed order, so results do not depend on block sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.special import roots_jacobi

from .errors import DomainError, NonFinite

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class QuadratureSpec:
    """Discretization parameters.

    ``panels`` geometric panels are placed toward s = 1 and
    ``max(4, panels // 2)`` toward s = 0, each with ``radial_nodes``
    Gauss points.  ``grading`` is the ratio between neighbouring panel
    widths.  ``focus_panels > 0`` replaces the trapezoid angle rule by
    ``2 * (focus_panels + 1)`` Gauss panels of ``focus_nodes`` points each.
    """

    radial_nodes: int = 16
    angular_nodes: int = 64
    panels: int = 12
    grading: float = 2.0
    focus_panels: int = 0
    focus_nodes: int = 12

    def __post_init__(self) -> None:
        if self.radial_nodes < 1:
            raise ValueError("radial_nodes must be positive")
        if self.angular_nodes < 4:
            raise ValueError("angular_nodes must be at least 4")
        if self.panels < 1:
            raise ValueError("panels must be at least 1")
        if self.grading < 1:
            raise ValueError("grading must be >= 1")
        if self.focus_panels < 0 or self.focus_nodes < 1:
            raise ValueError("focus_panels must be >= 0 and focus_nodes >= 1")

    def refined(self) -> "QuadratureSpec":
        """Double the radial nodes and the panel count."""
        return replace(self, radial_nodes=2 * self.radial_nodes, panels=2 * self.panels)

    @classmethod
    def for_boundary(cls, distance: float, radial_nodes: int = 12, focus_nodes: int = 10) -> "QuadratureSpec":
        """A spec resolving peaks at distance ``distance`` from the unit circle."""
        levels = max(1, math.ceil(-math.log2(max(distance, 1e-300))))
        return cls(
            radial_nodes=radial_nodes,
            angular_nodes=64,
            panels=levels + 8,
            grading=2.0,
            focus_panels=levels + 5,
            focus_nodes=focus_nodes,
        )


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class HartogsPoint:
    """A point (z1, z2) of the Hartogs triangle, |z1| < |z2| < 1."""

    z1: complex
    z2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "z1", complex(self.z1))
        object.__setattr__(self, "z2", complex(self.z2))
        if not abs(self.z1) < abs(self.z2) < 1.0:
            raise DomainError(f"({self.z1}, {self.z2}) is not in the Hartogs triangle")

    @classmethod
    def from_moduli(cls, r2: float, rho: float, theta1: float = 0.0, theta2: float = 0.0) -> "HartogsPoint":
        """Point with |z2| = r2 and |z1/z2| = rho."""
        z2 = r2 * np.exp(1j * theta2)
        return cls(rho * r2 * np.exp(1j * theta1), z2)

    @property
    def ratio(self) -> complex:
        return self.z1 / self.z2


@dataclass(frozen=True)
class BoundaryPath:
    """Points with |z2| = |z1/z2| = 1 - 2^-k for k = start..depth, phases zero.

    All quantities studied along such paths are invariant under the torus
    rotations (z1, z2) -> (e^{i a} z1, e^{i b} z2), so real coordinates
    lose nothing.
    """

    depth: int
    start: int = 2

    def __post_init__(self) -> None:
        if self.start < 1 or self.depth < self.start:
            raise DomainError("need 1 <= start <= depth")

    @property
    def levels(self) -> list[int]:
        return list(range(self.start, self.depth + 1))

    @property
    def radii(self) -> list[float]:
        return [1.0 - 2.0 ** (-k) for k in self.levels]

    @property
    def points(self) -> list[HartogsPoint]:
        return [HartogsPoint.from_moduli(r, r) for r in self.radii]


# ------------------------------------------------------------------ 1-D rules


@lru_cache(maxsize=None)
def _legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


@lru_cache(maxsize=None)
def _jacobi_left(n: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    # rule on [-1, 1] for f with f ~ (1 + y)^alpha near y = -1, as plain weights
    y, w = roots_jacobi(n, 0.0, alpha)
    return y, w / (1.0 + y) ** alpha


def _end_panel(n: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Rule on [0, 1] exact for x^alpha * poly; returns (x, 1 - x, w)."""
    if alpha == 0.0:
        y, w = _legendre(n)
    else:
        if not alpha > -1.0:
            raise DomainError(f"endpoint exponent {alpha} is not integrable")
        y, w = _jacobi_left(n, float(alpha))
    return 0.5 * (1.0 + y), 0.5 * (1.0 - y), 0.5 * w


def graded_rule(
    nodes: int,
    panels: int,
    grading: float = 2.0,
    exponents: tuple[float, float] = (0.0, 0.0),
    inner_panels: int | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Composite rule on [0, 1] graded geometrically toward both ends.

    Returns nodes ``x``, complements ``1 - x`` (computed without
    cancellation near 1) and weights.  The innermost panel at each end is a
    Gauss-Jacobi panel for the given endpoint exponents.
    """
    inner = max(4, panels // 2) if inner_panels is None else inner_panels
    g = float(grading)
    if g == 1.0:
        left = list(np.linspace(0.0, 0.5, inner + 1))
        right_c = list(np.linspace(0.5, 0.0, panels + 1))
    else:
        left = [0.0] + [0.5 * g ** (-j) for j in range(inner - 1, -1, -1)]
        right_c = [0.5 * g ** (-j) for j in range(panels)] + [0.0]
    xs, cs, ws = [], [], []
    # left half, panels [left[i], left[i+1]]
    for i in range(len(left) - 1):
        a, b = left[i], left[i + 1]
        h = b - a
        if i == 0:
            x, _, w = _end_panel(nodes, exponents[0])
        else:
            y, w0 = _legendre(nodes)
            x, w = 0.5 * (1.0 + y), 0.5 * w0
        xs.append(a + h * x)
        cs.append(1.0 - (a + h * x))
        ws.append(h * w)
    # right half in complement coordinates c = 1 - s, panels [right_c[i+1], right_c[i]]
    for i in range(len(right_c) - 1):
        hi, lo = right_c[i], right_c[i + 1]
        h = hi - lo
        if i == len(right_c) - 2:
            x, _, w = _end_panel(nodes, exponents[1])
        else:
            y, w0 = _legendre(nodes)
            x, w = 0.5 * (1.0 + y), 0.5 * w0
        c = lo + h * x
        cs.append(c)
        xs.append(1.0 - c)
        ws.append(h * w)
    return np.concatenate(xs), np.concatenate(cs), np.concatenate(ws)


def integrate_interval(
    f: Callable[..., np.ndarray],
    a: float,
    b: float,
    *,
    nodes: int = 16,
    panels: int = 12,
    grading: float = 2.0,
    exponents: tuple[float, float] = (0.0, 0.0),
    complement: bool = False,
) -> float | complex:
    """Integrate ``f`` over [a, b] with ``f ~ (x-a)^e0`` and ``(b-x)^e1`` at the ends.

    The exponents only select the end-panel rules; ``f`` must include the
    singular factors itself.  With ``complement=True`` it is called as
    ``f(x, b - x)`` with the second argument free of cancellation.
    """
    x, c, w = graded_rule(nodes, panels, grading, exponents, inner_panels=panels)
    if complement:
        vals = np.asarray(f(a + (b - a) * x, (b - a) * c))
    else:
        vals = np.asarray(f(a + (b - a) * x))
    _require_finite(vals)
    return (b - a) * _dot(w, vals)


def _dot(w: np.ndarray, vals: np.ndarray) -> float | complex:
    prods = w * vals
    if np.iscomplexobj(prods):
        return complex(math.fsum(prods.real), math.fsum(prods.imag))
    return math.fsum(prods)


def _require_finite(vals: np.ndarray) -> None:
    if not np.all(np.isfinite(vals)):
        raise NonFinite("integrand is not finite at some quadrature node")


# ------------------------------------------------------------------ circle


def trapezoid_angles(n: int) -> tuple[np.ndarray, np.ndarray]:
    return TWO_PI * np.arange(n) / n, np.full(n, 1.0 / n)


def focused_angles(panels: int, nodes: int, focus: float, grading: float = 2.0) -> tuple[np.ndarray, np.ndarray]:
    """Gauss rule on a circle, graded toward ``focus``; weights sum to 1."""
    y, w0 = _legendre(nodes)
    edges = [0.0] + [math.pi * grading ** (-j) for j in range(panels, -1, -1)]
    ts, ws = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        ts.append(0.5 * (a + b) + 0.5 * (b - a) * y)
        ws.append(0.5 * (b - a) * w0)
    t = np.concatenate(ts)
    w = np.concatenate(ws)
    theta = np.concatenate([focus - t[::-1], focus + t])
    weights = np.concatenate([w[::-1], w]) / TWO_PI
    return theta, weights


def angle_rule(spec: QuadratureSpec, focus: float | None) -> tuple[np.ndarray, np.ndarray]:
    if spec.focus_panels > 0:
        return focused_angles(spec.focus_panels, spec.focus_nodes, 0.0 if focus is None else focus, spec.grading)
    return trapezoid_angles(spec.angular_nodes)


def integrate_torus(f: Callable[[np.ndarray], np.ndarray], angular_nodes: int = 64) -> complex:
    """Mean of ``f`` over the unit circle by the trapezoid rule on roots of unity."""
    theta, w = trapezoid_angles(angular_nodes)
    vals = np.asarray(f(np.exp(1j * theta)), dtype=complex)
    _require_finite(vals)
    return _dot(w, vals)


# ------------------------------------------------------------------ disk


@dataclass(frozen=True)
class DiskRule:
    s: np.ndarray          # radial nodes in s = |z|^2
    one_minus_s: np.ndarray
    ws: np.ndarray
    theta: np.ndarray
    wt: np.ndarray

    @property
    def points(self) -> np.ndarray:
        return np.sqrt(self.s)[:, None] * np.exp(1j * self.theta)[None, :]

    @property
    def size(self) -> int:
        return self.s.size * self.theta.size


def disk_rule(
    spec: QuadratureSpec,
    exponents: tuple[float, float] = (0.0, 0.0),
    focus: float | None = None,
) -> DiskRule:
    s, c, ws = graded_rule(spec.radial_nodes, spec.panels, spec.grading, exponents)
    theta, wt = angle_rule(spec, focus)
    return DiskRule(s, c, ws, theta, wt)


def reduce_rows(row_weights: np.ndarray, values: np.ndarray, col_weights: np.ndarray) -> complex:
    """Fixed-order compensated reduction of a tensor-rule sum."""
    rows = values @ col_weights
    _require_finite(rows)
    return _dot(row_weights, rows)


def integrate_disk(
    f: Callable[[np.ndarray], np.ndarray],
    spec: QuadratureSpec = DEFAULT_SPEC,
    *,
    exponents: tuple[float, float] = (0.0, 0.0),
    focus: float | None = None,
) -> complex:
    """Integral of ``f`` over the unit disk against normalized area measure.

    ``exponents = (a0, a1)`` declare ``f ~ s^a0`` at the center and
    ``f ~ (1 - s)^a1`` at the rim (``s = |z|^2``).  ``focus`` is the angle
    of a near-boundary peak when ``spec.focus_panels > 0``.
    """
    rule = disk_rule(spec, exponents, focus)
    vals = np.asarray(f(rule.points))
    vals = np.broadcast_to(vals, (rule.s.size, rule.theta.size))
    _require_finite(vals)
    return reduce_rows(rule.ws, vals, rule.wt)


def integrate_punctured_disk(
    f: Callable[[np.ndarray], np.ndarray],
    spec: QuadratureSpec = DEFAULT_SPEC,
    *,
    exponents: tuple[float, float] | None = None,
    focus: float | None = None,
) -> complex:
    """As :func:`integrate_disk`, for integrands that may blow up at the origin.

    No node is ever placed at 0.  When the center exponent is not supplied it
    is estimated from the decay of the integral over the innermost geometric
    panels; a non-decaying sequence (exponent <= -1 in ``s``, i.e. a
    singularity like ``|z|^-2`` or worse) raises :class:`NonFinite`.
    """
    if exponents is None:
        a0 = _estimate_center_exponent(f, spec)
        exponents = (a0, 0.0)
    return integrate_disk(f, spec, exponents=exponents, focus=focus)


def _estimate_center_exponent(f, spec: QuadratureSpec) -> float:
    g = spec.grading if spec.grading > 1 else 2.0
    theta, wt = trapezoid_angles(spec.angular_nodes)
    y, w0 = _legendre(spec.radial_nodes)
    inner = max(4, spec.panels // 2)
    contrib = []
    # three innermost geometric panels [h g^{-1}, h], [h g^{-2}, h g^{-1}], ...
    h = 0.5 * g ** (-(inner - 1))
    for j in range(1, 4):
        b, a = h * g ** (-(j - 1)), h * g ** (-j)
        s = a + (b - a) * 0.5 * (1 + y)
        z = np.sqrt(s)[:, None] * np.exp(1j * theta)[None, :]
        vals = np.broadcast_to(np.asarray(f(z)), z.shape)
        if not np.all(np.isfinite(vals)):
            raise NonFinite("integrand is not finite near the puncture")
        contrib.append(abs(reduce_rows(0.5 * (b - a) * w0, vals, wt)))
    c1, c2, c3 = contrib
    if c1 == 0.0 or c2 == 0.0:
        return 0.0
    rho = math.sqrt(c3 / c1)
    if rho >= 1.0 - 1e-9:
        raise NonFinite("integral over shrinking panels around 0 does not decay; the singularity is not integrable")
    alpha = -math.log(rho) / math.log(g) - 1.0
    # snap to a clean value when the integrand is smooth or near a half-integer power
    snapped = round(2 * alpha) / 2
    if abs(alpha - snapped) < 1e-3:
        alpha = snapped
    return alpha if alpha < 0 else 0.0


# ------------------------------------------------------------------ Hartogs triangle


def integrate_hartogs(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    spec: QuadratureSpec = DEFAULT_SPEC,
    *,
    u_exponents: tuple[float, float] = (0.0, 0.0),
    z2_exponents: tuple[float, float] = (0.0, 0.0),
    u_focus: float | None = None,
    z2_focus: float | None = None,
    max_elems: int = 1_000_000,
) -> complex:
    """Integral of ``f(z1, z2)`` over the Hartogs triangle against ``mu``.

    Uses the fibration z1 = u z2: the integral equals the iterated disk
    integral of ``f(u z2, z2) |z2|^2`` over ``u`` and ``z2``.  The exponent
    hints describe ``f`` itself in ``|u|^2`` and ``|z2|^2``; the ``|z2|^2``
    Jacobian is accounted for here.
    """
    ru = disk_rule(spec, u_exponents, u_focus)
    rz = disk_rule(spec, (z2_exponents[0] + 1.0, z2_exponents[1]), z2_focus)
    u = ru.points.ravel()
    wu = (ru.ws[:, None] * ru.wt[None, :]).ravel()
    z2 = rz.points
    nrow, ncol = z2.shape
    step = max(1, max_elems // (ncol * u.size))
    rows = np.empty(nrow, dtype=complex)
    for i0 in range(0, nrow, step):
        i1 = min(nrow, i0 + step)
        zb = z2[i0:i1].ravel()
        vals = np.asarray(f(u[None, :] * zb[:, None], zb[:, None]), dtype=complex)
        vals = np.broadcast_to(vals, (zb.size, u.size))
        _require_finite(vals)
        inner = (vals @ wu) * np.abs(zb) ** 2
        rows[i0:i1] = inner.reshape(i1 - i0, ncol) @ rz.wt
    return _dot(rz.ws, rows)


def integrate_hartogs_direct(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    radial_nodes: int = 24,
    angular_nodes: int = 48,
    panels: int = 6,
) -> complex:
    """Iterated polar quadrature over {|z1| < |z2| < 1} without the fibration.

    ``z2 = r2 e^{i t2}`` with ``r2`` in (0, 1), then ``z1 = r1 e^{i t1}``
    with ``r1`` in (0, r2), each radius by graded Gauss-Legendre in ``r``
    (not in ``r^2``) and angles by the trapezoid rule; the Jacobian is
    ``r1 r2 / pi^2`` times the angular element.  Intended as an independent
    oracle for :func:`integrate_hartogs` on smooth bounded integrands.
    """
    r, _, wr = graded_rule(radial_nodes, panels, 2.0)
    theta, wt = trapezoid_angles(angular_nodes)
    e = np.exp(1j * theta)
    total = []
    for r2, w2 in zip(r, wr):
        z2 = r2 * e                                  # (n_t2,)
        r1 = r2 * r                                  # (n_r1,)
        w1 = r2 * wr * r1                            # d r1 * r1
        z1 = r1[:, None, None] * e[None, :, None]    # (n_r1, n_t1, 1)
        vals = np.asarray(f(z1, z2[None, None, :]), dtype=complex)
        vals = np.broadcast_to(vals, (r.size, theta.size, theta.size))
        _require_finite(vals)
        # angular means: dtheta/(2 pi) each, so dV/pi^2 = 4 r1 r2 dr1 dr2 * means
        m = np.einsum("ijk,j,k->i", vals, wt, wt)
        total.append(4.0 * r2 * w2 * complex(np.dot(w1, m)))
    return complex(math.fsum(t.real for t in total), math.fsum(t.imag for t in total))
