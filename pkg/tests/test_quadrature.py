import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate as sint
from scipy.special import beta

from hartogs.errors import DomainError, NonFinite
from hartogs.quadrature import (
    BoundaryPath,
    HartogsPoint,
    QuadratureSpec,
    graded_rule,
    integrate_disk,
    integrate_hartogs,
    integrate_hartogs_direct,
    integrate_interval,
    integrate_punctured_disk,
    integrate_torus,
)

exps = st.floats(min_value=-0.9, max_value=2.0)


@settings(max_examples=40, deadline=None)
@given(exps, exps)
def test_graded_rule_jacobi_moments(a, b):
    x, c, w = graded_rule(12, 8, 2.0, (a, b))
    val = math.fsum(w * x**a * c**b)
    assert val == pytest.approx(beta(a + 1, b + 1), rel=1e-11)


def test_graded_rule_complement_exact():
    x, c, w = graded_rule(8, 20, 2.0)
    assert np.all(c > 0)
    assert np.allclose(x + c, 1.0, atol=1e-15, rtol=0)
    assert math.fsum(w) == pytest.approx(1.0, abs=1e-14)


def test_integrate_interval_vs_scipy_quad():
    f = lambda t: np.exp(t) / np.sqrt(t)
    ref, _ = sint.quad(lambda t: math.exp(t) / math.sqrt(t), 0, 2, limit=200)
    assert integrate_interval(f, 0.0, 2.0, exponents=(-0.5, 0.0)) == pytest.approx(ref, rel=1e-11)


def test_integrate_interval_rejects_nonfinite():
    with pytest.raises(NonFinite), np.errstate(divide="ignore"):
        integrate_interval(lambda t: 1.0 / (t - t), 0.0, 1.0)


@pytest.mark.parametrize("n", [0, 1, 3])
def test_torus_moments(n):
    # mean of |zeta|^0 zeta^n over the circle is delta_{n0}
    val = integrate_torus(lambda z: z**n, 32)
    assert abs(val - (1.0 if n == 0 else 0.0)) < 1e-14


@pytest.mark.parametrize("k", [0, 1, 2, 5])
def test_disk_radial_moments(k):
    # int |w|^{2k} dnu = 1/(k+1)
    val = integrate_disk(lambda w: np.abs(w) ** (2 * k), QuadratureSpec(radial_nodes=8, panels=4))
    assert val.real == pytest.approx(1.0 / (k + 1), rel=1e-13)


@pytest.mark.parametrize("t", [-0.5, 0.0, 1.5])
def test_disk_weighted_moment(t):
    # int (1 - |w|^2)^t dnu = 1/(t+1)
    val = integrate_disk(lambda w: (1 - np.abs(w) ** 2) ** t, exponents=(0.0, t))
    assert val.real == pytest.approx(1.0 / (t + 1), rel=1e-12)


def test_disk_near_boundary_peak():
    # int |1 - z conj(w)|^{-4} dnu(w) = 1/(1 - |z|^2)^2
    r = 1 - 2.0**-10
    spec = QuadratureSpec.for_boundary(1 - r)
    val = integrate_disk(lambda w: np.abs(1 - r * np.conj(w)) ** -4, spec, focus=0.0)
    assert val.real == pytest.approx(1 / (1 - r * r) ** 2, rel=1e-9)


def test_punctured_disk_estimates_center_exponent():
    # |w|^{-1} = s^{-1/2}; int = 2
    val = integrate_punctured_disk(lambda w: 1.0 / np.abs(w))
    assert val.real == pytest.approx(2.0, rel=1e-10)
    with pytest.raises(NonFinite):
        integrate_punctured_disk(lambda w: 1.0 / np.abs(w) ** 2)


def test_hartogs_volume_and_monomial_norms():
    spec = QuadratureSpec(radial_nodes=8, angular_nodes=16, panels=3)
    assert integrate_hartogs(lambda z1, z2: np.ones_like(z1), spec).real == pytest.approx(0.5, rel=1e-13)
    # ||z1^j z2^k||^2 = 1/((j+1)(j+k+2))
    for j, k in [(1, 0), (0, -1), (2, -1)]:
        val = integrate_hartogs(
            lambda z1, z2: np.abs(z1) ** (2 * j) * np.abs(z2) ** (2 * k), spec, z2_exponents=(min(0, j + k), 0)
        )
        assert val.real == pytest.approx(1 / ((j + 1) * (j + k + 2)), rel=1e-12)


def test_hartogs_fibration_vs_direct_polar():
    f = lambda z1, z2: np.abs(z1 + 0.3) ** 2 * np.abs(z2) ** 3 + np.real(z1 * np.conj(z2))
    a = integrate_hartogs(f, QuadratureSpec(radial_nodes=10, angular_nodes=32, panels=4), z2_exponents=(0, 0))
    b = integrate_hartogs_direct(f, radial_nodes=16, angular_nodes=24, panels=4)
    assert abs(a - b) < 1e-10


def test_hartogs_point_validation():
    with pytest.raises(DomainError):
        HartogsPoint(0.5, 0.5)
    with pytest.raises(DomainError):
        HartogsPoint(0.0, 1.0)
    z = HartogsPoint.from_moduli(0.8, 0.5, 1.0, 2.0)
    assert abs(z.ratio) == pytest.approx(0.5)
    assert abs(z.z2) == pytest.approx(0.8)


def test_boundary_path():
    bp = BoundaryPath(5)
    assert bp.levels == [2, 3, 4, 5]
    assert bp.radii[-1] == 1 - 2.0**-5
    assert all(abs(p.z2) == abs(p.ratio) for p in bp.points)
    with pytest.raises(DomainError):
        BoundaryPath(1, start=2)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(radial_nodes=0)
    s = QuadratureSpec.for_boundary(2.0**-8)
    assert s.focus_panels == 13
    assert s.refined().panels == 2 * s.panels
