import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hartogs.errors import DomainError
from hartogs.kernel import (
    MonomialIndex,
    annihilation_check,
    bergman_kernel,
    default_grid,
    kernel_series_partial,
    monomial_norm_sq,
    project,
    reproduce_check,
)
from hartogs.quadrature import HartogsPoint, QuadratureSpec, integrate_hartogs

moduli = st.floats(min_value=0.05, max_value=0.9)
rho = st.floats(min_value=0.0, max_value=0.9)
angle = st.floats(min_value=0.0, max_value=6.283)


def points():
    return st.builds(HartogsPoint.from_moduli, moduli, rho, angle, angle)


@given(points(), points())
def test_kernel_hermitian(z, w):
    assert bergman_kernel(z, w) == pytest.approx(np.conj(bergman_kernel(w, z)), rel=1e-12)


@given(points())
def test_kernel_diagonal_positive(z):
    k = bergman_kernel(z, z)
    assert k.real > 0 and abs(k.imag) <= 1e-12 * k.real


def test_kernel_spot_value():
    z = HartogsPoint(0.0, 0.5)
    # a = 1/4: (1/4) / ((3/4)^2 (1/4)^2) = 64/9
    assert bergman_kernel(z, z).real == pytest.approx(64 / 9, rel=1e-15)


@settings(max_examples=20, deadline=None)
@given(points(), points())
def test_kernel_matches_orthonormal_expansion(z, w):
    # both series ratios are at most 0.81, so 300 terms leave < 1e-20
    assert kernel_series_partial(z, w, 300, 300) == pytest.approx(bergman_kernel(z, w), rel=1e-9)


@pytest.mark.parametrize("j,k", [(0, 0), (0, -1), (1, -2), (2, 3)])
def test_monomial_norms_by_quadrature(j, k):
    m = MonomialIndex(j, k)
    spec = QuadratureSpec(radial_nodes=8, angular_nodes=8, panels=3)
    val = integrate_hartogs(lambda z1, z2: np.abs(m(z1, z2)) ** 2, spec, z2_exponents=(min(0, j + k), 0))
    assert val.real == pytest.approx(monomial_norm_sq(m), rel=1e-12)


def test_monomial_domain():
    with pytest.raises(DomainError):
        MonomialIndex(-1, 0)
    with pytest.raises(DomainError):
        MonomialIndex(0, -2)


def test_project_constants_and_conjugates():
    z = HartogsPoint.from_moduli(0.5, 0.4, 0.3, -1.0)
    assert project(lambda w1, w2: np.ones_like(w1), z) == pytest.approx(1.0, abs=1e-9)
    # conj(w2) only meets 1/z2: <conj w2, 1/w2> = mu(H) = 1/2 and ||1/z2|| = 1
    assert project(lambda w1, w2: np.conj(w2), z) == pytest.approx(0.5 / z.z2, abs=1e-9)


def test_project_reproduces_kernel_section():
    # P K(., a) = K(., a)
    a = HartogsPoint.from_moduli(0.4, 0.3, 0.5, 0.2)
    z = HartogsPoint.from_moduli(0.6, 0.2, -0.7, 1.1)
    f = lambda w1, w2: (w2 * np.conj(a.z2)) / ((1 - w2 * np.conj(a.z2)) ** 2 * (w2 * np.conj(a.z2) - w1 * np.conj(a.z1)) ** 2)
    assert project(f, z) == pytest.approx(bergman_kernel(z, a), rel=1e-8)


def test_reproduce_and_annihilate_single_point():
    grid = default_grid()[:1]
    assert reproduce_check(MonomialIndex(1, -1), grid).passed
    assert annihilation_check(grid).passed
