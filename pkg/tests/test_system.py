"""Velocity field, residual systems, and their analytic Jacobians."""

import numpy as np
import pytest

from vortexcc.quantities import VorticitySet, conjugate_positions
from vortexcc.system import (
    CollisionError,
    ComplexConfiguration,
    complex_jacobian,
    complex_residual_vector,
    complex_system_residual,
    physical_jacobian,
    physical_residual_vector,
    jacobian,
    stationary_residual,
    velocity_field,
)
from vortexcc.asymptotics import roberts_family, roberts_normalized


def test_velocity_two_vortices():
    v = VorticitySet((1.0, 1.0))
    z = (-0.5 + 0j, 0.5 + 0j)
    V = velocity_field(v, z, conjugate_positions(z))
    assert V[0] == pytest.approx(-1.0)
    assert V[1] == pytest.approx(1.0)


def test_velocity_equilateral_vertex():
    v = VorticitySet((1.0, 1.0, 1.0))
    z = tuple(np.exp(2j * np.pi * k / 3) for k in range(3))
    V = velocity_field(v, z, conjugate_positions(z))
    assert V[0] == pytest.approx(1.0, abs=1e-14)  # vertex at z = 1


def test_velocity_roberts_center_vanishes():
    v, conf, _ = roberts_family(0.6, "real")
    V = velocity_field(v, conf.z, conf.w)
    assert abs(V[4]) < 1e-14


def test_velocity_collision_names_pair():
    v = VorticitySet((1.0, 1.0, 1.0))
    z = (0j, 1e-12 + 0j, 1 + 0j)
    with pytest.raises(CollisionError, match="vortices 1 and 2"):
        velocity_field(v, z, conjugate_positions(z))


def test_stationary_residual_two_vortex_solution():
    c = np.sqrt(2) / 2
    v = VorticitySet((1.0, 1.0))
    z = (-c + 0j, c + 0j)
    r = stationary_residual(v, z, conjugate_positions(z), 1.0)
    assert r.norm < 1e-15


def test_stationary_residual_collinear_solution():
    # V at an end vortex is 3/(2d); the middle vortex cancels; Λ=1 at d²=3/2
    d = np.sqrt(1.5)
    v = VorticitySet((1.0, 1.0, 1.0))
    z = (-d + 0j, 0j, d + 0j)
    r = stationary_residual(v, z, conjugate_positions(z), 1.0)
    assert r.norm < 1e-14


def test_stationary_residual_wrong_multiplier():
    v = VorticitySet((1.0, 1.0, 1.0))
    z = tuple(np.exp(2j * np.pi * k / 3) for k in range(3))
    r = stationary_residual(v, z, conjugate_positions(z), 2.0)
    assert r.norm == pytest.approx(1.0, abs=1e-12)  # (2-1)·z_n has unit modulus


def test_complex_residual_roberts_real_branch():
    conf = roberts_normalized(0.6, "real")
    v = VorticitySet((2.0, 2.0, 2.0, 2.0, -1.0))
    assert complex_system_residual(conf, v).norm < 1e-12
    assert abs(conf.lam - 1.0) < 1e-12
    assert abs(conf.gauge_defect) < 1e-12


def test_complex_residual_roberts_complex_branch():
    conf = roberts_normalized(2.0, "complex")
    v = VorticitySet((2.0, 2.0, 2.0, 2.0, -1.0))
    assert complex_system_residual(conf, v).norm < 1e-12
    # raw family scale: side squared distances equal a^2 - b^2 = 1;
    # the unit-multiplier dilation by s = 2 then scales every r^2 by 4
    _, raw, _ = roberts_family(2.0, "complex")
    assert raw.squared_distance(1, 2) == pytest.approx(1.0, abs=1e-12)
    assert conf.squared_distance(1, 2) == pytest.approx(4.0, abs=1e-12)


def test_complex_residual_embeds_physical():
    # physical point with real z_12 embeds with w = conj z; same residual norm
    rng = np.random.default_rng(5)
    v = VorticitySet((1.0, -2.0, 0.7))
    for _ in range(20):
        z = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        z[1] = z[0] + abs(z[1] - z[0])  # make z_12 real so the gauge row vanishes
        lam = np.exp(1j * rng.uniform(0, 2 * np.pi))
        w = np.conj(z)
        phys = stationary_residual(v, tuple(z), tuple(w), lam)
        full = complex_system_residual(ComplexConfiguration(tuple(z), tuple(w), lam), v)
        assert full.norm == pytest.approx(phys.norm, rel=1e-12, abs=1e-14)


def test_velocity_equivariance():
    # z -> a z, w -> w/a sends V -> a V
    rng = np.random.default_rng(9)
    v = VorticitySet((1.0, 2.0, -0.5, 0.3))
    z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    w = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    a = 1.7 - 0.4j
    V = np.array(velocity_field(v, tuple(z), tuple(w)))
    Va = np.array(velocity_field(v, tuple(a * z), tuple(w / a)))
    assert np.abs(Va - a * V).max() < 1e-12 * np.abs(V).max()


def test_weighted_velocity_sum_vanishes():
    rng = np.random.default_rng(13)
    for _ in range(50):
        n = int(rng.integers(2, 7))
        g = rng.uniform(-2, 2, n)
        g[np.abs(g) < 0.1] = 1.0
        v = VorticitySet(tuple(g))
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        V = np.array(velocity_field(v, tuple(z), conjugate_positions(tuple(z))))
        assert abs((g * V).sum()) < 1e-12 * max(1.0, np.abs(V).max())


# ---------------------------------------------------------------------------
# Jacobians against central finite differences
# ---------------------------------------------------------------------------


def _random_point(rng, n):
    while True:
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        d = np.abs(z[None, :] - z[:, None]) + np.eye(n)
        if d.min() > 0.05:
            return z


def test_physical_jacobian_matches_finite_differences():
    rng = np.random.default_rng(21)
    h = 1e-6
    for _ in range(100):
        n = int(rng.integers(2, 6))
        g = rng.uniform(-2, 2, n)
        g[np.abs(g) < 0.1] = 0.7
        v = VorticitySet(tuple(g))
        z = _random_point(rng, n)
        theta = rng.uniform(0, 2 * np.pi)
        J = physical_jacobian(v, z, theta)

        def pack(zz, th):
            return physical_residual_vector(v, zz, th)

        dim = 2 * n + 1
        fd = np.empty((dim, dim))
        for col in range(dim):
            dz = np.zeros(n, dtype=complex)
            dth = 0.0
            if col == dim - 1:
                dth = h
            elif col % 2 == 0:
                dz[col // 2] = h
            else:
                dz[col // 2] = 1j * h
            fd[:, col] = (pack(z + dz, theta + dth) - pack(z - dz, theta - dth)) / (2 * h)
        scale = max(1.0, np.abs(J).max())
        assert np.abs(J - fd).max() <= 1e-6 * scale


def test_complex_jacobian_matches_finite_differences():
    rng = np.random.default_rng(22)
    h = 1e-6
    for _ in range(40):
        n = int(rng.integers(2, 5))
        g = rng.uniform(-2, 2, n)
        g[np.abs(g) < 0.1] = -0.9
        v = VorticitySet(tuple(g))
        z = _random_point(rng, n)
        w = _random_point(rng, n)
        lam = np.exp(1j * rng.uniform(0, 2 * np.pi)) * rng.uniform(0.5, 2.0)
        J = complex_jacobian(v, z, w, lam)
        dim = 2 * n + 1

        def val(zz, ww, ll):
            return complex_residual_vector(v, zz, ww, ll)

        fd = np.empty((dim, dim), dtype=complex)
        for col in range(dim):
            dz = np.zeros(n, dtype=complex)
            dw = np.zeros(n, dtype=complex)
            dl = 0j
            if col < n:
                dz[col] = h
            elif col < 2 * n:
                dw[col - n] = h
            else:
                dl = h
            fd[:, col] = (val(z + dz, w + dw, lam + dl) - val(z - dz, w - dw, lam - dl)) / (2 * h)
        scale = max(1.0, np.abs(J).max())
        assert np.abs(J - fd).max() <= 1e-6 * scale


def test_gauge_row_gradient():
    v = VorticitySet((1.0, 1.0, 1.0))
    z = np.array([0.3 + 0.1j, 1.2 - 0.4j, -0.8 + 0.9j])
    J = physical_jacobian(v, z, 0.3)
    expected = np.zeros(7)
    expected[1] = -1.0  # y-coordinate of vortex 1
    expected[3] = 1.0   # y-coordinate of vortex 2
    assert np.array_equal(J[-1], expected)


def test_jacobian_dispatcher():
    v = VorticitySet((1.0, 1.0))
    z = np.array([-0.7 + 0j, 0.7 + 0j])
    assert np.array_equal(jacobian("physical", (z, 0.1), v), physical_jacobian(v, z, 0.1))
    w = np.conj(z)
    assert np.array_equal(jacobian("complex", (z, w, 1.0), v), complex_jacobian(v, z, w, 1.0))
    with pytest.raises(ValueError):
        jacobian("other", (z, 0.1), v)


def test_two_vortex_jacobian_nonsingular_at_solution():
    c = np.sqrt(2) / 2
    v = VorticitySet((1.0, 1.0))
    J = physical_jacobian(v, np.array([-c, c], dtype=complex), 0.0)
    assert np.linalg.cond(J) < 1e3
