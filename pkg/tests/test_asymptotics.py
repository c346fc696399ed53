"""Rhombus continuum, balancing normalization, diagram extraction, 4-products."""

import numpy as np
import pytest

from vortexcc.quantities import VorticitySet
from vortexcc.system import complex_system_residual, velocity_field
from vortexcc.asymptotics import (
    ColoredDiagram,
    NotSingularError,
    ScaledSequence,
    balance_normalize,
    extract_diagram,
    four_product,
    load_family,
    roberts_degeneration,
    roberts_family,
    roberts_normalized,
    roberts_parameter_sequence,
    save_family,
    verify_roberts,
)


def test_roberts_family_real_branch_values():
    v, conf, lam = roberts_family(0.6, "real")
    assert tuple(float(g) for g in v.gammas) == (2.0, 2.0, 2.0, 2.0, -1.0)
    assert conf.z == (0.6 + 0j, 0.8j, -0.6 + 0j, (-0 - 0.8j), 0j)
    assert conf.w == tuple(p.conjugate() for p in conf.z)
    assert conf.squared_distance(1, 2) == pytest.approx(1.0, abs=1e-14)
    # multiplier computed from the velocity field, not hard-coded
    assert lam == pytest.approx(4.0, abs=1e-12)


def test_roberts_family_complex_branch_values():
    v, conf, lam = roberts_family(2.0, "complex")
    b = np.sqrt(3.0)
    assert conf.z[1] == pytest.approx(b)
    assert conf.squared_distance(1, 2) == pytest.approx(1.0, abs=1e-12)
    assert lam == pytest.approx(4.0, abs=1e-12)


def test_roberts_center_vortex_balances():
    v, conf, _ = roberts_family(0.6, "real")
    V = velocity_field(v, conf.z, conf.w)
    assert abs(V[4]) < 1e-14  # Λ·z_5 with z_5 = 0


def test_roberts_domain_errors():
    with pytest.raises(ValueError, match="real branch"):
        roberts_family(1.5, "real")
    with pytest.raises(ValueError, match="complex branch"):
        roberts_family(0.5, "complex")
    with pytest.raises(ValueError, match="branch"):
        roberts_family(0.5, "imaginary")


@pytest.mark.parametrize("a,branch,bound", [
    (0.6, "real", 1e-11),
    (0.95, "real", 1e-11),
    (0.05, "real", 1e-11),
    (2.0, "complex", 1e-11),
    (5.0, "complex", 1e-10),
])
def test_verify_roberts_spot_checks(a, branch, bound):
    assert verify_roberts(a, branch) < bound


def test_verify_roberts_log_spaced_sweeps():
    for a in np.geomspace(0.06, 0.94, 20):
        assert verify_roberts(float(a), "real") < 1e-10
    for a in np.geomspace(1.06, 4.9, 20):
        assert verify_roberts(float(a), "complex") < 1e-10


def test_normalized_member_is_unit_multiplier_solution():
    conf = roberts_normalized(0.3, "real")
    assert abs(abs(conf.lam) - 1.0) < 1e-12
    assert abs(conf.gauge_defect) < 1e-12
    assert complex_system_residual(conf, VorticitySet((2.0, 2.0, 2.0, 2.0, -1.0))).norm < 1e-11


# ---------------------------------------------------------------------------
# Balancing
# ---------------------------------------------------------------------------


def test_balance_idempotent_and_invariant():
    rng = np.random.default_rng(2)
    z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    w = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    zb, wb, eps = balance_normalize(z, w)
    zb2, wb2, eps2 = balance_normalize(zb, wb)
    assert np.allclose(zb, zb2) and np.allclose(wb, wb2)
    assert eps == pytest.approx(eps2, rel=1e-14)
    # products z_jk * w_jk are exactly preserved
    for j in range(4):
        for k in range(j + 1, 4):
            before = (z[k] - z[j]) * (w[k] - w[j])
            after = (zb[k] - zb[j]) * (wb[k] - wb[j])
            assert after == pytest.approx(before, rel=1e-14)


def test_balance_undoes_scaling():
    rng = np.random.default_rng(8)
    z = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    w = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    zb, wb, eps = balance_normalize(z, w)
    # acting with z -> 10 z, w -> w/10 is undone by the balancing a = 1/10
    zs, ws, eps2 = balance_normalize(10.0 * np.asarray(zb), np.asarray(wb) / 10.0)
    assert np.allclose(zs, zb)
    assert np.allclose(ws, wb)
    assert eps2 == pytest.approx(eps, rel=1e-14)


def test_balance_epsilon_tracks_near_collision():
    # a -> 0: the z-side norm is dominated by 1/|w_15| = 1/a, so ε = sqrt(a)
    for a in (0.1, 0.01, 0.002):
        _, conf, _ = roberts_family(a, "real")
        _, _, eps = balance_normalize(conf.z, conf.w)
        assert eps == pytest.approx(np.sqrt(a), rel=1e-12)


# ---------------------------------------------------------------------------
# Diagram extraction
# ---------------------------------------------------------------------------


def test_roberts_collision_diagram():
    params, configs = roberts_degeneration("a0", 12)
    extraction = extract_diagram(configs, params)
    d = extraction.diagram
    triple = {(1, 3), (1, 5), (3, 5)}
    assert d.z_strokes == frozenset(triple)
    assert d.w_strokes == frozenset(triple)
    assert not any(2 in pair or 4 in pair for pair in d.stroke_pairs)
    assert d.satisfies_rule_one
    for z_slope, w_slope in extraction.separation_exponents.values():
        assert -2.3 <= z_slope <= 2.3
        assert -2.3 <= w_slope <= 2.3


def test_roberts_infinity_diagram_recorded():
    params, configs = roberts_degeneration("ainf", 12)
    extraction = extract_diagram(configs, params)
    d = extraction.diagram
    # recorded, not asserted against any figure: the stroke pattern connects
    # the four rhombus vertices, and the measurement obeys the order bounds
    assert d.stroke_pairs
    assert d.satisfies_rule_one
    for z_slope, w_slope in extraction.separation_exponents.values():
        assert -2.3 <= z_slope <= 2.3
        assert -2.3 <= w_slope <= 2.3
    assert {v for pair in d.stroke_pairs for v in pair} <= {1, 2, 3, 4}


def test_extract_rejects_bounded_families():
    z = tuple(np.exp(2j * np.pi * np.arange(3) / 3))
    w = tuple(np.conj(z))
    with pytest.raises(NotSingularError, match="not singular"):
        extract_diagram([(z, w)] * 8)


def test_extract_rejects_short_sequences():
    params, configs = roberts_degeneration("a0", 12)
    with pytest.raises(ValueError, match="fewer than 4"):
        extract_diagram(configs[:3])


def test_scaled_sequence_requires_decreasing_epsilons():
    with pytest.raises(ValueError, match="decrease"):
        ScaledSequence((1.0, 2.0), ((), ()), (0.5, 0.5))


def test_rule_one_checker():
    bad = ColoredDiagram(3, frozenset(), frozenset(), frozenset({1}), frozenset())
    assert not bad.satisfies_rule_one
    good = ColoredDiagram(3, frozenset({(1, 2)}), frozenset(), frozenset({1}), frozenset())
    assert good.satisfies_rule_one


# ---------------------------------------------------------------------------
# Four products
# ---------------------------------------------------------------------------


def test_four_product_unit_distances_give_one():
    # build a configuration whose p_12 factors are each exactly 1: the pair
    # (1,2) with w_12 = 1/z_12, and the triangle (3,4,5) on a geometric
    # chain with ratio ω = e^{2πi/3}, which makes all three of its squared
    # distances equal 1 (since (1+ω)(1+ω²) = 1)
    omega = np.exp(2j * np.pi / 3)
    u = 0.7 + 0.2j
    z3, z4, z5 = 10.0 + 0j, 10.0 + u, 10.0 + u + u * omega
    w3, w4, w5 = 0j, 1.0 / u, 1.0 / u + 1.0 / (u * omega)
    z12 = 1.5 - 0.4j
    z = (0j, z12, z3, z4, z5)
    w = (5j, 5j + 1.0 / z12, w3, w4, w5)
    for j, k in [(3, 4), (4, 5), (3, 5), (1, 2)]:
        r2 = (z[k - 1] - z[j - 1]) * (w[k - 1] - w[j - 1])
        assert r2 == pytest.approx(1.0, rel=1e-13)
    assert four_product(z, w, (1, 2)) == pytest.approx(1.0, rel=1e-12)


def test_four_product_matches_side_count_on_rhombus():
    # rhombus family keeps the four sides at r² = 1; check p_25 against the
    # explicit complement cycle (1,3), (3,4), (4,1)
    _, conf, _ = roberts_family(2.0, "complex")
    for j, k in [(1, 2), (2, 3), (3, 4), (1, 4)]:
        assert conf.squared_distance(j, k) == pytest.approx(1.0, abs=1e-12)
    p25 = four_product(conf.z, conf.w, (2, 5))
    manual = (conf.squared_distance(2, 5) * conf.squared_distance(1, 3)
              * conf.squared_distance(3, 4) * conf.squared_distance(4, 1))
    assert p25 == pytest.approx(manual, rel=1e-12)


def test_four_product_quadrilateral_blowup():
    # large-a rhombus realizes the quadrilateral data: four side r² of order
    # one, six squared distances of order ε^{-4}; every 4-product blows up
    small, large = 10.0, 160.0
    mins = []
    for a in (small, large):
        _, conf, _ = roberts_family(a, "complex")
        mins.append(min(abs(four_product(conf.z, conf.w, (j, k)))
                        for j in range(1, 6) for k in range(j + 1, 6)))
    assert mins[0] > 1e3
    assert mins[1] > 1e3 * mins[0] / 2  # grows with a, toward infinity


def test_four_product_collision_trends():
    # a -> 0: p_13 -> 0 (its own factor collapses); p_24 -> 0 even faster
    # (its complement cycle lies inside the collapsing triple {1,3,5}),
    # p_13/p_24 -> infinity
    values = {}
    for a in (0.1, 0.01, 0.001):
        _, conf, _ = roberts_family(a, "real")
        p13 = abs(four_product(conf.z, conf.w, (1, 3)))
        p24 = abs(four_product(conf.z, conf.w, (2, 4)))
        values[a] = (p13, p24)
    assert values[0.001][0] < values[0.01][0] < values[0.1][0] < 1.0
    assert values[0.001][1] < values[0.001][0]
    assert values[0.001][0] / values[0.001][1] > 1e6
    # exact leading orders from the factorization: p_13 ~ 16 a² β⁶, p_24 ~ 16 a⁶
    a = 0.001
    beta2 = 1 - a * a
    assert values[a][0] == pytest.approx(16 * a**2 * beta2**3, rel=1e-6)
    assert values[a][1] == pytest.approx(16 * a**6, rel=1e-6)


def test_four_product_validation():
    _, conf, _ = roberts_family(0.5, "real")
    with pytest.raises(ValueError, match="exactly 5"):
        four_product(conf.z[:4], conf.w[:4], (1, 2))
    with pytest.raises(ValueError, match="distinct"):
        four_product(conf.z, conf.w, (2, 2))


# ---------------------------------------------------------------------------
# Family files
# ---------------------------------------------------------------------------


def test_family_file_roundtrip(tmp_path):
    params, configs = roberts_degeneration("a0", 6)
    path = tmp_path / "family.txt"
    save_family(path, params, configs)
    params2, configs2 = load_family(path)
    assert np.allclose(params, params2)
    for (z, w), (z2, w2) in zip(configs, configs2):
        assert np.allclose(z, z2)
        assert np.allclose(w, w2)
    # extraction works identically on the reloaded family
    d1 = extract_diagram(configs, params).diagram
    d2 = extract_diagram(configs2, params2).diagram
    assert d1 == d2


def test_family_file_rejects_malformed(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1.0 2.0 3.0\n")
    with pytest.raises(ValueError, match="malformed"):
        load_family(path)


def test_parameter_sequences():
    a0 = roberts_parameter_sequence("a0", 12)
    assert len(a0) == 12 and all(b < a for a, b in zip(a0, a0[1:]))
    ainf = roberts_parameter_sequence("ainf", 8)
    assert all(b > a for a, b in zip(ainf, ainf[1:]))
    with pytest.raises(ValueError):
        roberts_parameter_sequence("a0", 3)
    with pytest.raises(ValueError):
        roberts_parameter_sequence("elsewhere", 8)
