"""Multistart search, refinement, classification, and the gated searches."""

import numpy as np
import pytest

from vortexcc.quantities import VorticitySet, conjugate_positions
from vortexcc.solver import (
    NewtonFailure,
    SolverOptions,
    classify,
    newton_refine,
    solve_central_multistart,
    solve_equilibria,
    solve_rigid_translation,
)
from vortexcc.system import stationary_residual


TWO = VorticitySet((1.0, 1.0))
THREE = VorticitySet((1.0, 1.0, 1.0))
COLLAPSE = VorticitySet((1.0, 1.0, -0.5))


@pytest.fixture(scope="module")
def two_vortex_report():
    return solve_central_multistart(TWO, starts=200, seed=1)


@pytest.fixture(scope="module")
def three_vortex_report():
    return solve_central_multistart(THREE, starts=1000, seed=0)


@pytest.fixture(scope="module")
def collapse_report():
    return solve_central_multistart(COLLAPSE, starts=500, seed=0)


def test_two_vortex_unique_solution(two_vortex_report):
    rep = two_vortex_report
    assert len(rep.solutions) == 1
    sol = rep.solutions[0]
    # closed form: M = 0 forces z = (-c, c); Λ = 1/(2c²) real, so Λ = 1 at r² = 2
    assert sol.lam == pytest.approx(1.0, abs=1e-10)
    assert sol.signature[0] == pytest.approx(2.0, abs=1e-9)
    assert sol.kind == "relative_equilibrium"
    assert abs(sol.z[0] + np.sqrt(2) / 2) < 1e-8
    assert abs(sol.z[1] - np.sqrt(2) / 2) < 1e-8


def test_three_vortex_families(three_vortex_report):
    rep = three_vortex_report
    sigs = sorted(tuple(np.round(s.signature, 6)) for s in rep.solutions)
    assert len(sigs) == 2
    collinear, equilateral = sigs
    # hand oracles: V_end = 3/(2d) gives d² = 3/2 -> r² in {3/2, 3/2, 6};
    # V_vertex = 1/ρ gives ρ = 1 -> r² = 3 each
    assert np.allclose(collinear, (1.5, 1.5, 6.0), rtol=1e-8)
    assert np.allclose(equilateral, (3.0, 3.0, 3.0), rtol=1e-8)
    for sol in rep.solutions:
        assert sol.lam == pytest.approx(1.0, abs=1e-8)
        assert sol.kind == "relative_equilibrium"


def test_collapse_solutions_found(collapse_report):
    rep = collapse_report
    strong = [s for s in rep.solutions
              if s.kind == "collapse" and abs(s.lam.imag) > 0.1]
    assert strong
    for sol in strong[:10]:
        assert abs(sol.invariants.S) < 1e-9
        assert abs(sol.invariants.I) < 1e-9
        assert abs(sol.invariants.L) < 1e-9
        assert "collapse_invariant_violation" not in sol.flags


def test_solutions_satisfy_shared_invariants(two_vortex_report, three_vortex_report, collapse_report):
    for rep in (two_vortex_report, three_vortex_report, collapse_report):
        for sol in rep.solutions:
            assert sol.residual_norm < 1e-12
            assert abs(sol.invariants.M) <= 1e-10
            defect = sol.invariants.lambda_defect
            assert abs(defect) <= 1e-9 * max(1.0, abs(sol.invariants.L))
            # gauge: z_12 real positive
            z12 = sol.z[1] - sol.z[0]
            assert z12.imag == pytest.approx(0.0, abs=1e-12)
            assert z12.real > 0


def test_conjugate_of_solution_also_solves(collapse_report):
    v = COLLAPSE
    checked = 0
    for sol in collapse_report.solutions:
        if sol.kind != "collapse":
            continue
        zc = conjugate_positions(sol.z)
        res = stationary_residual(v, zc, conjugate_positions(zc), np.conj(sol.lam))
        assert res.norm < 1e-10
        checked += 1
        if checked >= 5:
            break
    assert checked


def test_determinism(two_vortex_report):
    again = solve_central_multistart(TWO, starts=200, seed=1)
    assert again == two_vortex_report


def test_scaling_covariance_two_vortex():
    # unnormalized system: z -> s z maps Λ -> Λ/s²
    c = np.sqrt(2) / 2
    z = (-c + 0j, c + 0j)
    for s in (0.5, 2.0, 3.7):
        zs = tuple(s * p for p in z)
        res = stationary_residual(TWO, zs, conjugate_positions(zs), 1.0 / s**2)
        assert res.norm < 1e-13


def test_newton_refine_fixed_point():
    c = np.sqrt(2) / 2
    sol = newton_refine(TWO, (np.array([-c, c], dtype=complex), 0.0))
    assert not isinstance(sol, NewtonFailure)
    assert sol.iterations <= 2
    assert sol.residual_norm < 1e-12


def test_newton_refine_collision_guard():
    start = (np.array([0.0, 1e-11], dtype=complex), 0.0)
    out = newton_refine(TWO, start)
    assert isinstance(out, NewtonFailure)
    assert out.reason == "hit_collision_guard"


def test_newton_refine_perturbed_equilateral():
    z = np.exp(2j * np.pi * np.arange(3) / 3)
    rng = np.random.default_rng(4)
    z = z + 1e-3 * (rng.standard_normal(3) + 1j * rng.standard_normal(3))
    sol = newton_refine(THREE, (z, 0.0))
    assert not isinstance(sol, NewtonFailure)
    assert np.allclose(sol.signature, (3.0, 3.0, 3.0), rtol=1e-9)


def test_classify_reports_inconsistency_without_reclassifying():
    rep = solve_central_multistart(COLLAPSE, starts=200, seed=5)
    collapse = [s for s in rep.solutions if s.kind == "collapse"]
    assert collapse
    kind, flags = classify(collapse[0])
    assert kind == "collapse"
    assert "collapse_invariant_violation" not in flags
    # L != 0 forbids collapse: a synthetic wrong-kind solution gets flagged
    from dataclasses import replace
    from vortexcc.quantities import invariants_of

    bad_inv = invariants_of(THREE, collapse[0].z, collapse[0].w, lam=collapse[0].lam)
    fake = replace(collapse[0], invariants=bad_inv)
    kind2, flags2 = classify(fake)
    assert kind2 == "collapse"
    assert "collapse_invariant_violation" in flags2


def test_solve_rejects_bad_arguments():
    with pytest.raises(ValueError):
        solve_central_multistart(TWO, starts=0)
    with pytest.raises(ValueError):
        solve_central_multistart(TWO, regime="imaginary")
    with pytest.raises(ValueError):
        SolverOptions(tol=-1.0).validated()


def test_complex_regime_contains_embedded_physical():
    rep = solve_central_multistart(TWO, regime="complex", starts=100, seed=3)
    sigs = [np.asarray(s.signature, dtype=float).ravel() for s in rep.solutions]
    embedded = [s for s, sig in zip(rep.solutions, sigs)
                if abs(sig[0] - 2.0) < 1e-8 and abs(sig[1]) < 1e-8]
    assert embedded
    sol = embedded[0]
    assert abs(sol.lam - 1.0) < 1e-8
    assert "nonunit_lambda" not in sol.flags
    gauge = (sol.z[1] - sol.z[0]) - (sol.w[1] - sol.w[0])
    assert abs(gauge) < 1e-10


def test_equilibria_gate_and_search():
    rep = solve_equilibria(THREE, starts=10, seed=0)
    assert rep.reason == "necessary condition L=0 fails"
    assert not rep.solutions

    rep = solve_equilibria(VorticitySet((1.0, -1.0)), starts=5, seed=0)
    assert rep.reason == "necessary condition L=0 fails"  # L = -1

    # L = 0 for (1, 1, -1/2); hand oracle: z = (0, 1, 1/2) is an equilibrium
    rep = solve_equilibria(COLLAPSE, starts=100, seed=0)
    assert rep.reason is None
    assert rep.solutions
    sig = min(tuple(np.round(s.signature, 9)) for s in rep.solutions)
    assert np.allclose(sig, (0.25, 0.25, 1.0))
    for sol in rep.solutions:
        assert sol.kind == "equilibrium"
        assert sol.residual_norm < 1e-12
        assert sol.lam is None


def test_rigid_translation_gate_and_search():
    rep = solve_rigid_translation(VorticitySet((1.0, 1.0, 1.0, 1.0, 1.0)), starts=5, seed=0)
    assert rep.reason == "necessary condition Γ=0 fails"

    rep = solve_rigid_translation(VorticitySet((2.0, 2.0, 2.0, 2.0, -1.0)), starts=5, seed=0)
    assert rep.reason == "necessary condition Γ=0 fails"

    # hand oracle: the pair (1, -1) at (0, d) translates with V = 1/conj(d)
    rep = solve_rigid_translation(VorticitySet((1.0, -1.0)), starts=20, seed=0)
    assert rep.reason is None
    assert len(rep.solutions) == 1
    sol = rep.solutions[0]
    assert sol.kind == "rigid_translation"
    assert sol.signature[0] == pytest.approx(1.0, abs=1e-10)
    assert sol.translation_velocity == pytest.approx(1.0, abs=1e-10)
    assert sol.residual_norm < 1e-12
