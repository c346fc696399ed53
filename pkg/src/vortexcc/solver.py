"""Multistart damped-Newton search for stationary vortex configurations.

The physical regime solves the reduced central system on unknowns
(x_1, y_1, ..., x_N, y_N, θ) with Λ = e^{iθ}, so |Λ| = 1 is structural and
the rotation gauge Im z_12 = 0 is the one extra equation.  The complex
regime solves the conjugate-free system on 2N+1 complex unknowns
(z, w, Λ) with the gauge row z_12 = w_12; there Λ is a free unknown (real
solutions automatically come out with |Λ| = 1).

Damping is Levenberg-style: the Newton step is computed from
(JᵀJ + λI) δ = -JᵀF with λ adapted multiplicatively; trial steps that cross
the collision guard are rejected.  Failures are values, not exceptions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from .quantities import Invariants, VorticitySet, conjugate_positions, invariants_of
from .system import (
    COLLISION_GUARD,
    complex_jacobian,
    complex_residual_vector,
    physical_jacobian,
    physical_residual_vector,
    _min_gap,
    _velocity_np,
)

__all__ = [
    "SolverOptions",
    "NewtonFailure",
    "CentralConfigSolution",
    "SolveReport",
    "newton_refine",
    "classify",
    "solve_central_multistart",
    "solve_equilibria",
    "solve_rigid_translation",
]

KIND_RELATIVE_EQUILIBRIUM = "relative_equilibrium"
KIND_COLLAPSE = "collapse"
KIND_EQUILIBRIUM = "equilibrium"
KIND_RIGID_TRANSLATION = "rigid_translation"


@dataclass(frozen=True)
class SolverOptions:
    tol: float = 1e-12              # residual inf-norm for convergence
    max_iter: int = 60
    collision_guard: float = COLLISION_GUARD
    dedup_tol: float = 1e-6         # relative, on sorted squared-distance signature
    class_tol: float = 1e-8         # |Im Λ| threshold for the collapse branch
    collapse_tol: float = 1e-8      # |S|, |I|, |L| bound required of collapse solutions
    start_radius: float = 2.0
    start_min_gap: float = 1e-3
    lm_lambda0: float = 1e-3
    lm_increase: float = 10.0
    lm_decrease: float = 0.25
    lm_lambda_max: float = 1e12
    divergence_norm: float = 1e8

    def validated(self) -> "SolverOptions":
        for name in ("tol", "dedup_tol", "class_tol", "collapse_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"option {name} must be positive")
        return self


@dataclass(frozen=True)
class NewtonFailure:
    """Diagnostic result of a failed refinement."""

    reason: str  # "diverged" | "hit_collision_guard" | "max_iterations"
    iterations: int
    last_norm: float


@dataclass(frozen=True)
class CentralConfigSolution:
    regime: str                     # "physical" | "complex"
    z: tuple
    w: tuple
    lam: complex | None
    residual_norm: float
    invariants: Invariants
    kind: str
    signature: tuple
    flags: tuple = ()
    iterations: int = 0
    translation_velocity: complex | None = None


@dataclass(frozen=True)
class SolveReport:
    solutions: tuple
    starts_attempted: int
    starts_converged: int
    seed: int
    regime: str
    reason: str | None = None       # set on gated empty reports


# ---------------------------------------------------------------------------
# Levenberg-damped Newton engine on real vectors
# ---------------------------------------------------------------------------


def _levenberg_newton(
    residual: Callable[[np.ndarray], np.ndarray],
    jacobian: Callable[[np.ndarray], np.ndarray],
    norm: Callable[[np.ndarray], float],
    guard: Callable[[np.ndarray], bool],
    x0: np.ndarray,
    options: SolverOptions,
):
    """Returns (x, iterations) on success or NewtonFailure."""
    x = np.array(x0, dtype=float)
    if guard(x):
        return NewtonFailure("hit_collision_guard", 0, math.inf)
    F = residual(x)
    nrm = norm(F)
    damp = options.lm_lambda0
    dim = x.size
    eye = np.eye(dim)
    for it in range(options.max_iter):
        if nrm < options.tol:
            return x, it
        J = jacobian(x)
        JTJ = J.T @ J
        JTF = J.T @ F
        accepted = False
        guard_blocked = False
        while damp <= options.lm_lambda_max:
            try:
                step = np.linalg.solve(JTJ + damp * eye, -JTF)
            except np.linalg.LinAlgError:
                damp *= options.lm_increase
                continue
            xt = x + step
            if guard(xt):
                guard_blocked = True
                damp *= options.lm_increase
                continue
            Ft = residual(xt)
            nt = norm(Ft)
            if math.isfinite(nt) and nt < nrm:
                x, F, nrm = xt, Ft, nt
                damp = max(damp * options.lm_decrease, 1e-14)
                accepted = True
                break
            damp *= options.lm_increase
        if not accepted:
            reason = "hit_collision_guard" if guard_blocked else "diverged"
            return NewtonFailure(reason, it, nrm)
        if np.abs(x).max() > options.divergence_norm:
            return NewtonFailure("diverged", it, nrm)
    if nrm < options.tol:
        return x, options.max_iter
    return NewtonFailure("max_iterations", options.max_iter, nrm)


def _pack_physical(positions: np.ndarray, theta: float) -> np.ndarray:
    n = len(positions)
    x = np.empty(2 * n + 1)
    x[0 : 2 * n : 2] = positions.real
    x[1 : 2 * n : 2] = positions.imag
    x[-1] = theta
    return x


def _unpack_physical(x: np.ndarray) -> tuple[np.ndarray, float]:
    n = (x.size - 1) // 2
    return x[0 : 2 * n : 2] + 1j * x[1 : 2 * n : 2], float(x[-1])


def _pack_complex(z: np.ndarray, w: np.ndarray, lam: complex) -> np.ndarray:
    c = np.concatenate([z, w, [lam]])
    out = np.empty(2 * c.size)
    out[0::2] = c.real
    out[1::2] = c.imag
    return out


def _unpack_complex(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, complex]:
    c = x[0::2] + 1j * x[1::2]
    n = (c.size - 1) // 2
    return c[:n], c[n : 2 * n], complex(c[-1])


def _realify_matrix(J: np.ndarray) -> np.ndarray:
    m, n = J.shape
    R = np.empty((2 * m, 2 * n))
    R[0::2, 0::2] = J.real
    R[0::2, 1::2] = -J.imag
    R[1::2, 0::2] = J.imag
    R[1::2, 1::2] = J.real
    return R


def _realify_vector(F: np.ndarray) -> np.ndarray:
    out = np.empty(2 * F.size)
    out[0::2] = F.real
    out[1::2] = F.imag
    return out


# ---------------------------------------------------------------------------
# Refinement per regime
# ---------------------------------------------------------------------------


def newton_refine(v: VorticitySet, start, regime: str = "physical",
                  options: SolverOptions | None = None):
    """Refine one start; returns a CentralConfigSolution or a NewtonFailure.

    Physical starts are ``(positions, theta)``; complex starts are
    ``(z, w, lam)``.
    """
    opts = (options or SolverOptions()).validated()
    vf = v.as_float()
    if regime == "physical":
        return _refine_physical(vf, start, opts)
    if regime == "complex":
        return _refine_complex(vf, start, opts)
    raise ValueError(f"unknown regime {regime!r}")


def _refine_physical(v: VorticitySet, start, opts: SolverOptions):
    positions, theta = start
    pos0 = np.asarray(positions, dtype=complex)
    n = v.n

    def residual(x):
        pos, th = _unpack_physical(x)
        return physical_residual_vector(v, pos, th)

    def jac(x):
        pos, th = _unpack_physical(x)
        return physical_jacobian(v, pos, th)

    def norm(F):
        return max(np.hypot(F[0 : 2 * n : 2], F[1 : 2 * n : 2]).max(), abs(F[-1]))

    def guard(x):
        pos, _ = _unpack_physical(x)
        return _min_gap(pos) < opts.collision_guard

    result = _levenberg_newton(residual, jac, norm, guard, _pack_physical(pos0, float(theta)), opts)
    if isinstance(result, NewtonFailure):
        return result
    x, iters = result
    pos, th = _unpack_physical(x)
    return _finalize_physical(v, pos, th, iters, opts)


def _finalize_physical(v: VorticitySet, pos: np.ndarray, theta: float,
                       iters: int, opts: SolverOptions) -> CentralConfigSolution:
    lam = np.exp(1j * theta)
    # Rotate so z_12 is exactly real and positive (rotation leaves Λ fixed).
    z12 = pos[1] - pos[0]
    pos = pos * (abs(z12) / z12)
    # Conjugation maps solutions to solutions; keep one canonical twin.
    if _prefers_conjugate(pos, lam, opts):
        pos, lam = np.conj(pos), np.conj(lam)
    g = np.asarray(v.gammas)
    E = lam * pos - _velocity_np(g, np.conj(pos))
    residual_norm = float(np.abs(E).max())
    inv = invariants_of(v, tuple(pos), conjugate_positions(tuple(pos)), lam=complex(lam))
    signature = _physical_signature(pos)
    kind, flags = _classify(complex(lam), inv, opts)
    flags += _solution_assertions(inv, opts)
    return CentralConfigSolution(
        regime="physical",
        z=tuple(pos),
        w=conjugate_positions(tuple(pos)),
        lam=complex(lam),
        residual_norm=residual_norm,
        invariants=inv,
        kind=kind,
        signature=signature,
        flags=flags,
        iterations=iters,
    )


def _prefers_conjugate(pos: np.ndarray, lam: complex, opts: SolverOptions) -> bool:
    if lam.imag < -opts.class_tol:
        return True
    if lam.imag > opts.class_tol:
        return False
    for p in pos:
        if abs(p.imag) > 1e-9:
            return p.imag < 0
    return False


def _physical_signature(pos: np.ndarray) -> tuple:
    n = len(pos)
    r2 = [abs(pos[k] - pos[j]) ** 2 for j in range(n) for k in range(j + 1, n)]
    return tuple(sorted(r2))


def _refine_complex(v: VorticitySet, start, opts: SolverOptions):
    z0, w0, lam0 = start
    z0 = np.asarray(z0, dtype=complex)
    w0 = np.asarray(w0, dtype=complex)
    n = v.n

    def residual(x):
        z, w, lam = _unpack_complex(x)
        return _realify_vector(complex_residual_vector(v, z, w, lam))

    def jac(x):
        z, w, lam = _unpack_complex(x)
        return _realify_matrix(complex_jacobian(v, z, w, lam))

    def norm(F):
        return float(np.hypot(F[0::2], F[1::2]).max())

    def guard(x):
        z, w, lam = _unpack_complex(x)
        if abs(lam) < 1e-8:
            return True
        return min(_min_gap(z), _min_gap(w)) < opts.collision_guard

    result = _levenberg_newton(
        residual, jac, norm, guard, _pack_complex(z0, w0, complex(lam0)), opts
    )
    if isinstance(result, NewtonFailure):
        return result
    x, iters = result
    z, w, lam = _unpack_complex(x)
    return _finalize_complex(v, z, w, lam, iters, opts)


def _finalize_complex(v: VorticitySet, z: np.ndarray, w: np.ndarray, lam: complex,
                      iters: int, opts: SolverOptions) -> CentralConfigSolution:
    z, w = _canonical_complex_pair(z, w)
    cand = (z, w, lam)
    # The conjugate-free system has the symmetry (z, w, Λ) -> (conj w, conj z, 1/conj Λ).
    twin = _canonical_complex_pair(np.conj(w), np.conj(z)) + (1.0 / np.conjugate(lam),)
    if _complex_sort_key(*twin) < _complex_sort_key(*cand):
        z, w, lam = twin
    g = np.asarray(v.gammas)
    F = complex_residual_vector(v, z, w, lam)
    residual_norm = float(np.abs(F).max())
    inv = invariants_of(v, tuple(z), tuple(w), lam=complex(lam))
    signature = _complex_signature(z, w)
    kind, flags = _classify(complex(lam), inv, opts)
    flags += _solution_assertions(inv, opts)
    if abs(abs(lam) - 1.0) > 1e-6:
        flags += ("nonunit_lambda",)
    return CentralConfigSolution(
        regime="complex",
        z=tuple(z),
        w=tuple(w),
        lam=complex(lam),
        residual_norm=residual_norm,
        invariants=inv,
        kind=kind,
        signature=signature,
        flags=flags,
        iterations=iters,
    )


def _canonical_complex_pair(z: np.ndarray, w: np.ndarray):
    # (z, w) -> (-z, -w) preserves the system and the gauge; fix the sign of z_12.
    z12 = z[1] - z[0]
    if (z12.real, z12.imag) < (0.0, 0.0):
        return -z, -w
    return z, w


def _complex_signature(z: np.ndarray, w: np.ndarray) -> tuple:
    n = len(z)
    r2 = [
        (z[k] - z[j]) * (w[k] - w[j]) for j in range(n) for k in range(j + 1, n)
    ]
    return tuple(sorted(((x.real, x.imag) for x in r2)))


def _complex_sort_key(z, w, lam):
    return (_complex_signature(np.asarray(z), np.asarray(w)), (lam.real, lam.imag))


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


def _classify(lam: complex, inv: Invariants, opts: SolverOptions):
    if abs(lam.imag) <= opts.class_tol:
        return KIND_RELATIVE_EQUILIBRIUM, ()
    flags = []
    # Necessary conditions for the collapse branch: Γ != 0 and S = I = L = 0.
    if abs(inv.S) > opts.collapse_tol or abs(inv.I) > opts.collapse_tol or abs(inv.L) > opts.collapse_tol:
        flags.append("collapse_invariant_violation")
    if inv.gamma == 0:
        flags.append("collapse_gamma_zero")
    return KIND_COLLAPSE, tuple(flags)


def classify(solution: CentralConfigSolution, options: SolverOptions | None = None):
    """Kind and consistency flags for a converged central-configuration solution.

    Collapse solutions must satisfy S = I = L = 0 and Γ != 0; a violation is
    reported in the flags, never silently reclassified.
    """
    opts = options or SolverOptions()
    if solution.lam is None:
        return solution.kind, solution.flags
    return _classify(solution.lam, solution.invariants, opts)


def _solution_assertions(inv: Invariants, opts: SolverOptions) -> tuple:
    flags = []
    if abs(inv.M) > 1e-10:
        flags.append("moment_not_zero")
    defect = inv.lambda_defect
    if defect is not None and abs(defect) > 1e-9 * max(1.0, abs(inv.L)):
        flags.append("lambda_identity_violation")
    return tuple(flags)


# ---------------------------------------------------------------------------
# Multistart driver
# ---------------------------------------------------------------------------


def _sample_disk(rng: np.random.Generator, n: int, opts: SolverOptions) -> np.ndarray:
    for _ in range(10_000):
        r = opts.start_radius * np.sqrt(rng.uniform(size=n))
        phi = rng.uniform(0.0, 2.0 * np.pi, size=n)
        pos = r * np.exp(1j * phi)
        if _min_gap(pos) >= opts.start_min_gap:
            return pos
    raise RuntimeError("could not sample a well-separated start")


def solve_central_multistart(
    v: VorticitySet,
    regime: str = "physical",
    starts: int = 200,
    seed: int = 0,
    options: SolverOptions | None = None,
) -> SolveReport:
    """Multistart Newton search for normalized central configurations.

    Deterministic in (v, regime, starts, seed, options).  Distinct solutions
    are reported modulo rotation/sign gauge and conjugation, deduplicated on
    the sorted squared-distance signature together with Λ.  Counts are
    "found", not proven complete.
    """
    opts = (options or SolverOptions()).validated()
    if starts <= 0:
        raise ValueError("starts must be positive")
    if regime not in ("physical", "complex"):
        raise ValueError(f"unknown regime {regime!r}")
    vf = v.as_float()
    rng = np.random.default_rng(seed)
    found = []
    converged = 0
    for _ in range(starts):
        if regime == "physical":
            pos = _sample_disk(rng, vf.n, opts)
            theta = rng.uniform(0.0, 2.0 * np.pi)
            result = _refine_physical(vf, (pos, theta), opts)
        else:
            z = _sample_disk(rng, vf.n, opts)
            w = _sample_disk(rng, vf.n, opts)
            lam = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
            result = _refine_complex(vf, (z, w, lam), opts)
        if isinstance(result, CentralConfigSolution):
            converged += 1
            found.append(result)
    solutions = _deduplicate(found, opts)
    return SolveReport(
        solutions=tuple(solutions),
        starts_attempted=starts,
        starts_converged=converged,
        seed=seed,
        regime=regime,
    )


def _signatures_match(a: tuple, b: tuple, tol: float) -> bool:
    fa = np.asarray(a, dtype=float).ravel()
    fb = np.asarray(b, dtype=float).ravel()
    if fa.size != fb.size:
        return False
    scale = max(1.0, float(np.abs(fa).max()))
    return bool(np.abs(fa - fb).max() <= tol * scale)


def _lambda_match(a: complex | None, b: complex | None, tol: float) -> bool:
    if a is None or b is None:
        return a is None and b is None
    direct = abs(a - b)
    mirrored = abs(a - np.conj(b))
    inverted = abs(a - 1.0 / np.conj(b)) if b != 0 else math.inf
    return min(direct, mirrored, inverted) <= tol


def _deduplicate(found: list, opts: SolverOptions) -> list:
    # Sort first so the merge is independent of discovery order.
    ordered = sorted(
        found,
        key=lambda s: (np.asarray(s.signature, dtype=float).ravel().tolist(),
                       0.0 if s.lam is None else abs(s.lam.imag),
                       s.residual_norm),
    )
    kept: list[CentralConfigSolution] = []
    for cand in ordered:
        merged = False
        for i, existing in enumerate(kept):
            if _signatures_match(cand.signature, existing.signature, opts.dedup_tol) and \
               _lambda_match(cand.lam, existing.lam, opts.dedup_tol):
                if cand.residual_norm < existing.residual_norm:
                    kept[i] = cand
                merged = True
                break
        if not merged:
            kept.append(cand)
    return kept


# ---------------------------------------------------------------------------
# Equilibria and rigid translation
# ---------------------------------------------------------------------------


def _near_zero(value, scale: float) -> bool:
    from .quantities import is_exact_scalar

    if is_exact_scalar(value):
        return value == 0
    return abs(value) <= 1e-13 * max(1.0, scale)


def solve_equilibria(v: VorticitySet, starts: int = 200, seed: int = 0,
                     options: SolverOptions | None = None) -> SolveReport:
    """Search for equilibria (V_n = 0 for all n).

    Gated by the necessary condition L = 0.  Gauge: z_1 = 0, z_2 = 1 (the
    root set of V is translation-, rotation- and dilation-invariant, so the
    second vortex can be pinned completely).
    """
    opts = (options or SolverOptions()).validated()
    g_scale = sum(abs(float(a) * float(b)) for a, b in combinations(v.gammas, 2))
    from .quantities import angular_momentum

    if not _near_zero(angular_momentum(v), g_scale):
        return SolveReport((), 0, 0, seed, "physical",
                           reason="necessary condition L=0 fails")
    vf = v.as_float()
    g = np.asarray(vf.gammas)
    n = vf.n
    rng = np.random.default_rng(seed)

    def assemble(x):
        pos = np.empty(n, dtype=complex)
        pos[0] = 0.0
        pos[1] = 1.0
        if n > 2:
            pos[2:] = x[0::2] + 1j * x[1::2]
        return pos

    def residual(x):
        pos = assemble(x)
        V = _velocity_np(g, np.conj(pos))
        return _realify_vector(V)

    def jac(x):
        pos = assemble(x)
        Q = _velocity_position_derivative(g, pos)
        cols = Q[:, 2:]
        J = np.empty((2 * n, 2 * (n - 2)))
        J[0::2, 0::2] = cols.real
        J[0::2, 1::2] = (-1j * cols).real
        J[1::2, 0::2] = cols.imag
        J[1::2, 1::2] = (-1j * cols).imag
        return J

    def norm(F):
        return float(np.hypot(F[0::2], F[1::2]).max())

    def guard(x):
        return _min_gap(assemble(x)) < opts.collision_guard

    found = []
    converged = 0
    for _ in range(starts):
        pos = _sample_disk(rng, n, opts)
        x0 = np.empty(2 * (n - 2))
        x0[0::2] = pos[2:].real
        x0[1::2] = pos[2:].imag
        result = _levenberg_newton(residual, jac, norm, guard, x0, opts)
        if isinstance(result, NewtonFailure):
            continue
        converged += 1
        x, iters = result
        pos = assemble(x)
        V = _velocity_np(g, np.conj(pos))
        inv = invariants_of(vf, tuple(pos), conjugate_positions(tuple(pos)))
        found.append(CentralConfigSolution(
            regime="physical",
            z=tuple(pos),
            w=conjugate_positions(tuple(pos)),
            lam=None,
            residual_norm=float(np.abs(V).max()),
            invariants=inv,
            kind=KIND_EQUILIBRIUM,
            signature=_physical_signature(pos),
            iterations=iters,
        ))
    return SolveReport(tuple(_deduplicate(found, opts)), starts, converged, seed, "physical")


def _velocity_position_derivative(g: np.ndarray, pos: np.ndarray) -> np.ndarray:
    """Q[n, m] = dV_n/dx_m (complex form); dV_n/dy_m = -i Q[n, m]."""
    d = pos[None, :] - pos[:, None]
    np.fill_diagonal(d, 1.0)
    u2 = np.conj(d) ** 2
    Q = (g[:, None] / u2).T.copy()
    np.fill_diagonal(Q, 0.0)
    np.fill_diagonal(Q, -Q.sum(axis=1))
    return Q


def solve_rigid_translation(v: VorticitySet, starts: int = 200, seed: int = 0,
                            options: SolverOptions | None = None) -> SolveReport:
    """Search for rigidly translating configurations (V_n = V for all n).

    Gated by the necessary condition Γ = 0.  Gauge: z_1 = 0, z_2 real
    positive; the common velocity is parametrized as V = e^{iφ} so |V| = 1
    fixes the dilation.
    """
    opts = (options or SolverOptions()).validated()
    from .quantities import total_vorticity

    g_scale = sum(abs(float(a)) for a in v.gammas)
    if not _near_zero(total_vorticity(v), g_scale):
        return SolveReport((), 0, 0, seed, "physical",
                           reason="necessary condition Γ=0 fails")
    vf = v.as_float()
    g = np.asarray(vf.gammas)
    n = vf.n
    rng = np.random.default_rng(seed)

    def assemble(x):
        # Unknowns: (ξ = z_2, x_3, y_3, ..., x_N, y_N, φ), size 2N-2.
        pos = np.empty(n, dtype=complex)
        pos[0] = 0.0
        pos[1] = x[0]
        if n > 2:
            pos[2:] = x[1:-1:2] + 1j * x[2:-1:2]
        return pos, float(x[-1])

    def residual(x):
        pos, phi = assemble(x)
        V = _velocity_np(g, np.conj(pos)) - np.exp(1j * phi)
        return _realify_vector(V)

    def jac(x):
        pos, phi = assemble(x)
        Q = _velocity_position_derivative(g, pos)
        J = np.empty((2 * n, 2 * n - 2))
        J[0::2, 0] = Q[:, 1].real
        J[1::2, 0] = Q[:, 1].imag
        if n > 2:
            cols = Q[:, 2:]
            J[0::2, 1:-1:2] = cols.real
            J[0::2, 2:-1:2] = (-1j * cols).real
            J[1::2, 1:-1:2] = cols.imag
            J[1::2, 2:-1:2] = (-1j * cols).imag
        dphi = -1j * np.exp(1j * phi) * np.ones(n)
        J[0::2, -1] = dphi.real
        J[1::2, -1] = dphi.imag
        return J

    def norm(F):
        return float(np.hypot(F[0::2], F[1::2]).max())

    def guard(x):
        pos, _ = assemble(x)
        return _min_gap(pos) < opts.collision_guard

    found = []
    converged = 0
    for _ in range(starts):
        pos = _sample_disk(rng, n, opts)
        x0 = np.empty(2 * n - 2)
        x0[0] = abs(pos[1]) + opts.start_min_gap
        if n > 2:
            x0[1:-1:2] = pos[2:].real
            x0[2:-1:2] = pos[2:].imag
        x0[-1] = rng.uniform(0.0, 2.0 * np.pi)
        result = _levenberg_newton(residual, jac, norm, guard, x0, opts)
        if isinstance(result, NewtonFailure):
            continue
        x, iters = result
        pos, phi = assemble(x)
        if pos[1].real < 0:
            # Rotate by a half turn: keeps V_n = V form with V -> -V.
            pos = -pos
            phi += np.pi
        velocity = np.exp(1j * phi)
        converged += 1
        V = _velocity_np(g, np.conj(pos)) - velocity
        inv = invariants_of(vf, tuple(pos), conjugate_positions(tuple(pos)))
        found.append(CentralConfigSolution(
            regime="physical",
            z=tuple(pos),
            w=conjugate_positions(tuple(pos)),
            lam=None,
            residual_norm=float(np.abs(V).max()),
            invariants=inv,
            kind=KIND_RIGID_TRANSLATION,
            signature=_physical_signature(pos),
            iterations=iters,
            translation_velocity=complex(velocity),
        ))
    return SolveReport(tuple(_deduplicate(found, opts)), starts, converged, seed, "physical")
