"""Velocity field and residual systems for stationary vortex configurations.

Index convention throughout: ``z_jn = z_n - z_j`` and ``w_jn = w_n - w_j``.
The velocity seen by vortex n is ``V_n = sum_{j != n} Γ_j / w_jn``, which in
the physical regime (``w = conj(z)``) is the usual point-vortex field.

Three residual systems are provided:

* ``stationary_residual``: the reduced central-configuration equations
  ``Λ z_n = V_n`` (translation already removed).
* ``complex_system_residual``: the conjugate-free central system on
  independent coordinates (z, w) with reciprocal separations evaluated on
  demand, plus the rotation gauge row ``z_12 - w_12``.
* velocity roots for equilibria / rigid translation live in ``solver``.

Analytic Jacobians for the first two are exported together with the packed
numpy forms the solver consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .quantities import VorticitySet

__all__ = [
    "COLLISION_GUARD",
    "CollisionError",
    "ResidualVector",
    "ComplexConfiguration",
    "velocity_field",
    "stationary_residual",
    "complex_system_residual",
    "physical_residual_vector",
    "physical_jacobian",
    "complex_residual_vector",
    "complex_jacobian",
    "jacobian",
]

# Below this separation the residuals leave the trustworthy float range.
COLLISION_GUARD = 1e-10


class CollisionError(ValueError):
    """Raised when two vortices are (numerically) coincident."""

    def __init__(self, j: int, k: int, coordinate: str):
        self.pair = (j, k)
        self.coordinate = coordinate
        super().__init__(
            f"collision between vortices {j} and {k} in {coordinate}-coordinates"
        )


@dataclass(frozen=True)
class ResidualVector:
    """Residual entries of one of the stationary systems."""

    entries: tuple

    @property
    def norm(self) -> float:
        """Max modulus over the entries."""
        return max((abs(e) for e in self.entries), default=0.0)


@dataclass(frozen=True)
class ComplexConfiguration:
    """Full variable set (z, w, Λ) of the conjugate-free central system.

    ``z`` and ``w`` are independent complex coordinate vectors; reciprocal
    separations are derived on demand, never stored.  Solver-normalized
    solutions satisfy the rotation gauge ``z_12 == w_12`` (see
    :attr:`gauge_defect`); raw parametric families need not.
    """

    z: tuple
    w: tuple
    lam: complex

    def __post_init__(self):
        zs = tuple(complex(p) for p in self.z)
        ws = tuple(complex(p) for p in self.w)
        if len(zs) != len(ws):
            raise ValueError("z and w must have the same length")
        if len(zs) < 2:
            raise ValueError("need at least two vortices")
        for pts, name in ((zs, "z"), (ws, "w")):
            for j, k in combinations(range(len(pts)), 2):
                if pts[j] == pts[k]:
                    raise CollisionError(j + 1, k + 1, name)
        object.__setattr__(self, "z", zs)
        object.__setattr__(self, "w", ws)
        object.__setattr__(self, "lam", complex(self.lam))

    @property
    def n(self) -> int:
        return len(self.z)

    @property
    def gauge_defect(self) -> complex:
        return (self.z[1] - self.z[0]) - (self.w[1] - self.w[0])

    def squared_distance(self, j: int, k: int) -> complex:
        """r^2_jk = z_jk * w_jk (1-based indices)."""
        return (self.z[k - 1] - self.z[j - 1]) * (self.w[k - 1] - self.w[j - 1])

    def squared_distances(self) -> dict:
        return {
            (j, k): self.squared_distance(j, k)
            for j, k in combinations(range(1, self.n + 1), 2)
        }


def _check_pairs(points: Sequence[complex], coordinate: str) -> None:
    n = len(points)
    for j in range(n):
        for k in range(j + 1, n):
            if abs(points[k] - points[j]) < COLLISION_GUARD:
                raise CollisionError(j + 1, k + 1, coordinate)


def velocity_field(v: VorticitySet, z: Sequence, w: Sequence) -> list:
    """V_n = sum_{j != n} Γ_j / w_jn for each n.

    Physical callers pass ``w = conjugate_positions(z)``.
    """
    zs = [complex(p) for p in z]
    ws = [complex(p) for p in w]
    if len(zs) != v.n or len(ws) != v.n:
        raise ValueError("positions must match the vorticity count")
    _check_pairs(zs, "z")
    _check_pairs(ws, "w")
    out = []
    for n in range(v.n):
        acc = 0j
        for j in range(v.n):
            if j != n:
                acc += v.gammas[j] / (ws[n] - ws[j])
        out.append(acc)
    return out


def stationary_residual(v: VorticitySet, z, w, lam) -> ResidualVector:
    """Entries Λ z_n - V_n; the zero vector exactly on central configurations."""
    V = velocity_field(v, z, w)
    lam = complex(lam)
    return ResidualVector(tuple(lam * complex(p) - V_n for p, V_n in zip(z, V)))


def complex_system_residual(conf: ComplexConfiguration, v: VorticitySet) -> ResidualVector:
    """2N+1 entries: Λ z_n - Σ Γ_j/w_jn, Λ^{-1} w_n - Σ Γ_j/z_jn, z_12 - w_12."""
    if conf.n != v.n:
        raise ValueError("configuration size must match the vorticity count")
    _check_pairs(conf.z, "z")
    _check_pairs(conf.w, "w")
    lam = conf.lam
    a_rows = [
        lam * conf.z[n]
        - sum(v.gammas[j] / (conf.w[n] - conf.w[j]) for j in range(v.n) if j != n)
        for n in range(v.n)
    ]
    b_rows = [
        conf.w[n] / lam
        - sum(v.gammas[j] / (conf.z[n] - conf.z[j]) for j in range(v.n) if j != n)
        for n in range(v.n)
    ]
    return ResidualVector(tuple(a_rows) + tuple(b_rows) + (conf.gauge_defect,))


# ---------------------------------------------------------------------------
# Packed numpy forms.  Layouts:
#   physical:  unknowns u = (x_1, y_1, ..., x_N, y_N, θ) with Λ = e^{iθ};
#              rows (Re E_1, Im E_1, ..., Re E_N, Im E_N, Im z_12).
#   complex:   unknowns (z_1..z_N, w_1..w_N, Λ) as complex variables;
#              rows (A_1..A_N, B_1..B_N, z_12 - w_12), all holomorphic.
# ---------------------------------------------------------------------------


def _pair_diffs(p: np.ndarray) -> np.ndarray:
    """D[j, n] = p_n - p_j with a harmless 1 on the diagonal."""
    d = p[None, :] - p[:, None]
    np.fill_diagonal(d, 1.0)
    return d


def _min_gap(p: np.ndarray) -> float:
    d = np.abs(p[None, :] - p[:, None])
    np.fill_diagonal(d, np.inf)
    return float(d.min())


def _velocity_np(g: np.ndarray, wpos: np.ndarray) -> np.ndarray:
    d = _pair_diffs(wpos)
    inv = 1.0 / d
    np.fill_diagonal(inv, 0.0)
    return (g[:, None] * inv).sum(axis=0)


def physical_residual_vector(v: VorticitySet, positions, theta: float) -> np.ndarray:
    """Real residual of the physical central system, length 2N+1."""
    g = np.asarray(v.as_float().gammas)
    pos = np.asarray(positions, dtype=complex)
    if _min_gap(pos) < COLLISION_GUARD:
        j, k = _closest_pair(pos)
        raise CollisionError(j, k, "z")
    V = _velocity_np(g, np.conj(pos))
    E = np.exp(1j * theta) * pos - V
    n = len(g)
    F = np.empty(2 * n + 1)
    F[0 : 2 * n : 2] = E.real
    F[1 : 2 * n : 2] = E.imag
    F[-1] = pos[1].imag - pos[0].imag
    return F


def _closest_pair(pos: np.ndarray) -> tuple[int, int]:
    d = np.abs(pos[None, :] - pos[:, None])
    np.fill_diagonal(d, np.inf)
    j, k = np.unravel_index(np.argmin(d), d.shape)
    return (min(j, k) + 1, max(j, k) + 1)


def physical_jacobian(v: VorticitySet, positions, theta: float) -> np.ndarray:
    """Analytic Jacobian of :func:`physical_residual_vector` (real, square)."""
    g = np.asarray(v.as_float().gammas)
    pos = np.asarray(positions, dtype=complex)
    n = len(g)
    dz = _pair_diffs(pos)
    u2 = np.conj(dz) ** 2
    # Q[n, m] = dV_n/dx_m in complex form; dV_n/dy_m = -i Q[n, m].
    Q = (g[:, None] / u2).T.copy()
    np.fill_diagonal(Q, 0.0)
    np.fill_diagonal(Q, -Q.sum(axis=1))
    lam = np.exp(1j * theta)
    A = lam * np.eye(n) - Q          # dE/dx
    B = 1j * lam * np.eye(n) + 1j * Q  # dE/dy
    J = np.zeros((2 * n + 1, 2 * n + 1))
    J[0 : 2 * n : 2, 0 : 2 * n : 2] = A.real
    J[0 : 2 * n : 2, 1 : 2 * n : 2] = B.real
    J[1 : 2 * n : 2, 0 : 2 * n : 2] = A.imag
    J[1 : 2 * n : 2, 1 : 2 * n : 2] = B.imag
    dth = 1j * lam * pos
    J[0 : 2 * n : 2, -1] = dth.real
    J[1 : 2 * n : 2, -1] = dth.imag
    J[-1, 1] = -1.0
    J[-1, 3] = 1.0
    return J


def complex_residual_vector(v: VorticitySet, z, w, lam: complex) -> np.ndarray:
    """Complex residual of the conjugate-free system, length 2N+1."""
    g = np.asarray(v.as_float().gammas)
    zs = np.asarray(z, dtype=complex)
    ws = np.asarray(w, dtype=complex)
    for pts, name in ((zs, "z"), (ws, "w")):
        if _min_gap(pts) < COLLISION_GUARD:
            j, k = _closest_pair(pts)
            raise CollisionError(j, k, name)
    A = lam * zs - _velocity_np(g, ws)
    B = ws / lam - _velocity_np(g, zs)
    gauge = (zs[1] - zs[0]) - (ws[1] - ws[0])
    return np.concatenate([A, B, [gauge]])


def complex_jacobian(v: VorticitySet, z, w, lam: complex) -> np.ndarray:
    """Holomorphic Jacobian in (z_1..z_N, w_1..w_N, Λ), square complex."""
    g = np.asarray(v.as_float().gammas)
    zs = np.asarray(z, dtype=complex)
    ws = np.asarray(w, dtype=complex)
    n = len(g)

    def deriv_block(pts: np.ndarray) -> np.ndarray:
        # d/dp_m of -sum_j Γ_j/(p_n - p_j): diagonal gets +sum, off-diagonal -Γ_m/p_mn^2
        d2 = _pair_diffs(pts) ** 2
        R = (-(g[:, None] / d2)).T.copy()
        np.fill_diagonal(R, 0.0)
        np.fill_diagonal(R, -R.sum(axis=1))
        return R

    J = np.zeros((2 * n + 1, 2 * n + 1), dtype=complex)
    J[:n, :n] = lam * np.eye(n)
    J[:n, n : 2 * n] = deriv_block(ws)
    J[:n, -1] = zs
    J[n : 2 * n, :n] = deriv_block(zs)
    J[n : 2 * n, n : 2 * n] = np.eye(n) / lam
    J[n : 2 * n, -1] = -ws / lam**2
    J[-1, 0] = -1.0
    J[-1, 1] = 1.0
    J[-1, n] = 1.0
    J[-1, n + 1] = -1.0
    return J


def jacobian(kind: str, point, v: VorticitySet) -> np.ndarray:
    """Dispatch: kind "physical" takes (positions, theta); "complex" takes (z, w, lam)."""
    if kind == "physical":
        positions, theta = point
        return physical_jacobian(v, positions, theta)
    if kind == "complex":
        z, w, lam = point
        return complex_jacobian(v, z, w, lam)
    raise ValueError(f"unknown residual kind {kind!r}")
