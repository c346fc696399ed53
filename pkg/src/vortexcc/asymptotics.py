"""Degenerating families of central configurations and their cluster diagrams.

Contains the classical Roberts rhombus continuum (vorticities 2,2,2,2,-1)
as generator and verifier, the max-component balancing normalization that
defines the small parameter ε, log-log order-exponent regression along a
degenerating family, stroke/circle diagram extraction from those exponents,
and the four-factor squared-distance products used in finiteness arguments.

Scaling conventions.  For coordinates (z, w) the component vector of the
z-side collects the positions z_n together with the reciprocal separations
1/w_jk; the w-side mirrors it.  Multiplying z by a > 0 and w by 1/a scales
the two component vectors by a and 1/a, so there is a unique balancing
a with equal max-norms; ε is then ‖·‖^(-1/2).  Strokes mark separations of
order ε², circles mark positions of order ε^(-2), in each color.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .quantities import VorticitySet
from .system import CollisionError, ComplexConfiguration, complex_system_residual, velocity_field

__all__ = [
    "NotSingularError",
    "ColoredDiagram",
    "ScaledSequence",
    "DiagramExtraction",
    "ROBERTS_VORTICITIES",
    "roberts_family",
    "roberts_normalized",
    "verify_roberts",
    "roberts_parameter_sequence",
    "balance_normalize",
    "extract_diagram",
    "four_product",
    "save_family",
    "load_family",
]

ROBERTS_VORTICITIES = VorticitySet((2.0, 2.0, 2.0, 2.0, -1.0))

# Exponent band: measured slopes within ±0.2 of {2, -2} classify as
# stroke/circle; genuine families separate exponents by integers.
EXPONENT_BAND = 0.2


class NotSingularError(ValueError):
    """The family does not degenerate (ε is not decreasing to zero)."""


@dataclass(frozen=True)
class ColoredDiagram:
    """Stroke/circle record of a degenerating family, one set per color."""

    n_vertices: int
    z_strokes: frozenset  # pairs (j, k), 1-based, j < k
    w_strokes: frozenset
    z_circles: frozenset  # vertex labels
    w_circles: frozenset

    @property
    def satisfies_rule_one(self) -> bool:
        """Circled vertices carry an incident stroke of the same color, and a
        nonempty colored part contains at least one stroke of that color."""
        for circles, strokes in ((self.z_circles, self.z_strokes),
                                 (self.w_circles, self.w_strokes)):
            for vertex in circles:
                if not any(vertex in pair for pair in strokes):
                    return False
            if circles and not strokes:
                return False
        return True

    @property
    def stroke_pairs(self) -> frozenset:
        return self.z_strokes | self.w_strokes


@dataclass(frozen=True)
class ScaledSequence:
    """Balanced configurations along a degenerating family."""

    parameters: tuple
    configurations: tuple  # (z, w) tuples after balancing
    epsilons: tuple

    def __post_init__(self):
        eps = self.epsilons
        if any(b >= a for a, b in zip(eps, eps[1:])):
            raise ValueError("epsilons must decrease strictly along the sequence")


@dataclass(frozen=True)
class DiagramExtraction:
    """Extracted diagram plus the measured order exponents behind it."""

    diagram: ColoredDiagram
    epsilons: tuple
    separation_exponents: dict  # (j, k) -> (z-slope, w-slope)
    position_exponents: dict    # j -> (z-slope | None, w-slope | None)


# ---------------------------------------------------------------------------
# Roberts rhombus continuum
# ---------------------------------------------------------------------------


def _roberts_b(a: float, branch: str) -> complex:
    if branch == "real":
        if not 0.0 < a < 1.0:
            raise ValueError("real branch requires 0 < a < 1")
        return 1j * math.sqrt(1.0 - a * a)
    if branch == "complex":
        if not a > 1.0:
            raise ValueError("complex branch requires a > 1")
        return complex(math.sqrt(a * a - 1.0))
    raise ValueError(f"unknown branch {branch!r}")


def roberts_family(a: float, branch: str = "real"):
    """Rhombus continuum member at parameter `a`, in the unit-side scale.

    Vorticities (2, 2, 2, 2, -1); the fifth vortex sits at the origin and
    the first four form a rhombus z = (a, b, -a, -b), w = (a, -b, -a, b)
    with a^2 - b^2 = 1, so the four side squared-distances equal 1.  On the
    real branch b is purely imaginary and w = conj(z).  The rotation
    multiplier is computed from the configuration (it equals 4 in this
    scale) rather than hard-coded.

    Returns (vorticities, configuration, lam) with the configuration in the
    raw coordinates, before unit-multiplier normalization.
    """
    b = _roberts_b(float(a), branch)
    z = (complex(a), b, complex(-a), -b, 0j)
    w = (complex(a), -b, complex(-a), b, 0j)
    v = ROBERTS_VORTICITIES
    lam = velocity_field(v, z, w)[0] / z[0]
    conf = ComplexConfiguration(z=z, w=w, lam=lam)
    return v, conf, lam


def roberts_normalized(a: float, branch: str = "real") -> ComplexConfiguration:
    """Family member rescaled to unit rotation multiplier and gauged z_12 = w_12.

    Two commuting maps: the real dilation z -> s z, w -> s w with
    s = sqrt(|Λ|) (sends Λ = 4 to 1), then the rotation z -> ã z, w -> w/ã
    with ã² = w_12/z_12, which keeps every product z_jk·w_jk fixed and makes
    the gauge row vanish.
    """
    _, conf, lam = roberts_family(a, branch)
    s = math.sqrt(abs(lam))
    z = np.asarray(conf.z) * s
    w = np.asarray(conf.w) * s
    lam_unit = lam / (s * s)
    ratio = (w[1] - w[0]) / (z[1] - z[0])
    atil = np.sqrt(ratio)
    if (atil * (z[1] - z[0])).real < 0:
        atil = -atil
    return ComplexConfiguration(z=tuple(z * atil), w=tuple(w / atil), lam=lam_unit)


def verify_roberts(a: float, branch: str = "real") -> float:
    """Residual max-modulus of the normalized family member in the full system."""
    conf = roberts_normalized(a, branch)
    return complex_system_residual(conf, ROBERTS_VORTICITIES).norm


def roberts_parameter_sequence(limit: str, steps: int = 12) -> tuple:
    """Geometric parameter ladders driving the two degenerations."""
    if steps < 4:
        raise ValueError("need at least 4 steps")
    if limit == "a0":
        return tuple(0.4 * 0.5**k for k in range(steps))
    if limit == "ainf":
        return tuple(2.0 * 2.0**k for k in range(steps))
    raise ValueError(f"unknown limit {limit!r} (expected 'a0' or 'ainf')")


def roberts_degeneration(limit: str, steps: int = 12):
    """(parameters, raw (z, w) configurations) for the chosen degeneration."""
    branch = "real" if limit == "a0" else "complex"
    params = roberts_parameter_sequence(limit, steps)
    configs = []
    for a in params:
        _, conf, _ = roberts_family(a, branch)
        configs.append((conf.z, conf.w))
    return params, tuple(configs)


# ---------------------------------------------------------------------------
# Balancing normalization and ε
# ---------------------------------------------------------------------------


def _component_norms(z: np.ndarray, w: np.ndarray) -> tuple[float, float]:
    n = len(z)
    z_side = [abs(p) for p in z]
    w_side = [abs(p) for p in w]
    for j, k in combinations(range(n), 2):
        wjk = w[k] - w[j]
        zjk = z[k] - z[j]
        if abs(wjk) == 0.0 or abs(zjk) == 0.0:
            raise CollisionError(j + 1, k + 1, "w" if abs(wjk) == 0.0 else "z")
        z_side.append(1.0 / abs(wjk))  # reciprocal separations join the z-side
        w_side.append(1.0 / abs(zjk))
    return max(z_side), max(w_side)


def balance_normalize(z: Sequence, w: Sequence):
    """Rescale (z -> a z, w -> w/a, a > 0) so both component max-norms agree.

    Returns (z', w', ε) with ε = ‖components‖^(-1/2).  Squared distances
    z_jk·w_jk are exactly invariant; the map is idempotent.
    """
    zs = np.asarray(z, dtype=complex)
    ws = np.asarray(w, dtype=complex)
    nz, nw = _component_norms(zs, ws)
    a = math.sqrt(nw / nz)
    zb, wb = zs * a, ws / a
    shared = math.sqrt(nz * nw)
    return tuple(zb), tuple(wb), shared ** -0.5


# ---------------------------------------------------------------------------
# Order-exponent regression and diagram extraction
# ---------------------------------------------------------------------------


def _slope(log_eps: np.ndarray, values: np.ndarray) -> float:
    return float(np.polyfit(log_eps, np.log(values), 1)[0])


def extract_diagram(configurations: Sequence, parameters: Sequence | None = None,
                    band: float = EXPONENT_BAND) -> DiagramExtraction:
    """Classify strokes and circles from order exponents along a family.

    `configurations` is a sequence of (z, w) pairs indexed by a parameter
    running toward the degeneration.  Each configuration is balanced; the
    εs must decrease strictly toward zero, otherwise NotSingularError.
    Exponents are least-squares slopes of log|·| against log ε over the
    trailing half of the sequence.  Strokes of z-color sit on pairs whose
    w-separation exponent is within `band` of 2 (and symmetrically); circles
    of z-color sit on vertices whose z-position exponent is within `band`
    of -2 (and symmetrically).
    """
    if len(configurations) < 4:
        raise ValueError("fewer than 4 sequence points")
    balanced = []
    epsilons = []
    for z, w in configurations:
        zb, wb, eps = balance_normalize(z, w)
        balanced.append((np.asarray(zb), np.asarray(wb)))
        epsilons.append(eps)
    eps = np.asarray(epsilons)
    if any(b >= a for a, b in zip(eps, eps[1:])) or eps[-1] > 0.5 * eps[0]:
        raise NotSingularError("not singular: ε does not decrease toward zero")

    n = len(balanced[0][0])
    tail = slice(len(balanced) - math.ceil(len(balanced) / 2), len(balanced))
    log_eps = np.log(eps[tail])

    sep_exponents = {}
    z_strokes, w_strokes = set(), set()
    for j, k in combinations(range(1, n + 1), 2):
        zsep = np.array([abs(zb[k - 1] - zb[j - 1]) for zb, _ in balanced])[tail]
        wsep = np.array([abs(wb[k - 1] - wb[j - 1]) for _, wb in balanced])[tail]
        z_slope = _slope(log_eps, zsep)
        w_slope = _slope(log_eps, wsep)
        sep_exponents[(j, k)] = (z_slope, w_slope)
        if abs(w_slope - 2.0) <= band:
            z_strokes.add((j, k))
        if abs(z_slope - 2.0) <= band:
            w_strokes.add((j, k))

    pos_exponents = {}
    z_circles, w_circles = set(), set()
    for j in range(1, n + 1):
        zpos = np.array([abs(zb[j - 1]) for zb, _ in balanced])[tail]
        wpos = np.array([abs(wb[j - 1]) for _, wb in balanced])[tail]
        z_slope = _slope(log_eps, zpos) if np.all(zpos > 0.0) else None
        w_slope = _slope(log_eps, wpos) if np.all(wpos > 0.0) else None
        pos_exponents[j] = (z_slope, w_slope)
        if z_slope is not None and abs(z_slope + 2.0) <= band:
            z_circles.add(j)
        if w_slope is not None and abs(w_slope + 2.0) <= band:
            w_circles.add(j)

    diagram = ColoredDiagram(
        n_vertices=n,
        z_strokes=frozenset(z_strokes),
        w_strokes=frozenset(w_strokes),
        z_circles=frozenset(z_circles),
        w_circles=frozenset(w_circles),
    )
    return DiagramExtraction(
        diagram=diagram,
        epsilons=tuple(epsilons),
        separation_exponents=sep_exponents,
        position_exponents=pos_exponents,
    )


# ---------------------------------------------------------------------------
# Four-factor products
# ---------------------------------------------------------------------------


def four_product(z: Sequence, w: Sequence, pair: tuple) -> complex:
    """p_jn = r²_jn · r²_km · r²_ml · r²_lk for five vortices.

    (k, m, l) is the complement of {j, n} in ascending order; its three-cycle
    fixes the remaining factors.  r² means the product of z- and w-separation.
    """
    zs = [complex(p) for p in z]
    ws = [complex(p) for p in w]
    if len(zs) != 5 or len(ws) != 5:
        raise ValueError("four-products are defined for exactly 5 vortices")
    j, n_ = pair
    if not (1 <= j <= 5 and 1 <= n_ <= 5 and j != n_):
        raise ValueError("pair must be two distinct labels in 1..5")
    k, m, l = sorted(set(range(1, 6)) - {j, n_})

    def r2(a: int, b: int) -> complex:
        return (zs[b - 1] - zs[a - 1]) * (ws[b - 1] - ws[a - 1])

    return r2(j, n_) * r2(k, m) * r2(m, l) * r2(l, k)


# ---------------------------------------------------------------------------
# Family file format: columnar text, one configuration per row:
#   parameter, Re z_1, Im z_1, ..., Re z_N, Im z_N, Re w_1, Im w_1, ..., Re w_N, Im w_N
# ---------------------------------------------------------------------------


def save_family(path, parameters: Sequence, configurations: Sequence) -> None:
    rows = []
    for t, (z, w) in zip(parameters, configurations):
        row = [float(t)]
        for p in z:
            row.extend((complex(p).real, complex(p).imag))
        for p in w:
            row.extend((complex(p).real, complex(p).imag))
        rows.append(row)
    header = "parameter, then interleaved re/im of z_1..z_N, then re/im of w_1..w_N"
    np.savetxt(path, np.asarray(rows), header=header)


def load_family(path):
    data = np.atleast_2d(np.loadtxt(path))
    if data.shape[1] < 9 or (data.shape[1] - 1) % 4 != 0:
        raise ValueError("malformed family file: need 1 + 4N columns")
    n = (data.shape[1] - 1) // 4
    params = tuple(data[:, 0])
    configs = []
    for row in data:
        z = tuple(row[1 + 2 * i] + 1j * row[2 + 2 * i] for i in range(n))
        w = tuple(row[1 + 2 * n + 2 * i] + 1j * row[2 + 2 * n + 2 * i] for i in range(n))
        configs.append((z, w))
    return params, tuple(configs)
